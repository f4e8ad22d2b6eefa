#include "mahler/text_formats.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

mpz_class parse_integer_token(const std::string& raw) {
    const std::string t = trim(raw);
    if (!is_integer_token(t))
        throw ValidationError("malformed integer token '" + raw + "'");
    return mpz_class(t);
}

mpq_class parse_rational_token(const std::string& raw) {
    const std::string t = trim(raw);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return mpq_class(parse_integer_token(t));
    return make_rational(parse_integer_token(t.substr(0, slash)), parse_integer_token(t.substr(slash + 1)));
}

// Explicit-power grammar: a signed sum of terms "c", "x", "c x", "x^k", "c x^k".
IntPolynomial parse_human_polynomial(const std::string& text) {
    std::map<int, mpz_class> terms;
    std::size_t i = 0;
    const auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto bad = [&](const std::string& what) {
        return ValidationError("malformed polynomial near '" + text.substr(i, 8) + "': " + what);
    };
    bool first = true;
    while (true) {
        skip_space();
        if (i >= text.size()) {
            if (first) throw ValidationError("empty polynomial expression");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_space();
        } else if (!first) {
            throw bad("expected '+' or '-' between terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_space();
        bool has_var = false;
        long power = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            has_var = true;
            power = 1;
            ++i;
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                throw bad("powers need an explicit '^'");
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string pd;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) pd += text[i++];
                if (pd.empty()) throw bad("'^' must be followed by a nonnegative integer");
                power = std::stol(pd);
                if (power > 10000) throw bad("power out of range");
            }
        }
        if (digits.empty() && !has_var) throw bad("expected a coefficient or 'x'");
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        if (sign < 0) coeff = -coeff;
        terms[static_cast<int>(power)] += coeff;
        first = false;
    }
    int deg = 0;
    for (const auto& [k, v] : terms)
        if (v != 0) deg = std::max(deg, k);
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(deg) + 1, mpz_class(0));
    for (const auto& [k, v] : terms) coeffs[static_cast<std::size_t>(deg - k)] = v;
    return IntPolynomial(std::move(coeffs));
}

} // namespace

std::string to_comma_string(const IntPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

std::string to_comma_string(const RatPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        const mpq_class& c = p.coeffs()[i];
        out += c.get_num().get_str();
        if (c.get_den() != 1) {
            out += '/';
            out += c.get_den().get_str();
        }
    }
    return out;
}

std::string to_human_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const int n = p.degree();
    for (int k = n; k >= 0; --k) {
        const mpz_class& c = p.coefficient(k);
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPolynomial parse_int_polynomial(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ValidationError("empty polynomial string");
    if (t.find('x') != std::string::npos || t.find('X') != std::string::npos)
        return parse_human_polynomial(t);
    std::vector<mpz_class> coeffs;
    for (const auto& tok : split(t, ',')) coeffs.push_back(parse_integer_token(tok));
    return IntPolynomial(std::move(coeffs));
}

RatPolynomial parse_rat_polynomial(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ValidationError("empty polynomial string");
    if (t.find('x') != std::string::npos || t.find('X') != std::string::npos)
        return to_rational(parse_human_polynomial(t));
    std::vector<mpq_class> coeffs;
    for (const auto& tok : split(t, ',')) coeffs.push_back(parse_rational_token(tok));
    return RatPolynomial(std::move(coeffs));
}

Eigen::MatrixXd parse_real_matrix(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ValidationError("empty matrix string");
    std::vector<std::vector<double>> rows;
    if (t[0] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(t);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
        }
        if (!j.is_array()) throw ValidationError("matrix JSON must be an array of arrays");
        for (const auto& row : j) {
            if (!row.is_array()) throw ValidationError("matrix JSON must be an array of arrays");
            std::vector<double> r;
            for (const auto& v : row) {
                if (!v.is_number()) throw ValidationError("matrix entries must be numbers");
                r.push_back(v.get<double>());
            }
            rows.push_back(std::move(r));
        }
    } else {
        for (const auto& row_text : split(t, ';')) {
            std::vector<double> r;
            for (const auto& tok : split(row_text, ',')) {
                const std::string token = trim(tok);
                try {
                    std::size_t used = 0;
                    double v = std::stod(token, &used);
                    if (used != token.size()) throw std::invalid_argument(token);
                    r.push_back(v);
                } catch (const std::exception&) {
                    throw ValidationError("malformed matrix entry '" + token + "'");
                }
            }
            rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) throw ValidationError("matrix has no rows");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("matrix rows have unequal lengths");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

std::string to_matrix_string(const Eigen::MatrixXd& m) {
    std::ostringstream os;
    os.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i) os << ';';
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
    }
    return os.str();
}

} // namespace mahler
