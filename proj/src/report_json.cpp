#include "mahler/report_json.hpp"

#include "mahler/errors.hpp"
#include "mahler/text_formats.hpp"

namespace mahler {

json to_json(const MeasureReport& r) {
    return json{{"degree", r.degree},
                {"mahler", r.mahler},
                {"mahler_err", r.mahler_err},
                {"translation_length", r.translation_length},
                {"length_err", r.length_err},
                {"lower_bound", r.lower_bound},
                {"upper_bound", r.upper_bound},
                {"equality_case", to_string(r.equality_case)},
                {"inputs_echo", r.inputs_echo}};
}

MeasureReport measure_report_from_json(const json& j) {
    MeasureReport r;
    r.degree = j.at("degree").get<int>();
    r.mahler = j.at("mahler").get<double>();
    r.mahler_err = j.at("mahler_err").get<double>();
    r.translation_length = j.at("translation_length").get<double>();
    r.length_err = j.at("length_err").get<double>();
    r.lower_bound = j.at("lower_bound").get<double>();
    r.upper_bound = j.at("upper_bound").get<double>();
    r.equality_case = equality_case_from_string(j.at("equality_case").get<std::string>());
    r.inputs_echo = j.at("inputs_echo").get<std::string>();
    r.log_mahler = std::log(r.mahler);
    return r;
}

json to_json(const BoundFunctionValue& v) {
    return json{{"n", v.n},
                {"value", v.value},
                {"branch", v.branch == BoundBranch::lehmer_branch ? "lehmer_branch" : "voutier_branch"}};
}

BoundFunctionValue bound_function_value_from_json(const json& j) {
    BoundFunctionValue v;
    v.n = j.at("n").get<long>();
    v.value = j.at("value").get<double>();
    const std::string b = j.at("branch").get<std::string>();
    if (b == "lehmer_branch")
        v.branch = BoundBranch::lehmer_branch;
    else if (b == "voutier_branch")
        v.branch = BoundBranch::voutier_branch;
    else
        throw ValidationError("unknown branch '" + b + "'");
    return v;
}

json to_json(const SearchRecord& r) {
    return json{{"best_measure", r.best_measure},
                {"witness", to_comma_string(r.witness)},
                {"candidates_scanned", r.candidates_scanned},
                {"cyclotomic_skipped", r.cyclotomic_skipped},
                {"wall_time_seconds", r.wall_time_seconds}};
}

SearchRecord search_record_from_json(const json& j) {
    SearchRecord r;
    r.best_measure = j.at("best_measure").get<double>();
    r.witness = parse_int_polynomial(j.at("witness").get<std::string>());
    r.candidates_scanned = j.at("candidates_scanned").get<std::uint64_t>();
    r.cyclotomic_skipped = j.at("cyclotomic_skipped").get<std::uint64_t>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return r;
}

json to_json(const CorollaryBounds& b) {
    return json{{"length_lower", b.length_lower}, {"length_upper", b.length_upper}, {"disc_lower", b.disc_lower}};
}

CorollaryBounds corollary_bounds_from_json(const json& j) {
    CorollaryBounds b;
    b.length_lower = j.at("length_lower").get<double>();
    b.length_upper = j.at("length_upper").get<double>();
    b.disc_lower = j.at("disc_lower").get<double>();
    return b;
}

json to_json(const ClassicalInequalities& c) {
    return json{{"length", c.length.get_str()},
                {"disc", c.disc.get_str()},
                {"mahler", c.mahler},
                {"mahler_err", c.mahler_err},
                {"length_vs_measure_holds", c.length_vs_measure_holds},
                {"length_vs_measure_margin", c.length_vs_measure_margin},
                {"measure_vs_length_holds", c.measure_vs_length_holds},
                {"measure_vs_length_margin", c.measure_vs_length_margin},
                {"disc_vs_measure_holds", c.disc_vs_measure_holds},
                {"disc_vs_measure_log_margin", c.disc_vs_measure_log_margin}};
}

json to_json(const SemisimpleCertificate& c) {
    json eigenvalues = json::array();
    for (const auto& ev : c.eigenvalues) eigenvalues.push_back(json{{"re", ev.real()}, {"im", ev.imag()}});
    return json{{"is_semisimple", c.is_semisimple},
                {"eigenvalues", eigenvalues},
                {"min_geometric_defect", c.min_geometric_defect},
                {"clusters_resolved", c.clusters_resolved}};
}

json to_json(const TheoremAReport& r) {
    return json{{"report", to_json(r.report)},
                {"matrix_length", r.matrix_length},
                {"matrix_length_err", r.matrix_length_err},
                {"cross_check_gap", r.cross_check_gap}};
}

json to_json(const IntegralityReport& r) {
    return json{{"pass", r.pass},
                {"char_poly", to_comma_string(r.char_poly)},
                {"fractional_powers", r.fractional_powers}};
}

json to_json(const RootSet& rs) {
    json roots = json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        roots.push_back(json{{"re", rs.roots[i].real()}, {"im", rs.roots[i].imag()}, {"radius", rs.radii[i]}});
    return json{{"source_degree", rs.source_degree}, {"roots", roots}};
}

FieldSpec field_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("min_poly"))
        throw ValidationError("field specification needs a 'min_poly' key");
    FieldSpec spec;
    spec.min_poly = parse_int_polynomial(j.at("min_poly").get<std::string>());
    spec.label = j.value("label", std::string{});
    return spec;
}

namespace {
mpq_class rational_from_json(const json& v) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return mpq_class(mpz_class(s));
            return make_rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed rational '" + s + "'");
        }
    }
    throw ValidationError("matrix coordinates must be integers or rational strings");
}
} // namespace

FieldMatrix field_matrix_from_json(const json& j, const NumberField& field) {
    if (!j.is_array() || j.empty()) throw ValidationError("field matrix must be a nonempty array of rows");
    const int dim = static_cast<int>(j.size());
    std::vector<FieldElement> entries;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ValidationError("field matrix must be square");
        for (const auto& entry : row) {
            std::vector<mpq_class> coords;
            if (entry.is_array()) {
                for (const auto& v : entry) coords.push_back(rational_from_json(v));
            } else {
                coords.push_back(rational_from_json(entry));
            }
            if (static_cast<int>(coords.size()) > field.degree())
                throw ValidationError("coordinate vector longer than the field degree");
            entries.push_back(field.element(std::move(coords)));
        }
    }
    return field.matrix(dim, std::move(entries));
}

} // namespace mahler
