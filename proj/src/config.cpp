#include "mahler/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mahler/errors.hpp"

namespace mahler {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

void apply_key(Config& c, const std::string& key, const std::string& value) {
    try {
        if (key == "precision_bits")
            c.precision_bits = static_cast<unsigned>(std::stoul(value));
        else if (key == "tolerance")
            c.tolerance = std::stod(value);
        else if (key == "strict_det")
            c.strict_det = parse_bool(value, key);
        else if (key == "workers")
            c.workers = std::stoi(value);
        else if (key == "output") {
            if (value == "text")
                c.output = OutputMode::text;
            else if (value == "json")
                c.output = OutputMode::json;
            else
                throw ValidationError("config key 'output' must be 'text' or 'json', got '" + value + "'");
        } else {
            throw ValidationError("unknown config key '" + key + "'");
        }
    } catch (const std::invalid_argument&) {
        throw ValidationError("config key '" + key + "' has malformed value '" + value + "'");
    } catch (const std::out_of_range&) {
        throw ValidationError("config key '" + key + "' has out-of-range value '" + value + "'");
    }
}

} // namespace

void Config::validate() const {
    if (precision_bits < 64 || precision_bits > 1024)
        throw ValidationError("precision_bits must lie in [64, 1024]");
    if (!(tolerance > 0))
        throw ValidationError("tolerance must be positive");
    if (workers < 1 || workers > 4096)
        throw ValidationError("workers must lie in [1, 4096]");
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) + " is not 'key = value'");
        apply_key(c, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return c;
}

void apply_env_overrides(Config& config) {
    const auto get = [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        if (v == nullptr || *v == '\0') return std::nullopt;
        return std::string(v);
    };
    if (auto v = get("MAHLERCTL_PRECISION_BITS")) apply_key(config, "precision_bits", *v);
    if (auto v = get("MAHLERCTL_TOLERANCE")) apply_key(config, "tolerance", *v);
    if (auto v = get("MAHLERCTL_STRICT_DET")) apply_key(config, "strict_det", *v);
    if (auto v = get("MAHLERCTL_OUTPUT")) apply_key(config, "output", *v);
    if (auto v = get("MAHLERCTL_WORKERS")) apply_key(config, "workers", *v);
}

} // namespace mahler
