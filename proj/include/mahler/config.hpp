#ifndef MAHLER_CONFIG_HPP
#define MAHLER_CONFIG_HPP

#include <optional>
#include <string>

namespace mahler {

enum class OutputMode { text, json };

// Run-wide settings. Precedence: built-in defaults < config file
// (mahlerctl.toml-style flat key = value) < MAHLERCTL_* environment
// variables < command-line flags.
struct Config {
    unsigned precision_bits = 128; // must lie in [64, 1024]
    double tolerance = 1e-9;
    bool strict_det = false;
    OutputMode output = OutputMode::text;
    int workers = 1;

    void validate() const;
};

// Flat key/value file: lines of "key = value", '#' comments. Unknown keys are
// rejected so typos do not silently change behavior.
Config load_config_file(const std::string& path);

// MAHLERCTL_PRECISION_BITS, MAHLERCTL_TOLERANCE, MAHLERCTL_STRICT_DET,
// MAHLERCTL_OUTPUT, MAHLERCTL_WORKERS
void apply_env_overrides(Config& config);

} // namespace mahler

#endif
