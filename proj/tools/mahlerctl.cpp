#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mahler/acceptance.hpp"
#include "mahler/config.hpp"
#include "mahler/cyclotomic.hpp"
#include "mahler/errors.hpp"
#include "mahler/matrix_length.hpp"
#include "mahler/measures.hpp"
#include "mahler/newton_identities.hpp"
#include "mahler/number_field.hpp"
#include "mahler/report_json.hpp"
#include "mahler/search.hpp"
#include "mahler/subresultant.hpp"
#include "mahler/text_formats.hpp"

namespace {

using mahler::Config;
using mahler::json;

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

struct Output {
    std::optional<std::string> path;
    std::ostringstream buffer;

    template <typename T>
    Output& operator<<(const T& v) {
        buffer << v;
        return *this;
    }

    void flush() {
        if (path) {
            std::ofstream f(*path);
            if (!f) throw mahler::ValidationError("cannot open output file '" + *path + "'");
            f << buffer.str();
        } else {
            std::cout << buffer.str();
        }
    }
};

mahler::RootOptions root_options(const Config& cfg) {
    mahler::RootOptions o;
    o.precision_bits = cfg.precision_bits;
    return o;
}

mahler::MeasureOptions measure_options(const Config& cfg) {
    mahler::MeasureOptions o;
    o.tolerance = cfg.tolerance;
    o.roots = root_options(cfg);
    return o;
}

void print_measure_report(Output& out, const mahler::MeasureReport& rep, bool as_json) {
    if (as_json) {
        out << to_json(rep).dump(2) << "\n";
        return;
    }
    out << "degree:             " << rep.degree << "\n"
        << "mahler:             " << fixed(rep.mahler, 10) << "  (err " << rep.mahler_err << ")\n"
        << "log_mahler:         " << fixed(rep.log_mahler, 10) << "\n"
        << "translation_length: " << fixed(rep.translation_length, 10) << "  (err " << rep.length_err << ")\n"
        << "lower_bound:        " << fixed(rep.lower_bound, 10) << "\n"
        << "upper_bound:        " << fixed(rep.upper_bound, 10) << "\n"
        << "equality_case:      " << mahler::to_string(rep.equality_case) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahler measures, translation lengths in SL_n, and arithmetic-orbifold systole bounds"};
    app.require_subcommand(1);

    std::string config_path;
    bool flag_json = false, flag_strict_det = false;
    unsigned flag_precision = 0;
    double flag_tolerance = 0;
    int flag_workers = 0;
    std::optional<std::string> out_path;

    app.add_option("--config", config_path, "config file (flat key = value)");
    app.add_flag("--json", flag_json, "JSON output");
    app.add_flag("--strict-det", flag_strict_det, "require determinant (and root product) exactly +1");
    auto* opt_precision = app.add_option("--precision", flag_precision, "working precision in bits [64,1024]");
    auto* opt_tolerance = app.add_option("--tolerance", flag_tolerance, "comparison tolerance");
    auto* opt_workers = app.add_option("--workers", flag_workers, "worker threads for search");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    std::string poly_arg, matrix_arg, field_file, matrix_file;
    long n_arg = 0, p_arg = 0, k_arg = 0;
    double logm_arg = 0;

    auto* cmd_mahler = app.add_subcommand("mahler", "Mahler measure of an integer polynomial");
    cmd_mahler->add_option("poly", poly_arg, "polynomial (comma or x^k form)")->required();

    auto* cmd_tlp = app.add_subcommand("translen-poly", "translation length of a polynomial");
    cmd_tlp->add_option("poly", poly_arg)->required();

    auto* cmd_tlm = app.add_subcommand("translen-mat", "translation length of a semisimple matrix");
    cmd_tlm->add_option("matrix", matrix_arg, "rows ';', entries ','; or JSON array of arrays")->required();

    auto* cmd_bounds = app.add_subcommand("bounds", "Mahler-length bound report with equality classification");
    cmd_bounds->add_option("poly", poly_arg)->required();

    auto* cmd_cor = app.add_subcommand("corollary", "length and discriminant bounds on the translation length");
    cmd_cor->add_option("poly", poly_arg)->required();

    auto* cmd_f = app.add_subcommand("f", "lower bound function f(n) for log Mahler measures");
    cmd_f->add_option("n", n_arg)->required();

    auto* cmd_sys = app.add_subcommand("sysbound", "systole lower bound 2 sqrt(2)/sqrt(n) f(n)");
    cmd_sys->add_option("n", n_arg)->required();

    auto* cmd_silverman = app.add_subcommand("silverman", "discriminant-norm bound from Silverman's inequality");
    cmd_silverman->add_option("p", p_arg, "odd prime")->required();
    cmd_silverman->add_option("logM", logm_arg, "log Mahler measure (>= 0)")->required();

    auto* cmd_embed = app.add_subcommand("embed", "block embedding of a matrix over a number field + integrality");
    cmd_embed->add_option("fieldfile", field_file, "JSON field spec {\"min_poly\": \"1,0,-2\"}")->required();
    cmd_embed->add_option("matrixfile", matrix_file, "JSON array of arrays of coordinate vectors")->required();

    auto* cmd_search = app.add_subcommand("search", "exhaustive minimal-Mahler-measure scan");
    int search_degree = 10, search_height = 1;
    bool search_reciprocal = false;
    double report_threshold = 0;
    std::string report_csv;
    cmd_search->add_option("--degree", search_degree, "polynomial degree")->capture_default_str();
    cmd_search->add_option("--height", search_height, "max |coefficient|")->capture_default_str();
    cmd_search->add_flag("--reciprocal", search_reciprocal, "palindromic coefficient vectors only");
    auto* opt_thresh = cmd_search->add_option("--report-threshold", report_threshold,
                                              "also stream candidates with measure above this to CSV");
    cmd_search->add_option("--report-csv", report_csv, "CSV path for the candidate stream ('-' = stdout)");

    auto* cmd_verify = app.add_subcommand("verify-all", "run the verification suite");

    auto* cmd_disc = app.add_subcommand("disc", "exact discriminant");
    cmd_disc->add_option("poly", poly_arg)->required();

    auto* cmd_cyclo = app.add_subcommand("cyclo", "cyclotomic / noncyclotomic split");
    cmd_cyclo->add_option("poly", poly_arg)->required();

    auto* cmd_powersums = app.add_subcommand("powersums", "exact power sums of the roots");
    cmd_powersums->add_option("poly", poly_arg)->required();
    cmd_powersums->add_option("k", k_arg, "number of power sums")->required();

    auto* cmd_roots = app.add_subcommand("roots", "certified complex roots");
    cmd_roots->add_option("poly", poly_arg)->required();

    auto* cmd_charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial of a real matrix");
    cmd_charpoly->add_option("matrix", matrix_arg)->required();

    auto* cmd_semisimple = app.add_subcommand("semisimple", "numeric semisimplicity certificate");
    cmd_semisimple->add_option("matrix", matrix_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Config cfg;
        if (!config_path.empty())
            cfg = mahler::load_config_file(config_path);
        else if (std::filesystem::exists("mahlerctl.toml"))
            cfg = mahler::load_config_file("mahlerctl.toml");
        mahler::apply_env_overrides(cfg);
        if (opt_precision->count()) cfg.precision_bits = flag_precision;
        if (opt_tolerance->count()) cfg.tolerance = flag_tolerance;
        if (opt_workers->count()) cfg.workers = flag_workers;
        if (flag_strict_det) cfg.strict_det = true;
        if (flag_json) cfg.output = mahler::OutputMode::json;
        cfg.validate();
        const bool as_json = cfg.output == mahler::OutputMode::json;

        Output out;
        out.path = out_path;

        if (*cmd_mahler) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const auto [v, err] = mahler::mahler_measure(p, root_options(cfg));
            if (as_json)
                out << json{{"input", mahler::to_comma_string(p)}, {"mahler", v}, {"mahler_err", err}}.dump(2)
                    << "\n";
            else
                out << fixed(v, 10) << "\n";
        } else if (*cmd_tlp) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const auto [v, err] = mahler::translation_length(p, root_options(cfg));
            if (as_json)
                out << json{{"input", mahler::to_comma_string(p)},
                            {"translation_length", v},
                            {"length_err", err}}
                           .dump(2)
                    << "\n";
            else
                out << fixed(v, 10) << "\n";
        } else if (*cmd_tlm) {
            const auto m = mahler::parse_real_matrix(matrix_arg);
            const auto [v, err] = mahler::translation_length_matrix(m, cfg.tolerance * 1e3, cfg.strict_det);
            if (as_json)
                out << json{{"translation_length", v}, {"length_err", err}, {"det", m.determinant()}}.dump(2)
                    << "\n";
            else
                out << fixed(v, 10) << "\n";
        } else if (*cmd_bounds) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            auto opts = measure_options(cfg);
            opts.strict_product_one = cfg.strict_det;
            print_measure_report(out, mahler::check_bounds(p, opts), as_json);
        } else if (*cmd_cor) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const auto b = mahler::corollary_bounds(p, measure_options(cfg));
            if (as_json)
                out << to_json(b).dump(2) << "\n";
            else
                out << "length_lower: " << fixed(b.length_lower, 10) << "\n"
                    << "length_upper: " << fixed(b.length_upper, 10) << "\n"
                    << "disc_lower:   " << fixed(b.disc_lower, 10) << "\n";
        } else if (*cmd_f) {
            const auto f = mahler::lower_bound_function(n_arg);
            if (as_json)
                out << to_json(f).dump(2) << "\n";
            else
                out << fixed(f.value, 6) << "\n";
        } else if (*cmd_sys) {
            const double v = mahler::systole_lower_bound(n_arg);
            if (as_json)
                out << json{{"n", n_arg}, {"value", v}}.dump(2) << "\n";
            else
                out << fixed(v, 6) << "\n";
        } else if (*cmd_silverman) {
            const double v = mahler::silverman_disc_bound(p_arg, logm_arg);
            if (as_json)
                out << json{{"p", p_arg}, {"log_mahler", logm_arg}, {"bound", v}}.dump(2) << "\n";
            else
                out << fixed(v, 6) << "\n";
        } else if (*cmd_embed) {
            std::ifstream ff(field_file);
            if (!ff) throw mahler::ValidationError("cannot open field file '" + field_file + "'");
            json jf;
            try {
                ff >> jf;
            } catch (const json::exception& e) {
                throw mahler::ValidationError(std::string("malformed field file: ") + e.what());
            }
            const auto spec = mahler::field_spec_from_json(jf);
            const auto field = mahler::NumberField::make(spec.min_poly, root_options(cfg));
            std::ifstream mf(matrix_file);
            if (!mf) throw mahler::ValidationError("cannot open matrix file '" + matrix_file + "'");
            json jm;
            try {
                mf >> jm;
            } catch (const json::exception& e) {
                throw mahler::ValidationError(std::string("malformed matrix file: ") + e.what());
            }
            const auto y = mahler::field_matrix_from_json(jm, field);
            const auto rep = field.verify_integrality(y);
            const auto numeric = field.iota2_char_poly(y);
            double max_gap = 0;
            for (int k = 0; k <= rep.char_poly.degree(); ++k)
                max_gap = std::max(max_gap,
                                   std::abs(rep.char_poly.coefficient(k).get_d() - numeric.coefficient(k)));
            if (as_json) {
                json j{{"field", {{"label", spec.label},
                                  {"min_poly", mahler::to_comma_string(field.min_poly())},
                                  {"degree", field.degree()},
                                  {"embeddings", field.embeddings_double()},
                                  {"irreducibility_verified", field.irreducibility_verified()}}},
                       {"integrality", to_json(rep)},
                       {"iota2_max_gap", max_gap}};
                out << j.dump(2) << "\n";
            } else {
                out << "field:        " << (spec.label.empty() ? "(unlabeled)" : spec.label) << ", degree "
                    << field.degree() << "\n"
                    << "char_poly:    " << mahler::to_comma_string(rep.char_poly) << "\n"
                    << "integral:     " << (rep.pass ? "yes" : "no") << "\n"
                    << "iota2 gap:    " << max_gap << "\n";
            }
        } else if (*cmd_search) {
            mahler::SearchSpec spec;
            spec.degree = search_degree;
            spec.height = search_height;
            spec.reciprocal_only = search_reciprocal;
            spec.workers = cfg.workers;
            spec.roots = root_options(cfg);
            std::vector<mahler::CandidateRow> rows;
            const bool stream = opt_thresh->count() > 0;
            const auto rec = mahler::enumerate_and_minimize(spec, report_threshold, stream ? &rows : nullptr);
            if (stream) {
                std::ostringstream csv;
                csv << "polynomial,measure\n";
                for (const auto& row : rows)
                    csv << '"' << mahler::to_comma_string(row.poly) << "\"," << fixed(row.measure, 12) << "\n";
                if (report_csv.empty() || report_csv == "-")
                    out << csv.str();
                else {
                    std::ofstream cf(report_csv);
                    if (!cf) throw mahler::ValidationError("cannot open CSV file '" + report_csv + "'");
                    cf << csv.str();
                }
            }
            if (as_json)
                out << to_json(rec).dump(2) << "\n";
            else
                out << "best_measure:       " << fixed(rec.best_measure, 10) << "\n"
                    << "witness:            " << mahler::to_comma_string(rec.witness) << "\n"
                    << "candidates_scanned: " << rec.candidates_scanned << "\n"
                    << "cyclotomic_skipped: " << rec.cyclotomic_skipped << "\n"
                    << "wall_time_seconds:  " << rec.wall_time_seconds << "\n";
        } else if (*cmd_verify) {
            const auto results = mahler::run_acceptance();
            bool all = true;
            if (as_json) {
                json arr = json::array();
                for (const auto& r : results) {
                    all = all && r.pass;
                    arr.push_back(json{{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"seconds", r.seconds},
                                       {"limit_seconds", r.limit_seconds},
                                       {"detail", r.detail}});
                }
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    all = all && r.pass;
                    out << mahler::format_criterion_line(r) << "\n";
                }
            }
            out.flush();
            return all ? 0 : 1;
        } else if (*cmd_disc) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const mpq_class d = mahler::discriminant(p);
            if (as_json)
                out << json{{"input", mahler::to_comma_string(p)}, {"disc", d.get_str()}}.dump(2) << "\n";
            else
                out << d.get_str() << "\n";
        } else if (*cmd_cyclo) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const auto split = mahler::cyclotomic_part(p);
            if (as_json)
                out << json{{"cyclotomic", mahler::to_comma_string(split.cyclotomic)},
                            {"noncyclotomic", mahler::to_comma_string(split.noncyclotomic)}}
                           .dump(2)
                    << "\n";
            else
                out << "cyclotomic:    " << mahler::to_comma_string(split.cyclotomic) << "\n"
                    << "noncyclotomic: " << mahler::to_comma_string(split.noncyclotomic) << "\n";
        } else if (*cmd_powersums) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            if (k_arg < 1) throw mahler::ValidationError("k must be >= 1");
            const auto sums = mahler::power_sums_from_coeffs(p, static_cast<int>(k_arg));
            if (as_json) {
                json arr = json::array();
                for (const auto& s : sums) arr.push_back(s.get_str());
                out << arr.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < sums.size(); ++i)
                    out << "p_" << (i + 1) << " = " << sums[i].get_str() << "\n";
            }
        } else if (*cmd_roots) {
            const auto p = mahler::parse_int_polynomial(poly_arg);
            const auto rs = mahler::find_roots(p, root_options(cfg));
            if (as_json)
                out << to_json(rs).dump(2) << "\n";
            else
                for (std::size_t i = 0; i < rs.roots.size(); ++i)
                    out << rs.roots[i].real() << (rs.roots[i].imag() < 0 ? " - " : " + ")
                        << std::abs(rs.roots[i].imag()) << "i   (radius " << rs.radii[i] << ")\n";
        } else if (*cmd_charpoly) {
            const auto m = mahler::parse_real_matrix(matrix_arg);
            const auto p = mahler::char_poly(m);
            if (as_json)
                out << json{{"char_poly", mahler::to_comma_string(p)}}.dump(2) << "\n";
            else
                out << mahler::to_comma_string(p) << "\n";
        } else if (*cmd_semisimple) {
            const auto m = mahler::parse_real_matrix(matrix_arg);
            const auto cert = mahler::check_semisimple(m);
            if (as_json)
                out << to_json(cert).dump(2) << "\n";
            else
                out << (cert.is_semisimple ? "semisimple" : (cert.clusters_resolved ? "not semisimple"
                                                                                    : "indeterminate"))
                    << " (max defect " << cert.min_geometric_defect << ")\n";
        }
        out.flush();
        return 0;
    } catch (const mahler::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mahler::PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
