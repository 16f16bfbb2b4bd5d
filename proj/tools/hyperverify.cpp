// Command-line front end: evaluate the special functions, run condition
// checks, execute the identity catalog and emit reports.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 evaluation error.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperverify/conditions.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/identities.hpp"
#include "hyperverify/meijerg.hpp"
#include "hyperverify/pfq.hpp"

namespace hv = hyperverify;

namespace {

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse number '" + item +
                                        "'");
        }
        while (pos < item.size() &&
               std::isspace(static_cast<unsigned char>(item[pos])))
            ++pos;
        if (pos != item.size())
            throw std::invalid_argument("cannot parse number '" + item +
                                        "'");
        out.push_back(v);
    }
    return out;
}

hv::param_vector parse_params(const std::string& s) {
    return hv::param_vector(parse_csv_doubles(s));
}

// Complex literals: "1.5", "-2", "0.5+0.3i", "1e-2-3i", "2i", "-i".
hv::complex_t parse_complex(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw hv::evaluation_error("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I')
        return hv::complex_t(std::stod(s), 0.0);
    s.pop_back();  // drop the trailing i
    // split at the sign that separates the real and imaginary parts
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' &&
            s[k - 1] != 'E') {
            const std::string re = s.substr(0, k);
            std::string im = s.substr(k);
            if (im == "+") im = "1";
            if (im == "-") im = "-1";
            return hv::complex_t(std::stod(re), std::stod(im));
        }
    }
    if (s.empty() || s == "+") return hv::complex_t(0.0, 1.0);
    if (s == "-") return hv::complex_t(0.0, -1.0);
    return hv::complex_t(0.0, std::stod(s));
}

std::string format_value(hv::complex_t v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v.real());
    std::string out = buf;
    if (std::abs(v.imag()) > 1e-14 * std::max(1.0, std::abs(v.real()))) {
        std::snprintf(buf, sizeof buf, "%+.*g", digits, v.imag());
        out += buf;
        out += 'i';
    }
    return out;
}

std::string catalog_listing() {
    std::string out = "identity catalog:\n";
    for (const auto& c : hv::catalog()) {
        out += "  " + c.id;
        if (c.flagged()) out += " [flagged]";
        out += " -- " + c.anchor + "\n";
    }
    out += "  (alias: sigma3_jump_cancel -> gamma_cancellation)\n";
    return out;
}

// Flat key=value configuration files; '#' starts a comment.
void load_config_file(const std::string& path, hv::run_config& cfg) {
    std::ifstream in(path);
    if (!in) throw hv::evaluation_error("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string()
                                          : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "cases") {
            if (value == "all") {
                cfg.all_cases = true;
            } else {
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.cases.push_back(item);
            }
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "rel_tol") {
            cfg.rel_tol = std::stod(value);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "format") {
            cfg.format = value;
        } else if (key == "parallelism") {
            cfg.parallelism = std::stoi(value);
        } else if (!key.empty()) {
            throw hv::evaluation_error("unknown config key '" + key + "'");
        }
    }
}

int run_verify(hv::run_config cfg) {
    std::vector<const hv::identity_case*> selected;
    if (cfg.all_cases) {
        for (const auto& c : hv::catalog()) selected.push_back(&c);
    } else {
        if (cfg.cases.empty()) {
            std::cerr << "verify: no cases selected (use --cases or --all)\n";
            return 2;
        }
        for (const auto& id : cfg.cases) {
            const auto* c = hv::find_case(id);
            if (!c) {
                std::cerr << "verify: unknown case id '" << id << "'\n";
                return 2;
            }
            selected.push_back(c);
        }
    }

    std::vector<hv::verification_report> reports;
    bool bad = false;
    for (const auto* c : selected) {
        hv::verification_report r = hv::run_case(*c, cfg);
        // Under --all, a flagged case failing as printed is the expected
        // outcome and does not fail the run; explicit selection reports
        // the case's own status.
        if (r.status != "pass" && !(cfg.all_cases && c->flagged()))
            bad = true;
        reports.push_back(std::move(r));
    }

    const std::string doc = hv::emit_report(reports, cfg);
    if (cfg.output == "-" || cfg.output.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(cfg.output, std::ios::binary);
        if (!out) {
            std::cerr << "verify: cannot write " << cfg.output << "\n";
            return 3;
        }
        out << doc;
    }
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hyperverify: generalized hypergeometric / Meijer G evaluation "
        "kernel with an identity-verification harness"};
    app.footer(catalog_listing());
    app.require_subcommand(1);

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate a function value");
    std::string eval_kind;
    eval->add_option("kind", eval_kind, "pfq | meijerg")->required();
    std::string opt_a, opt_b, opt_z, opt_top, opt_bottom, opt_shape;
    double opt_x = 0.0;
    int digits = 9;
    eval->add_option("--a", opt_a, "upper parameters, comma separated");
    eval->add_option("--b", opt_b, "lower parameters, comma separated");
    eval->add_option("--z", opt_z, "argument (complex as re+imi)");
    eval->add_option("--shape", opt_shape, "meijerg orders m,n,p,q");
    eval->add_option("--top", opt_top, "meijerg top row");
    eval->add_option("--bottom", opt_bottom, "meijerg bottom row");
    eval->add_option("--x", opt_x, "meijerg argument (positive real)");
    eval->add_option("--digits", digits, "significant digits (default 9)")
        ->check(CLI::Range(1, 15));

    // ---- check ----
    auto* check = app.add_subcommand("check", "run a condition check");
    std::string check_kind, coeffs, family = "neg";
    int max_order = 8;
    check->add_option("kind", check_kind, "muntz | supermaj | cm | am")
        ->required();
    check->add_option("--a", opt_a, "vector a");
    check->add_option("--b", opt_b, "vector b");
    check->add_option("--coeffs", coeffs, "Taylor coefficients (am)");
    check->add_option("--family", family,
                      "cm family: neg (pFp(-x)), recip (pFp(1/x)), scaled "
                      "(x^{-a_p} pFp(-1/x))");
    check->add_option("--max-order", max_order, "cm probe depth");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity catalog cases");
    hv::run_config cfg;
    std::string cases_csv, config_path;
    bool all = false;
    std::uint64_t seed = 0;
    double rel_tol = 1e-6;
    auto* opt_cases =
        verify->add_option("--cases", cases_csv, "case ids, comma separated");
    auto* opt_all = verify->add_flag("--all", all, "run every case");
    auto* opt_seed = verify->add_option("--seed", seed, "sample plan seed");
    auto* opt_rtol = verify->add_option(
        "--rel-tol", rel_tol, "default equality tolerance (default 1e-6)");
    auto* opt_out = verify->add_option("--output", cfg.output,
                                       "report path ('-' = stdout)");
    auto* opt_fmt =
        verify->add_option("--format", cfg.format, "json | csv | text");
    auto* opt_par = verify->add_option("--parallelism", cfg.parallelism,
                                       "worker threads for case samples");
    auto* opt_tim = verify->add_flag("--timings", cfg.timings,
                                     "record wall-clock durations in the "
                                     "report (off keeps reports "
                                     "byte-reproducible)");
    verify->add_option("--config", config_path,
                       "key=value configuration file (flags override)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            hv::complex_t value;
            if (eval_kind == "pfq") {
                const hv::hypergeometric_spec spec(parse_params(opt_a),
                                                   parse_params(opt_b));
                value = hv::pfq_continued(spec, parse_complex(opt_z));
            } else if (eval_kind == "meijerg") {
                const auto shape = parse_csv_doubles(opt_shape);
                if (shape.size() != 4)
                    throw hv::evaluation_error("--shape needs m,n,p,q");
                const hv::g_function_spec spec(
                    static_cast<unsigned>(shape[0]),
                    static_cast<unsigned>(shape[1]), parse_params(opt_top),
                    parse_params(opt_bottom));
                if (spec.q == spec.p + 1)
                    value = hv::g_q_plus_one(spec, opt_x);
                else
                    value = hv::g_slater(spec, opt_x);
            } else {
                std::cerr << "eval: unknown kind '" << eval_kind << "'\n";
                return 2;
            }
            std::cout << format_value(value, digits) << "\n";
            return 0;
        }

        if (check->parsed()) {
            if (check_kind == "muntz") {
                const hv::muntz_spec spec{parse_params(opt_a),
                                          parse_params(opt_b)};
                const auto cert = hv::muntz_nonneg(spec);
                if (cert.nonnegative) {
                    std::cout << "PASS: v_{a,b} >= 0 on [0,1] (grid minimum "
                              << cert.min_value << " at t=" << cert.min_location
                              << ")\n";
                    return 0;
                }
                std::cout << "FAIL: v_{a,b}(" << cert.min_location
                          << ") = " << cert.min_value << " < 0\n";
                return 1;
            }
            if (check_kind == "supermaj") {
                const bool ok = hv::weak_supermajorization(
                    parse_params(opt_a), parse_params(opt_b));
                std::cout << (ok ? "PASS" : "FAIL")
                          << ": prefix-sum domination of the ascending "
                             "rearrangements\n";
                return ok ? 0 : 1;
            }
            if (check_kind == "am") {
                const auto verdict = hv::am_check(parse_csv_doubles(coeffs));
                if (verdict.passed) {
                    std::cout << "PASS: all coefficients nonnegative\n";
                    return 0;
                }
                std::cout << "FAIL: coefficient " << verdict.witness->order
                          << " = " << verdict.witness->value << " < 0\n";
                return 1;
            }
            if (check_kind == "cm") {
                const hv::param_vector a = parse_params(opt_a);
                const hv::param_vector b = parse_params(opt_b);
                const hv::hypergeometric_spec spec(a, b);
                std::function<double(double)> f;
                if (family == "neg") {
                    f = [spec](double x) {
                        return hv::pfq_series(spec, hv::complex_t(-x, 0.0))
                            .real();
                    };
                } else if (family == "recip") {
                    f = [spec](double x) {
                        return hv::pfq_series(spec,
                                              hv::complex_t(1.0 / x, 0.0))
                            .real();
                    };
                } else if (family == "scaled") {
                    const double ap = a[a.size() - 1];
                    f = [spec, ap](double x) {
                        return std::pow(x, -ap) *
                               hv::pfq_series(spec,
                                              hv::complex_t(-1.0 / x, 0.0))
                                   .real();
                    };
                } else {
                    std::cerr << "check cm: unknown family\n";
                    return 2;
                }
                const auto verdict =
                    hv::cm_probe(f, hv::cm_default_grid(), max_order);
                if (verdict.passed) {
                    std::cout << "PASS: alternating divided differences "
                                 "nonnegative through order "
                              << verdict.max_order_checked << "\n";
                    return 0;
                }
                std::cout << "FAIL: order " << verdict.witness->order
                          << " at x=" << verdict.witness->point << " gives "
                          << verdict.witness->value << "\n";
                return 1;
            }
            std::cerr << "check: unknown kind '" << check_kind << "'\n";
            return 2;
        }

        if (verify->parsed()) {
            if (!config_path.empty()) load_config_file(config_path, cfg);
            if (opt_cases->count()) {
                cfg.cases.clear();
                std::stringstream ss(cases_csv);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.cases.push_back(item);
            }
            if (opt_all->count()) cfg.all_cases = all;
            if (opt_seed->count()) {
                cfg.seed = seed;
            } else if (config_path.empty() || cfg.seed == 0) {
                if (const char* env = std::getenv("HYPERVERIFY_SEED"))
                    cfg.seed = std::strtoull(env, nullptr, 10);
            }
            if (opt_rtol->count()) cfg.rel_tol = rel_tol;
            (void)opt_out;
            (void)opt_fmt;
            (void)opt_par;
            (void)opt_tim;
            return run_verify(cfg);
        }
    } catch (const hv::evaluation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
