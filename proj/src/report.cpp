#include <sstream>

#include <json.hpp>

#include "hyperverify/errors.hpp"
#include "hyperverify/identities.hpp"

namespace hyperverify {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json sample_to_json(const sample_record& s) {
    ordered_json j;
    ordered_json in = ordered_json::object();
    for (const auto& [name, value] : s.inputs) in[name] = value;
    j["inputs"] = in;
    if (s.errored) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["residual"] = nullptr;
        j["error"] = s.error;
    } else {
        j["lhs"] = ordered_json::array({s.lhs.real(), s.lhs.imag()});
        j["rhs"] = ordered_json::array({s.rhs.real(), s.rhs.imag()});
        j["residual"] = s.residual;
    }
    return j;
}

}  // namespace

std::string emit_report_json(const std::vector<verification_report>& reports,
                             const run_config& cfg) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["case_id"] = r.case_id;
        j["status"] = r.status;
        j["max_rel_residual"] = r.max_rel_residual;
        ordered_json samples = ordered_json::array();
        for (const auto& s : r.samples) samples.push_back(sample_to_json(s));
        j["samples"] = samples;
        j["seed"] = r.seed;
        j["tolerances"] = ordered_json{{"rel_tol", r.applied_rel_tol}};
        if (cfg.timings && r.duration_ms >= 0.0)
            j["duration_ms"] = r.duration_ms;
        else
            j["duration_ms"] = nullptr;
        out.push_back(j);
    }
    return out.dump(2) + "\n";
}

std::string emit_report_csv(const std::vector<verification_report>& reports) {
    std::ostringstream os;
    os << "case_id,status,max_rel_residual,duration_ms\n";
    for (const auto& r : reports) {
        os << r.case_id << ',' << r.status << ',';
        os.precision(15);
        os << r.max_rel_residual << ',';
        if (r.duration_ms >= 0.0) os << r.duration_ms;
        os << '\n';
    }
    return os.str();
}

std::string emit_report_text(const std::vector<verification_report>& reports) {
    std::ostringstream os;
    int pass = 0, fail = 0, errored = 0, flagged_fail = 0;
    for (const auto& r : reports) {
        os.setf(std::ios::left);
        os.width(24);
        os << r.case_id;
        os.width(8);
        std::string shown = r.status;
        for (auto& ch : shown) ch = char(std::toupper(ch));
        os << shown;
        os.unsetf(std::ios::left);
        os << " max_residual=";
        os.precision(3);
        os << std::scientific << r.max_rel_residual << std::defaultfloat;
        if (r.flagged) os << "  [flagged: expected to fail as printed]";
        if (r.duration_ms >= 0.0)
            os << "  (" << r.duration_ms << " ms)";
        os << '\n';
        if (r.status == "errored")
            ++errored;
        else if (r.status == "pass")
            ++pass;
        else if (r.flagged)
            ++flagged_fail;
        else
            ++fail;
    }
    os << "summary: pass=" << pass << " fail=" << fail
       << " flagged_fail=" << flagged_fail << " errored=" << errored << '\n';
    return os.str();
}

std::string emit_report(const std::vector<verification_report>& reports,
                        const run_config& cfg) {
    if (cfg.format == "json") return emit_report_json(reports, cfg);
    if (cfg.format == "csv") return emit_report_csv(reports);
    if (cfg.format == "text") return emit_report_text(reports);
    throw evaluation_error("emit_report: unknown format " + cfg.format);
}

}  // namespace hyperverify
