#include <cmath>
#include <sstream>

#include "wmw/cli/app.hpp"

namespace wmw::cli {

namespace {

// Non-finite numbers have no JSON literal; they are written as strings.
Json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

void render(const Json& node, const std::string& prefix, std::ostringstream& os) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            render(value, prefix.empty() ? key : prefix + "." + key, os);
        }
    } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_string())) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            render(node[i], prefix + "[" + std::to_string(i) + "]", os);
        }
    } else {
        os << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
    }
}

}  // namespace

Json to_json(const TestResult& r) {
    Json j;
    j["a_hat"] = number(r.a_hat);
    j["se"] = number(r.se);
    j["df"] = r.df ? number(*r.df) : Json("normal");
    j["statistic"] = number(r.statistic);
    j["p_value"] = number(r.p_value);
    j["ci"] = Json::array({number(r.ci_lo), number(r.ci_hi)});
    j["method"] = std::string(to_string(r.method));
    return j;
}

Json to_json(const PseudomedianResult& r) {
    Json j;
    j["theta_hat"] = number(r.theta_hat);
    j["ci"] = Json::array({number(r.ci_lo), number(r.ci_hi)});
    j["grid_k"] = r.grid_k;
    j["search_range"] = Json::array({number(r.search_lo), number(r.search_hi)});
    j["scale"] = number(r.scale);
    j["refined"] = r.refined;
    j["tests_run"] = r.tests_run;
    return j;
}

Json to_json(const SimSummary& s) {
    Json j;
    j["estimand"] = std::string(to_string(s.estimand));
    j["mean_a_hat"] = number(s.mean_a_hat);
    j["sd_a_hat"] = number(s.sd_a_hat);
    j["rate"] = s.rate ? number(*s.rate) : Json(nullptr);
    j["mc_standard_error"] = number(s.mc_standard_error);
    j["reps_done"] = s.reps_done;
    if (s.traditional_rate) j["traditional_rate"] = number(*s.traditional_rate);
    return j;
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    render(report, "", os);
    return os.str();
}

}  // namespace wmw::cli
