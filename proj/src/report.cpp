#include "fracspline/report.hpp"

#include <complex>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace fracspline {

double tol_scale() {
    static const double scale = [] {
        if (const char* env = std::getenv("FRACSPLINE_TOL_SCALE")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0) return v;
        }
        return 1.0;
    }();
    return scale;
}

VerificationReport make_report(std::string identity_id,
                               std::map<std::string, std::string> parameters,
                               double discrepancy, double tolerance,
                               std::optional<double> mc_stderr, std::string notes) {
    VerificationReport r;
    r.identity_id = std::move(identity_id);
    r.parameters = std::move(parameters);
    r.discrepancy = discrepancy;
    r.tolerance = tolerance * tol_scale();
    r.mc_stderr = mc_stderr;
    double bound = r.tolerance;
    if (r.mc_stderr) bound = std::max(bound, 3.0 * *r.mc_stderr);
    r.passed = discrepancy <= bound;
    r.notes = std::move(notes);
    return r;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> v) {
    std::string s = format_double(v.real());
    s += (v.imag() < 0.0 || (v.imag() == 0.0 && std::signbit(v.imag()))) ? "-" : "+";
    s += format_double(std::abs(v.imag()));
    s += "i";
    return s;
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity_id"] = r.identity_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["discrepancy"] = r.discrepancy;
    j["tolerance"] = r.tolerance;
    if (r.mc_stderr)
        j["mc_stderr"] = *r.mc_stderr;
    else
        j["mc_stderr"] = nullptr;
    j["passed"] = r.passed;
    j["notes"] = r.notes;
    return j;
}

} // namespace

std::string to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

} // namespace fracspline
