#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fracspline {

// Structured outcome of one identity check.
// passed <=> discrepancy <= tolerance (or <= 3 * mc_stderr when stochastic).
// Tolerances are scaled by FRACSPLINE_TOL_SCALE (default 1.0) at
// construction so CI and local runs can widen or tighten the whole suite.
struct VerificationReport {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    double discrepancy = 0.0;
    double tolerance = 0.0;
    std::optional<double> mc_stderr;
    bool passed = false;
    std::string notes;
};

double tol_scale();

VerificationReport make_report(std::string identity_id,
                               std::map<std::string, std::string> parameters,
                               double discrepancy, double tolerance,
                               std::optional<double> mc_stderr = std::nullopt,
                               std::string notes = "");

// Deterministic JSON (stable key order, shortest round-trip doubles).
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);

// Formatting helpers shared by reports and the CLI.
std::string format_double(double v);   // 17 significant digits, round-trip
std::string format_complex(std::complex<double> v);

} // namespace fracspline
