#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracspline/report.hpp"

namespace fracspline {

enum class Suite { all, bspline, fractional, differences, dirichlet, weighted, multivariate };

Suite parse_suite(const std::string& name); // throws DomainError on unknown names

// Runs the identity-verification checks of one suite with canonical
// parameters. Fully deterministic for a fixed seed: every stochastic check
// draws from counter-based streams derived from its position in the suite.
std::vector<VerificationReport> run_suite(Suite suite, std::uint64_t seed);

} // namespace fracspline
