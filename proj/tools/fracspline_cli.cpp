// fracspline command line: evaluate splines of complex order, sweep spectra,
// apply fractional operators, estimate Dirichlet averages, and run the
// identity-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracspline/bspline.hpp"
#include "fracspline/dirichlet.hpp"
#include "fracspline/errors.hpp"
#include "fracspline/fractional.hpp"
#include "fracspline/kernels.hpp"
#include "fracspline/multivariate.hpp"
#include "fracspline/report.hpp"
#include "fracspline/test_function.hpp"
#include "fracspline/verify.hpp"

namespace {

using fracspline::cplx;

cplx parse_complex(const std::string& s) {
    const char* p = s.c_str();
    char* end = nullptr;
    double re = std::strtod(p, &end);
    if (end == p) throw fracspline::DomainError("malformed complex number: " + s);
    if (*end == '\0') return {re, 0.0};
    if (*end != '+' && *end != '-')
        throw fracspline::DomainError("malformed complex number: " + s);
    char* end2 = nullptr;
    double im = std::strtod(end, &end2);
    if (end2 == end || *end2 != 'i' || *(end2 + 1) != '\0')
        throw fracspline::DomainError("malformed complex number: " + s);
    return {re, im};
}

fracspline::Grid parse_grid(const std::string& s) {
    double a = 0, b = 0, h = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || !(h > 0))
        throw fracspline::DomainError("malformed grid (want start:end:step): " + s);
    auto count = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9)) + 1;
    if (count < 2) count = 2;
    return fracspline::Grid(a, h, count);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw fracspline::DomainError("empty list: " + s);
    return out;
}

fracspline::TestFunction parse_fn(const std::string& s) {
    using fracspline::TestFunction;
    if (s == "expdecay") return TestFunction::exp_decay();
    if (s.rfind("gauss:", 0) == 0) {
        auto parts = parse_list(s.substr(6));
        double c = parts.at(0);
        double w = parts.size() > 1 ? parts.at(1) : 1.0;
        return TestFunction::gaussian(c, w);
    }
    if (s.rfind("polyexp:", 0) == 0) {
        auto parts = parse_list(s.substr(8));
        std::vector<cplx> coeffs(parts.begin(), parts.end());
        return TestFunction::poly_exp(coeffs, s);
    }
    throw fracspline::DomainError("unknown function spec: " + s +
                                  " (expdecay | gauss:c[:w] | polyexp:a0,a1,...)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fracspline::DomainError("cannot open output file: " + path);
    out << content;
}

std::string fd(double v) { return fracspline::format_double(v); }

int cmd_eval(const std::string& zs, const std::string& grids, const std::string& out) {
    cplx z = parse_complex(zs);
    fracspline::Grid grid = parse_grid(grids);
    fracspline::ComplexBSpline b(z);
    std::string csv = "x,re,im,accuracy_flag\n";
    for (std::size_t i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        auto v = b.time(x);
        csv += fd(x) + "," + fd(v.value.real()) + "," + fd(v.value.imag()) + "," +
               (v.accuracy_loss ? "1" : "0") + "\n";
    }
    write_output(out, csv);
    return 0;
}

int cmd_spectrum(const std::string& zs, const std::string& grids, double a,
                 const std::string& out) {
    cplx z = parse_complex(zs);
    fracspline::Grid grid = parse_grid(grids);
    std::string csv = "omega,re,im,abs,arg,mod_re,mod_im,phase_re,phase_im,damp_re,damp_im\n";
    for (std::size_t i = 0; i < grid.count; ++i) {
        double w = grid.point(i);
        cplx v = fracspline::exp_spline_freq(a, z, w);
        csv += fd(w) + "," + fd(v.real()) + "," + fd(v.imag()) + "," + fd(std::abs(v)) +
               "," + fd(std::arg(v));
        if (a == 0.0) {
            try {
                auto f = fracspline::phase_factorization(z, w);
                csv += "," + fd(f.modulus_part.real()) + "," + fd(f.modulus_part.imag()) +
                       "," + fd(f.phase_part.real()) + "," + fd(f.phase_part.imag()) +
                       "," + fd(f.damping_part.real()) + "," + fd(f.damping_part.imag());
            } catch (const fracspline::LogSingularity&) {
                csv += ",nan,nan,nan,nan,nan,nan";
            }
        } else {
            csv += ",,,,,,";
        }
        csv += "\n";
    }
    write_output(out, csv);
    return 0;
}

int cmd_fracop(const std::string& zs, const std::string& op, const std::string& fn,
               const std::string& grids, const std::string& out) {
    cplx z = parse_complex(zs);
    fracspline::FracOrder zo(z);
    fracspline::TestFunction f = parse_fn(fn);
    fracspline::Grid grid = parse_grid(grids);
    std::string csv = "x,re,im\n";
    for (std::size_t i = 0; i < grid.count; ++i) {
        double x = grid.point(i);
        cplx v = op == "integral" ? fracspline::frac_integral(f, zo, x)
                                  : fracspline::frac_derivative(f, zo, x);
        csv += fd(x) + "," + fd(v.real()) + "," + fd(v.imag()) + "\n";
    }
    write_output(out, csv);
    return 0;
}

int cmd_dirichlet(const std::string& fn, const std::string& bs, const std::string& taus,
                  std::size_t samples, std::uint64_t seed, const std::string& format,
                  const std::string& out) {
    auto b = fracspline::WeightVector::positive_real(parse_list(bs));
    auto tau = fracspline::KnotVector::scalar(parse_list(taus));
    fracspline::TestFunction f = parse_fn(fn);
    fracspline::McConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    auto est = fracspline::average_mc1([&](double x) { return f(x); }, b, tau, cfg);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["estimate_re"] = est.estimate.real();
        j["estimate_im"] = est.estimate.imag();
        j["stderr"] = est.std_error;
        j["samples"] = samples;
        write_output(out, j.dump(2) + "\n");
    } else {
        std::string csv = "estimate_re,estimate_im,stderr,samples\n";
        csv += fd(est.estimate.real()) + "," + fd(est.estimate.imag()) + "," +
               fd(est.std_error) + "," + std::to_string(samples) + "\n";
        write_output(out, csv);
    }
    return 0;
}

int cmd_verify(const std::string& suite_name, std::uint64_t seed, const std::string& out) {
    fracspline::Suite suite = fracspline::parse_suite(suite_name);
    auto reports = fracspline::run_suite(suite, seed);
    write_output(out, fracspline::to_json(reports) + "\n");
    bool all_passed = true;
    for (const auto& r : reports) {
        std::string extra = r.mc_stderr ? "  mc_stderr=" + fd(*r.mc_stderr) : "";
        std::fprintf(stderr, "[%s] %s  discrepancy=%.6g tolerance=%.6g%s\n",
                     r.passed ? "PASS" : "FAIL", r.identity_id.c_str(), r.discrepancy,
                     r.tolerance, extra.c_str());
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int cmd_report(const std::string& in) {
    std::ifstream is(in, std::ios::binary);
    if (!is) throw fracspline::DomainError("cannot open report file: " + in);
    nlohmann::json arr = nlohmann::json::parse(is);
    bool all_passed = true;
    std::size_t n = 0, failed = 0;
    for (const auto& j : arr) {
        bool p = j.at("passed").get<bool>();
        ++n;
        if (!p) ++failed;
        all_passed = all_passed && p;
        std::printf("[%s] %-40s discrepancy=%.6g tolerance=%.6g\n", p ? "PASS" : "FAIL",
                    j.at("identity_id").get<std::string>().c_str(),
                    j.at("discrepancy").get<double>(), j.at("tolerance").get<double>());
    }
    std::printf("%zu checks, %zu failed\n", n, failed);
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"splines of complex order, fractional operators, Dirichlet averages"};
    app.require_subcommand(1);

    std::string zs = "2", grids = "0:4:0.5", out, op = "integral", fn = "expdecay";
    std::string bs = "1,1", taus = "0,1", suite = "all", format = "csv", report_in;
    double exp_a = 0.0;
    std::size_t samples = 100000;
    std::uint64_t seed = 7;

    auto* eval = app.add_subcommand("eval", "evaluate B_z on a grid (CSV)");
    eval->add_option("--z", zs, "complex order a+bi, Re > 1");
    eval->add_option("--grid", grids, "x grid start:end:step");
    eval->add_option("--out", out, "output file (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "frequency-domain sweep (CSV)");
    spectrum->add_option("--z", zs, "complex order a+bi");
    spectrum->add_option("--grid", grids, "omega grid start:end:step");
    spectrum->add_option("--a", exp_a, "exponential-spline parameter a >= 0 (default 0)");
    spectrum->add_option("--out", out, "output file (default stdout)");

    auto* fracop = app.add_subcommand("fracop", "apply D^{-z} or D^z to a test function");
    fracop->add_option("--z", zs, "order a+bi, Re > 0");
    fracop->add_option("--op", op, "integral | derivative")
        ->check(CLI::IsMember({"integral", "derivative"}));
    fracop->add_option("--fn", fn, "expdecay | gauss:c[:w] | polyexp:a0,a1,...");
    fracop->add_option("--grid", grids, "x grid start:end:step");
    fracop->add_option("--out", out, "output file (default stdout)");

    auto* dirichlet = app.add_subcommand("dirichlet", "Monte Carlo Dirichlet average");
    dirichlet->add_option("--fn", fn, "expdecay | gauss:c[:w] | polyexp:...");
    dirichlet->add_option("--b", bs, "weights, comma separated, > 0");
    dirichlet->add_option("--tau", taus, "scalar knots, comma separated");
    dirichlet->add_option("--samples", samples, "sample count (>= 1000)");
    dirichlet->add_option("--seed", seed, "RNG seed");
    dirichlet->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    dirichlet->add_option("--out", out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    verify->add_option("--suite", suite,
                       "all|bspline|fractional|differences|dirichlet|weighted|multivariate");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--out", out, "report JSON output file (default stdout)");

    auto* report = app.add_subcommand("report", "summarize a verification report file");
    report->add_option("--in", report_in, "report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(zs, grids, out);
        if (spectrum->parsed()) return cmd_spectrum(zs, grids, exp_a, out);
        if (fracop->parsed()) return cmd_fracop(zs, op, fn, grids, out);
        if (dirichlet->parsed())
            return cmd_dirichlet(fn, bs, taus, samples, seed, format, out);
        if (verify->parsed()) return cmd_verify(suite, seed, out);
        if (report->parsed()) return cmd_report(report_in);
    } catch (const fracspline::NumericsError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
