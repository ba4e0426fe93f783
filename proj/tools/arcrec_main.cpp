// arcrec: Fourier coefficients of unions of circular arcs, and exact
// recovery of the arcs from a coefficient tuple.
//
// Subcommands read JSON on stdin and write JSON on stdout:
//   forward    {"arcs": [[s, e], ...], "n": k}  ->  {"coefficients": ...}
//   recover    [[re, im], ...]                  ->  recovery outcome
//   roundtrip  {"arcs": ..., "n": k}            ->  endpoint error report
//   selftest   (no stdin; --count/--seed/--n-max)
//
// Exit codes: 0 success / recovered, 1 not-in-range or test failure,
// 2 invalid input, 3 numerical failure.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arcrec/json_format.hpp"
#include "arcrec/recovery.hpp"
#include "arcrec/sampling.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_in_range = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_numerical = 3;

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

int run_forward(const arcrec::Tolerances&, bool pretty) {
    const arcrec::SetRequest req = arcrec::parse_set_request(read_stdin());
    const arcrec::FourierTuple c = arcrec::fourier_coefficients(req.set, req.n);
    std::cout << arcrec::format_fourier_tuple(c, pretty);
    return exit_ok;
}

int run_recover(const arcrec::Tolerances& tol, bool pretty) {
    const arcrec::FourierTuple c = arcrec::parse_coefficients(read_stdin());
    const arcrec::RecoveryOutcome out = arcrec::recover(c, tol);
    std::cout << arcrec::format_outcome(out, pretty);
    return out.recovered() ? exit_ok : exit_not_in_range;
}

int run_roundtrip(const arcrec::Tolerances& tol, bool pretty) {
    const arcrec::SetRequest req = arcrec::parse_set_request(read_stdin());
    const double err = arcrec::roundtrip_error(req.set, req.n, tol);
    std::cout << arcrec::format_roundtrip(
        err, static_cast<int>(req.set.arc_count()), pretty);
    return exit_ok;
}

int run_selftest(const arcrec::Tolerances& tol, bool pretty, int count,
                 std::uint64_t seed, int n_max) {
    std::mt19937_64 rng(seed);
    arcrec::SelftestSummary summary;
    summary.cases = count;
    constexpr double pass_threshold = 1e-6;
    for (int i = 0; i < count; ++i) {
        const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(n_max + 1));
        const arcrec::ArcUnion e = arcrec::random_arc_union(rng, k);
        double err;
        try {
            err = arcrec::roundtrip_error(e, k, tol);
        } catch (const arcrec::RoundTripFailure&) {
            summary.failures += 1;
            summary.failed_cases.push_back(i);
            continue;
        }
        summary.max_error = std::max(summary.max_error, err);
        summary.mean_error += err;
        if (err > pass_threshold) {
            summary.failures += 1;
            summary.failed_cases.push_back(i);
        }
    }
    const int clean = summary.cases - static_cast<int>(summary.failed_cases.size());
    if (clean > 0) summary.mean_error /= clean;
    std::cout << arcrec::format_selftest(summary, pretty);
    return summary.failures == 0 ? exit_ok : exit_not_in_range;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unions of circular arcs from Fourier coefficient tuples"};
    app.require_subcommand(1);
    app.fallthrough();

    arcrec::Tolerances tol;
    bool pretty = false;
    std::uint64_t seed = 0;
    app.add_option("--tol-norm", tol.tol_norm, "operator-norm acceptance band");
    app.add_option("--tol-eig", tol.tol_eig, "eigenvalue window around 1");
    app.add_option("--tol-circle", tol.tol_circle, "root-on-circle tolerance");
    app.add_option("--tol-verify", tol.tol_verify, "verification tolerance");
    app.add_option("--seed", seed, "64-bit generator seed (selftest)");
    app.add_flag("--pretty", pretty, "indent output");

    auto* forward = app.add_subcommand("forward", "coefficients of an arc union");
    auto* recover = app.add_subcommand("recover", "arcs from a coefficient tuple");
    auto* roundtrip = app.add_subcommand("roundtrip", "forward then recover");
    auto* selftest = app.add_subcommand("selftest", "seeded round-trip batch");

    int count = 100;
    int n_max = 8;
    selftest->add_option("--count", count, "number of random cases")
        ->check(CLI::NonNegativeNumber);
    selftest->add_option("--n-max", n_max, "max arc count per case")
        ->check(CLI::Range(0, 8));

    CLI11_PARSE(app, argc, argv);

    try {
        if (forward->parsed()) return run_forward(tol, pretty);
        if (recover->parsed()) return run_recover(tol, pretty);
        if (roundtrip->parsed()) return run_roundtrip(tol, pretty);
        return run_selftest(tol, pretty, count, seed, n_max);
    } catch (const arcrec::CliInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const arcrec::RoundTripFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_not_in_range;
    } catch (const arcrec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}
