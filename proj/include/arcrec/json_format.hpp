#pragma once

#include <string>

#include "arcrec/arcset.hpp"
#include "arcrec/recovery.hpp"

namespace arcrec {

// Malformed or out-of-contract CLI input (exit code 2 at the tool level).
struct CliInputError final : Error {
    using Error::Error;
};

// Requests read from stdin.
struct SetRequest {
    ArcUnion set;
    int n = 0;
};

// {"arcs": [[s, e], ...], "n": k} or {"full": true, "n": k}.
SetRequest parse_set_request(const std::string& text);

// Bare [[re, im], ...] or {"coefficients": [[re, im], ...]}.
FourierTuple parse_coefficients(const std::string& text);

// All numbers are printed with 17 significant digits so that doubles
// round-trip exactly and output is byte-deterministic.
std::string format_fourier_tuple(const FourierTuple& c, bool pretty);
std::string format_outcome(const RecoveryOutcome& out, bool pretty);
std::string format_roundtrip(double max_endpoint_error, int order, bool pretty);

struct SelftestSummary {
    int cases = 0;
    int failures = 0;
    double max_error = 0.0;
    double mean_error = 0.0;
    std::vector<int> failed_cases;
};
std::string format_selftest(const SelftestSummary& s, bool pretty);

}  // namespace arcrec
