#pragma once

#include <string_view>
#include <utility>

#include "arcrec/arcset.hpp"
#include "arcrec/blaschke.hpp"
#include "arcrec/toeplitz.hpp"

namespace arcrec {

struct Tolerances {
    double tol_norm = 1e-8;    // acceptance band |norm(M) - 1|
    double tol_eig = 1e-8;     // eigenvalue window around 1 for M*M
    double tol_circle = 1e-6;  // root-on-circle tolerance
    double tol_verify = 1e-8;  // column / coefficient comparison
};

enum class NotInRangeReason {
    InvalidMeanValue,
    NormNotOne,
    OffCircleRoot,
    NonAlternatingRoots,
    VerificationMismatch,
};

std::string_view to_string(NotInRangeReason r);

// Result of deciding whether a coefficient tuple comes from a union of
// arcs.  On success carries the recovered set, the Blaschke order (= arc
// count), and the max-norm mismatch between the input and the coefficients
// of the recovered set.  On rejection carries the reason plus diagnostics:
// the operator norm seen at step 2 and the column mismatch seen at step 3.
struct RecoveryOutcome {
    enum class Status { Recovered, NotInRange };

    Status status = Status::NotInRange;
    ArcUnion arcs;
    int order = 0;
    double residual = 0.0;
    NotInRangeReason reason = NotInRangeReason::InvalidMeanValue;
    double norm = 0.0;
    double mismatch = 0.0;

    bool recovered() const { return status == Status::Recovered; }
};

// The full decision procedure:
//   0. the mean value c[0] must be real in [0, 1]; the edge values 0 and 1
//      short-circuit to the empty set / full circle (all other
//      coefficients must vanish);
//   1. M = Toeplitz matrix of the Taylor column of phi(c0/2 + sum c_k z^k);
//   2. reject unless |norm(M) - 1| <= tol_norm;
//   3. take the minimal-degree norm-preserving q, form the quotient
//      (Mq)/q, read its level set, recompute the Taylor column from the
//      recovered set and require it to match M's column.
RecoveryOutcome recover(const FourierTuple& c, const Tolerances& t = {});

// Steps 2-3 applied directly to a candidate Taylor column.  Exercises the
// non-surjectivity rejection independently of any coefficient input; the
// residual of a recovered outcome is the column mismatch.
RecoveryOutcome classify_toeplitz(const LowerToeplitz& m, const Tolerances& t = {});

// Closed-form starting points for a union of at most two arcs from
// (c0, c1, c2).  With
//   E0 = exp(2*pi*i*c0),  Ek = -2*pi*i*k*ck,
//   a  = (E2 conj(E1) + 2 E1 - E1^2 conj(E1) - 2 E1 E0)
//        / (E1^2 E0 + E2 E0 - E2 + E1^2),
// the starting points solve z^2 - a z + (conj(E1) + (1 - E0) a)/(E1 E0) = 0.
// Throws DegenerateFormula when E1 or the denominator of a is below 1e-10,
// and OffCircleRoot when a quadratic root leaves the circle.  The two
// angles are returned sorted.
std::pair<double, double> two_arc_starting_points(Complex c0, Complex c1, Complex c2,
                                                  double tol_circle = 1e-6);

// Forward map then recover; returns the largest circular distance between
// matched endpoints.  Throws RoundTripFailure when recovery rejects or the
// recovered set has a different shape.
double roundtrip_error(const ArcUnion& e, int n, const Tolerances& t = {});

}  // namespace arcrec
