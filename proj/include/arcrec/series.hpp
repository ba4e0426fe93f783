#pragma once

#include <complex>
#include <vector>

#include "arcrec/arcset.hpp"
#include "arcrec/errors.hpp"

namespace arcrec {

// Truncated power series: a[0] + a[1] z + ... + a[n] z^n + O(z^{n+1}).
struct TruncatedSeries {
    std::vector<Complex> a;  // size n+1

    int degree() const { return static_cast<int>(a.size()) - 1; }

    // Value of the degree-n partial sum at z (Horner).
    Complex eval(Complex z) const;

    bool operator==(const TruncatedSeries&) const = default;
};

// Cauchy product truncated at the common degree.  Throws DegreeMismatch.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(f) via the recurrence g' = f' g:
//   g[0] = exp(f[0]),  g[k] = (1/k) sum_{j=1..k} j f[j] g[k-j].
TruncatedSeries exp(const TruncatedSeries& f);

// 1/f with the analogous recurrence; requires |f[0]| > reciprocal_floor.
// Throws NearZeroConstantTerm.
TruncatedSeries reciprocal(const TruncatedSeries& f, double reciprocal_floor = 1e-12);

// h_E from a coefficient tuple: half the mean value followed by the
// positive-index coefficients.
TruncatedSeries herglotz_series(const FourierTuple& c);

// Taylor series of the Blaschke candidate b = phi(h), computed as
// u = -i exp(2*pi*i*h), b = (u - 1)/(u + 1).  The constant -i absorbs the
// -1/4 shift inside phi.  Throws ConformalPole when u + 1 has a near-zero
// constant term (unreachable when Re h[0] lies in [0, 1/2]).
TruncatedSeries phi_compose(const TruncatedSeries& h);

// Closed-form value of h_E at z, |z| <= 1 - 1e-12: each arc [a, b]
// contributes (b-a)/(4*pi) + (log(1 - e^{-ib} z) - log(1 - e^{-ia} z))/(2*pi*i)
// with the principal logarithm.  Throws OutsideDisk.
Complex h_closed_eval(const ArcUnion& e, Complex z);

// Harmonic extension of the indicator: 2 Re h_E(r e^{it}), the Poisson
// integral of chi_E.  Lies in [0, 1]; tends to chi_E at continuity points
// as r -> 1.
double poisson_extension(const ArcUnion& e, double r, double t);

}  // namespace arcrec
