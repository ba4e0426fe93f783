#pragma once

#include "arcrec/arcset.hpp"
#include "arcrec/polynomial.hpp"
#include "arcrec/series.hpp"

namespace arcrec {

// Finite Blaschke product as a quotient p/q of coprime polynomials:
// unimodular on the circle, no poles in the closed disk.  The order is the
// number of zeros in the open disk, which for a coprime quotient is the
// effective degree of p.
struct RationalBlaschke {
    Polynomial p;
    Polynomial q;
    int order = 0;
};

// Validate and wrap a quotient.  Checks, in this order:
//   1. |p| = |q| on the circle at 4*(order+2) equispaced samples
//      (relative error <= 1e-8), else NotUnimodularOnCircle;
//   2. every root of q satisfies |root| >= 1 + 1e-8, else PoleInDisk;
//   3. all roots of p lie in the open unit disk -- a root on or outside the
//      circle means the quotient hides a cancelled pole, reported as
//      PoleInDisk.
RationalBlaschke from_quotient(Polynomial p, Polynomial q);

// p(z)/q(z); unimodular within 1e-9 for |z| = 1.
Complex eval(const RationalBlaschke& b, Complex z);

// Boundary derivative quotient b'(z)/b(z) * z, real and positive on the
// circle for a genuine Blaschke product (the argument increases strictly).
Complex log_derivative(const RationalBlaschke& b, Complex z);

// Taylor series of b at 0, truncated at degree n.
TruncatedSeries taylor(const RationalBlaschke& b, int n);

// The level set {z on the circle : Im b(z) >= 0} as an arc union with
// exactly `order` arcs.  Arc starts solve b = 1, ends solve b = -1; the two
// root families must strictly interleave.  Order-0 products give the full
// circle (Im lambda >= 0) or the empty set.  Throws OffCircleRoot or
// NonAlternatingRoots for candidates that are not genuine Blaschke
// quotients.
ArcUnion level_set_arcs(const RationalBlaschke& b, double tol_circle = 1e-6);

}  // namespace arcrec
