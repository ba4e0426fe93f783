#pragma once

#include <vector>

#include "arcrec/polynomial.hpp"

namespace arcrec {

// All complex roots (with multiplicity) of a polynomial of effective degree
// >= 1, by Aberth-Ehrlich simultaneous iteration.  Deterministic: fixed
// initial configuration, one retry with a seeded perturbation.  Every
// returned root satisfies |p(z)| <= 1e-9 * sum|c[k]|.  Throws NoConvergence.
std::vector<Complex> roots(const Polynomial& p);

// Roots lying on the unit circle within tol_circle, projected to angles in
// [0, 2*pi) and sorted.  All roots of the effective-degree polynomial must
// lie on the circle, otherwise OffCircleRoot is thrown.  Near-coincident
// angles (within 1e-7) collapse to a single endpoint.
std::vector<double> circle_roots(const Polynomial& p, double tol_circle = 1e-6);

}  // namespace arcrec
