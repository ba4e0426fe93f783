#pragma once

#include <complex>
#include <vector>

#include "arcrec/arcset.hpp"

namespace arcrec {

// Polynomial in the monomial basis; c[k] multiplies z^k.  Trailing
// near-zero coefficients are tolerated and ignored by effective_degree.
struct Polynomial {
    std::vector<Complex> c;

    Complex eval(Complex z) const;
    Complex derivative_eval(Complex z) const;

    // Euclidean norm of the coefficient vector (the L2 norm of the
    // corresponding function on the circle).
    double norm() const;

    bool operator==(const Polynomial&) const = default;
};

// Largest k with |c[k]| > floor * max|c|; -1 for the zero polynomial.
int effective_degree(const Polynomial& p, double floor = 1e-10);

// Copy with everything above the effective degree dropped.
Polynomial truncated_to_effective_degree(const Polynomial& p, double floor = 1e-10);

}  // namespace arcrec
