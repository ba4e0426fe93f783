#include "arcrec/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arcrec/errors.hpp"

namespace arcrec {

LowerToeplitz from_first_column(std::vector<Complex> t) {
    return LowerToeplitz{std::move(t)};
}

ComplexMatrix to_matrix(const LowerToeplitz& m) {
    const std::size_t size = m.col.size();
    ComplexMatrix a(size, size);
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k <= j; ++k) a.at(j, k) = m.col[j - k];
    return a;
}

Polynomial apply(const LowerToeplitz& m, const Polynomial& q) {
    const std::size_t size = m.col.size();
    if (effective_degree(q) >= static_cast<int>(size))
        throw DegreeMismatch("apply: polynomial degree exceeds operator size");
    Polynomial r;
    r.c.assign(size, Complex{0.0, 0.0});
    const std::size_t qn = std::min(q.c.size(), size);
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k <= j && k < qn; ++k)
            r.c[j] += m.col[j - k] * q.c[k];
    return r;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

// Unitary 2x2 rotation zeroing a[p][q], applied as a <- J^H a J with
//   J[p][p] = c,            J[p][q] = s e^{i phi},
//   J[q][p] = -s e^{-i phi}, J[q][q] = c,
// where a[p][q] = beta e^{i phi}.  v accumulates the eigenvector columns.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a.at(p, q);
    const double beta = std::abs(apq);
    if (beta == 0.0) return;
    const Complex phase = apq / beta;

    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * beta);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex sp = s * phase;

    const std::size_t size = a.rows();
    for (std::size_t m = 0; m < size; ++m) {
        if (m == p || m == q) continue;
        const Complex amp = a.at(m, p);
        const Complex amq = a.at(m, q);
        a.at(m, p) = c * amp - std::conj(sp) * amq;
        a.at(m, q) = sp * amp + c * amq;
        a.at(p, m) = std::conj(a.at(m, p));
        a.at(q, m) = std::conj(a.at(m, q));
    }
    a.at(p, p) = Complex{app - t * beta, 0.0};
    a.at(q, q) = Complex{aqq + t * beta, 0.0};
    a.at(p, q) = Complex{0.0, 0.0};
    a.at(q, p) = Complex{0.0, 0.0};

    for (std::size_t m = 0; m < size; ++m) {
        const Complex vmp = v.at(m, p);
        const Complex vmq = v.at(m, q);
        v.at(m, p) = c * vmp - std::conj(sp) * vmq;
        v.at(m, q) = sp * vmp + c * vmq;
    }
}

}  // namespace

HermitianEigenSystem jacobi_eigensystem(ComplexMatrix a) {
    const std::size_t size = a.rows();
    ComplexMatrix v(size, size);
    for (std::size_t i = 0; i < size; ++i) v.at(i, i) = 1.0;

    const double tol = 1e-13 * std::max(1.0, frobenius_norm(a));
    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < size; ++p)
            for (std::size_t q = p + 1; q < size; ++q) jacobi_rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_norm(a) >= tol)
        throw NoConvergence("jacobi_eigensystem: 100 sweeps without convergence");

    // One polish sweep past the threshold pushes the off-diagonal mass to
    // the rounding floor; eigenvector accuracy is bounded by that residual
    // divided by the gap to the nearest eigenvalue.
    for (std::size_t p = 0; p + 1 < size; ++p)
        for (std::size_t q = p + 1; q < size; ++q) jacobi_rotate(a, v, p, q);

    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a.at(i, i).real() < a.at(j, j).real();
    });

    HermitianEigenSystem es;
    es.values.reserve(size);
    es.vectors.reserve(size);
    for (std::size_t idx : order) {
        es.values.push_back(a.at(idx, idx).real());
        std::vector<Complex> col(size);
        for (std::size_t i = 0; i < size; ++i) col[i] = v.at(i, idx);
        es.vectors.push_back(std::move(col));
    }
    return es;
}

ComplexMatrix gram_matrix(const LowerToeplitz& m) {
    const std::size_t size = m.col.size();
    ComplexMatrix g(size, size);
    // (M*M)[j][k] = sum_i conj(M[i][j]) M[i][k] = sum_i conj(col[i-j]) col[i-k]
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
            Complex s{0.0, 0.0};
            for (std::size_t i = std::max(j, k); i < size; ++i)
                s += std::conj(m.col[i - j]) * m.col[i - k];
            g.at(j, k) = s;
        }
    return g;
}

double operator_norm(const LowerToeplitz& m) {
    const HermitianEigenSystem es = jacobi_eigensystem(gram_matrix(m));
    const double top = es.values.back();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

Polynomial norm_preserving_min_degree_vector(const LowerToeplitz& m, double tol_eig) {
    const HermitianEigenSystem es = jacobi_eigensystem(gram_matrix(m));
    std::vector<std::vector<Complex>> basis;
    for (std::size_t i = 0; i < es.values.size(); ++i)
        if (std::fabs(es.values[i] - 1.0) <= tol_eig) basis.push_back(es.vectors[i]);
    if (basis.empty())
        throw EmptyEigenspace("norm_preserving_min_degree_vector: no eigenvalue near 1");

    // Eliminate the highest coefficient indices first, working on the
    // images M v rather than the vectors themselves: a norm-preserving
    // direction with image of minimal degree is the minimal-degree vector,
    // and the image coefficients carry unit-scale leading terms even when
    // the vector's own high coefficients are far below any threshold (the
    // denominator's leading coefficient is a product of zero moduli and
    // can be arbitrarily small).  Unitary plane rotations, applied to the
    // vectors and their images alike, keep the pool orthonormal and avoid
    // elimination growth across the padded eigenspace.
    const std::size_t size = m.col.size();
    constexpr double structural_zero = 1e-9;
    std::vector<std::vector<Complex>> image(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Polynomial v;
        v.c = basis[b];
        image[b] = apply(m, v).c;
    }
    std::size_t idx = size;
    while (basis.size() > 1 && idx-- > 0) {
        std::size_t pivot = 0;
        double best = 0.0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const double mag = std::abs(image[b][idx]);
            if (mag > best) {
                best = mag;
                pivot = b;
            }
        }
        if (best <= structural_zero) continue;
        std::swap(basis[pivot], basis.back());
        std::swap(image[pivot], image.back());
        for (std::size_t b = 0; b + 1 < basis.size(); ++b) {
            const Complex x = image.back()[idx];
            const Complex y = image[b][idx];
            if (std::abs(y) == 0.0) continue;
            const double h = std::hypot(std::abs(x), std::abs(y));
            for (std::size_t i = 0; i < size; ++i) {
                const Complex r = image.back()[i];
                const Complex v = image[b][i];
                image.back()[i] = (std::conj(x) * r + std::conj(y) * v) / h;
                image[b][i] = (-y * r + x * v) / h;
                const Complex br = basis.back()[i];
                const Complex bv = basis[b][i];
                basis.back()[i] = (std::conj(x) * br + std::conj(y) * bv) / h;
                basis[b][i] = (-y * br + x * bv) / h;
            }
            image[b][idx] = Complex{0.0, 0.0};
        }
        basis.pop_back();
        image.pop_back();
    }

    Polynomial q;
    q.c = std::move(basis.front());
    const double scale = q.norm();
    for (Complex& v : q.c) v /= scale;
    const int deg = effective_degree(q);
    if (deg >= 0) {
        const Complex lead = q.c[static_cast<std::size_t>(deg)];
        const Complex rot = std::abs(lead) / lead;
        for (Complex& v : q.c) v *= rot;
        q.c[static_cast<std::size_t>(deg)] =
            Complex{std::abs(q.c[static_cast<std::size_t>(deg)]), 0.0};
    }
    return q;
}

}  // namespace arcrec
