#include "arcrec/polyroot.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>

#include "arcrec/errors.hpp"

namespace arcrec {

Complex Polynomial::eval(Complex z) const {
    Complex v{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
    return v;
}

Complex Polynomial::derivative_eval(Complex z) const {
    Complex v{0.0, 0.0};
    for (std::size_t k = c.size(); k-- > 1;)
        v = v * z + static_cast<double>(k) * c[k];
    return v;
}

double Polynomial::norm() const {
    double s = 0.0;
    for (const Complex& v : c) s += std::norm(v);
    return std::sqrt(s);
}

int effective_degree(const Polynomial& p, double floor) {
    double peak = 0.0;
    for (const Complex& v : p.c) peak = std::max(peak, std::abs(v));
    for (std::size_t k = p.c.size(); k-- > 0;)
        if (std::abs(p.c[k]) > floor * peak) return static_cast<int>(k);
    return -1;
}

Polynomial truncated_to_effective_degree(const Polynomial& p, double floor) {
    const int d = effective_degree(p, floor);
    Polynomial q;
    q.c.assign(p.c.begin(), p.c.begin() + (d + 1));
    if (q.c.empty()) q.c.push_back(Complex{0.0, 0.0});
    return q;
}

namespace {

constexpr int max_aberth_iterations = 500;
constexpr double aberth_tol = 1e-13;

// Residual acceptance level at z: 1e-9 * sum |c_k| max(1, |z|)^k.  On the
// closed disk this is 1e-9 * sum|c_k|; outside it grows with the scale of
// the evaluation itself, which is the best a backward-stable evaluation can
// promise for roots far from the origin (reflected Blaschke poles land
// there).
double residual_bound(const Polynomial& p, Complex z) {
    const double r = std::max(1.0, std::abs(z));
    double s = 0.0;
    double rpow = 1.0;
    for (const Complex& v : p.c) {
        s += std::abs(v) * rpow;
        rpow *= r;
    }
    return 1e-9 * s;
}

// One Aberth-Ehrlich run from the given starting points.  Returns true when
// the maximum correction drops below tolerance.
bool aberth_iterate(const Polynomial& p, std::vector<Complex>& z) {
    const std::size_t d = z.size();
    for (int iter = 0; iter < max_aberth_iterations; ++iter) {
        double max_step = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const Complex pv = p.eval(z[i]);
            // Stop touching roots whose residual is at rounding level.
            double local_scale = 0.0;
            double zpow = 1.0;
            const double az = std::abs(z[i]);
            for (const Complex& v : p.c) {
                local_scale += std::abs(v) * zpow;
                zpow *= az;
            }
            if (std::abs(pv) <= 1e-16 * local_scale) continue;

            Complex dv = p.derivative_eval(z[i]);
            if (dv == Complex{0.0, 0.0}) {
                z[i] += Complex{1e-8, 1e-8};
                max_step = 1.0;
                continue;
            }
            const Complex newton = pv / dv;
            Complex repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                const Complex diff = z[i] - z[j];
                if (diff == Complex{0.0, 0.0}) continue;
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step =
                denom == Complex{0.0, 0.0} ? newton : newton / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (max_step < aberth_tol) {
            for (const Complex& r : z)
                if (std::abs(p.eval(r)) > residual_bound(p, r)) return false;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Complex> roots(const Polynomial& p) {
    int d = effective_degree(p);
    if (d < 1) throw Error("roots: effective degree below 1");

    // Trim above the effective degree and peel off exact roots at the origin.
    Polynomial q;
    q.c.assign(p.c.begin(), p.c.begin() + d + 1);
    std::vector<Complex> found;
    while (q.c.front() == Complex{0.0, 0.0} && q.c.size() > 1) {
        found.push_back(Complex{0.0, 0.0});
        q.c.erase(q.c.begin());
    }
    d = static_cast<int>(q.c.size()) - 1;
    if (d == 0) return found;

    // Scale for conditioning; roots are unchanged.
    double peak = 0.0;
    for (const Complex& v : q.c) peak = std::max(peak, std::abs(v));
    for (Complex& v : q.c) v /= peak;

    const double radius =
        std::pow(1.0 + std::abs(q.c.front()) / std::abs(q.c.back()), 1.0 / d);
    std::vector<Complex> z(static_cast<std::size_t>(d));
    const double phase0 = 0.4;  // fixed offset, avoids axis-symmetric stalls
    for (int i = 0; i < d; ++i)
        z[static_cast<std::size_t>(i)] = std::polar(radius, two_pi * i / d + phase0);

    if (!aberth_iterate(q, z)) {
        // One retry from a seeded random configuration.
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        for (int i = 0; i < d; ++i) {
            const double jitter =
                static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
            z[static_cast<std::size_t>(i)] =
                std::polar(radius * (1.0 + 0.2 * jitter), two_pi * i / d + two_pi * jitter);
        }
        if (!aberth_iterate(q, z))
            throw NoConvergence("roots: Aberth iteration failed twice");
    }
    found.insert(found.end(), z.begin(), z.end());
    return found;
}

std::vector<double> circle_roots(const Polynomial& p, double tol_circle) {
    const int d = effective_degree(p);
    if (d < 1) return {};

    const std::vector<Complex> all = roots(p);
    std::vector<double> angles;
    angles.reserve(all.size());
    for (const Complex& z : all) {
        const double r = std::abs(z);
        if (std::fabs(r - 1.0) > tol_circle)
            throw OffCircleRoot("circle_roots: root off the unit circle");
        angles.push_back(reduce_angle(std::arg(z)));
    }
    std::sort(angles.begin(), angles.end());

    // Collapse clusters of near-coincident roots (cyclically).
    constexpr double cluster_tol = 1e-7;
    std::vector<double> out;
    std::size_t i = 0;
    while (i < angles.size()) {
        std::size_t j = i + 1;
        Complex dir = std::polar(1.0, angles[i]);
        while (j < angles.size() && angles[j] - angles[j - 1] <= cluster_tol) {
            dir += std::polar(1.0, angles[j]);
            ++j;
        }
        out.push_back(reduce_angle(std::arg(dir)));
        i = j;
    }
    if (out.size() > 1 &&
        two_pi - out.back() + out.front() <= cluster_tol) {
        const Complex dir =
            std::polar(1.0, out.front()) + std::polar(1.0, out.back());
        out.front() = reduce_angle(std::arg(dir));
        out.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arcrec
