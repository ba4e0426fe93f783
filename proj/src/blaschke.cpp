#include "arcrec/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "arcrec/errors.hpp"
#include "arcrec/polyroot.hpp"

namespace arcrec {

RationalBlaschke from_quotient(Polynomial p, Polynomial q) {
    const int dp = effective_degree(p);
    const int dq = effective_degree(q);
    if (dq < 0) throw Error("from_quotient: zero denominator");
    if (dp < 0) throw NotUnimodularOnCircle("from_quotient: zero numerator");

    const int order = dp;
    const int samples = 4 * (order + 2);
    for (int s = 0; s < samples; ++s) {
        const Complex z = std::polar(1.0, two_pi * s / samples);
        const double pv = std::abs(p.eval(z));
        const double qv = std::abs(q.eval(z));
        if (std::fabs(pv - qv) > 1e-8 * std::max({pv, qv, 1e-300}))
            throw NotUnimodularOnCircle("from_quotient: |p| != |q| on the circle");
    }

    if (dq >= 1) {
        for (const Complex& r : roots(q))
            if (std::abs(r) < 1.0 + 1e-8)
                throw PoleInDisk("from_quotient: denominator root in the closed disk");
    }

    if (order >= 1) {
        int inside = 0;
        for (const Complex& r : roots(p))
            if (std::abs(r) < 1.0) ++inside;
        if (inside != order)
            throw PoleInDisk(
                "from_quotient: numerator root on or outside the circle "
                "(cancelled pole in the disk)");
    }

    return RationalBlaschke{std::move(p), std::move(q), order};
}

Complex eval(const RationalBlaschke& b, Complex z) {
    return b.p.eval(z) / b.q.eval(z);
}

Complex log_derivative(const RationalBlaschke& b, Complex z) {
    const Complex num = b.p.derivative_eval(z) * b.q.eval(z) -
                        b.p.eval(z) * b.q.derivative_eval(z);
    return z * num / (b.p.eval(z) * b.q.eval(z));
}

TruncatedSeries taylor(const RationalBlaschke& b, int n) {
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    TruncatedSeries num, den;
    num.a.assign(m, Complex{0.0, 0.0});
    den.a.assign(m, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < std::min(m, b.p.c.size()); ++k) num.a[k] = b.p.c[k];
    for (std::size_t k = 0; k < std::min(m, b.q.c.size()); ++k) den.a[k] = b.q.c[k];
    return mul(num, reciprocal(den));
}

namespace {

Polynomial offset_by(const Polynomial& p, const Polynomial& q, double sign) {
    Polynomial r;
    r.c.assign(std::max(p.c.size(), q.c.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < p.c.size(); ++k) r.c[k] += p.c[k];
    for (std::size_t k = 0; k < q.c.size(); ++k) r.c[k] += sign * q.c[k];
    return r;
}

}  // namespace

ArcUnion level_set_arcs(const RationalBlaschke& b, double tol_circle) {
    if (b.order == 0) {
        const Complex lambda = b.p.c[0] / b.q.c[0];
        return lambda.imag() >= 0.0 ? ArcUnion::full_circle() : ArcUnion::empty_set();
    }

    // b = 1 where the boundary argument crosses 0 going up: arc starts.
    // b = -1 where it crosses pi: arc ends.
    const std::vector<double> starts = circle_roots(offset_by(b.p, b.q, -1.0), tol_circle);
    const std::vector<double> ends = circle_roots(offset_by(b.p, b.q, +1.0), tol_circle);
    const std::size_t k = static_cast<std::size_t>(b.order);
    if (starts.size() != k || ends.size() != k)
        throw NonAlternatingRoots("level_set_arcs: wrong number of circle roots");

    // Strict interleaving around the circle.
    struct Mark {
        double angle;
        bool is_start;
    };
    std::vector<Mark> marks;
    marks.reserve(2 * k);
    for (double a : starts) marks.push_back({a, true});
    for (double a : ends) marks.push_back({a, false});
    std::sort(marks.begin(), marks.end(),
              [](const Mark& a, const Mark& b) { return a.angle < b.angle; });
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const Mark& cur = marks[i];
        const Mark& next = marks[(i + 1) % marks.size()];
        if (cur.is_start == next.is_start || cur.angle == next.angle)
            throw NonAlternatingRoots("level_set_arcs: start/end roots do not alternate");
    }

    std::vector<std::pair<double, double>> raw;
    raw.reserve(k);
    for (double s : starts) {
        // First end counterclockwise from this start.
        double best = two_pi + 1.0;
        for (double e : ends) {
            double span = e - s;
            if (span <= 0.0) span += two_pi;
            best = std::min(best, span);
        }
        raw.emplace_back(s, s + best);
    }
    try {
        ArcUnion u = normalize(raw);
        if (u.arc_count() != k)
            throw NonAlternatingRoots("level_set_arcs: arcs merged during normalization");
        return u;
    } catch (const DegenerateArc&) {
        throw NonAlternatingRoots("level_set_arcs: endpoints produce a degenerate arc");
    }
}

}  // namespace arcrec
