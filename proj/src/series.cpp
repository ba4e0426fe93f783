#include "arcrec/series.hpp"

#include <cmath>
#include <cstddef>

namespace arcrec {

Complex TruncatedSeries::eval(Complex z) const {
    Complex v{0.0, 0.0};
    for (std::size_t k = a.size(); k-- > 0;) v = v * z + a[k];
    return v;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.a.size() != g.a.size())
        throw DegreeMismatch("mul: truncation degrees differ");
    const std::size_t m = f.a.size();
    TruncatedSeries h;
    h.a.assign(m, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j <= k; ++j) h.a[k] += f.a[j] * g.a[k - j];
    return h;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    const std::size_t m = f.a.size();
    TruncatedSeries g;
    g.a.assign(m, Complex{0.0, 0.0});
    g.a[0] = std::exp(f.a[0]);
    for (std::size_t k = 1; k < m; ++k) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 1; j <= k; ++j)
            s += static_cast<double>(j) * f.a[j] * g.a[k - j];
        g.a[k] = s / static_cast<double>(k);
    }
    return g;
}

TruncatedSeries reciprocal(const TruncatedSeries& f, double reciprocal_floor) {
    if (std::abs(f.a[0]) <= reciprocal_floor)
        throw NearZeroConstantTerm("reciprocal: constant term too close to zero");
    const std::size_t m = f.a.size();
    TruncatedSeries r;
    r.a.assign(m, Complex{0.0, 0.0});
    r.a[0] = 1.0 / f.a[0];
    for (std::size_t k = 1; k < m; ++k) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 1; j <= k; ++j) s += f.a[j] * r.a[k - j];
        r.a[k] = -s / f.a[0];
    }
    return r;
}

TruncatedSeries herglotz_series(const FourierTuple& c) {
    TruncatedSeries h;
    h.a = c.c;
    h.a[0] *= 0.5;
    return h;
}

TruncatedSeries phi_compose(const TruncatedSeries& h) {
    const std::size_t m = h.a.size();
    TruncatedSeries arg;  // 2*pi*i*h
    arg.a.resize(m);
    for (std::size_t k = 0; k < m; ++k) arg.a[k] = Complex{0.0, two_pi} * h.a[k];

    TruncatedSeries u = exp(arg);
    for (Complex& v : u.a) v *= Complex{0.0, -1.0};

    TruncatedSeries num = u;
    num.a[0] -= 1.0;
    TruncatedSeries den = u;
    den.a[0] += 1.0;
    try {
        return mul(num, reciprocal(den));
    } catch (const NearZeroConstantTerm&) {
        throw ConformalPole("phi_compose: u + 1 vanishes at the origin");
    }
}

Complex h_closed_eval(const ArcUnion& e, Complex z) {
    if (std::abs(z) > 1.0 - 1e-12)
        throw OutsideDisk("h_closed_eval: |z| exceeds 1 - 1e-12");
    if (e.is_full()) return Complex{0.5, 0.0};
    Complex sum{0.0, 0.0};
    const Complex inv_2pi_i = 1.0 / Complex{0.0, two_pi};
    for (const Arc& a : e.arcs()) {
        const Complex lb = std::log(1.0 - std::exp(Complex{0.0, -a.end}) * z);
        const Complex la = std::log(1.0 - std::exp(Complex{0.0, -a.start}) * z);
        sum += a.length() / (2.0 * two_pi) + (lb - la) * inv_2pi_i;
    }
    return sum;
}

double poisson_extension(const ArcUnion& e, double r, double t) {
    return 2.0 * h_closed_eval(e, std::polar(r, t)).real();
}

}  // namespace arcrec
