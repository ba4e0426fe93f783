#include "arcrec/arcset.hpp"

#include <algorithm>
#include <cmath>

namespace arcrec {

namespace {

// Raw pair -> (start in [0, 2*pi), length in (0, 2*pi)), or full-circle flag.
struct ReducedArc {
    double start;
    double length;
};

}  // namespace

ArcUnion normalize(const std::vector<std::pair<double, double>>& raw,
                   const NormalizeOptions& opt) {
    std::vector<ReducedArc> reduced;
    reduced.reserve(raw.size());
    for (const auto& [s, e] : raw) {
        const double span = e - s;
        if (span >= two_pi) return ArcUnion::full_circle();
        double len = std::fmod(span, two_pi);
        if (len < 0.0) len += two_pi;
        if (len == 0.0)
            throw DegenerateArc("normalize: arc endpoints coincide modulo 2*pi");
        reduced.push_back({reduce_angle(s), len});
    }
    if (reduced.empty()) return ArcUnion::empty_set();

    std::sort(reduced.begin(), reduced.end(),
              [](const ReducedArc& a, const ReducedArc& b) { return a.start < b.start; });

    // Linear merge over [0, 4*pi); arcs whose gap is below min_gap coalesce.
    std::vector<Arc> merged;
    Arc cur{reduced.front().start, reduced.front().start + reduced.front().length};
    for (std::size_t i = 1; i < reduced.size(); ++i) {
        const double s = reduced[i].start;
        const double e = s + reduced[i].length;
        if (s - cur.end < opt.min_gap) {
            cur.end = std::max(cur.end, e);
        } else {
            merged.push_back(cur);
            cur = Arc{s, e};
        }
    }
    merged.push_back(cur);

    // The last arc may wrap past 2*pi and swallow arcs at the front.
    while (merged.back().end - merged.back().start < two_pi) {
        Arc& last = merged.back();
        if (last.end < two_pi || merged.size() < 2) break;
        Arc& first = merged.front();
        if (first.start - (last.end - two_pi) >= opt.min_gap) break;
        last.end = std::max(last.end, first.end + two_pi);
        merged.erase(merged.begin());
    }
    if (merged.back().end - merged.back().start >= two_pi) return ArcUnion::full_circle();

    // A single arc whose complement gap is below min_gap closes into the circle.
    if (merged.size() == 1 && two_pi - merged.front().length() < opt.min_gap)
        return ArcUnion::full_circle();

    double total = 0.0;
    for (const Arc& a : merged) {
        if (a.length() < opt.min_arc_length)
            throw DegenerateArc("normalize: arc shorter than min_arc_length");
        total += a.length();
    }
    if (total >= two_pi) return ArcUnion::full_circle();

    ArcUnion u;
    u.arcs_ = std::move(merged);
    return u;
}

FourierTuple fourier_coefficients(const ArcUnion& e, int n) {
    FourierTuple t;
    t.c.assign(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    if (e.is_full()) {
        t.c[0] = 1.0;
        return t;
    }
    t.c[0] = measure(e) / two_pi;
    for (int k = 1; k <= n; ++k) {
        Complex sum{0.0, 0.0};
        for (const Arc& a : e.arcs()) {
            const Complex eb = std::exp(Complex{0.0, -k * a.end});
            const Complex ea = std::exp(Complex{0.0, -k * a.start});
            sum += (eb - ea) / Complex{0.0, -two_pi * k};
        }
        t.c[static_cast<std::size_t>(k)] = sum;
    }
    return t;
}

double measure(const ArcUnion& e) {
    if (e.is_full()) return two_pi;
    double total = 0.0;
    for (const Arc& a : e.arcs()) total += a.length();
    return total;
}

namespace {

// Split into intervals within [0, 2*pi] (wrapping arcs split at 2*pi).
void cut_at_zero(const ArcUnion& e, std::vector<std::pair<double, double>>& out) {
    for (const Arc& a : e.arcs()) {
        if (a.end <= two_pi) {
            out.emplace_back(a.start, a.end);
        } else {
            out.emplace_back(a.start, two_pi);
            out.emplace_back(0.0, a.end - two_pi);
        }
    }
}

}  // namespace

double symmetric_difference_measure(const ArcUnion& e1, const ArcUnion& e2) {
    if (e1.is_full()) return two_pi - measure(e2);
    if (e2.is_full()) return two_pi - measure(e1);

    struct Event {
        double angle;
        int set;    // 0 or 1
        int delta;  // +1 open, -1 close
    };
    std::vector<std::pair<double, double>> iv1, iv2;
    cut_at_zero(e1, iv1);
    cut_at_zero(e2, iv2);

    std::vector<Event> events;
    events.reserve(2 * (iv1.size() + iv2.size()));
    for (const auto& [s, e] : iv1) {
        events.push_back({s, 0, +1});
        events.push_back({e, 0, -1});
    }
    for (const auto& [s, e] : iv2) {
        events.push_back({s, 1, +1});
        events.push_back({e, 1, -1});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.angle < b.angle; });

    double total = 0.0;
    double prev = 0.0;
    int in[2] = {0, 0};
    std::size_t i = 0;
    while (i < events.size()) {
        const double angle = events[i].angle;
        if ((in[0] > 0) != (in[1] > 0)) total += angle - prev;
        prev = angle;
        while (i < events.size() && events[i].angle == angle) {
            in[events[i].set] += events[i].delta;
            ++i;
        }
    }
    if ((in[0] > 0) != (in[1] > 0)) total += two_pi - prev;
    return total;
}

bool contains(const ArcUnion& e, double angle) {
    if (e.is_full()) return true;
    const double t = reduce_angle(angle);
    for (const Arc& a : e.arcs()) {
        if (t >= a.start && t <= a.end) return true;
        if (t + two_pi <= a.end) return true;  // wrapping arc
    }
    return false;
}

}  // namespace arcrec
