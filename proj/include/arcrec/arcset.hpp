#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "arcrec/angles.hpp"
#include "arcrec/errors.hpp"

namespace arcrec {

using Complex = std::complex<double>;

// One closed arc, counterclockwise from start to end.
// start lies in [0, 2*pi); an arc crossing angle 0 has end > 2*pi.
struct Arc {
    double start;
    double end;

    double length() const { return end - start; }
    bool operator==(const Arc&) const = default;
};

struct NormalizeOptions {
    double min_arc_length = 1e-9;  // shorter arcs are rejected after merging
    double min_gap = 1e-9;         // arcs closer than this are merged
};

// A finite union of disjoint closed arcs on the unit circle, in canonical
// form: arcs sorted by start, pairwise disjoint closures, positive lengths,
// total measure < 2*pi.  The whole circle and the empty set are explicit
// canonical values.
class ArcUnion {
public:
    ArcUnion() = default;  // empty set

    static ArcUnion empty_set() { return ArcUnion{}; }
    static ArcUnion full_circle() {
        ArcUnion u;
        u.is_full_ = true;
        return u;
    }

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool is_full() const { return is_full_; }
    bool is_empty() const { return !is_full_ && arcs_.empty(); }
    std::size_t arc_count() const { return is_full_ ? 0 : arcs_.size(); }

    bool operator==(const ArcUnion&) const = default;

private:
    friend ArcUnion normalize(const std::vector<std::pair<double, double>>&,
                              const NormalizeOptions&);

    std::vector<Arc> arcs_;
    bool is_full_ = false;
};

// Canonicalize raw (start, end) angle pairs: reduce modulo 2*pi, sort, merge
// overlapping or touching arcs, detect the full circle.  Throws DegenerateArc
// when a merged arc is shorter than min_arc_length, or when a pair has zero
// length modulo 2*pi without covering the circle.
ArcUnion normalize(const std::vector<std::pair<double, double>>& raw,
                   const NormalizeOptions& opt = {});

// Coefficients (E^(0), ..., E^(n)) of the indicator of an arc union.
// Negative indices are not stored: the indicator is real, so
// E^(-k) = conj(E^(k)).
struct FourierTuple {
    std::vector<Complex> c;  // c[k], size n+1

    int n() const { return static_cast<int>(c.size()) - 1; }
};

// Forward map: first n+1 Fourier coefficients of the indicator of E.
// c[0] = measure(E)/(2*pi); for k >= 1 each arc [a, b] contributes
// (exp(-ikb) - exp(-ika)) / (-2*pi*i*k).
FourierTuple fourier_coefficients(const ArcUnion& e, int n);

double measure(const ArcUnion& e);
double symmetric_difference_measure(const ArcUnion& e1, const ArcUnion& e2);
bool contains(const ArcUnion& e, double angle);

}  // namespace arcrec
