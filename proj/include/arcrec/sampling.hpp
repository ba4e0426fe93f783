#pragma once

#include <random>

#include "arcrec/arcset.hpp"

namespace arcrec {

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
// Avoids std::uniform_real_distribution so that sequences are identical
// across standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_angle(std::mt19937_64& rng) {
    return uniform_unit(rng) * two_pi;
}

// Random normalized union of exactly arc_count arcs whose endpoints keep a
// cyclic separation of at least min_sep (so arc lengths and gaps are both
// >= min_sep).  Drawn by rejection: 2*arc_count sorted uniform angles,
// redrawn until all cyclic gaps clear min_sep.  arc_count = 0 yields the
// full circle or the empty set, one random bit each.
ArcUnion random_arc_union(std::mt19937_64& rng, int arc_count, double min_sep = 0.05);

}  // namespace arcrec
