#include "arcrec/sampling.hpp"

#include <algorithm>
#include <vector>

#include "arcrec/errors.hpp"

namespace arcrec {

ArcUnion random_arc_union(std::mt19937_64& rng, int arc_count, double min_sep) {
    if (arc_count == 0)
        return (rng() & 1u) ? ArcUnion::full_circle() : ArcUnion::empty_set();
    if (2.0 * arc_count * min_sep >= two_pi)
        throw Error("random_arc_union: separation leaves no room on the circle");

    const std::size_t points = 2 * static_cast<std::size_t>(arc_count);
    std::vector<double> angles(points);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (double& a : angles) a = uniform_angle(rng);
        std::sort(angles.begin(), angles.end());
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < points; ++i)
            ok = angles[i + 1] - angles[i] >= min_sep;
        ok = ok && two_pi - angles.back() + angles.front() >= min_sep;
        if (!ok) continue;

        std::vector<std::pair<double, double>> raw;
        raw.reserve(static_cast<std::size_t>(arc_count));
        for (std::size_t i = 0; i < points; i += 2)
            raw.emplace_back(angles[i], angles[i + 1]);
        return normalize(raw);
    }
    throw Error("random_arc_union: rejection sampling exhausted");
}

}  // namespace arcrec
