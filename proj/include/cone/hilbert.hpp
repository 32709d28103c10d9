#ifndef CONE_HILBERT_HPP
#define CONE_HILBERT_HPP

#include <optional>

#include "cone/partition.hpp"
#include "cone/series.hpp"

namespace cone {

// Sum of squared irreducible dimensions over the degree-d labels: the part
// of the graded dimension that is new in degree d.
Int h_G(const GroupId& g, int d);

// dim of the degree-d component of the cone's coordinate ring:
// sum of h_G(d - 2k) for 0 <= k <= d/2.
Int cone_dim(const GroupId& g, int d);

IntSeries hilbert_series(const GroupId& g, int order);

// Graded dimension of the U x U-invariant subalgebra, where U is the
// unipotent radical of a Borel subgroup. Supported for the groups whose
// identity-component decomposition is wired in: O(3), O(4), SO(4), Sp(4).
IntSeries uxu_series(const GroupId& g, int order);

struct KoszulObstruction {
    int index;        // smallest d with a negative coefficient in 1/H(-t)
    Int coefficient;  // that coefficient
    bool operator==(const KoszulObstruction&) const = default;
};

// Scans 1/H(-t) for a negative coefficient at degree <= max_degree. A hit
// certifies the algebra is not Koszul; absence certifies nothing.
std::optional<KoszulObstruction> koszul_obstruction(const IntSeries& hilbert, int max_degree);
std::optional<KoszulObstruction> koszul_obstruction(const GroupId& g, int max_degree);

// (1-t)-denominator exponent used by default for closed forms: one more
// than the group dimension, matching the Krull dimension of the cone.
int default_denominator_pow(const GroupId& g);

}  // namespace cone

#endif
