#include "cone/hilbert.hpp"

#include <stdexcept>

namespace cone {

Int h_G(const GroupId& g, int d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    Int acc = 0;
    for (const auto& label : enum_labels(g, d)) {
        Int dim = dim_irrep(g, label);
        acc += dim * dim;
    }
    return acc;
}

Int cone_dim(const GroupId& g, int d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    Int acc = 0;
    for (int k = d % 2; k <= d; k += 2) acc += h_G(g, k);
    return acc;
}

IntSeries hilbert_series(const GroupId& g, int order) {
    IntSeries s = IntSeries::zero(order);
    for (int d = 0; d <= order; ++d) {
        s.at(d) = h_G(g, d);
        if (d >= 2) s.at(d) += s.at(d - 2);
    }
    return s;
}

namespace {

// Number of irreducible summands over the identity component contributed
// by the degree-d labels.
long component_count(const GroupId& g, int d) {
    if (g.family == Family::O && g.n % 2 == 0) {
        long acc = 0;
        for (const auto& label : enum_labels(g, d)) {
            long e = epsilon(g, label);
            acc += e * e;
        }
        return acc;
    }
    // O(odd): every irreducible stays irreducible over SO(odd).
    // SO and Sp are already connected.
    return label_count(g, d);
}

}  // namespace

IntSeries uxu_series(const GroupId& g, int order) {
    validate_group(g);
    bool supported = (g.family == Family::O && (g.n == 3 || g.n == 4)) ||
                     (g.family == Family::SO && g.n == 4) ||
                     (g.family == Family::Sp && g.n == 4);
    if (!supported)
        throw std::invalid_argument("uxu_series supports O3, O4, SO4, Sp4; got " + g.name());
    IntSeries s = IntSeries::zero(order);
    for (int d = 0; d <= order; ++d) {
        s.at(d) = component_count(g, d);
        if (d >= 2) s.at(d) += s.at(d - 2);
    }
    return s;
}

std::optional<KoszulObstruction> koszul_obstruction(const IntSeries& hilbert, int max_degree) {
    if (hilbert.at(0) != 1)
        throw std::invalid_argument("Hilbert series must have constant term 1");
    if (max_degree < 1 || max_degree > hilbert.order())
        throw std::invalid_argument("max_degree must be between 1 and the series order");
    IntSeries inv = series_inverse(hilbert.substitute_neg_t());
    for (int d = 1; d <= max_degree; ++d)
        if (inv.at(d) < 0) return KoszulObstruction{d, inv.at(d)};
    return std::nullopt;
}

std::optional<KoszulObstruction> koszul_obstruction(const GroupId& g, int max_degree) {
    return koszul_obstruction(hilbert_series(g, max_degree), max_degree);
}

int default_denominator_pow(const GroupId& g) {
    int m = g.rank();
    int dim = 0;
    switch (g.family) {
        case Family::O:
        case Family::SO: dim = g.n * (g.n - 1) / 2; break;
        case Family::Sp: dim = m * (2 * m + 1); break;
    }
    return dim + 1;
}

}  // namespace cone
