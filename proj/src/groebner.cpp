#include "cone/groebner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cone {

std::vector<MPoly> reduce_set(std::vector<MPoly> polys, const MonomialOrder& order) {
    std::erase_if(polys, [](const MPoly& f) { return f.is_zero(); });
    for (auto& f : polys) f = f.monic(order);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < polys.size(); ++i) {
            std::vector<MPoly> others;
            others.reserve(polys.size() - 1);
            for (size_t j = 0; j < polys.size(); ++j)
                if (j != i) others.push_back(polys[j]);
            MPoly nf = normal_form(polys[i], others, order);
            if (nf == polys[i]) continue;
            changed = true;
            if (nf.is_zero()) {
                polys.erase(polys.begin() + i);
                --i;
            } else {
                polys[i] = nf.monic(order);
            }
        }
    }
    for (auto& f : polys) f = f.normalized_integral(order);
    std::sort(polys.begin(), polys.end(), [&](const MPoly& a, const MPoly& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
    });
    return polys;
}

namespace {

struct Pair {
    int i, j;  // i < j
    Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order) {
    std::vector<MPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(order));
    GroebnerBasis out{{}, order};
    if (basis.empty()) return out;

    std::vector<Monomial> lms;
    for (const auto& g : basis) lms.push_back(g.leading_monomial(order));

    // Pending S-pairs, processed by ascending (lcm degree, lcm under the
    // order, indices).
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> queue;
    auto push_pairs_with = [&](int k) {
        for (int i = 0; i < k; ++i) queue.push_back({i, k, Monomial::lcm(lms[i], lms[k])});
    };
    for (int k = 1; k < (int)basis.size(); ++k) push_pairs_with(k);

    auto pending = [&](int a, int b) {
        for (const auto& p : queue)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);

        // Buchberger's first criterion: coprime leading monomials.
        if (lms[p.i].coprime(lms[p.j])) continue;
        // Chain criterion: some other leading monomial divides the lcm and
        // both smaller pairs are already settled.
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (lms[k].divides(p.lcm) && !pending(p.i, k) && !pending(p.j, k)) skip = true;
        }
        if (skip) continue;

        MPoly s = s_polynomial(basis[p.i], basis[p.j], order);
        MPoly h = normal_form(s, basis, order);
        if (h.is_zero()) continue;
        basis.push_back(h.monic(order));
        lms.push_back(basis.back().leading_monomial(order));
        push_pairs_with((int)basis.size() - 1);
    }

    out.elements = reduce_set(std::move(basis), order);
    return out;
}

MonomialIdeal leading_ideal(const GroebnerBasis& basis) {
    std::vector<Monomial> gens;
    for (const auto& f : basis.elements) gens.push_back(f.leading_monomial(basis.order));
    // A reduced basis already yields an antichain; minimalize anyway.
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return basis.order.less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(m);
    }
    return MonomialIdeal{std::move(minimal)};
}

namespace {

IntSeries free_ring_series(int nvars, int order) {
    IntSeries s = IntSeries::zero(order);
    if (nvars == 0) {
        s.at(0) = 1;
        return s;
    }
    for (int d = 0; d <= order; ++d) s.at(d) = binomial(d + nvars - 1, nvars - 1);
    return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

Monomial drop_variable(const Monomial& m, int var) {
    std::vector<int> e;
    e.reserve(m.nvars() - 1);
    for (int i = 0; i < m.nvars(); ++i)
        if (i != var) e.push_back(m.exponent(i));
    Monomial out((int)e.size());
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) out = out * Monomial::variable((int)e.size(), (int)i, e[i]);
    return out;
}

IntSeries staircase_count(std::vector<Monomial> gens, int nvars, int order) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return free_ring_series(nvars, order);
    for (const auto& g : gens)
        if (g.degree() == 0) return IntSeries::zero(order);

    // Pivot: the variable hit by the most generators (ties to the lowest
    // index) keeps the recursion shallow.
    std::vector<int> hits(nvars, 0);
    for (const auto& g : gens)
        for (int i = 0; i < nvars; ++i)
            if (g.exponent(i) > 0) ++hits[i];
    int pivot = (int)(std::max_element(hits.begin(), hits.end()) - hits.begin());

    // Monomials with pivot exponent zero, counted in one variable fewer.
    std::vector<Monomial> dropped;
    for (const auto& g : gens)
        if (g.exponent(pivot) == 0) dropped.push_back(drop_variable(g, pivot));
    IntSeries without = staircase_count(std::move(dropped), nvars - 1, order);

    // Monomials divisible by the pivot, via the colon ideal shifted by one.
    std::vector<Monomial> colon;
    Monomial x = Monomial::variable(nvars, pivot);
    for (const auto& g : gens)
        colon.push_back(g.exponent(pivot) > 0 ? g.divide_exact(x) : g);
    IntSeries with = staircase_count(std::move(colon), nvars, order);

    IntSeries total = IntSeries::zero(order);
    for (int d = 0; d <= order; ++d) {
        total.at(d) = without.at(d);
        if (d >= 1) total.at(d) += with.at(d - 1);
    }
    return total;
}

}  // namespace

IntSeries monomial_quotient_hilbert(const MonomialIdeal& ideal, int nvars, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return staircase_count(ideal.generators, nvars, order);
}

namespace {

void enum_monomials(int nvars, int d, int from, Monomial& cur, std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (from >= nvars) return;
    for (int e = d; e >= 0; --e) {
        Monomial next = e > 0 ? cur * Monomial::variable(nvars, from, e) : cur;
        enum_monomials(nvars, d - e, from + 1, next, out);
    }
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int d) {
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    int nvars = basis.order.priority.empty()
                    ? (basis.elements.empty() ? 0 : basis.elements.front().nvars())
                    : (int)basis.order.priority.size();
    MonomialIdeal lt = leading_ideal(basis);
    std::vector<Monomial> all;
    Monomial cur(nvars);
    enum_monomials(nvars, d, 0, cur, all);
    std::vector<Monomial> out;
    for (const auto& m : all) {
        bool divisible = false;
        for (const auto& g : lt.generators)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return basis.order.greater(a, b); });
    return out;
}

std::string basis_file_text(const GroebnerBasis& basis) {
    int nvars = (int)basis.order.priority.size();
    int n = (int)std::lround(std::sqrt((double)nvars));
    std::string out = "# order=" + order_kind_name(basis.order.kind) +
                      " vars=row-major n=" + std::to_string(n) + "\n";
    for (const auto& f : basis.elements) out += canonical_text(f, basis.order) + "\n";
    return out;
}

}  // namespace cone
