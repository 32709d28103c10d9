#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "cone/cone_ideals.hpp"
#include "cone/polyring.hpp"

using namespace cone;

namespace {

const int N3 = 9;
const MonomialOrder drl3 = MonomialOrder::row_major(OrderKind::degrevlex, N3);

MPoly x(int i, int j) { return xvar(3, i, j); }

Monomial mono(std::initializer_list<std::pair<int, int>> vars) {
    Monomial m(N3);
    VarGrid grid{3};
    for (auto [i, j] : vars) m = m * Monomial::variable(N3, grid.flat(i, j));
    return m;
}

MPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::uniform_int_distribution<int> deg(0, max_deg);
    MPoly f(nvars);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m(nvars);
        int d = deg(rng);
        for (int e = 0; e < d; ++e) m = m * Monomial::variable(nvars, var(rng));
        f.add_term(m, coeff(rng));
    }
    return f;
}

// Term-by-term convolution into a plain map, independent of MPoly's
// arithmetic path.
MPoly naive_mul(const MPoly& f, const MPoly& g) {
    std::map<Monomial, Rat> acc;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) acc[m1 * m2] += c1 * c2;
    MPoly out(f.nvars());
    for (const auto& [m, c] : acc) out.add_term(m, c);
    return out;
}

}  // namespace

TEST_CASE("variable naming and the flat grid") {
    VarGrid g3{3};
    CHECK(g3.flat(1, 1) == 0);
    CHECK(g3.flat(2, 3) == 5);
    CHECK(g3.var_name(g3.flat(1, 2)) == "x12");
    VarGrid g12{12};
    CHECK(g12.var_name(g12.flat(1, 2)) == "x1_2");
    CHECK(g12.var_name(g12.flat(10, 11)) == "x10_11");
}

TEST_CASE("degrevlex compare") {
    Monomial sq = mono({{1, 1}, {1, 1}});
    Monomial mixed = mono({{1, 1}, {1, 2}});
    CHECK(drl3.compare(sq, mixed) == 1);  // x11^2 > x11*x12
    CHECK(drl3.compare(mixed, sq) == -1);
    CHECK(drl3.compare(sq, sq) == 0);
    // degree dominates
    CHECK(drl3.compare(mono({{3, 3}, {3, 3}, {3, 3}}), mono({{1, 1}, {1, 1}})) == 1);
    CHECK_THROWS_AS(drl3.compare(sq, Monomial(16)), std::invalid_argument);
}

TEST_CASE("deglex and lex tie-breaking differ from degrevlex") {
    // u = x11*x33, v = x12*x21: deglex prefers the higher first variable
    Monomial u = mono({{1, 1}, {3, 3}});
    Monomial v = mono({{1, 2}, {2, 1}});
    MonomialOrder deglex = MonomialOrder::row_major(OrderKind::deglex, N3);
    MonomialOrder lex = MonomialOrder::row_major(OrderKind::lex, N3);
    CHECK(deglex.compare(u, v) == 1);
    CHECK(lex.compare(u, v) == 1);
    CHECK(drl3.compare(u, v) == -1);  // x33 drags u down in degrevlex
    // lex ignores degree
    CHECK(lex.compare(mono({{1, 1}}), mono({{1, 2}, {2, 1}, {3, 1}})) == 1);
}

TEST_CASE("compare is a strict total order on random triples") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> var(0, N3 - 1), deg(0, 4);
    auto random_monomial = [&] {
        Monomial m(N3);
        int d = deg(rng);
        for (int e = 0; e < d; ++e) m = m * Monomial::variable(N3, var(rng));
        return m;
    };
    for (OrderKind kind : {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}) {
        MonomialOrder ord = MonomialOrder::row_major(kind, N3);
        for (int trial = 0; trial < 1000; ++trial) {
            Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            CHECK((ord.compare(a, b) == 0) == (a == b));
            if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0)
                CHECK(ord.compare(a, c) <= 0);
        }
    }
}

TEST_CASE("ring arithmetic") {
    MPoly f = x(1, 2) + x(2, 1);
    MPoly g = x(1, 2) - x(2, 1);
    CHECK(f * g == x(1, 2) * x(1, 2) - x(2, 1) * x(2, 1));
    CHECK(f + MPoly(N3) == f);
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(f + MPoly(16), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        MPoly a = random_poly(rng, N3, 6, 3);
        MPoly b = random_poly(rng, N3, 6, 3);
        MPoly c = random_poly(rng, N3, 4, 2);
        CHECK(a * b == naive_mul(a, b));
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("exact rational coefficients survive arithmetic") {
    MPoly f = x(1, 1) * Rat(1, 3) + x(2, 2) * Rat(1, 6);
    MPoly g = f * Rat(6);
    CHECK(g == x(1, 1) * Rat(2) + x(2, 2));
    CHECK(canonical_text(f, drl3) == "1/3*x11 + 1/6*x22");
    CHECK(f.normalized_integral(drl3) == x(1, 1) * Rat(2) + x(2, 2));
}

TEST_CASE("normal form") {
    MPoly f = x(1, 1) * x(1, 2) * x(1, 2);
    MPoly b = x(1, 2) * x(1, 2) + x(1, 1) * x(1, 3) * Rat(2);
    CHECK(normal_form(f, {b}, drl3) == -Rat(2) * x(1, 1) * x(1, 1) * x(1, 3));
    CHECK(normal_form(f, {}, drl3) == f);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        MPoly g = random_poly(rng, N3, 6, 3);
        std::vector<MPoly> basis;
        for (int k = 0; k < 3; ++k) {
            MPoly cand = random_poly(rng, N3, 4, 2);
            if (!cand.is_zero()) basis.push_back(cand);
        }
        MPoly nf = normal_form(g, basis, drl3);
        CHECK(normal_form(nf, basis, drl3) == nf);  // idempotent
    }
}

TEST_CASE("s-polynomial") {
    MPoly f = x(1, 2) * x(1, 2) + x(1, 1) * x(1, 3) * Rat(2);
    CHECK(s_polynomial(f, f, drl3).is_zero());
    // coprime leading monomials reduce to zero modulo the pair
    MPoly g = x(2, 1) * x(2, 1) + x(3, 3);
    MPoly s = s_polynomial(f, g, drl3);
    CHECK(normal_form(s, {f, g}, drl3).is_zero());
    CHECK_THROWS_AS(s_polynomial(f, MPoly(N3), drl3), std::invalid_argument);
}

TEST_CASE("canonical text format") {
    MPoly f = x(1, 2) * x(1, 2) + Rat(2) * x(1, 1) * x(1, 3);
    CHECK(canonical_text(f, drl3) == "x12^2 + 2*x11*x13");
    MPoly g = x(2, 1) * x(2, 3) - x(1, 2) * x(3, 2);
    CHECK(canonical_text(g, drl3) == "x21*x23 - x12*x32");
    CHECK(canonical_text(MPoly(N3), drl3) == "0");
    CHECK(canonical_text(-x(1, 1) + MPoly::constant(N3, Rat(5)), drl3) == "-x11 + 5");
    CHECK(canonical_text(MPoly::constant(N3, Rat(1)), drl3) == "1");
}
