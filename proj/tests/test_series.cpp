#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cone/serialize.hpp"
#include "cone/series.hpp"

using namespace cone;

namespace {

IntSeries make(std::initializer_list<long> v) {
    return IntSeries(std::vector<Int>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("arithmetic carries the truncation order") {
    IntSeries a = make({1, 2, 3, 4});
    IntSeries b = make({1, 1});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    CHECK((a * b) == make({1, 3}));
    CHECK((a - a) == IntSeries::zero(3));
}

TEST_CASE("geometric series inverts to 1 - t") {
    IntSeries geo = make({1, 1, 1, 1, 1});
    CHECK(series_inverse(geo) == make({1, -1, 0, 0, 0}));
    CHECK(series_inverse(make({1})) == make({1}));
    CHECK_THROWS_AS(series_inverse(make({2, 1})), std::invalid_argument);
}

TEST_CASE("inverse is a two-sided inverse on random unit series") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        IntSeries s = IntSeries::zero(20);
        s.at(0) = (trial % 2) ? 1 : -1;
        for (int d = 1; d <= 20; ++d) s.at(d) = coeff(rng);
        CHECK(s * series_inverse(s) == IntSeries::one(20));
    }
}

TEST_CASE("rational function expansion") {
    RationalFunction geo{{Int(1)}, 1, 0};
    CHECK(geo.expand(4) == make({1, 1, 1, 1, 1}));
    RationalFunction even{{Int(1)}, 0, 1};
    CHECK(even.expand(5) == make({1, 0, 1, 0, 1, 0}));
    RationalFunction f{{Int(1), Int(-1)}, 1, 0};
    CHECK(f.expand(5) == make({1, 0, 0, 0, 0, 0}));
    CHECK(f.numerator_text() == "1-t");
    CHECK(f.denominator_text() == "(1-t)");
    RationalFunction g{{Int(1), Int(5)}, 2, 3};
    CHECK(g.denominator_text() == "(1-t)^2*(1-t^2)^3");
}

TEST_CASE("reconstruction recovers numerators and rejects wrong denominators") {
    RationalFunction f{{Int(1), Int(2), Int(0), Int(-3)}, 3, 1};
    IntSeries s = f.expand(30);
    CHECK(reconstruct_rational(s, 3, 1) == f);

    // constant series
    CHECK(reconstruct_rational(IntSeries::one(10), 0, 0) ==
          RationalFunction{{Int(1)}, 0, 0});

    // wrong denominator: the product never terminates
    CHECK_THROWS_WITH_AS(reconstruct_rational(s, 1, 0), doctest::Contains("does not terminate"),
                         std::runtime_error);

    // order too small to leave a guard band
    CHECK_THROWS_AS(reconstruct_rational(make({1, 1, 1}), 1, 0), std::invalid_argument);
}

TEST_CASE("reconstruction round-trips through expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        RationalFunction f;
        f.denom_pow1 = trial % 4;
        f.denom_pow2 = trial % 3;
        int deg = trial % 6;
        for (int k = 0; k <= deg; ++k) f.numerator.push_back(coeff(rng));
        while (!f.numerator.empty() && f.numerator.back() == 0) f.numerator.pop_back();
        if (f.numerator.empty()) f.numerator.push_back(1);
        IntSeries s = f.expand(25);
        RationalFunction back = reconstruct_rational(s, f.denom_pow1, f.denom_pow2);
        CHECK(back.expand(25) == s);
        CHECK(back == f);
    }
}

TEST_CASE("JSON round trip uses decimal strings") {
    IntSeries s = make({1, -7330, 17883});
    auto j = to_json(s);
    CHECK(j["coeffs"][1] == "-7330");
    CHECK(series_from_json(j) == s);

    RationalFunction f{{Int(1), Int(5), Int(5), Int(1)}, 11, 0};
    auto jf = to_json(f);
    CHECK(jf["a"] == 11);
    CHECK(rational_from_json(jf) == f);
}

TEST_CASE("sample points serialize as rational strings") {
    QMatrix m(2, 2);
    m.at(0, 0) = Rat(5, 7);
    m.at(1, 1) = -3;
    auto j = to_json(m);
    CHECK(j[0][0] == "5/7");
    CHECK(j[1][1] == "-3");
    CHECK(matrix_from_json(j) == m);
}
