#ifndef CONE_SERIES_HPP
#define CONE_SERIES_HPP

#include <string>
#include <vector>

#include "cone/rational.hpp"

namespace cone {

// Truncated power series with exact integer coefficients c_0..c_N.
// Arithmetic carries the truncation order through: the order of a result
// is the minimum of the operand orders.
class IntSeries {
public:
    IntSeries() : coeffs_(1, Int(0)) {}
    explicit IntSeries(std::vector<Int> coeffs);
    static IntSeries zero(int order);
    static IntSeries one(int order);

    int order() const { return (int)coeffs_.size() - 1; }
    const Int& at(int d) const;
    Int& at(int d);
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntSeries truncated(int order) const;
    IntSeries operator+(const IntSeries&) const;
    IntSeries operator-(const IntSeries&) const;
    IntSeries operator*(const IntSeries&) const;
    bool operator==(const IntSeries&) const = default;

    // t -> -t
    IntSeries substitute_neg_t() const;

    std::string text() const;

private:
    std::vector<Int> coeffs_;
};

// Multiplicative inverse up to the truncation order. The constant term must
// be a unit (1 or -1).
IntSeries series_inverse(const IntSeries& s);

// numerator(t) / ((1-t)^a (1-t^2)^b), numerator with integer coefficients.
struct RationalFunction {
    std::vector<Int> numerator;  // numerator[k] = coefficient of t^k
    int denom_pow1 = 0;          // exponent of (1-t)
    int denom_pow2 = 0;          // exponent of (1-t^2)

    IntSeries expand(int order) const;
    std::string numerator_text() const;
    std::string denominator_text() const;
    bool operator==(const RationalFunction&) const = default;
};

// Recovers the numerator of s * (1-t)^a * (1-t^2)^b, provided the product
// terminates. The numerator degree is bounded by a + 2b + 5 and the series
// must carry at least two coefficients beyond that bound; every coefficient
// past the bound has to vanish or the denominator guess is rejected with a
// "does not terminate" error.
RationalFunction reconstruct_rational(const IntSeries& s, int a, int b);

}  // namespace cone

#endif
