#include "cone/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cone {

IntSeries::IntSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs a constant term");
}

IntSeries IntSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    return IntSeries(std::vector<Int>(order + 1, Int(0)));
}

IntSeries IntSeries::one(int order) {
    IntSeries s = zero(order);
    s.at(0) = 1;
    return s;
}

const Int& IntSeries::at(int d) const {
    if (d < 0 || d > order()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[d];
}

Int& IntSeries::at(int d) {
    if (d < 0 || d > order()) throw std::out_of_range("coefficient index out of range");
    return coeffs_[d];
}

IntSeries IntSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    return IntSeries(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

IntSeries IntSeries::operator+(const IntSeries& o) const {
    int N = std::min(order(), o.order());
    IntSeries r = zero(N);
    for (int d = 0; d <= N; ++d) r.at(d) = coeffs_[d] + o.coeffs_[d];
    return r;
}

IntSeries IntSeries::operator-(const IntSeries& o) const {
    int N = std::min(order(), o.order());
    IntSeries r = zero(N);
    for (int d = 0; d <= N; ++d) r.at(d) = coeffs_[d] - o.coeffs_[d];
    return r;
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    int N = std::min(order(), o.order());
    IntSeries r = zero(N);
    for (int i = 0; i <= N; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) r.at(i + j) += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

IntSeries IntSeries::substitute_neg_t() const {
    IntSeries r = *this;
    for (int d = 1; d <= r.order(); d += 2) r.at(d) = -r.at(d);
    return r;
}

std::string IntSeries::text() const {
    std::string out = "[";
    for (int d = 0; d <= order(); ++d) {
        if (d) out += ", ";
        out += coeffs_[d].get_str();
    }
    return out + "]";
}

IntSeries series_inverse(const IntSeries& s) {
    const Int& a0 = s.at(0);
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("series inverse requires a unit constant term");
    int N = s.order();
    IntSeries b = IntSeries::zero(N);
    b.at(0) = a0;  // 1/a0 = a0 for a unit
    for (int d = 1; d <= N; ++d) {
        Int acc = 0;
        for (int k = 1; k <= d; ++k) acc += s.at(k) * b.at(d - k);
        b.at(d) = -a0 * acc;
    }
    return b;
}

IntSeries RationalFunction::expand(int order) const {
    IntSeries r = IntSeries::zero(order);
    for (int k = 0; k < (int)numerator.size() && k <= order; ++k) r.at(k) = numerator[k];
    // divide by (1-t): prefix sums
    for (int i = 0; i < denom_pow1; ++i)
        for (int d = 1; d <= order; ++d) r.at(d) += r.at(d - 1);
    // divide by (1-t^2)
    for (int i = 0; i < denom_pow2; ++i)
        for (int d = 2; d <= order; ++d) r.at(d) += r.at(d - 2);
    return r;
}

namespace {

std::string poly_in_t_text(const std::vector<Int>& c) {
    std::string out;
    for (int k = 0; k < (int)c.size(); ++k) {
        if (c[k] == 0) continue;
        Int mag = abs(c[k]);
        if (out.empty())
            out += (c[k] < 0) ? "-" : "";
        else
            out += (c[k] < 0) ? "-" : "+";
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string RationalFunction::numerator_text() const { return poly_in_t_text(numerator); }

std::string RationalFunction::denominator_text() const {
    std::string out;
    auto piece = [](const std::string& base, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return base;
        return base + "^" + std::to_string(e);
    };
    out += piece("(1-t)", denom_pow1);
    if (denom_pow1 > 0 && denom_pow2 > 0) out += "*";
    out += piece("(1-t^2)", denom_pow2);
    return out.empty() ? "1" : out;
}

RationalFunction reconstruct_rational(const IntSeries& s, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("denominator exponents must be nonnegative");
    int bound = a + 2 * b + 5;
    if (s.order() < bound + 2)
        throw std::invalid_argument("series order too small for reconstruction; need order >= " +
                                    std::to_string(bound + 2));
    std::vector<Int> p = s.coeffs();
    int N = (int)p.size() - 1;
    // multiply by (1-t)^a then (1-t^2)^b
    for (int i = 0; i < a; ++i)
        for (int d = N; d >= 1; --d) p[d] -= p[d - 1];
    for (int i = 0; i < b; ++i)
        for (int d = N; d >= 2; --d) p[d] -= p[d - 2];
    for (int d = bound + 1; d <= N; ++d)
        if (p[d] != 0)
            throw std::runtime_error("reconstruction does not terminate: coefficient of t^" +
                                     std::to_string(d) + " is nonzero; wrong denominator exponents?");
    int deg = bound;
    while (deg > 0 && p[deg] == 0) --deg;
    p.resize(deg + 1);
    return RationalFunction{std::move(p), a, b};
}

}  // namespace cone
