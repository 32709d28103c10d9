#ifndef CONE_POLYRING_HPP
#define CONE_POLYRING_HPP

#include <map>
#include <string>
#include <vector>

#include "cone/rational.hpp"

namespace cone {

// The n x n grid of coordinate functions x_{ij}, 1-based, flattened
// row-major: flat = (i-1)*n + (j-1).
struct VarGrid {
    int n;

    int nvars() const { return n * n; }
    int flat(int i, int j) const { return (i - 1) * n + (j - 1); }
    int row(int flat) const { return flat / n + 1; }
    int col(int flat) const { return flat % n + 1; }

    // x12 for n <= 9, x1_2 with separating underscores for n >= 10.
    std::string var_name(int flat) const;

    bool operator==(const VarGrid&) const = default;
};

class Monomial {
public:
    explicit Monomial(int nvars) : exps_(nvars, 0), deg_(0) {}
    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const { return (int)exps_.size(); }
    int degree() const { return deg_; }
    int exponent(int index) const { return exps_[index]; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide_exact(const Monomial& o) const;  // *this / o
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial&) const = default;
    // Structural key order (degree, then exponent vector); independent of
    // any monomial order, used only for canonical storage.
    bool operator<(const Monomial& o) const;

private:
    std::vector<int> exps_;
    int deg_;
};

enum class OrderKind { degrevlex, deglex, lex };

OrderKind order_kind_parse(const std::string& name);
std::string order_kind_name(OrderKind kind);

// A total order on monomials of a fixed grid. `priority` lists flat
// variable indices from highest to lowest; the default is row-major,
// x11 > x12 > ... > xnn.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<int> priority;

    static MonomialOrder row_major(OrderKind kind, int nvars);

    // -1, 0, +1 for u < v, u == v, u > v.
    int compare(const Monomial& u, const Monomial& v) const;
    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }
};

// Sparse multivariate polynomial over exact rationals. Terms are stored
// keyed by monomial; no zero coefficient is ever kept.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly constant(int nvars, const Rat& c);
    static MPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return (int)terms_.size(); }
    // Maximal total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    MPoly operator+(const MPoly&) const;
    MPoly operator-(const MPoly&) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly&) const;
    MPoly operator*(const Rat&) const;
    bool operator==(const MPoly&) const = default;

    std::pair<Monomial, Rat> leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const;

    MPoly derivative(int var_index) const;

    // Leading coefficient 1 (exact rational division).
    MPoly monic(const MonomialOrder& order) const;
    // Integer coefficients, content 1, positive leading coefficient.
    MPoly normalized_integral(const MonomialOrder& order) const;

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& f) { return f * c; }

// Remainder of f on division by the list B: no monomial of the result is
// divisible by any leading monomial of B. Deterministic; ties go to the
// first matching divisor in list order. An empty B returns f.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& B, const MonomialOrder& order);

// lcm(LM f, LM g)/LT f * f - lcm/LT g * g; the leading terms cancel.
MPoly s_polynomial(const MPoly& f, const MPoly& g, const MonomialOrder& order);

std::string monomial_text(const Monomial& m, const VarGrid& grid);
// Canonical text: terms descending under `order`, integer or p/q
// coefficients, '^' powers, exact "a*m1 + b*m2 - c*m3" spacing.
std::string canonical_text(const MPoly& f, const MonomialOrder& order);

}  // namespace cone

#endif
