#ifndef CONE_CONE_IDEALS_HPP
#define CONE_CONE_IDEALS_HPP

#include <vector>

#include "cone/polyring.hpp"
#include "cone/qmatrix.hpp"

namespace cone {

enum class FormKind { symmetric, skew };

// An invertible bilinear form defining an orthogonal or symplectic group.
struct FormMatrix {
    QMatrix mat;
    FormKind kind;

    static FormMatrix identity(int n);
    // The antidiagonal symmetric 3x3 form (split coordinates for O(3)).
    static FormMatrix beta3();
    // Block diagonal of [[0,1],[-1,0]] blocks.
    static FormMatrix standard_symplectic(int n);

    // Throws if the matrix does not match its kind or is singular.
    void validate() const;
};

// Quadratic generators of the vanishing ideal of the cone of the orthogonal
// group preserving B. For B = I this is the classical list: the off-diagonal
// entries of X^T X and X X^T plus the differences of diagonal entries
// against the (1,1) position; n^2 + n - 2 polynomials. For general B the
// entries of X^T B X and X B X^T at the positions where B vanishes are used
// together with proportionality differences against the first nonzero
// position, pruned to a linearly independent set of the same size.
std::vector<MPoly> orthogonal_generators(int n, const FormMatrix& B);

// Same construction for M^T J M = J; the outputs are inter-reduced so the
// quadratics are in reduced echelon form with respect to row-major
// degrevlex. 10 generators for n = 4.
std::vector<MPoly> symplectic_generators(int n, const FormMatrix& J);

// Substitution x_{ij} <- M_{ij}, exact.
Rat evaluate(const MPoly& f, const QMatrix& point);

// a + bi with exact rational components; enough Gaussian-rational
// arithmetic to evaluate polynomials at complex sample points.
struct GaussRat {
    Rat re, im;
    bool operator==(const GaussRat&) const = default;
};

GaussRat evaluate_gaussian(const MPoly& f, const QMatrix& re, const QMatrix& im);

// (I - S)(I + S)^{-1} for a B-skew S (S^T B + B S = 0); the result M
// satisfies M^T B M = B exactly. Throws if I + S is singular or S is not
// B-skew.
QMatrix cayley_transform(const QMatrix& S, const FormMatrix& B);

enum class Side { left, right };

// Derivation extending x_{ij} -> -(uX)_{ij} (left) or (Xu)_{ij} (right):
// the infinitesimal action of u on functions under (g,h).M = g M h^{-1}.
MPoly infinitesimal_action(const MPoly& f, const QMatrix& u, Side side);

// Generic n x n matrix of variables as polynomial entries.
std::vector<std::vector<MPoly>> generic_matrix(int n);
MPoly generic_det(int n);
MPoly xvar(int n, int i, int j);  // x_{ij}, 1-based

// The four invariants generating the U x U-invariant algebra of the
// O(3,beta) cone up to degree 3:
// x31, x31*x22 - x21*x32, Tr(X^T beta X beta), det X.
std::vector<MPoly> uxu_candidates_O3beta();

// Rank of the coefficient matrix of a polynomial list (columns indexed by
// the union of the supports), computed exactly.
int coefficient_rank(const std::vector<MPoly>& polys);

// E_{12} - E_{21}-style elementary combination helpers.
QMatrix unit_matrix(int n, int i, int j);  // E_{ij}, 1-based

}  // namespace cone

#endif
