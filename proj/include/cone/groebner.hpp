#ifndef CONE_GROEBNER_HPP
#define CONE_GROEBNER_HPP

#include <string>
#include <vector>

#include "cone/polyring.hpp"
#include "cone/series.hpp"

namespace cone {

// Reduced Groebner basis: every element has integer coefficients of
// content 1 and positive leading coefficient (+1 for every ideal shipped
// here), no monomial of any element is divisible by the leading monomial
// of another, and elements are listed ascending by leading monomial.
struct GroebnerBasis {
    std::vector<MPoly> elements;
    MonomialOrder order;
};

// Antichain of monomials under divisibility.
struct MonomialIdeal {
    std::vector<Monomial> generators;
};

// Buchberger's algorithm with the coprimality and chain criteria, followed
// by full auto-reduction. Deterministic: S-pairs are processed by ascending
// (lcm degree, lcm, pair index) and output is sorted by leading monomial.
GroebnerBasis buchberger(const std::vector<MPoly>& gens, const MonomialOrder& order);

// Full inter-reduction of a polynomial list: repeatedly replaces each
// element by its normal form modulo the others, drops zeros, normalizes to
// integer content-1 form and sorts ascending by leading monomial.
std::vector<MPoly> reduce_set(std::vector<MPoly> polys, const MonomialOrder& order);

MonomialIdeal leading_ideal(const GroebnerBasis& basis);

// Hilbert series of the quotient by a monomial ideal: coefficient d counts
// the degree-d monomials divisible by no generator. Pivot-variable
// recursion, exact.
IntSeries monomial_quotient_hilbert(const MonomialIdeal& ideal, int nvars, int order);

// All degree-d monomials outside the leading-term ideal, descending.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, int d);

// One polynomial per line in canonical text, preceded by a header line
// "# order=degrevlex vars=row-major n=3".
std::string basis_file_text(const GroebnerBasis& basis);

}  // namespace cone

#endif
