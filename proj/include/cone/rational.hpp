#ifndef CONE_RATIONAL_HPP
#define CONE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace cone {

// Exact arbitrary-precision integers and rationals. Everything in this
// project is exact; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact quotient; the caller guarantees divisibility.
inline Int int_divexact(const Int& a, const Int& b) {
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace cone

#endif
