#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace dedekind {

/* All arithmetic in this library is exact; Int is an arbitrary-precision
 * integer. */
using Int = mpz_class;

/* Floor division and the nonnegative remainder, for b > 0. mpz_class
 * operator/ truncates toward zero, which is the wrong convention for
 * lattice reduction. */
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/* g = gcd(a, b) = s*a + t*b */
inline void ext_gcd(Int& g, Int& s, Int& t, const Int& a, const Int& b) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/* ceil(sqrt(a)) for a >= 0 */
inline Int sqrt_ceil(const Int& a) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
    if (s * s < a) ++s;
    return s;
}

inline std::size_t bit_length(const Int& a) {
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool bit_test(const Int& a, std::size_t i) {
    return mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0;
}

inline std::string to_decimal(const Int& a) { return a.get_str(); }

/* Parse a base-10 integer (optional leading '-'); throws ParseError. */
Int int_from_decimal(const std::string& s);

/* Narrow to size_t; throws CapExceededError when out of range. */
std::size_t to_size(const Int& a, const std::string& context);

}  // namespace dedekind
