#include "dedekind/primality.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

constexpr std::uint32_t kSmallPrimes[] = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

Int powm(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

/* Strong pseudoprime test: returns false when a proves n composite.
 * n odd, n > 3; n - 1 = 2^s * d with d odd. */
bool passes_witness(const Int& n, const Int& a_raw, const Int& d, unsigned long s) {
    Int a = mod_floor(a_raw, n);
    if (a <= 1 || a == n - 1) return true;
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin_deterministic(const Int& n) {
    Int d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }

    static const Int kWitnessBound("3317044064679887385961981");
    if (n < kWitnessBound) {
        // first 13 primes: a verified witness set for this range
        static const unsigned long w[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
        for (unsigned long a : w)
            if (!passes_witness(n, Int(a), d, s)) return false;
        return true;
    }

    // ERH range: every base up to 2*ln(n)^2; bit length over-approximates log2
    const double log2n = static_cast<double>(bit_length(n));
    const double ln_n = log2n * 0.6931471805599453;
    const unsigned long bound = static_cast<unsigned long>(2.0 * ln_n * ln_n) + 1;
    for (unsigned long a = 2; a <= bound; ++a)
        if (!passes_witness(n, Int(a), d, s)) return false;
    return true;
}

/* ---- AKS ---- */

/* Polynomials modulo (x^r - 1, n): dense coefficient vectors of length r. */
std::vector<Int> polymul_cyclic(const std::vector<Int>& a, const std::vector<Int>& b,
                                std::size_t r, const Int& n) {
    std::vector<Int> c(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= r) k -= r;
            c[k] += a[i] * b[j];
        }
    }
    for (Int& x : c) x = mod_floor(x, n);
    return c;
}

std::vector<Int> polypow_cyclic(std::vector<Int> base, const Int& e, std::size_t r,
                                const Int& n) {
    std::vector<Int> acc(r);
    acc[0] = 1;
    for (std::size_t bit = bit_length(e); bit-- > 0;) {
        acc = polymul_cyclic(acc, acc, r, n);
        if (bit_test(e, bit)) acc = polymul_cyclic(acc, base, r, n);
    }
    return acc;
}

unsigned long euler_phi(unsigned long r) {
    unsigned long result = r;
    unsigned long m = r;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

bool aks_is_prime(const Int& n) {
    if (n < 2) return false;
    if (n == 2 || n == 3) return true;
    if (mpz_perfect_power_p(n.get_mpz_t())) return false;

    // smallest r with ord_r(n) > (bit length)^2 >= log2(n)^2
    const unsigned long t = static_cast<unsigned long>(bit_length(n));
    const Int ord_bound = Int(t) * Int(t);

    unsigned long r = 0;
    for (Int rc = 2; rc < n; ++rc) {
        Int g = int_gcd(rc, n);
        if (g > 1) return false;  // rc < n, so a proper factor
        Int v = mod_floor(n, rc);
        Int ord = 1;
        while (v != 1 && ord <= ord_bound) {
            v = mod_floor(v * n, rc);
            ++ord;
        }
        if (ord > ord_bound) {
            r = rc.get_ui();
            break;
        }
    }
    if (r == 0) return true;  // the loop reached n: no factor below n

    // (x + a)^n == x^n + a (mod x^r - 1, n) for a = 1 .. floor(sqrt(phi(r)) * log2 n)
    const unsigned long amax = static_cast<unsigned long>(
        std::sqrt(static_cast<double>(euler_phi(r))) * static_cast<double>(t)) + 1;

    std::vector<Int> rhs(r);  // x^(n mod r) + a, a added per iteration
    const std::size_t npos = static_cast<std::size_t>(mod_floor(n, Int(r)).get_ui());
    for (unsigned long a = 1; a <= amax; ++a) {
        std::vector<Int> base(r);
        base[0] = a;
        base[1 % r] += 1;
        std::vector<Int> lhs = polypow_cyclic(std::move(base), n, r, n);
        std::fill(rhs.begin(), rhs.end(), Int(0));
        rhs[npos] = 1;
        rhs[0] = mod_floor(rhs[0] + a, n);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace

bool is_prime_integer(const Int& n, const PrimalityOptions& options) {
    if (n < 2) return false;
    for (std::uint32_t p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) return false;
    }
    switch (options.backend) {
        case PrimalityBackend::Aks:
            return aks_is_prime(n);
        case PrimalityBackend::Witnesses:
        default:
            return miller_rabin_deterministic(n);
    }
}

}  // namespace dedekind
