#pragma once

#include "dedekind/integers.hpp"

namespace dedekind {

/* Which deterministic test backs is_prime_integer above the fixed-witness
 * range.
 *
 * Witnesses: below 3317044064679887385961981 the first 13 primes are a
 * verified witness set and the answer is unconditional. Above that bound
 * Miller-Rabin runs every base a <= 2*ln(n)^2, which is deterministic and
 * correct under the extended Riemann hypothesis.
 *
 * Aks: the unconditional polynomial-time test. Orders of magnitude slower;
 * practical only for small inputs. */
enum class PrimalityBackend {
    Witnesses,
    Aks,
};

struct PrimalityOptions {
    PrimalityBackend backend = PrimalityBackend::Witnesses;
};

/* true iff n is prime; n < 2 gives false. Deterministic for every input
 * (see PrimalityBackend for the guarantee per range). */
bool is_prime_integer(const Int& n, const PrimalityOptions& options = {});

}  // namespace dedekind
