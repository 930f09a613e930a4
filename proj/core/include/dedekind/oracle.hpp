#pragma once

#include <cstdint>
#include <vector>

#include "dedekind/order.hpp"
#include "dedekind/presentation.hpp"

namespace dedekind {

/* A finite ring tabulated by exhaustion: every element as a coordinate
 * vector (coset representatives reduced by a triangular basis, or plain
 * mixed-radix vectors for a presentation), plus dense addition and
 * multiplication tables of element indices. Test oracle; refuses to
 * enumerate past the cap. */
struct EnumeratedRing {
    std::vector<std::vector<Int>> elements;
    std::vector<std::uint32_t> add_table;  // size^2, row-major
    std::vector<std::uint32_t> mul_table;
    std::size_t zero_index = 0;

    std::size_t size() const { return elements.size(); }
    std::size_t add(std::size_t a, std::size_t b) const { return add_table[a * size() + b]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_table[a * size() + b]; }
};

inline constexpr std::size_t kDefaultOracleCap = 4096;

/* O/I by brute force: representatives x with 0 <= x_i < H(i,i) for the HNF
 * basis H of I, products expanded through the order's table and reduced by
 * columns of H. Throws CapExceededError when N(I) > cap. */
EnumeratedRing enumerate_quotient(const OrderPresentation& order, const TwoGenIdeal& ideal,
                                  std::size_t cap = kDefaultOracleCap);

/* A basis-represented ring by brute force (independent of the finite_ring
 * arithmetic). */
EnumeratedRing enumerate_presentation(const FiniteRingPresentation& R,
                                      std::size_t cap = kDefaultOracleCap);

/* Field by exhaustion: some identity exists and every nonzero element has
 * an inverse. The one-element ring is not a field. */
bool oracle_is_field(const EnumeratedRing& E);

/* Local by exhaustion: the non-units are closed under addition and under
 * multiplication by arbitrary elements. */
bool oracle_is_local(const EnumeratedRing& E);

}  // namespace dedekind
