#pragma once

#include <cstddef>
#include <vector>

#include "dedekind/integers.hpp"

namespace dedekind {

/* Basis representation of a finite commutative ring:
 * (R, +) = Z_{d_1} v_1 + ... + Z_{d_m} v_m with d_{i+1} | d_i and all
 * d_i >= 2, and v_i v_j = sum_k l(i,j,k) v_k with 0 <= l(i,j,k) < d_k. */
struct FiniteRingPresentation {
    std::vector<Int> d;  // additive orders, decreasing divisibility
    std::vector<Int> l;  // m^3 structure constants, index (i*m + j)*m + k

    std::size_t m() const { return d.size(); }
    const Int& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return l[(i * d.size() + j) * d.size() + k];
    }
    Int& sc(std::size_t i, std::size_t j, std::size_t k) {
        return l[(i * d.size() + j) * d.size() + k];
    }

    /* |R| = product of the d_i. */
    Int size() const {
        Int s = 1;
        for (const Int& di : d) s *= di;
        return s;
    }
};

/* Element of a basis-represented ring: coordinates with 0 <= x_i < d_i. */
struct RingElement {
    std::vector<Int> x;
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

/* Enforces the presentation invariants: m >= 1, d_i >= 2, the divisibility
 * chain, reduced structure constants, commutativity, the compatibility
 * d_i * l(i,j,k) = 0 mod d_k that makes multiplication well defined, and
 * associativity on generators. Throws PresentationError. Identity existence
 * is checked separately by BasisRing. */
void validate_presentation(const FiniteRingPresentation& R);

}  // namespace dedekind
