#pragma once

#include <optional>

#include "dedekind/order.hpp"
#include "dedekind/presentation.hpp"

namespace dedekind {

/* Witness data for a quotient construction: S = V * H_I * U with V, U
 * unimodular, and eta_basis = V^{-1} exactly, whose columns give the
 * adapted basis eta_j in terms of the order basis. snf_diagonal is the
 * full diagonal including trailing 1 entries. */
struct QuotientCertificate {
    IntMatrix V;
    IntMatrix U;
    std::vector<Int> snf_diagonal;
    IntMatrix eta_basis;
    Int norm;
};

struct QuotientBasis {
    FiniteRingPresentation ring;
    QuotientCertificate certificate;
};

/* Basis representation of O/I, or std::nullopt when I is the unit ideal
 * (N(I) = 1). h must be a positive multiple of the norms of both nonzero
 * generators; the structure constants are computed entirely in arithmetic
 * modulo h. Generator positions with d_i = 1 are dropped. */
std::optional<QuotientBasis> output_basis(const OrderPresentation& order,
                                          const TwoGenIdeal& ideal, const Int& h);

}  // namespace dedekind
