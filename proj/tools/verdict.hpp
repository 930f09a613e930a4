#pragma once

#include <optional>
#include <string>

#include <dedekind/finite_ring.hpp>
#include <dedekind/order.hpp>
#include <dedekind/quotient.hpp>

namespace dedekind::cli {

enum class VerdictKind { UnitIdeal, Prime, PrimePowerNotPrime, Composite };

std::string to_string(VerdictKind k);

/* Outcome of the ideal classification. Invariants: Prime means the
 * quotient passed the field test, PrimePowerNotPrime means local but not a
 * field, Composite means not local. */
struct Verdict {
    VerdictKind kind;
    Int norm;
    std::optional<FiniteRingPresentation> quotient;
    std::vector<Int> snf_diagonal;           // full diagonal, empty for the unit ideal
    std::vector<std::size_t> tower_degrees;  // stage degrees m_i when a tower was built

    bool prime() const { return kind == VerdictKind::Prime; }
    bool prime_power() const {
        return kind == VerdictKind::Prime || kind == VerdictKind::PrimePowerNotPrime;
    }
};

/* N(I); unit ideal when N = 1; otherwise the basis representation of O/I
 * is built and tested for field / local structure. h defaults to
 * norm_multiple(order, ideal) when not supplied. */
Verdict classify_ideal(const OrderPresentation& order, const TwoGenIdeal& ideal,
                       const std::optional<Int>& h, const PrimalityOptions& primality);

}  // namespace dedekind::cli
