#include "verdict.hpp"

namespace dedekind::cli {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::UnitIdeal: return "UnitIdeal";
        case VerdictKind::Prime: return "Prime";
        case VerdictKind::PrimePowerNotPrime: return "PrimePowerNotPrime";
        case VerdictKind::Composite: return "Composite";
    }
    return "?";
}

Verdict classify_ideal(const OrderPresentation& order, const TwoGenIdeal& ideal,
                       const std::optional<Int>& h, const PrimalityOptions& primality) {
    const Int hval = h ? *h : norm_multiple(order, ideal);
    auto qb = output_basis(order, ideal, hval);
    if (!qb) return {VerdictKind::UnitIdeal, Int(1), std::nullopt, {}, {}};

    Verdict v{VerdictKind::Composite, qb->certificate.norm, std::nullopt,
              qb->certificate.snf_diagonal, {}};
    FieldTestResult field = is_field_with_tower(qb->ring, primality);
    v.tower_degrees = field.tower_degrees;
    if (field.field)
        v.kind = VerdictKind::Prime;
    else
        v.kind = is_local(qb->ring, primality) ? VerdictKind::PrimePowerNotPrime
                                               : VerdictKind::Composite;
    v.quotient = std::move(qb->ring);
    return v;
}

}  // namespace dedekind::cli
