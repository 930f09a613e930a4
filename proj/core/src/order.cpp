#include "dedekind/order.hpp"

#include "dedekind/errors.hpp"

namespace dedekind {

OrderPresentation::OrderPresentation(std::size_t rank, std::vector<Int> table,
                                     std::vector<Int> one)
    : rank_(rank), table_(std::move(table)), one_(std::move(one)) {
    if (rank_ == 0) throw DimensionError("order rank must be at least 1");
    if (table_.size() != rank_ * rank_ * rank_)
        throw DimensionError("multiplication table must have rank^3 entries");
    if (one_.size() != rank_)
        throw DimensionError("identity coordinate vector must have rank entries");
}

OrderElement OrderPresentation::element(std::vector<Int> coords) const {
    if (coords.size() != rank_)
        throw DimensionError("element coordinate vector has wrong length");
    return {std::move(coords)};
}

void OrderPresentation::check_element(const OrderElement& x, const char* who) const {
    if (x.coords.size() != rank_)
        throw DimensionError(std::string(who) + ": element does not match order rank");
}

OrderElement OrderPresentation::add(const OrderElement& x, const OrderElement& y) const {
    check_element(x, "add");
    check_element(y, "add");
    OrderElement r = x;
    for (std::size_t i = 0; i < rank_; ++i) r.coords[i] += y.coords[i];
    return r;
}

OrderElement OrderPresentation::neg(const OrderElement& x) const {
    check_element(x, "neg");
    OrderElement r = x;
    for (Int& c : r.coords) c = -c;
    return r;
}

OrderElement OrderPresentation::mul(const OrderElement& x, const OrderElement& y) const {
    check_element(x, "mul");
    check_element(y, "mul");
    OrderElement r = zero();
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j) {
            if (y.coords[j] == 0) continue;
            const Int xy = x.coords[i] * y.coords[j];
            for (std::size_t k = 0; k < rank_; ++k) {
                const Int& cijk = c(i, j, k);
                if (cijk != 0) r.coords[k] += xy * cijk;
            }
        }
    }
    return r;
}

IntMatrix OrderPresentation::regular_representation(const OrderElement& x) const {
    check_element(x, "regular_representation");
    IntMatrix A(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < rank_; ++k)
                if (x.coords[k] != 0) acc += x.coords[k] * c(k, i, j);
            A(i, j) = acc;
        }
    return A;
}

Int OrderPresentation::element_norm(const OrderElement& x) const {
    return int_abs(det_modular(regular_representation(x)));
}

Int OrderPresentation::table_bound() const {
    Int m = 0;
    for (const Int& e : table_) {
        Int a = int_abs(e);
        if (a > m) m = a;
    }
    return m;
}

std::string OrderValidationIssue::describe() const {
    switch (kind) {
        case Kind::Commutativity:
            return "commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::Associativity:
            return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                   "," + std::to_string(k) + ")";
        case Kind::Identity:
            return "declared identity does not fix basis element " + std::to_string(i);
    }
    return "unknown issue";
}

OrderValidationReport validate_order(const OrderPresentation& order) {
    const std::size_t n = order.rank();
    OrderValidationReport report;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (order.c(i, j, k) != order.c(j, i, k)) {
                    report.issues.push_back({OrderValidationIssue::Kind::Commutativity,
                                             i + 1, j + 1, 0});
                    break;
                }

    // (w_i w_j) w_k vs w_i (w_j w_k), expanded through the table
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                bool bad = false;
                for (std::size_t m = 0; m < n && !bad; ++m) {
                    Int lhs = 0, rhs = 0;
                    for (std::size_t l = 0; l < n; ++l) {
                        lhs += order.c(i, j, l) * order.c(l, k, m);
                        rhs += order.c(j, k, l) * order.c(i, l, m);
                    }
                    bad = lhs != rhs;
                }
                if (bad)
                    report.issues.push_back({OrderValidationIssue::Kind::Associativity,
                                             i + 1, j + 1, k + 1});
            }

    const OrderElement one = order.one();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> basis(n);
        basis[i] = 1;
        OrderElement w{basis};
        if (!(order.mul(one, w) == w))
            report.issues.push_back({OrderValidationIssue::Kind::Identity, i + 1, 0, 0});
    }

    report.ok = report.issues.empty();
    return report;
}

Int entry_bound(const OrderPresentation& order, const TwoGenIdeal& ideal) {
    Int m = order.table_bound();
    for (const Int& c : ideal.alpha.coords) {
        Int a = int_abs(c);
        if (a > m) m = a;
    }
    for (const Int& c : ideal.beta.coords) {
        Int a = int_abs(c);
        if (a > m) m = a;
    }
    return m;
}

namespace {

void require_nonzero_ideal(const TwoGenIdeal& ideal) {
    if (ideal.alpha.is_zero() && ideal.beta.is_zero())
        throw ZeroIdealError("both generators are zero: the zero ideal is not accepted");
}

Int generator_norm(const OrderPresentation& order, const OrderElement& g) {
    Int n = order.element_norm(g);
    if (n == 0)
        throw NotADomainError(
            "nonzero element with zero norm: the table does not describe a domain");
    return n;
}

}  // namespace

Int norm_multiple(const OrderPresentation& order, const TwoGenIdeal& ideal) {
    require_nonzero_ideal(ideal);
    if (ideal.beta.is_zero()) return generator_norm(order, ideal.alpha);
    if (ideal.alpha.is_zero()) return generator_norm(order, ideal.beta);
    return generator_norm(order, ideal.alpha) * generator_norm(order, ideal.beta);
}

IdealHnfBasis ideal_hnf_basis(const OrderPresentation& order, const TwoGenIdeal& ideal,
                              const Int& h) {
    require_nonzero_ideal(ideal);
    if (h <= 0) throw Error("ideal_hnf_basis: h must be positive");
    const std::size_t n = order.rank();

    std::vector<IntMatrix> blocks;
    for (const OrderElement* g : {&ideal.alpha, &ideal.beta}) {
        if (g->is_zero()) continue;
        generator_norm(order, *g);  // surfaces NotADomain before reducing
        blocks.push_back(hnf_basis_mod(order.regular_representation(*g).transposed(), h));
    }

    IntMatrix M = blocks.size() == 1 ? blocks[0] : IntMatrix::hcat(blocks[0], blocks[1]);
    IntMatrix H = hnf_basis_mod(M, h);

    Int norm = 1;
    for (std::size_t i = 0; i < n; ++i) norm *= H(i, i);
    return {std::move(H), std::move(norm)};
}

IdealHnfBasis ideal_product(const OrderPresentation& order, const TwoGenIdeal& I,
                            const TwoGenIdeal& J) {
    require_nonzero_ideal(I);
    require_nonzero_ideal(J);
    const std::size_t n = order.rank();

    std::vector<OrderElement> gens;
    for (const OrderElement* a : {&I.alpha, &I.beta}) {
        if (a->is_zero()) continue;
        for (const OrderElement* b : {&J.alpha, &J.beta}) {
            if (b->is_zero()) continue;
            OrderElement p = order.mul(*a, *b);
            if (p.is_zero())
                throw NotADomainError("product of nonzero elements is zero");
            gens.push_back(std::move(p));
        }
    }

    // N(g) is a multiple of det(I*J) for every generator g of the product
    Int h = generator_norm(order, gens[0]);

    IntMatrix M(n, n * gens.size());
    for (std::size_t t = 0; t < gens.size(); ++t) {
        Int hg = t == 0 ? h : generator_norm(order, gens[t]);
        IntMatrix Hg = hnf_basis_mod(order.regular_representation(gens[t]).transposed(), hg);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M(i, t * n + j) = Hg(i, j);
    }

    IntMatrix H = hnf_basis_mod(M, h);
    Int norm = 1;
    for (std::size_t i = 0; i < n; ++i) norm *= H(i, i);
    return {std::move(H), std::move(norm)};
}

}  // namespace dedekind
