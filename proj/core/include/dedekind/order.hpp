#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dedekind/exact_linalg.hpp"
#include "dedekind/int_matrix.hpp"

namespace dedekind {

/* Element of an order, as integer coordinates over the fixed Z-basis
 * w_1, ..., w_n. */
struct OrderElement {
    std::vector<Int> coords;

    bool is_zero() const {
        for (const Int& c : coords)
            if (c != 0) return false;
        return true;
    }
    friend bool operator==(const OrderElement&, const OrderElement&) = default;
};

/* A ring of finite rank given by its multiplication table:
 * w_i * w_j = sum_k c(i,j,k) w_k, plus the coordinates of 1.
 * Whether the table actually describes a Dedekind domain is not decidable
 * from the table; validate() checks the ring axioms that are. */
class OrderPresentation {
public:
    OrderPresentation(std::size_t rank, std::vector<Int> table, std::vector<Int> one);

    std::size_t rank() const { return rank_; }
    const Int& c(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * rank_ + j) * rank_ + k];
    }
    const std::vector<Int>& one_coords() const { return one_; }
    OrderElement one() const { return {one_}; }
    OrderElement zero() const { return {std::vector<Int>(rank_)}; }
    OrderElement element(std::vector<Int> coords) const;

    OrderElement add(const OrderElement& x, const OrderElement& y) const;
    OrderElement neg(const OrderElement& x) const;
    OrderElement mul(const OrderElement& x, const OrderElement& y) const;

    /* Matrix A of multiplication by x: row i holds the coordinates of
     * x * w_i, i.e. a(i,j) = sum_k x_k c(k,i,j). */
    IntMatrix regular_representation(const OrderElement& x) const;

    /* |det| of the regular representation; 0 signals a zero divisor. */
    Int element_norm(const OrderElement& x) const;

    /* Largest |c(i,j,k)| over the table. */
    Int table_bound() const;

private:
    void check_element(const OrderElement& x, const char* who) const;

    std::size_t rank_;
    std::vector<Int> table_;  // rank^3, index (i*rank + j)*rank + k
    std::vector<Int> one_;
};

/* Nonzero ideal (alpha, beta); one generator may be zero, not both. */
struct TwoGenIdeal {
    OrderElement alpha;
    OrderElement beta;
};

struct OrderValidationIssue {
    enum class Kind { Commutativity, Associativity, Identity };
    Kind kind;
    // 1-based witnessing indices; k unused for identity issues
    std::size_t i = 0, j = 0, k = 0;

    std::string describe() const;
};

struct OrderValidationReport {
    bool ok = true;
    std::vector<OrderValidationIssue> issues;
};

/* Checks commutativity c(i,j,.) = c(j,i,.), associativity of the table on
 * basis triples, and that the declared identity fixes every basis element.
 * Passing means "commutative ring with identity", nothing stronger. */
OrderValidationReport validate_order(const OrderPresentation& order);

/* max(|table entries|, |ideal coordinates|): the T of the entry bounds. */
Int entry_bound(const OrderPresentation& order, const TwoGenIdeal& ideal);

/* h = N(alpha) * N(beta), a multiple of N(alpha), N(beta) and N(I).
 * If one generator is zero, the norm of the other. Throws NotADomainError
 * when a nonzero generator has zero norm, ZeroIdealError when both are
 * zero. */
Int norm_multiple(const OrderPresentation& order, const TwoGenIdeal& ideal);

struct IdealHnfBasis {
    IntMatrix H;  // n x n column-style HNF; columns generate the ideal
    Int norm;     // N(I) = det H
};

/* HNF basis of the ideal: HNFs of the transposed regular representations
 * of the generators, stacked and re-reduced. h must be a positive multiple
 * of the nonzero generator norms. */
IdealHnfBasis ideal_hnf_basis(const OrderPresentation& order, const TwoGenIdeal& ideal,
                              const Int& h);

/* HNF basis of the product ideal I*J, via the pairwise generator products. */
IdealHnfBasis ideal_product(const OrderPresentation& order, const TwoGenIdeal& I,
                            const TwoGenIdeal& J);

}  // namespace dedekind
