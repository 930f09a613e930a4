#include <doctest.h>

#include <dedekind/errors.hpp>
#include <dedekind/order.hpp>

#include "support/test_rings.hpp"

using namespace dedekind;
using namespace testsupport;

namespace {

OrderElement el(const OrderPresentation& O, std::vector<long> v) {
    return O.element(std::vector<Int>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("validate_order accepts the fixtures") {
    for (const auto& [name, O] : fixture_rings()) {
        CAPTURE(name);
        CHECK(validate_order(O).ok);
    }
}

TEST_CASE("validate_order reports a flipped table entry") {
    // break c(1,2,1) of Z[i]
    std::vector<Int> t(8, Int(0));
    t[(0 * 2 + 0) * 2 + 0] = 1;
    t[(0 * 2 + 1) * 2 + 1] = -1;  // 1 * i = -i on one side only
    t[(1 * 2 + 0) * 2 + 1] = 1;
    t[(1 * 2 + 1) * 2 + 0] = -1;
    OrderPresentation bad(2, t, {Int(1), Int(0)});
    auto report = validate_order(bad);
    CHECK_FALSE(report.ok);
    bool saw_comm = false;
    for (const auto& issue : report.issues)
        if (issue.kind == OrderValidationIssue::Kind::Commutativity && issue.i == 1 &&
            issue.j == 2)
            saw_comm = true;
    CHECK(saw_comm);
}

TEST_CASE("validation passes for rings that are not domains") {
    // basis {1, u} with u^2 = +1 is Z[x]/(x^2-1): a valid commutative ring
    OrderPresentation O = monogenic_order({1, 0});
    CHECK(validate_order(O).ok);
    // but 1+u is a zero divisor, so norms vanish
    CHECK(O.element_norm(el(O, {1, 1})) == 0);
    TwoGenIdeal I{el(O, {1, 1}), el(O, {1, 1})};
    CHECK_THROWS_AS(norm_multiple(O, I), NotADomainError);
}

TEST_CASE("element arithmetic in Z[i] and Z[sqrt(-5)]") {
    OrderPresentation O = gaussian();
    CHECK(O.mul(el(O, {1, 1}), el(O, {1, 1})) == el(O, {0, 2}));  // (1+i)^2 = 2i
    OrderElement x = el(O, {3, -2});
    CHECK(O.mul(x, O.one()) == x);
    CHECK(O.add(x, O.neg(x)).is_zero());

    OrderPresentation S = sqrtminus5();
    CHECK(S.mul(el(S, {0, 1}), el(S, {0, 1})) == el(S, {-5, 0}));

    CHECK_THROWS_AS(O.mul(x, el(S, {0, 1, 0})), DimensionError);
}

TEST_CASE("regular representation") {
    OrderPresentation O = gaussian();
    CHECK(O.regular_representation(el(O, {1, 1})) ==
          IntMatrix::from_rows({{Int(1), Int(1)}, {Int(-1), Int(1)}}));
    CHECK(O.regular_representation(O.one()) == IntMatrix::identity(2));
    CHECK(O.regular_representation(el(O, {2, 0})) ==
          IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}));
}

TEST_CASE("element norms") {
    OrderPresentation O = gaussian();
    CHECK(O.element_norm(el(O, {1, 1})) == 2);
    CHECK(O.element_norm(el(O, {5, 0})) == 25);
    OrderPresentation S = sqrtminus5();
    CHECK(S.element_norm(el(S, {1, 1})) == 6);
}

TEST_CASE("element norm is multiplicative") {
    Rng rng(101);
    for (const auto& [name, O] : fixture_rings()) {
        CAPTURE(name);
        for (int t = 0; t < 25; ++t) {
            OrderElement x = random_element(rng, O, 6);
            OrderElement y = random_element(rng, O, 6);
            CHECK(O.element_norm(O.mul(x, y)) == O.element_norm(x) * O.element_norm(y));
        }
    }
}

TEST_CASE("norm_multiple on the worked examples") {
    OrderPresentation O = gaussian();
    CHECK(norm_multiple(O, {el(O, {1, 1}), el(O, {2, 0})}) == 8);
    CHECK(norm_multiple(O, {O.one(), O.one()}) == 1);
    OrderPresentation S = sqrtminus5();
    CHECK(norm_multiple(S, {el(S, {2, 0}), el(S, {1, 1})}) == 24);
    // one zero generator falls back to the other norm
    CHECK(norm_multiple(O, {el(O, {1, 1}), O.zero()}) == 2);
    CHECK(norm_multiple(O, {O.zero(), el(O, {2, 0})}) == 4);
    CHECK_THROWS_AS(norm_multiple(O, {O.zero(), O.zero()}), ZeroIdealError);
}

TEST_CASE("ideal_hnf_basis on the worked examples") {
    OrderPresentation O = gaussian();
    TwoGenIdeal I{el(O, {1, 1}), el(O, {2, 0})};
    IdealHnfBasis b = ideal_hnf_basis(O, I, norm_multiple(O, I));
    CHECK(b.H == IntMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(1)}}));
    CHECK(b.norm == 2);

    TwoGenIdeal U{O.one(), el(O, {3, 7})};
    CHECK(ideal_hnf_basis(O, U, norm_multiple(O, U)).norm == 1);

    OrderPresentation S = sqrtminus5();
    TwoGenIdeal P{el(S, {2, 0}), el(S, {1, 1})};
    CHECK(ideal_hnf_basis(S, P, norm_multiple(S, P)).norm == 2);
}

TEST_CASE("N(I) divides the norm multiple h") {
    Rng rng(102);
    for (const auto& [name, O] : fixture_rings()) {
        CAPTURE(name);
        for (int t = 0; t < 25; ++t) {
            TwoGenIdeal I = random_ideal(rng, O, 5);
            const Int h = norm_multiple(O, I);
            CHECK(mod_floor(h, ideal_hnf_basis(O, I, h).norm) == 0);
        }
    }
}

TEST_CASE("ideal_product on the worked examples") {
    OrderPresentation O = gaussian();
    TwoGenIdeal I{el(O, {1, 1}), el(O, {2, 0})};
    CHECK(ideal_product(O, I, I).norm == 4);

    // multiplying by the unit ideal keeps the HNF basis
    TwoGenIdeal U{O.one(), O.zero()};
    IdealHnfBasis b = ideal_hnf_basis(O, I, norm_multiple(O, I));
    IdealHnfBasis p = ideal_product(O, I, U);
    CHECK(p.H == b.H);

    // (2, 1+sqrt(-5)) * (3, 1+sqrt(-5)) = (1 + sqrt(-5)), norm 6
    // (conjugation maps (3, 1+sqrt(-5)) to the other prime over 3, so the
    // product with the shared generator is the principal ideal of 1+sqrt(-5))
    OrderPresentation S = sqrtminus5();
    TwoGenIdeal P2{el(S, {2, 0}), el(S, {1, 1})};
    TwoGenIdeal P3{el(S, {3, 0}), el(S, {1, 1})};
    IdealHnfBasis prod = ideal_product(S, P2, P3);
    CHECK(prod.norm == 6);
    TwoGenIdeal principal{el(S, {1, 1}), S.zero()};
    CHECK(prod.H == ideal_hnf_basis(S, principal, norm_multiple(S, principal)).H);
}

TEST_CASE("norm is multiplicative on random ideal pairs") {
    Rng rng(103);
    for (const auto& [name, O] : fixture_rings()) {
        CAPTURE(name);
        for (int t = 0; t < 30; ++t) {
            TwoGenIdeal I = random_ideal(rng, O, 4);
            TwoGenIdeal J = random_ideal(rng, O, 4);
            const Int ni = ideal_hnf_basis(O, I, norm_multiple(O, I)).norm;
            const Int nj = ideal_hnf_basis(O, J, norm_multiple(O, J)).norm;
            CHECK(ideal_product(O, I, J).norm == ni * nj);
        }
    }
}

TEST_CASE("entry_bound tracks table and coordinates") {
    OrderPresentation S = sqrtminus5();
    TwoGenIdeal I{S.element({Int(2), Int(0)}), S.element({Int(1), Int(1)})};
    CHECK(entry_bound(S, I) == 5);
    TwoGenIdeal J{S.element({Int(100), Int(0)}), S.element({Int(1), Int(1)})};
    CHECK(entry_bound(S, J) == 100);
}
