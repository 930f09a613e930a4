#include <doctest.h>

#include <dedekind/errors.hpp>
#include <dedekind/finite_ring.hpp>
#include <dedekind/oracle.hpp>

#include "support/test_rings.hpp"

using namespace dedekind;
using namespace testsupport;

namespace {

RingElement re(std::vector<long> v) {
    return RingElement{std::vector<Int>(v.begin(), v.end())};
}

/* Brute-force irreducibility over F_p by enumerating monic divisors of
 * degree 1 .. deg/2 (tiny p and degree only). */
bool brute_irreducible_fp(const std::vector<Int>& f, long p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t dd = 1; dd <= k / 2; ++dd) {
        std::vector<long> c(dd, 0);  // monic divisor candidate coefficients
        for (;;) {
            // divide f by x^dd + c_{dd-1} x^{dd-1} + ... + c_0 over F_p
            std::vector<Int> rem = f;
            for (std::size_t i = rem.size(); i-- > dd;) {
                Int lead = mod_floor(rem[i], Int(p));
                if (lead == 0) continue;
                rem[i] = 0;
                for (std::size_t t = 0; t < dd; ++t)
                    rem[i - dd + t] = mod_floor(rem[i - dd + t] - lead * c[t], Int(p));
            }
            bool zero = true;
            for (std::size_t t = 0; t < dd; ++t)
                if (mod_floor(rem[t], Int(p)) != 0) zero = false;
            if (zero) return false;
            // next candidate
            std::size_t pos = 0;
            while (pos < dd && ++c[pos] == p) c[pos++] = 0;
            if (pos == dd) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("ring arithmetic follows the structure constants") {
    FiniteRingPresentation R = pres_zi_mod5();
    CHECK(ring_mul(R, re({0, 1}), re({0, 1})) == re({4, 0}));
    CHECK(ring_add(R, re({3, 4}), re({4, 3})) == re({2, 2}));

    FiniteRingPresentation f2 = pres_f2();
    CHECK(ring_mul(f2, re({1}), re({1})) == re({1}));

    BasisRing B(pres_zi_mod5());
    CHECK(B.one() == re({1, 0}));
    RingElement x = re({2, 3});
    CHECK(B.mul(x, B.one()) == x);
    CHECK(B.pow(x, Int(0)) == B.one());
    CHECK(B.pow(x, Int(3)) == B.mul(x, B.mul(x, x)));

    CHECK_THROWS_AS(ring_mul(R, re({1}), re({0, 1})), DimensionError);
}

TEST_CASE("find_identity solves the mixed-moduli system") {
    CHECK(*find_identity(pres_zi_mod2()) == re({1, 0}));
    CHECK(*find_identity(pres_f2xf2()) == re({1, 1}));
    CHECK(*find_identity(pres_z9()) == re({1}));
    // swapped generators: identity is the second one
    CHECK(*find_identity(pres_zi_mod5_swapped()) == re({0, 1}));

    // v1^2 = 0: no identity exists
    FiniteRingPresentation bad = make_presentation({2}, {{{0}}});
    CHECK_FALSE(find_identity(bad).has_value());
    CHECK_THROWS_AS(BasisRing{bad}, PresentationError);
}

TEST_CASE("validate_presentation catches broken invariants") {
    FiniteRingPresentation chain = make_presentation({2, 4}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
    CHECK_THROWS_AS(validate_presentation(chain), PresentationError);  // 4 does not divide 2

    FiniteRingPresentation unreduced = pres_f4();
    unreduced.sc(1, 1, 0) = 5;
    CHECK_THROWS_AS(validate_presentation(unreduced), PresentationError);

    FiniteRingPresentation noncomm = pres_f4();
    noncomm.sc(0, 1, 0) = 1;  // differs from sc(1,0,0)
    CHECK_THROWS_AS(validate_presentation(noncomm), PresentationError);

    validate_presentation(pres_f4());
    validate_presentation(pres_f2xf2());
}

TEST_CASE("check_prime_equal_d") {
    CHECK(*check_prime_equal_d(pres_zi_mod5()) == 5);
    CHECK_FALSE(check_prime_equal_d(make_presentation({4, 4}, {{{1, 0}, {0, 1}}, {{0, 1}, {3, 0}}}))
                    .has_value());
    CHECK_FALSE(check_prime_equal_d(make_presentation({6, 3}, {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}}))
                    .has_value());
}

TEST_CASE("minimal polynomial of the first generator") {
    // Z[i]/2 with v1 the image of 1: minimal polynomial x + 1 (= x - 1)
    BasisRing zi2(pres_zi_mod2());
    CHECK(minimal_polynomial_first(zi2, Int(2)) == std::vector<Int>{1, 1});

    // Z[i]/5 reordered so v1 is the image of i: x^2 + 1
    BasisRing zi5s(pres_zi_mod5_swapped());
    CHECK(minimal_polynomial_first(zi5s, Int(5)) == std::vector<Int>{1, 0, 1});

    BasisRing f2(pres_f2());
    CHECK(minimal_polynomial_first(f2, Int(2)) == std::vector<Int>{1, 1});
}

TEST_CASE("minimal polynomial over a tower stage") {
    // Z[i]/5: v2 = i over F_5(v1) = F_5 gives x^2 + 1
    BasisRing zi5(pres_zi_mod5());
    TowerField base = TowerField::prime_field(zi5, Int(5));
    FieldPoly f1 = minimal_polynomial_tower(base, 0);
    CHECK(f1.size() == 2);  // v1 is the identity: degree 1
    TowerField F1 = base.extend(0, f1);
    FieldPoly f2 = minimal_polynomial_tower(F1, 1);
    REQUIRE(f2.size() == 3);
    CHECK(f2[0] == F1.one());
    CHECK(F1.is_zero(f2[1]));
    CHECK(f2[2] == F1.one());

    // F4 tower over F2: v2 has x^2 + x + 1
    BasisRing f4(pres_f4());
    TowerField b2 = TowerField::prime_field(f4, Int(2));
    TowerField F2v1 = b2.extend(0, minimal_polynomial_tower(b2, 0));
    FieldPoly g = minimal_polynomial_tower(F2v1, 1);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == F2v1.one());
    CHECK(g[1] == F2v1.one());
    CHECK(g[2] == F2v1.one());

    // a generator already inside the stage has a degree-1 polynomial
    FieldPoly lin = minimal_polynomial_tower(F2v1, 0);
    CHECK(lin.size() == 2);
}

TEST_CASE("irreducibility by the Rabin criterion") {
    CHECK_FALSE(irreducible_mod_p({Int(1), Int(0), Int(1)}, Int(5)));  // (x-2)(x-3)
    CHECK(irreducible_mod_p({Int(1), Int(0), Int(1)}, Int(3)));
    CHECK(irreducible_mod_p({Int(4), Int(1)}, Int(7)));  // linear
    CHECK(irreducible_mod_p({Int(1), Int(1), Int(0), Int(1)}, Int(2)));   // x^3+x+1
    CHECK_FALSE(irreducible_mod_p({Int(1), Int(1), Int(1), Int(1)}, Int(2)));
}

TEST_CASE("Rabin agrees with brute-force factoring over small fields") {
    Rng rng(301);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t k = 2 + static_cast<std::size_t>(rand_int(rng, 0, 2).get_ui());
            std::vector<Int> f(k + 1);
            for (std::size_t i = 0; i < k; ++i) f[i] = rand_int(rng, 0, p - 1);
            f[k] = 1;
            CAPTURE(p);
            CHECK(irreducible_mod_p(f, Int(p)) == brute_irreducible_fp(f, p));
        }
    }
}

TEST_CASE("irreducibility over an extension stage") {
    // build F4 inside the F4 presentation, then test quadratics over it
    BasisRing f4(pres_f4());
    TowerField b = TowerField::prime_field(f4, Int(2));
    TowerField F4 = b.extend(1, minimal_polynomial_tower(b, 1));  // adjoin g directly
    REQUIRE(F4.dimension() == 2);

    // x^2 + x + g is irreducible over F4 iff Tr(g / 1) != 0; brute check instead:
    // enumerate roots in F4 for x^2 + x + c
    auto has_root = [&](const FieldElement& c) {
        for (long a0 = 0; a0 < 2; ++a0)
            for (long a1 = 0; a1 < 2; ++a1) {
                FieldElement x{Int(a0), Int(a1)};
                FieldElement v = F4.add(F4.mul(x, x), F4.add(x, c));
                if (F4.is_zero(v)) return true;
            }
        return false;
    };
    for (long c0 = 0; c0 < 2; ++c0)
        for (long c1 = 0; c1 < 2; ++c1) {
            FieldElement c{Int(c0), Int(c1)};
            FieldPoly f{c, F4.one(), F4.one()};  // x^2 + x + c
            CHECK(irreducible_over_field(f, F4) == !has_root(c));
        }
}

TEST_CASE("is_field on the worked examples") {
    CHECK(is_field(pres_f7()));
    CHECK(is_field(pres_f2()));
    CHECK(is_field(pres_f4()));
    CHECK(is_field(pres_f9()));
    CHECK_FALSE(is_field(pres_zi_mod2()));
    CHECK_FALSE(is_field(pres_zi_mod5()));
    CHECK_FALSE(is_field(pres_f2xf2()));
    CHECK_FALSE(is_field(pres_z9()));

    // Z[i]/3: d = (3,3), v2^2 = 2 v1 -> the field F_9
    FiniteRingPresentation zi3 = make_presentation({3, 3}, {{{1, 0}, {0, 1}}, {{0, 1}, {2, 0}}});
    CHECK(is_field(zi3));
}

TEST_CASE("tower degrees multiply to at most m") {
    FieldTestResult r = is_field_with_tower(pres_f9());
    CHECK(r.field);
    std::size_t prod = 1;
    for (std::size_t d : r.tower_degrees) prod *= d;
    CHECK(prod == pres_f9().m());
}

TEST_CASE("nilradical via the Frobenius kernel") {
    auto nil1 = nilradical_mod_p(pres_zi_mod2());
    REQUIRE(nil1.size() == 1);
    CHECK(nil1[0] == re({1, 1}));  // 1 + i generates the nilradical mod 2

    CHECK(nilradical_mod_p(pres_zi_mod5()).empty());
    CHECK(nilradical_mod_p(pres_f2()).empty());

    // Z/9 reduced mod 3 is F_3: nilradical zero there, but Z/9 itself is local
    CHECK(nilradical_mod_p(reduce_mod_p(pres_z9(), Int(3))).empty());
}

TEST_CASE("Frobenius is F_p-linear on random elements") {
    Rng rng(302);
    for (const FiniteRingPresentation& P : {pres_zi_mod2(), pres_zi_mod5(), pres_f4()}) {
        const Int p = P.d[0];
        BasisRing R = BasisRing::unchecked(P);
        for (int t = 0; t < 20; ++t) {
            std::vector<Int> xv(P.m()), yv(P.m());
            for (std::size_t i = 0; i < P.m(); ++i) {
                xv[i] = mod_floor(rand_int(rng, 0, 100), P.d[i]);
                yv[i] = mod_floor(rand_int(rng, 0, 100), P.d[i]);
            }
            RingElement x{xv}, y{yv};
            const Int lambda = mod_floor(rand_int(rng, 0, 100), p);
            RingElement fx = R.pow(x, p), fy = R.pow(y, p);
            CHECK(R.pow(R.add(x, y), p) == R.add(fx, fy));
            RingElement lx{std::vector<Int>(P.m())};
            for (std::size_t i = 0; i < P.m(); ++i) lx.x[i] = mod_floor(lambda * x.x[i], P.d[i]);
            RingElement flx = R.pow(lx, p);
            RingElement lfx{std::vector<Int>(P.m())};
            for (std::size_t i = 0; i < P.m(); ++i) lfx.x[i] = mod_floor(lambda * fx.x[i], P.d[i]);
            CHECK(flx == lfx);
        }
    }
}

TEST_CASE("is_local on the worked examples") {
    CHECK(is_local(pres_zi_mod2()));
    CHECK_FALSE(is_local(pres_zi_mod5()));
    CHECK(is_local(pres_z9()));
    CHECK(is_local(pres_f4()));
    CHECK_FALSE(is_local(pres_f2xf2()));
    CHECK_FALSE(is_local(make_presentation({6}, {{{1}}})));  // Z/6 = F_2 x F_3
}

TEST_CASE("is_field implies is_local") {
    for (const FiniteRingPresentation& P :
         {pres_f2(), pres_f4(), pres_f7(), pres_f9(), pres_z9(), pres_zi_mod2(),
          pres_zi_mod5(), pres_f2xf2()}) {
        if (is_field(P)) CHECK(is_local(P));
    }
}

TEST_CASE("field and local tests agree with exhaustive enumeration") {
    for (const FiniteRingPresentation& P :
         {pres_f2(), pres_f4(), pres_f7(), pres_f9(), pres_z9(), pres_zi_mod2(),
          pres_zi_mod5(), pres_f2xf2(), make_presentation({6}, {{{1}}})}) {
        EnumeratedRing E = enumerate_presentation(P);
        CHECK(is_field(P) == oracle_is_field(E));
        CHECK(is_local(P) == oracle_is_local(E));
    }
}

TEST_CASE("AKS backend gives the same verdicts") {
    PrimalityOptions aks{PrimalityBackend::Aks};
    CHECK(is_field(pres_f9(), aks));
    CHECK_FALSE(is_field(pres_zi_mod5(), aks));
    CHECK(is_local(pres_z9(), aks));
}
