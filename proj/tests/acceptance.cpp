// Acceptance harness: one pass/fail line per criterion. Runs everything by
// default; pass criterion numbers to run a subset. Exit code 0 iff all
// selected criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <dedekind/exact_linalg.hpp>
#include <dedekind/finite_ring.hpp>
#include <dedekind/oracle.hpp>
#include <dedekind/order.hpp>
#include <dedekind/quotient.hpp>

#include "support/test_rings.hpp"
#include "verdict.hpp"

using namespace dedekind;
using namespace testsupport;
using dedekind::cli::classify_ideal;
using dedekind::cli::Verdict;
using dedekind::cli::VerdictKind;

namespace {

struct Failure {
    std::string message;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure{msg};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/* --- 1. splitting law in Z[i] ------------------------------------------ */

void criterion_splitting() {
    const auto t0 = std::chrono::steady_clock::now();
    OrderPresentation O = gaussian();
    PrimalityOptions prim;

    for (long p = 3; p < 100; p += 2) {
        if (!is_prime_integer(Int(p))) continue;
        TwoGenIdeal I{O.element({Int(p), Int(0)}), O.element({Int(p), Int(0)})};
        Verdict v = classify_ideal(O, I, std::nullopt, prim);
        const bool expect_prime = (p % 4 == 3);
        require(v.prime() == expect_prime,
                "p = " + std::to_string(p) + ": expected prime=" +
                    std::to_string(expect_prime) + ", got " + cli::to_string(v.kind));
        if (p <= 23) {  // oracle confirmation where the quotient is small
            EnumeratedRing E = enumerate_quotient(O, I);
            require(oracle_is_field(E) == v.prime(), "oracle disagrees at p = " + std::to_string(p));
            require(oracle_is_local(E) == v.prime_power(),
                    "oracle (local) disagrees at p = " + std::to_string(p));
        }
    }

    TwoGenIdeal two{O.element({Int(2), Int(0)}), O.element({Int(2), Int(0)})};
    Verdict v2 = classify_ideal(O, two, std::nullopt, prim);
    require(v2.kind == VerdictKind::PrimePowerNotPrime,
            "(2,2) should be a prime power but not prime, got " + cli::to_string(v2.kind));
    EnumeratedRing E2 = enumerate_quotient(O, two);
    require(!oracle_is_field(E2) && oracle_is_local(E2), "(2,2) oracle mismatch");

    const double dt = seconds_since(t0);
    require(dt < 5.0, "runtime " + std::to_string(dt) + "s exceeds 5s");
}

/* --- 2. oracle equivalence over the six fixture rings ------------------ */

void criterion_oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    PrimalityOptions prim;
    Rng rng(424242);
    int total = 0;

    int nontrivial = 0;
    for (const auto& [name, O] : fixture_rings()) {
        int kept = 0;
        int attempts = 0;
        while (kept < 50 && attempts < 100000) {
            ++attempts;
            TwoGenIdeal I = random_ideal_mixed(rng, O, 15, 3);
            const Int h = norm_multiple(O, I);
            const Int norm = ideal_hnf_basis(O, I, h).norm;
            if (norm > 500) continue;
            ++kept;
            ++total;
            if (norm > 1) ++nontrivial;

            Verdict v = classify_ideal(O, I, std::nullopt, prim);
            EnumeratedRing E = enumerate_quotient(O, I, 512);
            require(oracle_is_field(E) == v.prime(),
                    name + ": is_prime disagrees with the oracle (norm " + to_decimal(norm) + ")");
            require(oracle_is_local(E) == v.prime_power(),
                    name + ": is_prime_power disagrees with the oracle (norm " +
                        to_decimal(norm) + ")");
        }
        require(kept == 50, name + ": could not sample 50 ideals with norm <= 500");
    }
    require(total == 300, "expected 300 sampled ideals");
    require(nontrivial >= 100, "sampling produced too few nontrivial quotients");

    const double dt = seconds_since(t0);
    require(dt < 60.0, "runtime " + std::to_string(dt) + "s exceeds 60s");
}

/* --- 3. normal-form contracts on 1000 random matrices ------------------ */

void criterion_normal_forms() {
    Rng rng(55555);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rand_int(rng, 0, 5).get_ui());
        IntMatrix B = random_nonsingular(rng, n, 1000);

        // HNF contract, square and widened rectangular inputs
        const IntMatrix A = (t % 3 == 0)
                                ? IntMatrix::hcat(B, B * random_matrix(rng, n, 2, 2))
                                : B;
        HnfResult hr = hnf_with_transform(A);
        IntMatrix W(n, A.cols());
        const std::size_t off = A.cols() - n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) W(i, off + j) = hr.H(i, j);
        require(A * hr.U == W, "A*U != (0|H)");
        for (std::size_t i = 0; i < n; ++i) {
            require(hr.H(i, i) > 0, "H diagonal must be positive");
            for (std::size_t j = 0; j < i; ++j)
                require(hr.H(i, j) == 0, "H must be upper triangular");
            for (std::size_t j = i + 1; j < n; ++j)
                require(hr.H(i, j) >= 0 && hr.H(i, j) < hr.H(i, i),
                        "H off-diagonal entries must be reduced");
        }

        // SNF contract
        const Int det = int_abs(det_modular(B));
        SnfResult sr = snf_with_transforms(B, det);
        require(sr.V * B * sr.U == sr.S, "V*B*U != S");
        Int prod = 1;
        const auto diag = sr.diagonal();
        for (std::size_t i = 0; i < n; ++i) {
            require(diag[i] > 0, "SNF diagonal must be positive");
            prod *= diag[i];
            if (i + 1 < n)
                require(mod_floor(diag[i], diag[i + 1]) == 0, "divisibility chain broken");
        }
        require(prod == det, "product of elementary divisors != |det|");
    }
}

/* --- 4. norm multiplicativity ------------------------------------------ */

void criterion_norm_multiplicativity() {
    Rng rng(66666);
    for (const auto& [name, O] : fixture_rings()) {
        for (int t = 0; t < 200; ++t) {
            TwoGenIdeal I = random_ideal(rng, O, 3);
            TwoGenIdeal J = random_ideal(rng, O, 3);
            const Int ni = ideal_hnf_basis(O, I, norm_multiple(O, I)).norm;
            const Int nj = ideal_hnf_basis(O, J, norm_multiple(O, J)).norm;
            const Int nij = ideal_product(O, I, J).norm;
            require(nij == ni * nj,
                    name + ": N(IJ) = " + to_decimal(nij) + " != " + to_decimal(ni) + " * " +
                        to_decimal(nj));
        }
    }
}

/* --- 5. h-bound sanity -------------------------------------------------- */

void criterion_h_bound() {
    Rng rng(77777);
    int done = 0;
    while (done < 500) {
        for (const auto& [name, O] : fixture_rings()) {
            if (done >= 500) break;
            ++done;
            TwoGenIdeal I = random_ideal(rng, O, 50);
            const Int h = norm_multiple(O, I);
            const Int T = entry_bound(O, I);
            const unsigned long n = static_cast<unsigned long>(O.rank());
            // h <= n^(7n/2) * T^(4n), squared to stay in integers
            const Int lhs = h * h;
            const Int rhs = pow_ui(Int(static_cast<unsigned long>(n)), 7 * n) *
                            pow_ui(T, 8 * n);
            require(lhs <= rhs, name + ": h exceeds the bound");
            const Int norm = ideal_hnf_basis(O, I, h).norm;
            require(mod_floor(h, norm) == 0, name + ": N(I) does not divide h");
        }
    }
}

/* --- 6. OUTPUT-BASIS structural checks ---------------------------------- */

void criterion_output_basis() {
    Rng rng(88888);
    for (const auto& [name, O] : fixture_rings()) {
        for (int t = 0; t < 40; ++t) {
            TwoGenIdeal I = random_ideal(rng, O, 4);
            const Int h = norm_multiple(O, I);
            const Int norm = ideal_hnf_basis(O, I, h).norm;
            auto qb = output_basis(O, I, h);
            if (norm == 1) {
                require(!qb.has_value(), name + ": unit ideal must be reported as such");
                continue;
            }
            require(qb.has_value(), name + ": missing presentation for norm > 1");

            // divisibility chain, reduced structure constants, commutativity,
            // associativity on generators
            try {
                validate_presentation(qb->ring);
            } catch (const std::exception& e) {
                throw Failure{name + ": presentation invalid: " + e.what()};
            }
            Int prod = 1;
            for (const Int& d : qb->certificate.snf_diagonal) prod *= d;
            require(prod == norm, name + ": SNF diagonal product != N(I)");
        }
    }
}

/* --- 7. field/local tests vs exhaustive oracles ------------------------- */

void criterion_field_local_oracles() {
    Rng rng(99999);
    // quotient presentations from the fixtures, |R| <= 512
    for (const auto& [name, O] : fixture_rings()) {
        int kept = 0, attempts = 0;
        while (kept < 30 && attempts < 100000) {
            ++attempts;
            TwoGenIdeal I = random_ideal_mixed(rng, O, 15, 3);
            const Int h = norm_multiple(O, I);
            auto qb = output_basis(O, I, h);
            if (!qb || qb->certificate.norm > 512) continue;
            ++kept;
            EnumeratedRing E = enumerate_quotient(O, I, 512);
            require(is_field(qb->ring) == oracle_is_field(E),
                    name + ": is_field disagrees with enumeration");
            require(is_local(qb->ring) == oracle_is_local(E),
                    name + ": is_local disagrees with enumeration");
            require(!is_field(qb->ring) || is_local(qb->ring),
                    name + ": field without local");
        }
        require(kept == 30, name + ": could not sample 30 quotients with |R| <= 512");
    }

    // hand-built presentations, including the non-local non-field product ring
    struct Case {
        const char* name;
        FiniteRingPresentation pres;
        bool field;
        bool local;
    };
    const Case cases[] = {
        {"F4", pres_f4(), true, true},
        {"F9", pres_f9(), true, true},
        {"Z/9", pres_z9(), false, true},
        {"F2xF2", pres_f2xf2(), false, false},
    };
    for (const Case& c : cases) {
        EnumeratedRing E = enumerate_presentation(c.pres);
        require(is_field(c.pres) == c.field, std::string(c.name) + ": is_field wrong");
        require(is_local(c.pres) == c.local, std::string(c.name) + ": is_local wrong");
        require(oracle_is_field(E) == c.field, std::string(c.name) + ": oracle field wrong");
        require(oracle_is_local(E) == c.local, std::string(c.name) + ": oracle local wrong");
    }
}

/* --- 8. performance smoke ------------------------------------------------ */

void criterion_performance() {
    OrderPresentation O = zeta8();
    PrimalityOptions prim;
    const auto t0 = std::chrono::steady_clock::now();

    // generators with coordinates up to 10^6 through the full pipeline
    TwoGenIdeal big{O.element({Int(999983), Int(314159), Int(-271828), Int(161803)}),
                    O.element({Int(1000003), Int(-999999), Int(123456), Int(654321)})};
    Verdict v1 = classify_ideal(O, big, std::nullopt, prim);
    (void)v1;

    // the ideal (p) for a 7-digit prime: a non-trivial quotient of size p^4
    TwoGenIdeal scaled{O.element({Int(1000003), Int(0), Int(0), Int(0)}),
                       O.element({Int(0), Int(1000003), Int(0), Int(0)})};
    Verdict v2 = classify_ideal(O, scaled, std::nullopt, prim);
    require(v2.norm == pow_ui(Int(1000003), 4), "(p) in Z[zeta_8] must have norm p^4");
    require(!v2.prime(), "p = 1000003 = 3 mod 8 splits, (p) is not prime");

    // a ramified prime of norm 2 stays fast as well
    TwoGenIdeal ram{O.element({Int(1), Int(-1), Int(0), Int(0)}),
                    O.element({Int(2), Int(0), Int(0), Int(0)})};
    Verdict v3 = classify_ideal(O, ram, std::nullopt, prim);
    require(v3.prime(), "(1 - zeta_8, 2) must be prime");

    const double dt = seconds_since(t0);
    require(dt < 2.0, "is-prime pipeline took " + std::to_string(dt) + "s (budget 2s)");

    const auto t1 = std::chrono::steady_clock::now();
    Rng rng(13131);
    IntMatrix M(50, 50);
    std::uniform_int_distribution<long> dist(-2147483648L, 2147483647L);
    for (std::size_t i = 0; i < 50; ++i)
        for (std::size_t j = 0; j < 50; ++j) M(i, j) = Int(dist(rng));
    const Int det = det_modular(M);
    require(det == bareiss_det(M), "50x50 determinant mismatch");
    const double dt2 = seconds_since(t1);
    require(dt2 < 5.0, "50x50 det_modular took " + std::to_string(dt2) + "s (budget 5s)");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "splitting law in Z[i] (odd p < 100, and (2))", criterion_splitting},
        {2, "verdicts agree with enumeration oracles on 300 random ideals",
         criterion_oracle_equivalence},
        {3, "HNF/SNF contracts on 1000 random matrices", criterion_normal_forms},
        {4, "N(IJ) = N(I) N(J) on 200 ideal pairs per fixture ring",
         criterion_norm_multiplicativity},
        {5, "h <= n^(7n/2) T^(4n) and N(I) | h on 500 random inputs", criterion_h_bound},
        {6, "OUTPUT-BASIS structural checks", criterion_output_basis},
        {7, "field/local tests vs exhaustive oracles (|R| <= 512)",
         criterion_field_local_oracles},
        {8, "performance smoke (rank-4 pipeline < 2s, 50x50 det < 5s)",
         criterion_performance},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name << " ("
             << std::fixed << seconds_since(t0) << "s)";
        if (!ok) line << "\n       " << detail;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    return 0;
}
