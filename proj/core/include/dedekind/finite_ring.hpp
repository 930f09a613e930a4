#pragma once

#include <optional>
#include <vector>

#include "dedekind/presentation.hpp"
#include "dedekind/primality.hpp"

namespace dedekind {

/* Componentwise sum / structure-constant product; coordinates reduced into
 * [0, d_k). Throws DimensionError when an element does not match the
 * presentation. */
RingElement ring_add(const FiniteRingPresentation& R, const RingElement& x,
                     const RingElement& y);
RingElement ring_mul(const FiniteRingPresentation& R, const RingElement& x,
                     const RingElement& y);

/* Identity of the presentation, found by solving e * v_j = v_j for all j
 * over the mixed moduli (the m congruences per generator are lifted to a
 * single linear system mod d_1). No solution means the presentation does
 * not describe a unital ring. */
std::optional<RingElement> find_identity(const FiniteRingPresentation& R);

/* Presentation plus its solved identity: the operational context for
 * powering and the tower machinery. The explicit constructor validates the
 * presentation; unchecked() skips that (for presentations produced by the
 * library itself) but still solves for the identity. */
class BasisRing {
public:
    explicit BasisRing(FiniteRingPresentation pres);
    static BasisRing unchecked(FiniteRingPresentation pres);

    const FiniteRingPresentation& presentation() const { return pres_; }
    std::size_t m() const { return pres_.m(); }
    const RingElement& one() const { return one_; }
    RingElement zero() const { return {std::vector<Int>(pres_.m())}; }
    RingElement unit(std::size_t i) const;

    RingElement add(const RingElement& x, const RingElement& y) const {
        return ring_add(pres_, x, y);
    }
    RingElement mul(const RingElement& x, const RingElement& y) const {
        return ring_mul(pres_, x, y);
    }
    RingElement pow(const RingElement& x, const Int& e) const;

private:
    BasisRing() = default;

    FiniteRingPresentation pres_;
    RingElement one_;
};

RingElement ring_pow(const BasisRing& R, const RingElement& x, const Int& e);

/* The prime p when d_1 = ... = d_m = p with p prime; otherwise nothing. */
std::optional<Int> check_prime_equal_d(const FiniteRingPresentation& R,
                                       const PrimalityOptions& options = {});

/* Element of a tower stage: F_p coordinates over the stage's monomial
 * basis. Polynomials are coefficient vectors in ascending degree. */
using FieldElement = std::vector<Int>;
using FieldPoly = std::vector<FieldElement>;

/* A subfield F_p(v_{g_1}, ..., v_{g_s}) of a basis-represented ring with
 * all d_i equal to the prime p. Carries the monomial basis
 * { prod v_{g_j}^{t_j} : 0 <= t_j < m_j } as ring elements, coordinate
 * extraction against it, and the multiplication tensor that makes the
 * stage a field of dimension prod m_j over F_p.
 *
 * Holds a pointer to the ring it lives in; the ring must outlive the
 * tower. */
class TowerField {
public:
    struct Stage {
        std::size_t generator;  // 0-based index of the adjoined generator
        FieldPoly min_poly;     // monic, coefficients over the previous stage
        std::size_t degree;
    };

    static TowerField prime_field(const BasisRing& ring, const Int& p);
    TowerField extend(std::size_t generator, const FieldPoly& min_poly) const;

    const BasisRing& ring() const { return *ring_; }
    const Int& characteristic() const { return p_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Stage>& stages() const { return stages_; }
    const std::vector<RingElement>& monomial_basis() const { return basis_; }

    FieldElement zero() const { return FieldElement(dimension()); }
    FieldElement one() const { return one_coords_; }
    FieldElement from_int(const Int& c) const;
    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scale(const Int& c, const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;

    /* Coordinates over the monomial basis; throws PresentationError when
     * the element is outside the stage. */
    FieldElement from_ring_element(const RingElement& w) const;
    RingElement to_ring_element(const FieldElement& a) const;

private:
    TowerField() = default;
    void rebuild();

    const BasisRing* ring_ = nullptr;
    Int p_;
    std::vector<Stage> stages_;
    std::vector<RingElement> basis_;

    // row-reduced basis copies for coordinate extraction
    std::vector<std::vector<Int>> red_rows_;
    std::vector<std::size_t> red_pivots_;
    std::vector<std::vector<Int>> red_combos_;
    std::vector<FieldElement> tensor_;  // basis_a * basis_b, dim^2 entries
    FieldElement one_coords_;
};

/* Minimal polynomial of generator v_{gen} over the stage: monic, least
 * degree, found by expressing the powers of the generator over a maximal
 * stage-independent subset of the generators and row-reducing. */
FieldPoly minimal_polynomial_tower(const TowerField& stage, std::size_t generator);

/* Minimal polynomial of the first generator over F_p (all d_i = p);
 * coefficients as plain residues. */
std::vector<Int> minimal_polynomial_first(const BasisRing& R, const Int& p);

/* Deterministic Rabin irreducibility test: f of degree k over the field
 * F_q of the stage (q = p^dim) is irreducible iff x^(q^k) = x mod f and
 * gcd(x^(q^(k/r)) - x, f) = 1 for every prime r | k. */
bool irreducible_over_field(const FieldPoly& f, const TowerField& F);

/* Same test for a polynomial over the bare prime field F_p. */
bool irreducible_mod_p(const std::vector<Int>& f, const Int& p);

struct FieldTestResult {
    bool field = false;
    /* degrees m_i of the adjoined tower stages, in order; empty when the
     * verdict was decided before any stage was built */
    std::vector<std::size_t> tower_degrees;
};

/* Field test for a basis-represented finite ring: equal prime d's, m = 1
 * shortcut, then the tower of minimal polynomials with irreducibility at
 * each stage; true as soon as the degrees multiply to m. */
FieldTestResult is_field_with_tower(const FiniteRingPresentation& R,
                                    const PrimalityOptions& options = {});
bool is_field(const FiniteRingPresentation& R, const PrimalityOptions& options = {});

/* F_p-basis of the nilradical of an algebra with all d_i = p: the kernel
 * of the e-th iterate of the Frobenius x -> x^p, where p^e >= m. */
std::vector<RingElement> nilradical_mod_p(const FiniteRingPresentation& A);

/* d_i -> p, structure constants mod p: the algebra R/pR (p must divide
 * every d_i). */
FiniteRingPresentation reduce_mod_p(const FiniteRingPresentation& R, const Int& p);

/* Local-ring test: all d_i powers of one prime p, then R is local iff
 * (R/pR)/Nil is a field. */
bool is_local(const FiniteRingPresentation& R, const PrimalityOptions& options = {});

}  // namespace dedekind
