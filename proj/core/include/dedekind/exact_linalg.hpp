#pragma once

#include <optional>
#include <vector>

#include "dedekind/int_matrix.hpp"

namespace dedekind {

/* Column-style Hermite normal form, following Cohen's convention:
 * A*U = (0 | H) with U unimodular, H upper triangular, H(i,i) > 0 and
 * 0 <= H(i,j) < H(i,i) for j > i. For square full-rank A the zero block
 * is empty and A*U = H. */
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};

/* Smith normal form V*B*U = S with S = diag(d_1,...,d_n), all d_i > 0 and
 * d_{i+1} | d_i (largest first). */
struct SnfResult {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;

    std::vector<Int> diagonal() const;
};

/* Integer >= |det A|: ceiling of the product of Euclidean row norms. */
Int hadamard_bound(const IntMatrix& A);

/* det A, exactly. Gaussian elimination modulo an increasing stream of
 * small primes until their product exceeds 2*hadamard_bound(A) + 1, then
 * signed reconstruction by the Chinese remainder theorem. */
Int det_modular(const IntMatrix& A);

/* HNF with transform of an n x m matrix of full row rank n. The overload
 * taking h accepts any positive multiple of det L(A); the exact
 * elimination used here does not need it to bound entries, so both
 * overloads produce identical results. Throws RankDeficientError when a
 * row admits no pivot. */
HnfResult hnf_with_transform(const IntMatrix& A);
HnfResult hnf_with_transform(const IntMatrix& A, const Int& h);

/* HNF without transform, entries controlled modulo h throughout
 * (Hafner-McCurley style). Requires h to be a positive multiple of
 * det L(A) and A to have full row rank; under that precondition
 * h*Z^n is contained in L(A), which is what justifies the reductions.
 * This is the variant the ideal pipeline runs on. */
IntMatrix hnf_basis_mod(const IntMatrix& A, const Int& h);

/* SNF with exact unimodular transforms. h must be a positive multiple of
 * |det B|; the diagonal-only variant below uses it to bound entries, this
 * one keeps transforms exact. Throws SingularError when det B = 0. */
SnfResult snf_with_transforms(const IntMatrix& B, const Int& h);

/* Elementary divisors of B (decreasing divisibility order, same as
 * SnfResult), computed with all entries reduced modulo the shrinking
 * modulus h / (pivots extracted so far). No transforms. */
std::vector<Int> snf_diagonal_mod(const IntMatrix& B, const Int& h);

/* Inverse of V over Z/h (h >= 2) by row reduction; entries of the result
 * lie in [0, h). Throws NotUnimodularError when V has no inverse mod h. */
IntMatrix inverse_mod(const IntMatrix& V, const Int& h);

/* Exact inverse of a matrix with det = +-1 (adjugate route). */
IntMatrix inverse_exact_unimodular(const IntMatrix& V);

/* One solution x of A x = b (mod N), if any; entries of x in [0, N). */
std::optional<std::vector<Int>> solve_mod(const IntMatrix& A,
                                          const std::vector<Int>& b,
                                          const Int& N);

}  // namespace dedekind
