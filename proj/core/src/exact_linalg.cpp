#include "dedekind/exact_linalg.hpp"

#include <cstdint>
#include <utility>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

/* Incremental stream of primes 2, 3, 5, ... backed by a sieve that is
 * rebuilt with a doubled limit when exhausted. */
class PrimeSieve {
public:
    std::uint32_t next() {
        if (pos_ == primes_.size()) grow();
        return primes_[pos_++];
    }

private:
    void grow() {
        limit_ = limit_ ? limit_ * 2 : 64;
        primes_.clear();
        std::vector<bool> composite(limit_ + 1, false);
        for (std::uint32_t p = 2; p <= limit_; ++p) {
            if (composite[p]) continue;
            primes_.push_back(p);
            for (std::uint64_t q = std::uint64_t(p) * p; q <= limit_; q += p)
                composite[q] = true;
        }
        if (pos_ >= primes_.size()) grow();
    }

    std::vector<std::uint32_t> primes_;
    std::size_t pos_ = 0;
    std::uint32_t limit_ = 0;
};

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p expected
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t det_mod_p(const IntMatrix& A, std::uint32_t p) {
    const std::size_t n = A.rows();
    std::vector<std::uint64_t> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = mpz_fdiv_ui(A(i, j).get_mpz_t(), p);

    std::uint64_t det = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && w[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(w[pivot * n + j], w[k * n + j]);
            negate = !negate;
        }
        const std::uint64_t pv = w[k * n + k];
        det = (det * pv) % p;
        const std::uint64_t pinv = inv_mod_u64(pv, p);
        for (std::size_t r = k + 1; r < n; ++r) {
            const std::uint64_t f = (w[r * n + k] * pinv) % p;
            if (f == 0) continue;
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = (f * w[k * n + j]) % p;
                w[r * n + j] = (w[r * n + j] + p - sub) % p;
            }
        }
    }
    if (negate) det = (p - det % p) % p;
    return det % p;
}

void require_square(const IntMatrix& A, const char* who) {
    if (!A.is_square())
        throw DimensionError(std::string(who) + ": matrix must be square");
}

/* Unimodular column operation on columns a, b of W (and mirror matrix M,
 * when given) sending (col_a, col_b) to
 * (s*col_a + t*col_b, -v*col_a + u*col_b), det = s*u + t*v = 1. */
void column_combine(IntMatrix& W, IntMatrix* M, std::size_t a, std::size_t b,
                    const Int& s, const Int& t, const Int& u, const Int& v) {
    for (std::size_t r = 0; r < W.rows(); ++r) {
        Int wa = W(r, a), wb = W(r, b);
        W(r, a) = s * wa + t * wb;
        W(r, b) = u * wb - v * wa;
    }
    if (M) {
        for (std::size_t r = 0; r < M->rows(); ++r) {
            Int ma = M->operator()(r, a), mb = M->operator()(r, b);
            M->operator()(r, a) = s * ma + t * mb;
            M->operator()(r, b) = u * mb - v * ma;
        }
    }
}

void column_swap(IntMatrix& W, IntMatrix* M, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < W.rows(); ++r) std::swap(W(r, a), W(r, b));
    if (M)
        for (std::size_t r = 0; r < M->rows(); ++r) std::swap(M->operator()(r, a), M->operator()(r, b));
}

void column_axpy(IntMatrix& W, IntMatrix* M, std::size_t dst, std::size_t src, const Int& q) {
    // col_dst -= q * col_src
    if (q == 0) return;
    for (std::size_t r = 0; r < W.rows(); ++r) W(r, dst) -= q * W(r, src);
    if (M)
        for (std::size_t r = 0; r < M->rows(); ++r) M->operator()(r, dst) -= q * M->operator()(r, src);
}

void column_negate(IntMatrix& W, IntMatrix* M, std::size_t c) {
    for (std::size_t r = 0; r < W.rows(); ++r) W(r, c) = -W(r, c);
    if (M)
        for (std::size_t r = 0; r < M->rows(); ++r) M->operator()(r, c) = -M->operator()(r, c);
}

}  // namespace

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> d(S.rows());
    for (std::size_t i = 0; i < S.rows(); ++i) d[i] = S(i, i);
    return d;
}

Int hadamard_bound(const IntMatrix& A) {
    require_square(A, "hadamard_bound");
    Int prod = 1;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Int rownorm2 = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) rownorm2 += A(i, j) * A(i, j);
        prod *= rownorm2;
        if (prod == 0) return 1;
    }
    Int b = sqrt_ceil(prod);
    return b < 1 ? Int(1) : b;
}

Int det_modular(const IntMatrix& A) {
    require_square(A, "det_modular");
    if (A.rows() == 1) return A(0, 0);

    const Int bound = hadamard_bound(A);
    const Int target = 2 * bound + 1;

    PrimeSieve sieve;
    Int modulus = 1;
    Int residue = 0;
    while (modulus <= target) {
        const std::uint32_t p = sieve.next();
        const std::uint64_t dp = det_mod_p(A, p);
        // residue' = residue + modulus * k with k = (dp - residue) / modulus mod p
        const std::uint64_t rp = mpz_fdiv_ui(residue.get_mpz_t(), p);
        const std::uint64_t mp = mpz_fdiv_ui(modulus.get_mpz_t(), p);
        const std::uint64_t k = ((dp + p - rp) % p) * inv_mod_u64(mp, p) % p;
        residue += modulus * Int(static_cast<unsigned long>(k));
        modulus *= p;
    }
    if (2 * residue > modulus) residue -= modulus;
    return residue;
}

HnfResult hnf_with_transform(const IntMatrix& A) {
    const std::size_t n = A.rows();
    const std::size_t m = A.cols();
    if (m < n)
        throw RankDeficientError("hnf: fewer columns than rows, cannot have full row rank");

    IntMatrix W = A;
    IntMatrix U = IntMatrix::identity(m);

    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = n - 1 - step;     // row, bottom-up
        const std::size_t c = m - 1 - step;     // pivot column
        for (std::size_t j = 0; j < c; ++j) {
            if (W(i, j) == 0) continue;
            if (W(i, c) == 0) {
                column_swap(W, &U, j, c);
                continue;
            }
            Int g, s, t;
            ext_gcd(g, s, t, W(i, c), W(i, j));
            Int u = W(i, c) / g, v = W(i, j) / g;
            column_combine(W, &U, c, j, s, t, u, v);
        }
        if (W(i, c) == 0)
            throw RankDeficientError("hnf: no pivot for row " + std::to_string(i + 1));
        if (W(i, c) < 0) column_negate(W, &U, c);
        for (std::size_t j = c + 1; j < m; ++j)
            column_axpy(W, &U, j, c, floor_div(W(i, j), W(i, c)));
    }

    IntMatrix H(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) H(r, c) = W(r, m - n + c);
    return {std::move(H), std::move(U)};
}

HnfResult hnf_with_transform(const IntMatrix& A, const Int& h) {
    if (h <= 0) throw Error("hnf: h must be positive");
    return hnf_with_transform(A);
}

IntMatrix hnf_basis_mod(const IntMatrix& A, const Int& h) {
    if (h <= 0) throw Error("hnf_basis_mod: h must be positive");
    const std::size_t n = A.rows();
    const std::size_t m = A.cols();

    Int R = h;
    // pool of generator columns, kept reduced modulo the current R;
    // rows already pivoted are zero in every pool column
    std::vector<std::vector<Int>> pool(m, std::vector<Int>(n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < n; ++r) pool[j][r] = mod_floor(A(r, j), R);

    std::vector<std::vector<Int>> pivot_col(n);
    std::vector<Int> pivot_val(n);

    for (std::size_t ii = 0; ii < n; ++ii) {
        const std::size_t i = n - 1 - ii;

        // fold all pool columns with a nonzero entry in row i into one
        std::size_t lead = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (pool[j][i] == 0) continue;
            if (lead == m) {
                lead = j;
                continue;
            }
            Int g, s, t;
            ext_gcd(g, s, t, pool[lead][i], pool[j][i]);
            Int u = pool[lead][i] / g, v = pool[j][i] / g;
            for (std::size_t r = 0; r <= i; ++r) {
                Int a = pool[lead][r], b = pool[j][r];
                pool[lead][r] = mod_floor(s * a + t * b, R);
                pool[j][r] = mod_floor(u * b - v * a, R);
            }
            pool[lead][i] = g;  // mod_floor may have wrapped g to 0 when g == R
            pool[j][i] = 0;
        }

        // gcd with R: the lattice contains R*e_i, so the true pivot is
        // gcd of the folded value with R
        Int g, s, t;
        const Int g0 = (lead == m) ? Int(0) : pool[lead][i];
        ext_gcd(g, s, t, g0, R);

        // pivot column s*col + t*(R e_i); the complement (R/g)*col - (g0/g)*(R e_i)
        // has a zero entry in row i and stays in the pool
        std::vector<Int> pvt(n);
        if (lead != m) {
            const Int rg = R / g;
            for (std::size_t r = 0; r < i; ++r) {
                pvt[r] = mod_floor(s * pool[lead][r], R);
                pool[lead][r] = mod_floor(rg * pool[lead][r], R);
            }
            pool[lead][i] = 0;
        }
        pvt[i] = g;
        // reduce row i of the pivots already placed below into [0, g)
        for (std::size_t jj = i + 1; jj < n; ++jj) {
            Int q = floor_div(pivot_col[jj][i], g);
            if (q == 0) continue;
            for (std::size_t r = 0; r <= i; ++r) pivot_col[jj][r] -= q * pvt[r];
        }
        pivot_col[i] = std::move(pvt);
        pivot_val[i] = g;

        R /= g;
        if (R == 0) throw Error("hnf_basis_mod: internal modulus underflow");
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < i; ++r) pool[j][r] = mod_floor(pool[j][r], R);
    }

    IntMatrix H(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r <= c; ++r) H(r, c) = pivot_col[c][r];
    return H;
}

namespace {

struct SmithWork {
    IntMatrix& S;
    IntMatrix* V;  // row transform or nullptr
    IntMatrix* U;  // column transform or nullptr
    const Int* R;  // reduce entries into [0, R) when set

    void post(std::size_t r, std::size_t c) {
        if (R) S(r, c) = mod_floor(S(r, c), *R);
    }

    void row_op(std::size_t k, std::size_t r) {
        // zero S(r, k) using row k
        if (S(r, k) == 0) return;
        if (S(k, k) != 0 && S(r, k) % S(k, k) == 0) {
            Int q = S(r, k) / S(k, k);
            for (std::size_t j = k; j < S.cols(); ++j) {
                S(r, j) -= q * S(k, j);
                post(r, j);
            }
            if (V)
                for (std::size_t j = 0; j < V->cols(); ++j)
                    V->operator()(r, j) -= q * V->operator()(k, j);
            return;
        }
        Int g, s, t;
        ext_gcd(g, s, t, S(k, k), S(r, k));
        Int u = S(k, k) / g, v = S(r, k) / g;
        for (std::size_t j = k; j < S.cols(); ++j) {
            Int a = S(k, j), b = S(r, j);
            S(k, j) = s * a + t * b;
            S(r, j) = u * b - v * a;
            post(k, j);
            post(r, j);
        }
        if (R) S(k, k) = g;  // post() may have wrapped g == R to 0; keep the exact pivot
        if (V)
            for (std::size_t j = 0; j < V->cols(); ++j) {
                Int a = V->operator()(k, j), b = V->operator()(r, j);
                V->operator()(k, j) = s * a + t * b;
                V->operator()(r, j) = u * b - v * a;
            }
    }

    void col_op(std::size_t k, std::size_t c) {
        if (S(k, c) == 0) return;
        if (S(k, k) != 0 && S(k, c) % S(k, k) == 0) {
            Int q = S(k, c) / S(k, k);
            for (std::size_t i = k; i < S.rows(); ++i) {
                S(i, c) -= q * S(i, k);
                post(i, c);
            }
            if (U)
                for (std::size_t i = 0; i < U->rows(); ++i)
                    U->operator()(i, c) -= q * U->operator()(i, k);
            return;
        }
        Int g, s, t;
        ext_gcd(g, s, t, S(k, k), S(k, c));
        Int u = S(k, k) / g, v = S(k, c) / g;
        for (std::size_t i = k; i < S.rows(); ++i) {
            Int a = S(i, k), b = S(i, c);
            S(i, k) = s * a + t * b;
            S(i, c) = u * b - v * a;
            post(i, k);
            post(i, c);
        }
        if (R) S(k, k) = g;
        if (U)
            for (std::size_t i = 0; i < U->rows(); ++i) {
                Int a = U->operator()(i, k), b = U->operator()(i, c);
                U->operator()(i, k) = s * a + t * b;
                U->operator()(i, c) = u * b - v * a;
            }
    }
};

/* Shared Smith elimination: diagonalizes S in increasing divisibility
 * order; modular entry control when work.R is set. */
void smith_reduce(SmithWork& work) {
    IntMatrix& S = work.S;
    const std::size_t n = S.rows();

    for (std::size_t k = 0; k < n; ++k) {
        // move the absolutely smallest nonzero trailing entry to (k, k)
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (S(i, j) == 0) continue;
                if (pi == n || int_abs(S(i, j)) < int_abs(S(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi != n) {
            if (pi != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(S(pi, j), S(k, j));
                if (work.V)
                    for (std::size_t j = 0; j < n; ++j)
                        std::swap(work.V->operator()(pi, j), work.V->operator()(k, j));
            }
            if (pj != k) {
                for (std::size_t i = 0; i < n; ++i) std::swap(S(i, pj), S(i, k));
                if (work.U)
                    for (std::size_t i = 0; i < n; ++i)
                        std::swap(work.U->operator()(i, pj), work.U->operator()(i, k));
            }
        }

        for (;;) {
            bool clean = false;
            while (!clean) {
                clean = true;
                for (std::size_t r = k + 1; r < n; ++r)
                    if (S(r, k) != 0) {
                        work.row_op(k, r);
                        clean = false;
                    }
                for (std::size_t c = k + 1; c < n; ++c)
                    if (S(k, c) != 0) {
                        work.col_op(k, c);
                        clean = false;
                    }
            }
            if (work.R) {
                // fold the ambient R*e_k relation into the pivot
                Int g = int_gcd(S(k, k), *work.R);
                if (g == 0) g = *work.R;
                S(k, k) = g;
            }
            if (S(k, k) == 0) break;
            // pivot must divide every trailing entry
            bool fixed = true;
            for (std::size_t i = k + 1; i < n && fixed; ++i)
                for (std::size_t j = k + 1; j < n && fixed; ++j)
                    if (S(i, j) % S(k, k) != 0) {
                        // pull the offending column into column k and retry
                        for (std::size_t r = k; r < n; ++r) {
                            S(r, k) += S(r, j);
                            work.post(r, k);
                        }
                        if (work.U)
                            for (std::size_t r = 0; r < n; ++r)
                                work.U->operator()(r, k) += work.U->operator()(r, j);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
}

}  // namespace

SnfResult snf_with_transforms(const IntMatrix& B, const Int& h) {
    require_square(B, "snf");
    if (h <= 0) throw Error("snf: h must be positive");
    const std::size_t n = B.rows();

    IntMatrix S = B;
    IntMatrix V = IntMatrix::identity(n);
    IntMatrix U = IntMatrix::identity(n);
    SmithWork work{S, &V, &U, nullptr};
    smith_reduce(work);

    for (std::size_t k = 0; k < n; ++k) {
        if (S(k, k) == 0) throw SingularError("snf: matrix is singular");
        if (S(k, k) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                S(k, j) = -S(k, j);
                V(k, j) = -V(k, j);
            }
        }
    }

    // reverse to decreasing divisibility order: S' = P S P, V' = P V, U' = U P.
    // A constant diagonal is already in order; skipping the permutation then
    // keeps the transforms of trivial inputs trivial.
    bool constant = true;
    for (std::size_t i = 1; i < n && constant; ++i) constant = S(i, i) == S(0, 0);
    if (constant) return {std::move(S), std::move(U), std::move(V)};

    IntMatrix S2(n, n), V2(n, n), U2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        S2(i, i) = S(n - 1 - i, n - 1 - i);
        for (std::size_t j = 0; j < n; ++j) {
            V2(i, j) = V(n - 1 - i, j);
            U2(i, j) = U(i, n - 1 - j);
        }
    }
    return {std::move(S2), std::move(U2), std::move(V2)};
}

std::vector<Int> snf_diagonal_mod(const IntMatrix& B, const Int& h) {
    require_square(B, "snf_diagonal_mod");
    if (h <= 0) throw Error("snf_diagonal_mod: h must be positive");
    const std::size_t n = B.rows();

    Int R = h;
    IntMatrix S = B.reduced_mod(R);
    std::vector<Int> diag;
    diag.reserve(n);

    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix Sub(n - k, n - k);
        for (std::size_t i = 0; i < n - k; ++i)
            for (std::size_t j = 0; j < n - k; ++j) Sub(i, j) = S(k + i, k + j);
        SmithWork work{Sub, nullptr, nullptr, &R};
        // reduce only the first pivot of the trailing block, then shrink R
        IntMatrix& T = work.S;
        {
            // one pivot step of smith_reduce, specialized to k = 0
            std::size_t pi = T.rows(), pj = T.rows();
            for (std::size_t i = 0; i < T.rows(); ++i)
                for (std::size_t j = 0; j < T.cols(); ++j) {
                    if (T(i, j) == 0) continue;
                    if (pi == T.rows() || int_abs(T(i, j)) < int_abs(T(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi != T.rows()) {
                if (pi != 0)
                    for (std::size_t j = 0; j < T.cols(); ++j) std::swap(T(pi, j), T(0, j));
                if (pj != 0)
                    for (std::size_t i = 0; i < T.rows(); ++i) std::swap(T(i, pj), T(i, 0));
            }
            for (;;) {
                bool clean = false;
                while (!clean) {
                    clean = true;
                    for (std::size_t r = 1; r < T.rows(); ++r)
                        if (T(r, 0) != 0) {
                            work.row_op(0, r);
                            clean = false;
                        }
                    for (std::size_t c = 1; c < T.cols(); ++c)
                        if (T(0, c) != 0) {
                            work.col_op(0, c);
                            clean = false;
                        }
                }
                Int g = int_gcd(T(0, 0), R);
                if (g == 0) g = R;
                T(0, 0) = g;
                bool fixed = true;
                for (std::size_t i = 1; i < T.rows() && fixed; ++i)
                    for (std::size_t j = 1; j < T.cols() && fixed; ++j)
                        if (mod_floor(T(i, j), g) != 0) {
                            for (std::size_t r = 0; r < T.rows(); ++r) {
                                T(r, 0) += T(r, j);
                                work.post(r, 0);
                            }
                            fixed = false;
                        }
                if (fixed) break;
            }
        }
        const Int g = T(0, 0);
        diag.push_back(g);
        R /= g;
        if (R < 1) R = 1;
        for (std::size_t i = 1; i < T.rows(); ++i)
            for (std::size_t j = 1; j < T.cols(); ++j) S(k + i, k + j) = mod_floor(T(i, j), R);
    }

    for (std::size_t i = 0; i + 1 < n; ++i)
        if (diag[i + 1] % diag[i] != 0)
            throw Error("snf_diagonal_mod: divisibility chain broken (is h a multiple of det?)");

    std::vector<Int> out(diag.rbegin(), diag.rend());
    return out;
}

IntMatrix inverse_mod(const IntMatrix& V, const Int& h) {
    require_square(V, "inverse_mod");
    if (h < 2) throw Error("inverse_mod: modulus must be at least 2");
    const std::size_t n = V.rows();

    IntMatrix W = V.reduced_mod(h);
    IntMatrix R = IntMatrix::identity(n);

    auto row_combine = [&](std::size_t a, std::size_t b, const Int& s, const Int& t,
                           const Int& u, const Int& v) {
        for (std::size_t j = 0; j < n; ++j) {
            Int wa = W(a, j), wb = W(b, j);
            W(a, j) = mod_floor(s * wa + t * wb, h);
            W(b, j) = mod_floor(u * wb - v * wa, h);
            Int ra = R(a, j), rb = R(b, j);
            R(a, j) = mod_floor(s * ra + t * rb, h);
            R(b, j) = mod_floor(u * rb - v * ra, h);
        }
    };

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = k + 1; r < n; ++r) {
            if (W(r, k) == 0) continue;
            if (W(k, k) == 0) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(W(k, j), W(r, j));
                    std::swap(R(k, j), R(r, j));
                }
                continue;
            }
            Int g, s, t;
            ext_gcd(g, s, t, W(k, k), W(r, k));
            row_combine(k, r, s, t, W(k, k) / g, W(r, k) / g);
            W(k, k) = mod_floor(g, h);
        }
        Int g, s, t;
        ext_gcd(g, s, t, W(k, k), h);
        if (g != 1)
            throw NotUnimodularError("inverse_mod: matrix is not invertible modulo " +
                                     to_decimal(h));
        const Int inv = mod_floor(s, h);
        for (std::size_t j = 0; j < n; ++j) {
            W(k, j) = mod_floor(W(k, j) * inv, h);
            R(k, j) = mod_floor(R(k, j) * inv, h);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || W(r, k) == 0) continue;
            const Int f = W(r, k);
            for (std::size_t j = 0; j < n; ++j) {
                W(r, j) = mod_floor(W(r, j) - f * W(k, j), h);
                R(r, j) = mod_floor(R(r, j) - f * R(k, j), h);
            }
        }
    }
    return R;
}

IntMatrix inverse_exact_unimodular(const IntMatrix& V) {
    require_square(V, "inverse_exact_unimodular");
    const std::size_t n = V.rows();
    const Int det = det_modular(V);
    if (det != 1 && det != -1)
        throw NotUnimodularError("inverse_exact_unimodular: |det| must be 1, got " +
                                 to_decimal(det));
    if (n == 1) {
        IntMatrix inv(1, 1);
        inv(0, 0) = det;
        return inv;
    }

    IntMatrix inv(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;  // adjugate: minor of the transposed position
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = V(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det_modular(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv(i, j) = det == 1 ? cof : -cof;
        }

    if (!(V * inv == IntMatrix::identity(n)))
        throw Error("inverse_exact_unimodular: internal verification failed");
    return inv;
}

std::optional<std::vector<Int>> solve_mod(const IntMatrix& A, const std::vector<Int>& b,
                                          const Int& N) {
    if (b.size() != A.rows()) throw DimensionError("solve_mod: rhs length mismatch");
    if (N < 1) throw Error("solve_mod: modulus must be positive");
    const std::size_t r = A.rows();
    const std::size_t c = A.cols();

    IntMatrix Nid = IntMatrix::identity(r);
    for (std::size_t i = 0; i < r; ++i) Nid(i, i) = N;
    IntMatrix M = IntMatrix::hcat(A, Nid);

    HnfResult hnf = hnf_with_transform(M);
    const IntMatrix& H = hnf.H;

    std::vector<Int> z(r);
    for (std::size_t ii = 0; ii < r; ++ii) {
        const std::size_t i = r - 1 - ii;
        Int num = b[i];
        for (std::size_t j = i + 1; j < r; ++j) num -= H(i, j) * z[j];
        if (num % H(i, i) != 0) return std::nullopt;
        z[i] = num / H(i, i);
    }

    std::vector<Int> x(c);
    for (std::size_t row = 0; row < c; ++row) {
        Int acc = 0;
        for (std::size_t j = 0; j < r; ++j) acc += hnf.U(row, c + j) * z[j];
        x[row] = mod_floor(acc, N);
    }
    return x;
}

}  // namespace dedekind
