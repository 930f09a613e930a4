#include "dedekind/finite_ring.hpp"

#include <algorithm>
#include <string>

#include "dedekind/errors.hpp"
#include "dedekind/exact_linalg.hpp"

namespace dedekind {

namespace {

void check_element(const FiniteRingPresentation& R, const RingElement& x, const char* who) {
    if (x.x.size() != R.m())
        throw DimensionError(std::string(who) + ": element does not match the presentation");
}

Int fp_inv(const Int& a, const Int& p) {
    Int g, s, t;
    ext_gcd(g, s, t, mod_floor(a, p), p);
    if (g != 1) throw Error("fp_inv: element not invertible mod " + to_decimal(p));
    return mod_floor(s, p);
}

/* Gauss-Jordan over F_p. Returns one solution of M x = rhs (free variables
 * set to 0), or nothing. M is rows x cols, row-major. */
std::optional<std::vector<Int>> fp_solve(std::vector<std::vector<Int>> M, std::vector<Int> rhs,
                                         const Int& p) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    std::vector<std::size_t> pivot_of_row;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && M[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[rank]);
        std::swap(rhs[pr], rhs[rank]);
        const Int inv = fp_inv(M[rank][c], p);
        for (std::size_t j = c; j < cols; ++j) M[rank][j] = mod_floor(M[rank][j] * inv, p);
        rhs[rank] = mod_floor(rhs[rank] * inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const Int f = M[r][c];
            for (std::size_t j = c; j < cols; ++j)
                M[r][j] = mod_floor(M[r][j] - f * M[rank][j], p);
            rhs[r] = mod_floor(rhs[r] - f * rhs[rank], p);
        }
        pivot_of_row.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Int> x(cols);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_of_row[r]] = rhs[r];
    return x;
}

/* Row-reduced form of the given vectors over F_p: normalized rows plus
 * their pivot columns. */
void fp_row_reduce(std::vector<std::vector<Int>>& rows, std::vector<std::size_t>& pivots,
                   const Int& p) {
    pivots.clear();
    std::vector<std::vector<Int>> out;
    for (auto& v : rows) {
        for (std::size_t s = 0; s < out.size(); ++s) {
            const Int c = v[pivots[s]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = mod_floor(v[j] - c * out[s][j], p);
        }
        std::size_t piv = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == v.size()) continue;
        const Int inv = fp_inv(v[piv], p);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod_floor(v[j] * inv, p);
        out.push_back(v);
        pivots.push_back(piv);
    }
    rows = std::move(out);
}

/* Kernel basis of the square matrix M over F_p (M acts on column vectors). */
std::vector<std::vector<Int>> fp_kernel(std::vector<std::vector<Int>> M, const Int& p) {
    const std::size_t n = M.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t pr = rank;
        while (pr < n && M[pr][c] == 0) ++pr;
        if (pr == n) continue;
        std::swap(M[pr], M[rank]);
        const Int inv = fp_inv(M[rank][c], p);
        for (std::size_t j = 0; j < n; ++j) M[rank][j] = mod_floor(M[rank][j] * inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            const Int f = M[r][c];
            for (std::size_t j = 0; j < n; ++j)
                M[r][j] = mod_floor(M[r][j] - f * M[rank][j], p);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::vector<Int>> basis;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Int> v(n);
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = mod_floor(-M[r][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RingElement ring_add(const FiniteRingPresentation& R, const RingElement& x,
                     const RingElement& y) {
    check_element(R, x, "ring_add");
    check_element(R, y, "ring_add");
    RingElement z{std::vector<Int>(R.m())};
    for (std::size_t i = 0; i < R.m(); ++i)
        z.x[i] = mod_floor(x.x[i] + y.x[i], R.d[i]);
    return z;
}

RingElement ring_mul(const FiniteRingPresentation& R, const RingElement& x,
                     const RingElement& y) {
    check_element(R, x, "ring_mul");
    check_element(R, y, "ring_mul");
    const std::size_t m = R.m();
    std::vector<Int> acc(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (x.x[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (y.x[j] == 0) continue;
            const Int xy = x.x[i] * y.x[j];
            for (std::size_t k = 0; k < m; ++k) {
                const Int& l = R.sc(i, j, k);
                if (l != 0) acc[k] += xy * l;
            }
        }
    }
    RingElement z{std::vector<Int>(m)};
    for (std::size_t k = 0; k < m; ++k) z.x[k] = mod_floor(acc[k], R.d[k]);
    return z;
}

std::optional<RingElement> find_identity(const FiniteRingPresentation& R) {
    const std::size_t m = R.m();
    const Int& d1 = R.d[0];

    // e * v_j = v_j reads sum_i l(i,j,k) e_i = delta_jk (mod d_k); each
    // congruence is lifted to modulus d_1 by the factor d_1/d_k
    IntMatrix A(m * m, m);
    std::vector<Int> b(m * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
            const Int lift = d1 / R.d[k];
            for (std::size_t i = 0; i < m; ++i)
                A(j * m + k, i) = lift * R.sc(i, j, k);
            b[j * m + k] = (j == k) ? lift : Int(0);
        }

    auto x = solve_mod(A, b, d1);
    if (!x) return std::nullopt;

    RingElement e{std::vector<Int>(m)};
    for (std::size_t i = 0; i < m; ++i) e.x[i] = mod_floor((*x)[i], R.d[i]);

    for (std::size_t j = 0; j < m; ++j) {
        RingElement vj{std::vector<Int>(m)};
        vj.x[j] = 1;
        if (!(ring_mul(R, e, vj) == vj)) return std::nullopt;
    }
    return e;
}

BasisRing::BasisRing(FiniteRingPresentation pres) {
    validate_presentation(pres);
    pres_ = std::move(pres);
    auto e = find_identity(pres_);
    if (!e) throw PresentationError("presentation has no multiplicative identity");
    one_ = std::move(*e);
}

BasisRing BasisRing::unchecked(FiniteRingPresentation pres) {
    BasisRing r;
    r.pres_ = std::move(pres);
    auto e = find_identity(r.pres_);
    if (!e) throw PresentationError("presentation has no multiplicative identity");
    r.one_ = std::move(*e);
    return r;
}

RingElement BasisRing::unit(std::size_t i) const {
    RingElement v{std::vector<Int>(pres_.m())};
    v.x.at(i) = 1;
    return v;
}

RingElement BasisRing::pow(const RingElement& x, const Int& e) const {
    if (e < 0) throw Error("ring_pow: negative exponent");
    RingElement acc = one_;
    if (e == 0) return acc;
    for (std::size_t bit = bit_length(e); bit-- > 0;) {
        acc = mul(acc, acc);
        if (bit_test(e, bit)) acc = mul(acc, x);
    }
    return acc;
}

RingElement ring_pow(const BasisRing& R, const RingElement& x, const Int& e) {
    return R.pow(x, e);
}

std::optional<Int> check_prime_equal_d(const FiniteRingPresentation& R,
                                       const PrimalityOptions& options) {
    for (std::size_t i = 1; i < R.m(); ++i)
        if (R.d[i] != R.d[0]) return std::nullopt;
    if (!is_prime_integer(R.d[0], options)) return std::nullopt;
    return R.d[0];
}

/* ---- tower fields ---- */

TowerField TowerField::prime_field(const BasisRing& ring, const Int& p) {
    for (const Int& di : ring.presentation().d)
        if (di != p)
            throw PresentationError("tower field requires all d_i equal to the characteristic");
    TowerField F;
    F.ring_ = &ring;
    F.p_ = p;
    F.basis_ = {ring.one()};
    F.rebuild();
    return F;
}

TowerField TowerField::extend(std::size_t generator, const FieldPoly& min_poly) const {
    FieldPoly f = min_poly;
    while (!f.empty() && is_zero(f.back())) f.pop_back();
    if (f.size() < 2) throw Error("tower extend: minimal polynomial must have degree >= 1");
    const std::size_t degree = f.size() - 1;

    TowerField F;
    F.ring_ = ring_;
    F.p_ = p_;
    F.stages_ = stages_;
    F.stages_.push_back({generator, f, degree});

    const RingElement vg = ring_->unit(generator);
    RingElement pw = ring_->one();
    F.basis_.reserve(basis_.size() * degree);
    for (std::size_t t = 0; t < degree; ++t) {
        for (const RingElement& b : basis_) F.basis_.push_back(ring_->mul(b, pw));
        if (t + 1 < degree) pw = ring_->mul(pw, vg);
    }
    F.rebuild();
    return F;
}

void TowerField::rebuild() {
    const std::size_t m = ring_->m();
    const std::size_t D = basis_.size();

    red_rows_.clear();
    red_pivots_.clear();
    red_combos_.clear();
    for (std::size_t t = 0; t < D; ++t) {
        std::vector<Int> v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = mod_floor(basis_[t].x[j], p_);
        std::vector<Int> combo(D);
        combo[t] = 1;
        for (std::size_t s = 0; s < red_rows_.size(); ++s) {
            const Int c = v[red_pivots_[s]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                v[j] = mod_floor(v[j] - c * red_rows_[s][j], p_);
            for (std::size_t j = 0; j < D; ++j)
                combo[j] = mod_floor(combo[j] - c * red_combos_[s][j], p_);
        }
        std::size_t piv = m;
        for (std::size_t j = 0; j < m; ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == m)
            throw PresentationError("tower stage basis is linearly dependent: corrupt input");
        const Int inv = fp_inv(v[piv], p_);
        for (std::size_t j = 0; j < m; ++j) v[j] = mod_floor(v[j] * inv, p_);
        for (std::size_t j = 0; j < D; ++j) combo[j] = mod_floor(combo[j] * inv, p_);
        red_rows_.push_back(std::move(v));
        red_pivots_.push_back(piv);
        red_combos_.push_back(std::move(combo));
    }

    one_coords_ = from_ring_element(ring_->one());
    tensor_.assign(D * D, FieldElement());
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            FieldElement prod = from_ring_element(ring_->mul(basis_[a], basis_[b]));
            tensor_[a * D + b] = prod;
            tensor_[b * D + a] = std::move(prod);
        }
}

FieldElement TowerField::from_ring_element(const RingElement& w) const {
    const std::size_t m = ring_->m();
    const std::size_t D = basis_.size();
    std::vector<Int> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = mod_floor(w.x[j], p_);
    FieldElement coords(D);
    for (std::size_t s = 0; s < red_rows_.size(); ++s) {
        const Int c = v[red_pivots_[s]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            v[j] = mod_floor(v[j] - c * red_rows_[s][j], p_);
        for (std::size_t j = 0; j < D; ++j)
            coords[j] = mod_floor(coords[j] + c * red_combos_[s][j], p_);
    }
    for (std::size_t j = 0; j < m; ++j)
        if (v[j] != 0)
            throw PresentationError("element does not lie in the tower stage");
    return coords;
}

RingElement TowerField::to_ring_element(const FieldElement& a) const {
    const std::size_t m = ring_->m();
    RingElement acc{std::vector<Int>(m)};
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        if (a[t] == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            acc.x[j] = mod_floor(acc.x[j] + a[t] * basis_[t].x[j],
                                 ring_->presentation().d[j]);
    }
    return acc;
}

FieldElement TowerField::from_int(const Int& c) const { return scale(c, one_coords_); }

bool TowerField::is_zero(const FieldElement& a) const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

FieldElement TowerField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r(dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(a[i] + b[i], p_);
    return r;
}

FieldElement TowerField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r(dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(a[i] - b[i], p_);
    return r;
}

FieldElement TowerField::scale(const Int& c, const FieldElement& a) const {
    FieldElement r(dimension());
    const Int cc = mod_floor(c, p_);
    if (cc == 0) return r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_floor(cc * a[i], p_);
    return r;
}

FieldElement TowerField::mul(const FieldElement& a, const FieldElement& b) const {
    const std::size_t D = dimension();
    std::vector<Int> acc(D);
    for (std::size_t i = 0; i < D; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < D; ++j) {
            if (b[j] == 0) continue;
            const Int c = a[i] * b[j];
            const FieldElement& t = tensor_[i * D + j];
            for (std::size_t k = 0; k < D; ++k)
                if (t[k] != 0) acc[k] += c * t[k];
        }
    }
    FieldElement r(D);
    for (std::size_t k = 0; k < D; ++k) r[k] = mod_floor(acc[k], p_);
    return r;
}

FieldElement TowerField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw Error("tower field: division by zero");
    const std::size_t D = dimension();
    // columns of the multiplication-by-a map
    std::vector<std::vector<Int>> M(D, std::vector<Int>(D));
    for (std::size_t t = 0; t < D; ++t) {
        for (std::size_t i = 0; i < D; ++i) {
            if (a[i] == 0) continue;
            const FieldElement& col = tensor_[i * D + t];
            for (std::size_t r = 0; r < D; ++r)
                if (col[r] != 0) M[r][t] = mod_floor(M[r][t] + a[i] * col[r], p_);
        }
    }
    auto x = fp_solve(std::move(M), one_coords_, p_);
    if (!x) throw Error("tower field: element not invertible (stage is not a field)");
    return *x;
}

/* ---- polynomials over a tower stage ---- */

namespace {

using Poly = FieldPoly;

void poly_trim(const TowerField& F, Poly& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

Poly poly_x(const TowerField& F) { return {F.zero(), F.one()}; }

Poly poly_sub(const TowerField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    poly_trim(F, r);
    return r;
}

/* remainder of a modulo monic f */
Poly poly_mod(const TowerField& F, Poly a, const Poly& f) {
    poly_trim(F, a);
    const std::size_t k = f.size() - 1;
    while (a.size() > k) {
        const FieldElement c = a.back();
        const std::size_t shift = a.size() - 1 - k;
        if (!F.is_zero(c))
            for (std::size_t i = 0; i < k; ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(c, f[i]));
        a.pop_back();
        poly_trim(F, a);
    }
    return a;
}

Poly poly_mulmod(const TowerField& F, const Poly& a, const Poly& b, const Poly& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (F.is_zero(b[j])) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    return poly_mod(F, std::move(r), f);
}

Poly poly_powmod(const TowerField& F, const Poly& base, const Int& e, const Poly& f) {
    Poly acc{F.one()};
    if (e == 0) return acc;
    Poly b = poly_mod(F, base, f);
    for (std::size_t bit = bit_length(e); bit-- > 0;) {
        acc = poly_mulmod(F, acc, acc, f);
        if (bit_test(e, bit)) acc = poly_mulmod(F, acc, b, f);
    }
    return acc;
}

/* g(h) mod f by Horner */
Poly poly_compose_mod(const TowerField& F, const Poly& g, const Poly& h, const Poly& f) {
    Poly r;
    for (std::size_t i = g.size(); i-- > 0;) {
        r = poly_mulmod(F, r, h, f);
        if (r.empty()) r.push_back(g[i]);
        else r[0] = F.add(r[0], g[i]);
        poly_trim(F, r);
    }
    return r;
}

Poly poly_make_monic(const TowerField& F, Poly a) {
    poly_trim(F, a);
    if (a.empty()) return a;
    const FieldElement inv = F.inv(a.back());
    for (FieldElement& c : a) c = F.mul(c, inv);
    return a;
}

Poly poly_gcd(const TowerField& F, Poly a, Poly b) {
    poly_trim(F, a);
    poly_trim(F, b);
    while (!b.empty()) {
        Poly m = poly_make_monic(F, b);
        Poly r = poly_mod(F, std::move(a), m);
        a = std::move(m);
        b = std::move(r);
    }
    return a;
}

}  // namespace

FieldPoly minimal_polynomial_tower(const TowerField& stage, std::size_t generator) {
    const BasisRing& R = stage.ring();
    const std::size_t m = R.m();
    const std::size_t D = stage.dimension();
    const Int& p = stage.characteristic();
    if (generator >= m) throw DimensionError("minimal_polynomial_tower: generator index");

    // maximal stage-independent subset S of the generators, scanned in
    // index order; columns of the F_p systems are basis_b * v_{S[s]}
    std::vector<std::size_t> S;
    std::vector<std::vector<Int>> cols;  // each an m-vector over F_p
    auto append_columns = [&](std::size_t j) {
        const RingElement vj = R.unit(j);
        for (std::size_t b = 0; b < D; ++b) {
            RingElement prod = R.mul(stage.monomial_basis()[b], vj);
            std::vector<Int> col(m);
            for (std::size_t r = 0; r < m; ++r) col[r] = mod_floor(prod.x[r], p);
            cols.push_back(std::move(col));
        }
    };
    auto solve_membership = [&](std::size_t j) -> std::optional<std::vector<Int>> {
        if (cols.empty()) return std::nullopt;
        std::vector<std::vector<Int>> M(m, std::vector<Int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < m; ++r) M[r][c] = cols[c][r];
        std::vector<Int> rhs(m);
        rhs[j] = 1;
        return fp_solve(std::move(M), std::move(rhs), p);
    };
    for (std::size_t j = 0; j < m; ++j) {
        if (!solve_membership(j)) {
            S.push_back(j);
            append_columns(j);
        }
    }
    const std::size_t s = S.size();

    // v_j = sum_q H[j][q] mu_q with coefficients in the stage
    std::vector<std::vector<FieldElement>> H(m, std::vector<FieldElement>(s, stage.zero()));
    for (std::size_t j = 0; j < m; ++j) {
        auto at = std::find(S.begin(), S.end(), j);
        if (at != S.end()) {
            H[j][static_cast<std::size_t>(at - S.begin())] = stage.one();
            continue;
        }
        auto sol = solve_membership(j);
        if (!sol)
            throw PresentationError("generator escapes the span of the independent subset");
        for (std::size_t q = 0; q < s; ++q) {
            FieldElement coeff(D);
            for (std::size_t b = 0; b < D; ++b) coeff[b] = (*sol)[q * D + b];
            H[j][q] = std::move(coeff);
        }
    }

    // rows of E*H for the powers of the generator, reduced incrementally
    // over the stage field; the bookkeeping combination is the polynomial
    struct ReducedRow {
        std::vector<FieldElement> vec;
        std::size_t pivot;
        FieldPoly combo;
    };
    std::vector<ReducedRow> rows;

    RingElement w = R.one();
    const RingElement vg = R.unit(generator);
    for (std::size_t t = 0; t <= m; ++t) {
        std::vector<FieldElement> eh(s, stage.zero());
        for (std::size_t j = 0; j < m; ++j) {
            const Int e = mod_floor(w.x[j], p);
            if (e == 0) continue;
            for (std::size_t q = 0; q < s; ++q)
                eh[q] = stage.add(eh[q], stage.scale(e, H[j][q]));
        }
        FieldPoly combo(t + 1, stage.zero());
        combo[t] = stage.one();

        for (const ReducedRow& r : rows) {
            const FieldElement c = eh[r.pivot];
            if (stage.is_zero(c)) continue;
            for (std::size_t q = 0; q < s; ++q)
                eh[q] = stage.sub(eh[q], stage.mul(c, r.vec[q]));
            for (std::size_t e = 0; e < r.combo.size(); ++e)
                combo[e] = stage.sub(combo[e], stage.mul(c, r.combo[e]));
        }

        bool zero = true;
        std::size_t pivot = s;
        for (std::size_t q = 0; q < s; ++q)
            if (!stage.is_zero(eh[q])) {
                zero = false;
                pivot = q;
                break;
            }
        if (zero) return combo;  // monic of degree t by construction

        const FieldElement cinv = stage.inv(eh[pivot]);
        for (std::size_t q = 0; q < s; ++q) eh[q] = stage.mul(cinv, eh[q]);
        FieldPoly scaled(combo.size(), stage.zero());
        for (std::size_t e = 0; e < combo.size(); ++e) scaled[e] = stage.mul(cinv, combo[e]);
        rows.push_back({std::move(eh), pivot, std::move(scaled)});

        if (t < m) w = R.mul(w, vg);
    }
    throw PresentationError("no power dependency within m+1 powers: corrupt presentation");
}

std::vector<Int> minimal_polynomial_first(const BasisRing& R, const Int& p) {
    TowerField base = TowerField::prime_field(R, p);
    FieldPoly f = minimal_polynomial_tower(base, 0);
    std::vector<Int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i][0];
    return out;
}

bool irreducible_over_field(const FieldPoly& f_in, const TowerField& F) {
    FieldPoly f = f_in;
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
    if (f.size() < 2) throw Error("irreducibility test requires degree >= 1");
    f = poly_make_monic(F, std::move(f));
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;

    Int q;
    mpz_pow_ui(q.get_mpz_t(), F.characteristic().get_mpz_t(),
               static_cast<unsigned long>(F.dimension()));

    const Poly x = poly_x(F);
    std::vector<Poly> frob(k + 1);
    frob[1] = poly_powmod(F, x, q, f);
    for (std::size_t j = 2; j <= k; ++j)
        frob[j] = poly_compose_mod(F, frob[j - 1], frob[1], f);

    if (!poly_sub(F, frob[k], poly_mod(F, x, f)).empty()) return false;

    std::size_t n = k;
    for (std::size_t r = 2; r * r <= n; ++r) {
        if (n % r) continue;
        while (n % r == 0) n /= r;
        Poly g = poly_gcd(F, poly_sub(F, frob[k / r], poly_mod(F, x, f)), f);
        if (g.size() != 1) return false;
    }
    if (n > 1) {
        Poly g = poly_gcd(F, poly_sub(F, frob[k / n], poly_mod(F, x, f)), f);
        if (g.size() != 1) return false;
    }
    return true;
}

bool irreducible_mod_p(const std::vector<Int>& f, const Int& p) {
    FiniteRingPresentation fp;
    fp.d = {p};
    fp.l = {Int(1)};
    BasisRing ring = BasisRing::unchecked(std::move(fp));
    TowerField F = TowerField::prime_field(ring, p);
    FieldPoly lifted(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) lifted[i] = FieldElement{mod_floor(f[i], p)};
    return irreducible_over_field(lifted, F);
}

FieldTestResult is_field_with_tower(const FiniteRingPresentation& R,
                                    const PrimalityOptions& options) {
    auto p = check_prime_equal_d(R, options);
    if (!p) return {false, {}};
    const std::size_t m = R.m();
    if (m == 1) return {true, {}};

    BasisRing ring = BasisRing::unchecked(R);
    TowerField F = TowerField::prime_field(ring, *p);
    FieldTestResult result;
    for (std::size_t i = 0; i < m; ++i) {
        FieldPoly f = minimal_polynomial_tower(F, i);
        if (!irreducible_over_field(f, F)) return result;
        F = F.extend(i, f);
        result.tower_degrees.push_back(f.size() - 1);
        if (F.dimension() == m) {
            result.field = true;
            return result;
        }
    }
    return result;
}

bool is_field(const FiniteRingPresentation& R, const PrimalityOptions& options) {
    return is_field_with_tower(R, options).field;
}

std::vector<RingElement> nilradical_mod_p(const FiniteRingPresentation& A) {
    const std::size_t m = A.m();
    const Int& p = A.d[0];
    for (const Int& di : A.d)
        if (di != p)
            throw PresentationError("nilradical_mod_p expects all d_i equal to p");

    BasisRing ring = BasisRing::unchecked(A);

    // Frobenius matrix: column j holds v_j^p
    std::vector<std::vector<Int>> frob(m, std::vector<Int>(m));
    for (std::size_t j = 0; j < m; ++j) {
        RingElement fj = ring.pow(ring.unit(j), p);
        for (std::size_t r = 0; r < m; ++r) frob[r][j] = mod_floor(fj.x[r], p);
    }

    // x nilpotent iff x^(p^e) = 0 once p^e >= m
    std::size_t e = 0;
    for (Int pe = 1; pe < Int(m); pe *= p) ++e;

    std::vector<std::vector<Int>> M(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) M[i][i] = 1;
    for (std::size_t step = 0; step < e; ++step) {
        std::vector<std::vector<Int>> N(m, std::vector<Int>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (frob[i][k] == 0) continue;
                for (std::size_t j = 0; j < m; ++j)
                    N[i][j] = mod_floor(N[i][j] + frob[i][k] * M[k][j], p);
            }
        M = std::move(N);
    }

    std::vector<RingElement> basis;
    for (auto& v : fp_kernel(std::move(M), p)) basis.push_back(RingElement{std::move(v)});
    return basis;
}

FiniteRingPresentation reduce_mod_p(const FiniteRingPresentation& R, const Int& p) {
    if (p < 2) throw PresentationError("reduce_mod_p: p must be at least 2");
    for (const Int& di : R.d)
        if (mod_floor(di, p) != 0)
            throw PresentationError("reduce_mod_p: p does not divide every d_i");
    FiniteRingPresentation A;
    A.d.assign(R.m(), p);
    A.l.resize(R.l.size());
    for (std::size_t i = 0; i < R.l.size(); ++i) A.l[i] = mod_floor(R.l[i], p);
    return A;
}

namespace {

FiniteRingPresentation quotient_by_nil(const FiniteRingPresentation& A,
                                       std::vector<RingElement> nil, const Int& p) {
    const std::size_t m = A.m();
    if (nil.empty()) return A;

    std::vector<std::vector<Int>> rows;
    rows.reserve(nil.size());
    for (auto& v : nil) rows.push_back(std::move(v.x));
    std::vector<std::size_t> pivots;
    fp_row_reduce(rows, pivots, p);

    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < m; ++c)
        if (!is_pivot[c]) complement.push_back(c);
    if (complement.empty())
        throw PresentationError("nilradical is the whole algebra: no identity");

    auto project = [&](const RingElement& x) {
        std::vector<Int> v(m);
        for (std::size_t j = 0; j < m; ++j) v[j] = mod_floor(x.x[j], p);
        for (std::size_t s = 0; s < rows.size(); ++s) {
            const Int c = v[pivots[s]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                v[j] = mod_floor(v[j] - c * rows[s][j], p);
        }
        std::vector<Int> out(complement.size());
        for (std::size_t t = 0; t < complement.size(); ++t) out[t] = v[complement[t]];
        return out;
    };

    const std::size_t r = complement.size();
    FiniteRingPresentation Q;
    Q.d.assign(r, p);
    Q.l.resize(r * r * r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            RingElement ua{std::vector<Int>(m)}, ub{std::vector<Int>(m)};
            ua.x[complement[a]] = 1;
            ub.x[complement[b]] = 1;
            std::vector<Int> prod = project(ring_mul(A, ua, ub));
            for (std::size_t k = 0; k < r; ++k) Q.sc(a, b, k) = prod[k];
        }
    return Q;
}

/* p with n = p^e for the largest possible e; nothing when n is not a
 * prime power. */
std::optional<Int> prime_power_base(const Int& n, const PrimalityOptions& options) {
    for (std::size_t e = bit_length(n); e >= 1; --e) {
        Int root;
        const int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(),
                                   static_cast<unsigned long>(e));
        if (exact && is_prime_integer(root, options)) return root;
    }
    return std::nullopt;
}

}  // namespace

bool is_local(const FiniteRingPresentation& R, const PrimalityOptions& options) {
    auto p = prime_power_base(R.d[R.m() - 1], options);
    if (!p) return false;
    for (const Int& di : R.d) {
        Int x = di;
        while (mod_floor(x, *p) == 0) x /= *p;
        if (x != 1) return false;
    }

    FiniteRingPresentation A = reduce_mod_p(R, *p);
    std::vector<RingElement> nil = nilradical_mod_p(A);
    FiniteRingPresentation Q = quotient_by_nil(A, std::move(nil), *p);
    return is_field(Q, options);
}

}  // namespace dedekind
