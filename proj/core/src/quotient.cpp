#include "dedekind/quotient.hpp"

#include "dedekind/errors.hpp"

namespace dedekind {

std::optional<QuotientBasis> output_basis(const OrderPresentation& order,
                                          const TwoGenIdeal& ideal, const Int& h) {
    if (h <= 0) throw Error("output_basis: h must be positive");
    const std::size_t n = order.rank();

    IdealHnfBasis basis = ideal_hnf_basis(order, ideal, h);
    if (basis.norm == 1) return std::nullopt;

    SnfResult snf = snf_with_transforms(basis.H, h);
    std::vector<Int> d_full = snf.diagonal();

    // everything below runs modulo h, with Vt = V^{-1} mod h
    const IntMatrix Vt = inverse_mod(snf.V, h);
    const IntMatrix VtT = Vt.transposed();
    const IntMatrix Vmod = snf.V.reduced_mod(h);

    // a(i,j,k): coordinates of eta_i eta_j over eta, before the final
    // change by V; per slice k this is Vt^T * C_k * Vt
    std::vector<Int> t(n * n * n);
    {
        std::vector<IntMatrix> A;
        A.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            IntMatrix Ck(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) Ck(i, j) = mod_floor(order.c(i, j, k), h);
            A.push_back((VtT * Ck * Vt).reduced_mod(h));
        }
        // t(i,j,.) = V * a(i,j,.) mod h
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Int acc = 0;
                    for (std::size_t s = 0; s < n; ++s) acc += Vmod(k, s) * A[s](i, j);
                    t[(i * n + j) * n + k] = mod_floor(acc, h);
                }
    }

    // drop the trailing d_i = 1 positions (the diagonal is decreasing, so
    // they form a suffix); coordinates there are identically 0
    std::size_t m = 0;
    while (m < n && d_full[m] > 1) ++m;
    if (m == 0) throw Error("output_basis: internal: norm > 1 but all d_i = 1");

    FiniteRingPresentation pres;
    pres.d.assign(d_full.begin(), d_full.begin() + m);
    pres.l.resize(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                pres.sc(i, j, k) = mod_floor(t[(i * n + j) * n + k], pres.d[k]);

    QuotientCertificate cert{snf.V, snf.U, std::move(d_full),
                             inverse_exact_unimodular(snf.V), basis.norm};
    return QuotientBasis{std::move(pres), std::move(cert)};
}

}  // namespace dedekind
