#include "dedekind/oracle.hpp"

#include <optional>

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

/* Mixed-radix indexing for coordinate vectors with 0 <= x_i < radix_i. */
struct Radix {
    std::vector<std::size_t> radix;
    std::vector<std::size_t> stride;
    std::size_t total = 1;

    explicit Radix(const std::vector<Int>& moduli, std::size_t cap) {
        Int count = 1;
        for (const Int& m : moduli) count *= m;
        if (count > Int(static_cast<unsigned long>(cap)))
            throw CapExceededError("oracle: ring of size " + to_decimal(count) +
                                   " exceeds cap " + std::to_string(cap));
        radix.reserve(moduli.size());
        for (const Int& m : moduli) radix.push_back(to_size(m, "oracle radix"));
        stride.assign(radix.size(), 1);
        for (std::size_t i = radix.size(); i-- > 0;) {
            stride[i] = total;
            total *= radix[i];
        }
    }

    std::vector<Int> unrank(std::size_t idx) const {
        std::vector<Int> v(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            v[i] = static_cast<unsigned long>((idx / stride[i]) % radix[i]);
        }
        return v;
    }

    std::size_t rank(const std::vector<Int>& v) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < radix.size(); ++i)
            idx += to_size(v[i], "oracle rank") * stride[i];
        return idx;
    }
};

}  // namespace

EnumeratedRing enumerate_quotient(const OrderPresentation& order, const TwoGenIdeal& ideal,
                                  std::size_t cap) {
    const std::size_t n = order.rank();
    const Int h = norm_multiple(order, ideal);
    const IdealHnfBasis basis = ideal_hnf_basis(order, ideal, h);
    const IntMatrix& H = basis.H;

    std::vector<Int> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = H(i, i);
    Radix rx(diag, cap);

    // reduce a coordinate vector modulo the column lattice of H
    // (upper triangular: walk rows bottom-up)
    auto reduce = [&](std::vector<Int> v) {
        for (std::size_t ii = n; ii-- > 0;) {
            const Int q = floor_div(v[ii], H(ii, ii));
            if (q == 0) continue;
            for (std::size_t r = 0; r <= ii; ++r) v[r] -= q * H(r, ii);
        }
        return v;
    };

    EnumeratedRing E;
    E.elements.reserve(rx.total);
    for (std::size_t idx = 0; idx < rx.total; ++idx) E.elements.push_back(rx.unrank(idx));

    if (Int(static_cast<unsigned long>(rx.total)) != basis.norm)
        throw Error("oracle: element count does not match det(H)");

    const std::size_t N = rx.total;
    E.add_table.resize(N * N);
    E.mul_table.resize(N * N);
    for (std::size_t a = 0; a < N; ++a) {
        const OrderElement xa{E.elements[a]};
        for (std::size_t b = 0; b <= a; ++b) {
            std::vector<Int> sum(n);
            for (std::size_t i = 0; i < n; ++i)
                sum[i] = E.elements[a][i] + E.elements[b][i];
            const std::uint32_t s =
                static_cast<std::uint32_t>(rx.rank(reduce(std::move(sum))));
            const OrderElement xb{E.elements[b]};
            const std::uint32_t p =
                static_cast<std::uint32_t>(rx.rank(reduce(order.mul(xa, xb).coords)));
            E.add_table[a * N + b] = E.add_table[b * N + a] = s;
            E.mul_table[a * N + b] = E.mul_table[b * N + a] = p;
        }
    }
    E.zero_index = rx.rank(reduce(std::vector<Int>(n)));
    return E;
}

EnumeratedRing enumerate_presentation(const FiniteRingPresentation& R, std::size_t cap) {
    const std::size_t m = R.m();
    Radix rx(R.d, cap);

    EnumeratedRing E;
    E.elements.reserve(rx.total);
    for (std::size_t idx = 0; idx < rx.total; ++idx) E.elements.push_back(rx.unrank(idx));

    const std::size_t N = rx.total;
    E.add_table.resize(N * N);
    E.mul_table.resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            std::vector<Int> sum(m), prod(m);
            for (std::size_t i = 0; i < m; ++i)
                sum[i] = mod_floor(E.elements[a][i] + E.elements[b][i], R.d[i]);
            for (std::size_t i = 0; i < m; ++i) {
                if (E.elements[a][i] == 0) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    if (E.elements[b][j] == 0) continue;
                    const Int c = E.elements[a][i] * E.elements[b][j];
                    for (std::size_t k = 0; k < m; ++k) prod[k] += c * R.sc(i, j, k);
                }
            }
            for (std::size_t k = 0; k < m; ++k) prod[k] = mod_floor(prod[k], R.d[k]);
            const std::uint32_t s = static_cast<std::uint32_t>(rx.rank(sum));
            const std::uint32_t p = static_cast<std::uint32_t>(rx.rank(prod));
            E.add_table[a * N + b] = E.add_table[b * N + a] = s;
            E.mul_table[a * N + b] = E.mul_table[b * N + a] = p;
        }
    E.zero_index = 0;
    return E;
}

namespace {

std::optional<std::size_t> find_identity_index(const EnumeratedRing& E) {
    for (std::size_t e = 0; e < E.size(); ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < E.size() && ok; ++x) ok = E.mul(e, x) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

std::vector<bool> unit_mask(const EnumeratedRing& E, std::size_t one) {
    std::vector<bool> unit(E.size(), false);
    for (std::size_t x = 0; x < E.size(); ++x)
        for (std::size_t y = 0; y < E.size(); ++y)
            if (E.mul(x, y) == one) {
                unit[x] = true;
                break;
            }
    return unit;
}

}  // namespace

bool oracle_is_field(const EnumeratedRing& E) {
    if (E.size() < 2) return false;
    auto one = find_identity_index(E);
    if (!one) return false;
    const std::vector<bool> unit = unit_mask(E, *one);
    for (std::size_t x = 0; x < E.size(); ++x)
        if (x != E.zero_index && !unit[x]) return false;
    return true;
}

bool oracle_is_local(const EnumeratedRing& E) {
    if (E.size() < 2) return false;
    auto one = find_identity_index(E);
    if (!one) return false;
    const std::vector<bool> unit = unit_mask(E, *one);

    std::vector<std::size_t> nonunits;
    for (std::size_t x = 0; x < E.size(); ++x)
        if (!unit[x]) nonunits.push_back(x);

    for (std::size_t a : nonunits)
        for (std::size_t b : nonunits)
            if (unit[E.add(a, b)]) return false;
    for (std::size_t a : nonunits)
        for (std::size_t r = 0; r < E.size(); ++r)
            if (unit[E.mul(r, a)]) return false;
    return true;
}

}  // namespace dedekind
