#include "dedekind/presentation.hpp"

#include <string>

#include "dedekind/errors.hpp"

namespace dedekind {

void validate_presentation(const FiniteRingPresentation& R) {
    const std::size_t m = R.m();
    if (m == 0) throw PresentationError("presentation must have at least one generator");
    if (R.l.size() != m * m * m)
        throw PresentationError("structure constant array must have m^3 entries");

    for (std::size_t i = 0; i < m; ++i) {
        if (R.d[i] < 2)
            throw PresentationError("d_" + std::to_string(i + 1) + " must be at least 2");
        if (i + 1 < m && R.d[i] % R.d[i + 1] != 0)
            throw PresentationError("divisibility chain broken: d_" + std::to_string(i + 2) +
                                    " does not divide d_" + std::to_string(i + 1));
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Int& v = R.sc(i, j, k);
                if (v < 0 || v >= R.d[k])
                    throw PresentationError("structure constant l(" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + "," +
                                            std::to_string(k + 1) + ") not reduced mod d_k");
                if (v != R.sc(j, i, k))
                    throw PresentationError("structure constants not commutative at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
                // d_i v_i = 0 forces d_i l(i,j,k) = 0 mod d_k
                if (mod_floor(R.d[i] * v, R.d[k]) != 0)
                    throw PresentationError("multiplication not well defined at l(" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "," + std::to_string(k + 1) + ")");
            }

    // associativity on generators: (v_i v_j) v_k = v_i (v_j v_k) mod d
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t t = 0; t < m; ++t) {
                    Int lhs = 0, rhs = 0;
                    for (std::size_t s = 0; s < m; ++s) {
                        lhs += R.sc(i, j, s) * R.sc(s, k, t);
                        rhs += R.sc(j, k, s) * R.sc(i, s, t);
                    }
                    if (mod_floor(lhs - rhs, R.d[t]) != 0)
                        throw PresentationError("associativity fails on generators (" +
                                                std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + "," +
                                                std::to_string(k + 1) + ")");
                }
}

}  // namespace dedekind
