#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dedekind/integers.hpp"

namespace dedekind {

/* Dense matrix over Z, row-major, arbitrary-precision entries.
 * Dimensions are fixed at construction and must be at least 1x1. */
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    /* Columns of a, then columns of b (row counts must agree). */
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    /* Reduce every entry into [0, m) for m >= 1. */
    IntMatrix reduced_mod(const Int& m) const;

    /* Largest |entry|. */
    Int max_abs() const;

    /* One row per line, entries in decimal separated by single spaces. */
    std::string to_text() const;
    static IntMatrix from_text(const std::string& text);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

}  // namespace dedekind
