#include "dedekind/int_matrix.hpp"

#include <sstream>

#include "dedekind/errors.hpp"

namespace dedekind {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be at least 1x1");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw DimensionError("matrix dimensions must be at least 1x1");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw DimensionError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hcat: row counts differ");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                r(i, j) += a * rhs(k, j);
        }
    return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix IntMatrix::reduced_mod(const Int& m) const {
    if (m < 1) throw DimensionError("reduced_mod: modulus must be positive");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = mod_floor(entries_[i], m);
    return r;
}

Int IntMatrix::max_abs() const {
    Int m = 0;
    for (const Int& e : entries_) {
        Int a = int_abs(e);
        if (a > m) m = a;
    }
    return m;
}

std::string IntMatrix::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << to_decimal((*this)(i, j));
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix IntMatrix::from_text(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.push_back(int_from_decimal(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix text is empty");
    return from_rows(rows);
}

}  // namespace dedekind
