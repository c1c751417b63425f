#include "indhom/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace indhom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), data_(rows_ * cols_) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (auto v : row) (*this)(r, c++) = Integer(v);
        ++r;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t dim, const std::vector<IntVector>& columns) {
    IntMatrix m(dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != dim) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::size_t dim, const std::vector<IntVector>& rows) {
    IntMatrix m(rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dim) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<IntVector> IntMatrix::columns() const {
    std::vector<IntVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
    IntMatrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
    return m;
}

IntMatrix IntMatrix::col_block(std::size_t begin, std::size_t end) const {
    IntMatrix m(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
    return m;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto orow = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik.is_zero()) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!brow[j].is_zero()) orow[j].addmul(aik, brow[j]);
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!b(i, j).is_zero()) out(i, j) += b(i, j);
    return out;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) out(i, j) = -a(i, j);
    return out;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector out(a.rows());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, k).is_zero()) out[i].addmul(a(i, k), x[k]);
    }
    return out;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
    IntVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

IntVector sub(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
    IntVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k).is_zero()) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k);
                v.submul(m(i, k), m(k, j));
                m(i, j) = exact_div(v, prev);
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
}

}  // namespace indhom
