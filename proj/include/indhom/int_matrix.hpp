#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "indhom/integer.hpp"

namespace indhom {

using IntVector = std::vector<Integer>;

// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    // Matrix whose columns are the given vectors (all of length `dim`).
    static IntMatrix from_columns(std::size_t dim, const std::vector<IntVector>& columns);
    static IntMatrix from_rows(std::size_t dim, const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    IntVector column(std::size_t c) const;
    std::vector<IntVector> columns() const;

    void swap_rows(std::size_t a, std::size_t b);
    IntMatrix transpose() const;
    bool is_zero() const;
    // Rows [begin, end) and all columns.
    IntMatrix row_block(std::size_t begin, std::size_t end) const;
    IntMatrix col_block(std::size_t begin, std::size_t end) const;
    // Horizontal concatenation [A | B]; row counts must agree.
    static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
bool is_zero(std::span<const Integer> v);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);

// Exact determinant (fraction-free Bareiss); square input required.
Integer determinant(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace indhom
