#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gmcc/field.hpp"

namespace gmcc {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a table-based field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of {x : M x = 0}, one basis vector per row of the result.
Matrix nullspace(const Field& f, Matrix m);

/// Number of nonzero coordinates.
std::size_t weight(std::span<const Element> v);

}  // namespace gmcc
