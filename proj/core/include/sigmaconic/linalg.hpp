#pragma once

// Dense matrices over F_{q^n}. Sizes here are tiny (forms are 2x2 or 3x3,
// field-reduction matrices are 3 x n), so storage is a flat row-major vector.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sigmaconic/gf.hpp"

namespace sigmaconic {

using Vec = std::vector<FieldElem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> data);

  static Matrix identity(std::size_t k);
  // Row-major codes, e.g. {1,0,0, 0,1,0, 0,0,1}; codes are validated against the field.
  static Matrix from_codes(const FieldTower& F, std::size_t rows, std::size_t cols,
                           std::span<const std::uint32_t> codes);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const FieldElem> data() const { return data_; }
  std::vector<std::uint32_t> codes() const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

Matrix transpose(const Matrix& a);
Matrix multiply(const FieldTower& F, const Matrix& a, const Matrix& b);
Matrix scale(const FieldTower& F, FieldElem c, const Matrix& a);
Matrix add(const FieldTower& F, const Matrix& a, const Matrix& b);
// Entry-wise sigma^k.
Matrix apply_sigma(const FieldTower& F, const Matrix& a, int k = 1);
Vec mat_vec(const FieldTower& F, const Matrix& a, std::span<const FieldElem> x);
Vec apply_sigma(const FieldTower& F, std::span<const FieldElem> x, int k = 1);
FieldElem dot(const FieldTower& F, std::span<const FieldElem> x, std::span<const FieldElem> y);

std::size_t rank(const FieldTower& F, Matrix a);
// Basis of {x : a x = 0}, in reduced form (free variables set to unit vectors
// in increasing order), so the result is deterministic.
std::vector<Vec> nullspace(const FieldTower& F, Matrix a);
FieldElem determinant(const FieldTower& F, Matrix a);
Matrix inverse(const FieldTower& F, const Matrix& a);
// Matrix with the given vectors as columns.
Matrix from_columns(std::span<const Vec> cols);

}  // namespace sigmaconic
