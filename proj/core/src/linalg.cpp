#include "sigmaconic/linalg.hpp"

#include <string>
#include <utility>

namespace sigmaconic {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
}

Matrix Matrix::identity(std::size_t k) {
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = FieldElem{1};
  return out;
}

Matrix Matrix::from_codes(const FieldTower& F, std::size_t rows, std::size_t cols,
                          std::span<const std::uint32_t> codes) {
  if (codes.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(codes.size()));
  std::vector<FieldElem> data;
  data.reserve(codes.size());
  for (auto c : codes) data.push_back(F.from_code(c));
  return Matrix(rows, cols, std::move(data));
}

std::vector<std::uint32_t> Matrix::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(data_.size());
  for (auto x : data_) out.push_back(x.code);
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x.code != 0) return false;
  return true;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

Matrix multiply(const FieldTower& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      FieldElem s = F.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a(r, k), b(k, c)));
      out(r, c) = s;
    }
  return out;
}

Matrix scale(const FieldTower& F, FieldElem c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) = F.mul(c, a(r, k));
  return out;
}

Matrix add(const FieldTower& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = F.add(a(r, c), b(r, c));
  return out;
}

Matrix apply_sigma(const FieldTower& F, const Matrix& a, int k) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = F.sigma(a(r, c), k);
  return out;
}

Vec mat_vec(const FieldTower& F, const Matrix& a, std::span<const FieldElem> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  Vec out(a.rows(), F.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    FieldElem s = F.zero();
    for (std::size_t c = 0; c < a.cols(); ++c) s = F.add(s, F.mul(a(r, c), x[c]));
    out[r] = s;
  }
  return out;
}

Vec apply_sigma(const FieldTower& F, std::span<const FieldElem> x, int k) {
  Vec out(x.begin(), x.end());
  for (auto& v : out) v = F.sigma(v, k);
  return out;
}

FieldElem dot(const FieldTower& F, std::span<const FieldElem> x, std::span<const FieldElem> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length");
  FieldElem s = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
  return s;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldTower& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).code == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(row, k));
    const FieldElem ic = F.inv(a(row, col));
    for (std::size_t k = 0; k < a.cols(); ++k) a(row, k) = F.mul(a(row, k), ic);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).code == 0) continue;
      const FieldElem c = a(r, col);
      for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) = F.sub(a(r, k), F.mul(c, a(row, k)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldTower& F, Matrix a) { return rref(F, a).size(); }

std::vector<Vec> nullspace(const FieldTower& F, Matrix a) {
  const auto pivots = rref(F, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(a(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElem determinant(const FieldTower& F, Matrix a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  FieldElem det = F.one();
  const std::size_t k = a.rows();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a(piv, col).code == 0) ++piv;
    if (piv == k) return F.zero();
    if (piv != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a(piv, c), a(col, c));
      det = F.neg(det);
    }
    det = F.mul(det, a(col, col));
    const FieldElem ic = F.inv(a(col, col));
    for (std::size_t r = col + 1; r < k; ++r) {
      if (a(r, col).code == 0) continue;
      const FieldElem f = F.mul(a(r, col), ic);
      for (std::size_t c = col; c < k; ++c) a(r, c) = F.sub(a(r, c), F.mul(f, a(col, c)));
    }
  }
  return det;
}

Matrix inverse(const FieldTower& F, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t k = a.rows();
  Matrix aug(k, 2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = a(r, c);
    aug(r, k + r) = F.one();
  }
  const auto pivots = rref(F, aug);
  if (pivots.size() < k || pivots[k - 1] != k - 1) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  Matrix out(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(r, c) = aug(r, k + c);
  return out;
}

Matrix from_columns(std::span<const Vec> cols) {
  if (cols.empty()) return {};
  Matrix out(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != out.rows()) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = cols[c][r];
  }
  return out;
}

}  // namespace sigmaconic
