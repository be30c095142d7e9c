#include "sigmaconic/sesqui.hpp"

#include <algorithm>
#include <string>

namespace sigmaconic {

SesquiForm::SesquiForm(Field F, Matrix a) : field_(std::move(F)), a_(std::move(a)) {
  if (a_.rows() != a_.cols() || (a_.rows() != 2 && a_.rows() != 3))
    throw Error(ErrorCode::DimensionMismatch, "form matrix must be 2x2 or 3x3, got " + std::to_string(a_.rows()) +
                                                  "x" + std::to_string(a_.cols()));
}

bool AbsolutePointSet::contains(const ProjPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

FieldElem evaluate(const SesquiForm& form, std::span<const FieldElem> x, std::span<const FieldElem> y) {
  const auto& F = form.tower();
  if (x.size() != form.dim() || y.size() != form.dim())
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match the form");
  const Vec ys = apply_sigma(F, y);
  return dot(F, x, mat_vec(F, form.matrix(), ys));
}

FieldElem evaluate(const SesquiForm& form, const ProjPoint& p) { return evaluate(form, p.coords(), p.coords()); }

RadicalPair radicals(const SesquiForm& form) {
  const auto& F = form.tower();
  RadicalPair out;
  // x^t A = 0  <=>  A^t x = 0
  out.left = nullspace(F, transpose(form.matrix()));
  // A y^sigma = 0  <=>  B y = 0 with B = (a_ij^{sigma^{-1}})
  out.right = nullspace(F, apply_sigma(F, form.matrix(), -1));
  return out;
}

std::size_t form_rank(const SesquiForm& form) { return rank(form.tower(), form.matrix()); }

bool is_reflexive(const SesquiForm& form) {
  const auto& F = form.tower();
  const auto pts = enumerate_points(F, form.d());
  const std::size_t k = pts.size();
  // Gram-like table of <P_i, P_j>, zero flags only.
  std::vector<Vec> sig;
  sig.reserve(k);
  for (const auto& p : pts) sig.push_back(mat_vec(F, form.matrix(), apply_sigma(F, p.coords())));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool ij = dot(F, pts[i].coords(), sig[j]).code == 0;
      const bool ji = dot(F, pts[j].coords(), sig[i]).code == 0;
      if (ij != ji) return false;
    }
  }
  return true;
}

bool is_polarity(const SesquiForm& form) {
  const auto& F = form.tower();
  const Matrix m = multiply(F, inverse(F, transpose(form.matrix())), apply_sigma(F, form.matrix()));
  const bool sigma_involutive = (2 * F.m()) % F.n() == 0;
  if (!sigma_involutive) return false;
  const FieldElem rho = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != (r == c ? rho : F.zero())) return false;
  return true;
}

AbsolutePointSet absolute_points(const SesquiForm& form) {
  const auto& F = form.tower();
  AbsolutePointSet out;
  const auto count = point_count(F, form.d());
  for (std::size_t i = 0; i < count; ++i) {
    const ProjPoint p = point_at(F, form.d(), i);
    if (evaluate(form, p).code == 0) out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Collineation induced_collineation(const SesquiForm& form) {
  const auto& F = form.tower();
  Matrix m = multiply(F, inverse(F, transpose(form.matrix())), apply_sigma(F, form.matrix()));
  return Collineation{form.field(), std::move(m), 2};
}

ProjPoint apply(const Collineation& c, const ProjPoint& p) {
  const auto& F = *c.field;
  return ProjPoint::normalize(F, mat_vec(F, c.m, apply_sigma(F, p.coords(), c.sigma_power)));
}

std::vector<ProjPoint> fixed_points(const Collineation& c) {
  const auto& F = *c.field;
  std::vector<ProjPoint> out;
  const int d = static_cast<int>(c.m.rows()) - 1;
  for (const auto& p : enumerate_points(F, d))
    if (apply(c, p) == p) out.push_back(p);
  return out;
}

SesquiForm change_coordinates(const SesquiForm& form, const Matrix& b) {
  const auto& F = form.tower();
  return SesquiForm(form.field(), multiply(F, multiply(F, transpose(b), form.matrix()), apply_sigma(F, b)));
}

}  // namespace sigmaconic
