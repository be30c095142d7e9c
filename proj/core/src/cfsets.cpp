#include "sigmaconic/cfsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace sigmaconic {

FieldElem frobenius_q(const FieldTower& F, FieldElem x, unsigned m) { return F.frobenius_p(x, F.e() * m); }

namespace {

Vec unit(const FieldTower& F, std::size_t i) {
  Vec v(3, F.zero());
  v[i] = F.one();
  return v;
}

bool proportional(const FieldTower& F, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  const Vec c = cross(F, a, b);
  return std::all_of(c.begin(), c.end(), [](FieldElem x) { return x.code == 0; });
}

void check_gcd(const FieldTower& F, unsigned m) {
  if (std::gcd(m, F.n()) != 1)
    throw Error(ErrorCode::GcdViolation, "gcd(" + std::to_string(m) + ", " + std::to_string(F.n()) + ") != 1");
}

void require_canonical(const FieldTower& F, const CfSet& cf) {
  if (cf.degenerate) throw Error(ErrorCode::DegenerateInput, "expected a non-degenerate C_F^m-set");
  const ProjPoint R = ProjPoint::normalize(F, unit(F, 0));
  const ProjPoint L = ProjPoint::normalize(F, unit(F, 2));
  if (cf.R != R || cf.L != L)
    throw Error(ErrorCode::BadParams, "C_F^m-set is not in canonical position R=(1,0,0), L=(0,0,1)");
}

}  // namespace

PencilCollineation make_pencil_collineation(const FieldTower& F, const ProjPoint& R, const ProjPoint& L,
                                            const Matrix& a, unsigned m) {
  if (R.size() != 3 || L.size() != 3) throw Error(ErrorCode::DimensionMismatch, "vertices live in PG(2, q^n)");
  if (R == L) throw Error(ErrorCode::CoincidentVertices, "R and L must be distinct");
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorCode::DimensionMismatch, "A' must be 2x2");
  if (determinant(F, a).code == 0) throw Error(ErrorCode::SingularMatrix, "A' must be invertible");
  const Vec r = R.vec(), l = L.vec();
  for (std::size_t i : {1u, 0u, 2u}) {
    const std::array<Vec, 3> cols{r, unit(F, i), l};
    Matrix frame = from_columns(cols);
    if (determinant(F, frame).code != 0) return PencilCollineation{R, L, std::move(frame), a, m};
  }
  throw Error(ErrorCode::CoincidentVertices, "no frame completes R and L");
}

PencilCollineation pencil_collineation_from_form(const SesquiForm& form) {
  const auto& F = form.tower();
  if (form.d() != 2) throw Error(ErrorCode::DimensionMismatch, "pencil collineations live in PG(2, q^n)");
  if (form_rank(form) != 2) throw Error(ErrorCode::DegenerateInput, "form must have rank 2");
  const auto rad = radicals(form);
  const ProjPoint R = ProjPoint::normalize(F, rad.right.at(0));
  const ProjPoint L = ProjPoint::normalize(F, rad.left.at(0));
  if (R == L) throw Error(ErrorCode::CoincidentVertices, "left and right radicals coincide");
  // Placeholder A' to obtain the frame, then read A' off the normal form.
  PencilCollineation phi = make_pencil_collineation(F, R, L, Matrix::identity(2), F.m());
  const SesquiForm normal = change_coordinates(form, phi.frame);
  const Matrix& n = normal.matrix();
  Matrix a(2, 2);
  a(0, 0) = n(0, 1);
  a(0, 1) = n(0, 2);
  a(1, 0) = n(1, 1);
  a(1, 1) = n(1, 2);
  phi.a = a;
  return phi;
}

bool fixes_line_RL(const PencilCollineation& phi) { return phi.a(0, 1).code == 0; }

std::vector<ProjPoint> steiner_generate(const FieldTower& F, const PencilCollineation& phi) {
  if (phi.R == phi.L) throw Error(ErrorCode::CoincidentVertices, "R and L must be distinct");
  std::vector<ProjPoint> out;
  out.reserve(2 * F.size() + 1);
  auto emit = [&](std::span<const FieldElem> y) { out.push_back(ProjPoint::normalize(F, mat_vec(F, phi.frame, y))); };
  for (std::size_t i = 0; i <= F.size(); ++i) {
    const ProjPoint ab = point_at(F, 1, i);
    const FieldElem alpha = ab[0], beta = ab[1];
    const Vec l1{F.zero(), F.neg(beta), alpha};
    const FieldElem as = frobenius_q(F, alpha, phi.m), bs = frobenius_q(F, beta, phi.m);
    const Vec l2{F.add(F.mul(phi.a(0, 0), as), F.mul(phi.a(0, 1), bs)),
                 F.add(F.mul(phi.a(1, 0), as), F.mul(phi.a(1, 1), bs)), F.zero()};
    if (proportional(F, l1, l2)) {
      for (const auto& p : points_on(F, ProjLine::from_coords(F, l1))) emit(p.coords());
    } else {
      emit(cross(F, l1, l2));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CfSet cf_canonical(const FieldTower& F, unsigned m) {
  check_gcd(F, m);
  CfSet cf;
  cf.R = ProjPoint::normalize(F, unit(F, 0));
  cf.L = ProjPoint::normalize(F, unit(F, 2));
  cf.degenerate = false;
  cf.m = m;
  for (const auto& p : enumerate_points(F, 2)) {
    const FieldElem lhs = F.mul(p[0], frobenius_q(F, p[2], m));
    const FieldElem rhs = F.mul(frobenius_q(F, p[1], m), p[1]);
    if (lhs == rhs) cf.points.push_back(p);
  }
  return cf;
}

CfSet cf_degenerate_canonical(const FieldTower& F, unsigned m) {
  check_gcd(F, m);
  CfSet cf;
  cf.R = ProjPoint::normalize(F, unit(F, 0));
  cf.L = ProjPoint::normalize(F, unit(F, 1));
  cf.degenerate = true;
  cf.m = m;
  for (const auto& p : enumerate_points(F, 2)) {
    const FieldElem lhs = F.mul(p[0], frobenius_q(F, p[2], m));
    const FieldElem rhs = F.mul(p[2], frobenius_q(F, p[1], m));
    if (lhs == rhs) cf.points.push_back(p);
  }
  return cf;
}

std::vector<ProjPoint> cf_parametric(const FieldTower& F, unsigned m) {
  check_gcd(F, m);
  std::vector<ProjPoint> out;
  out.push_back(ProjPoint::normalize(F, unit(F, 0)));
  for (std::uint32_t c = 0; c < F.size(); ++c) {
    const FieldElem t{c};
    const Vec v{F.mul(frobenius_q(F, t, m), t), t, F.one()};
    out.push_back(ProjPoint::normalize(F, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComponentMap components(const FieldTower& F, const CfSet& cf) {
  require_canonical(F, cf);
  ComponentMap out;
  for (auto a : F.subfield_elements())
    if (a.code != 0) out[a.code];
  for (const auto& p : cf.points) {
    if (p == cf.R || p == cf.L) continue;
    if (p[2].code == 0) throw Error(ErrorCode::BadParams, "point of C_F^m-set off the affine chart");
    const FieldElem t = F.div(p[1], p[2]);
    out[F.norm(t).code].push_back(p);
  }
  return out;
}

Subplane embed_subplane_in_component(const FieldTower& F, const CfSet& cf) {
  require_canonical(F, cf);
  if (F.n() < 3) throw Error(ErrorCode::HypothesisViolation, "a PG(2, q) inside C_1 needs n >= 3");
  std::array<Vec, 3> basis;
  for (unsigned i = 0; i < 3; ++i) {
    const FieldElem b = F.basis_element(i);
    const FieldElem bs = frobenius_q(F, b, cf.m);
    basis[i] = Vec{frobenius_q(F, bs, cf.m), bs, b};
  }
  Subplane s = subplane_from_basis(F, basis);
  const auto comps = components(F, cf);
  const auto& c1 = comps.at(F.one().code);
  for (const auto& p : s.points)
    if (!std::binary_search(c1.begin(), c1.end(), p))
      throw Error(ErrorCode::DegenerateInput, "subplane point outside the component C_1");
  return s;
}

ExteriorSet exterior_set(const FieldTower& F, const CfSet& cf, std::span<const FieldElem> T) {
  require_canonical(F, cf);
  std::set<FieldElem> tset;
  for (auto a : T) {
    if (a.code == 0) throw Error(ErrorCode::ZeroArgument, "T must lie in F_q^*");
    if (!F.in_subfield(a)) throw Error(ErrorCode::NotInSubfield, "T must lie in F_q^*");
    tset.insert(a);
  }
  if (!tset.contains(F.one())) throw Error(ErrorCode::MissingOne, "T must contain 1");

  ExteriorSet x;
  x.T.assign(tset.begin(), tset.end());
  x.subplane = embed_subplane_in_component(F, cf);
  const auto comps = components(F, cf);
  std::set<ProjPoint> removed;
  for (auto a : x.T) {
    const auto& ca = comps.at(a.code);
    removed.insert(ca.begin(), ca.end());
    auto& ja = x.replaced[a.code];
    for (auto t : F.norm_class(a)) ja.push_back(ProjPoint::normalize(F, Vec{F.neg(t), F.zero(), F.one()}));
    std::sort(ja.begin(), ja.end());
  }
  for (const auto& p : cf.points)
    if (!removed.contains(p)) x.points.push_back(p);
  for (const auto& [a, ja] : x.replaced) x.points.insert(x.points.end(), ja.begin(), ja.end());
  std::sort(x.points.begin(), x.points.end());
  return x;
}

bool verify_exterior(const FieldTower& F, std::span<const ProjPoint> X, const Subplane& pi) {
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      if (X[i] == X[j]) continue;
      const ProjLine l = line_through(F, X[i], X[j]);
      for (const auto& s : pi.points)
        if (incident(F, s, l)) return false;
    }
  }
  return true;
}

}  // namespace sigmaconic
