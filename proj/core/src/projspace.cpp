#include "sigmaconic/projspace.hpp"

#include <algorithm>
#include <string>

namespace sigmaconic {

ProjPoint ProjPoint::normalize(const FieldTower& F, std::span<const FieldElem> v) {
  if (v.size() < 2 || v.size() > 3)
    throw Error(ErrorCode::DimensionMismatch, "points need 2 or 3 coordinates, got " + std::to_string(v.size()));
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].code == 0) ++lead;
  if (lead == v.size()) throw Error(ErrorCode::ZeroVector, "the zero vector is not a projective point");
  ProjPoint p;
  p.size_ = static_cast<std::uint8_t>(v.size());
  const FieldElem s = F.inv(v[lead]);
  for (std::size_t i = 0; i < v.size(); ++i) p.c_[i] = i < lead ? F.zero() : (i == lead ? F.one() : F.mul(v[i], s));
  return p;
}

bool Subplane::contains(const ProjPoint& p) const { return std::binary_search(points.begin(), points.end(), p); }

std::uint64_t point_count(const FieldTower& F, int d) {
  const std::uint64_t Q = F.size();
  if (d == 1) return Q + 1;
  if (d == 2) return Q * Q + Q + 1;
  throw Error(ErrorCode::DimensionMismatch, "only PG(1, q^n) and PG(2, q^n) are supported");
}

ProjPoint point_at(const FieldTower& F, int d, std::size_t index) {
  const std::uint32_t Q = F.size();
  std::array<FieldElem, 3> c{};
  if (d == 1) {
    if (index == 0) {
      c = {F.zero(), F.one()};
    } else {
      c = {F.one(), FieldElem{static_cast<std::uint32_t>(index - 1)}};
    }
    return ProjPoint::normalize(F, std::span<const FieldElem>(c.data(), 2));
  }
  if (d != 2) throw Error(ErrorCode::DimensionMismatch, "only PG(1, q^n) and PG(2, q^n) are supported");
  if (index == 0) {
    c = {F.zero(), F.zero(), F.one()};
  } else if (index <= Q) {
    c = {F.zero(), F.one(), FieldElem{static_cast<std::uint32_t>(index - 1)}};
  } else {
    const std::size_t r = index - 1 - Q;
    c = {F.one(), FieldElem{static_cast<std::uint32_t>(r / Q)}, FieldElem{static_cast<std::uint32_t>(r % Q)}};
  }
  return ProjPoint::normalize(F, c);
}

std::vector<ProjPoint> enumerate_points(const FieldTower& F, int d) {
  const auto count = point_count(F, d);
  std::vector<ProjPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(point_at(F, d, i));
  return out;
}

std::size_t point_index(const FieldTower& F, const ProjPoint& p) {
  const std::size_t Q = F.size();
  if (p.size() == 2) return p[0].code == 0 ? 0 : 1 + p[1].code;
  if (p[0].code == 0) return p[1].code == 0 ? 0 : 1 + p[2].code;
  return 1 + Q + p[1].code * Q + p[2].code;
}

Vec cross(const FieldTower& F, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  if (a.size() != 3 || b.size() != 3) throw Error(ErrorCode::DimensionMismatch, "cross product needs 3-vectors");
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

bool incident(const FieldTower& F, const ProjPoint& p, const ProjLine& l) {
  return dot(F, p.coords(), l.dual().coords()).code == 0;
}

ProjLine line_through(const FieldTower& F, const ProjPoint& p, const ProjPoint& q) {
  if (p.size() != 3 || q.size() != 3) throw Error(ErrorCode::DimensionMismatch, "lines live in PG(2, q^n)");
  if (p == q) throw Error(ErrorCode::CoincidentPoints, "a line needs two distinct points");
  return ProjLine::from_coords(F, cross(F, p.coords(), q.coords()));
}

ProjPoint meet(const FieldTower& F, const ProjLine& a, const ProjLine& b) {
  if (a == b) throw Error(ErrorCode::CoincidentPoints, "coincident lines have no unique meet");
  return ProjPoint::normalize(F, cross(F, a.dual().coords(), b.dual().coords()));
}

namespace {

// Two independent vectors spanning the line u.x = 0.
std::pair<Vec, Vec> line_basis(const FieldTower& F, const ProjLine& l) {
  Matrix u(1, 3);
  for (std::size_t i = 0; i < 3; ++i) u(0, i) = l.dual()[i];
  auto ns = nullspace(F, u);
  return {ns[0], ns[1]};
}

}  // namespace

std::vector<ProjPoint> points_on(const FieldTower& F, const ProjLine& l) {
  if (l.dual().size() != 3) throw Error(ErrorCode::DimensionMismatch, "lines live in PG(2, q^n)");
  const auto [y, z] = line_basis(F, l);
  std::vector<ProjPoint> out;
  out.reserve(F.size() + 1);
  out.push_back(ProjPoint::normalize(F, y));
  Vec v(3);
  for (std::uint32_t c = 0; c < F.size(); ++c) {
    const FieldElem lam{c};
    for (std::size_t i = 0; i < 3; ++i) v[i] = F.add(F.mul(lam, y[i]), z[i]);
    out.push_back(ProjPoint::normalize(F, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pencil pencil(const FieldTower& F, const ProjPoint& center) {
  Pencil out{center, {}};
  // Lines through P are the dual points on the dual line with coordinates P.
  for (const auto& dual : points_on(F, ProjLine(center))) out.lines.emplace_back(dual);
  return out;
}

bool collinear(const FieldTower& F, std::span<const ProjPoint> pts) {
  if (pts.empty() || pts[0].size() == 2) return true;
  std::size_t j = 1;
  while (j < pts.size() && pts[j] == pts[0]) ++j;
  if (j == pts.size()) return true;
  const ProjLine l = line_through(F, pts[0], pts[j]);
  for (const auto& p : pts)
    if (!incident(F, p, l)) return false;
  return true;
}

std::optional<std::pair<FieldElem, FieldElem>> solve_in_span(const FieldTower& F, std::span<const FieldElem> y,
                                                             std::span<const FieldElem> z,
                                                             std::span<const FieldElem> x) {
  // Pick a 2x2 minor of [y z] that is invertible, solve, then check the rest.
  const std::size_t k = y.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const FieldElem det = F.sub(F.mul(y[i], z[j]), F.mul(y[j], z[i]));
      if (det.code == 0) continue;
      const FieldElem idet = F.inv(det);
      const FieldElem lam = F.mul(F.sub(F.mul(x[i], z[j]), F.mul(x[j], z[i])), idet);
      const FieldElem mu = F.mul(F.sub(F.mul(y[i], x[j]), F.mul(y[j], x[i])), idet);
      for (std::size_t r = 0; r < k; ++r) {
        if (F.add(F.mul(lam, y[r]), F.mul(mu, z[r])) != x[r]) return std::nullopt;
      }
      return std::make_pair(lam, mu);
    }
  }
  throw Error(ErrorCode::CoincidentPoints, "spanning vectors are dependent");
}

bool is_fq_subline(const FieldTower& F, std::span<const ProjPoint> pts) {
  if (pts.size() != F.q() + 1)
    throw Error(ErrorCode::WrongCardinality,
                "expected " + std::to_string(F.q() + 1) + " points, got " + std::to_string(pts.size()));
  std::vector<ProjPoint> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::WrongCardinality, "points are not distinct");
  if (!collinear(F, pts)) throw Error(ErrorCode::NotCollinear, "points do not lie on a common line");

  // pts[0] -> infinity, pts[1] -> 0, pts[2] -> 1
  const Vec p0 = pts[0].vec(), p1 = pts[1].vec();
  const auto ab = solve_in_span(F, p0, p1, pts[2].coords());
  if (!ab) return false;
  Vec y = p0, z = p1;
  for (auto& c : y) c = F.mul(c, ab->first);
  for (auto& c : z) c = F.mul(c, ab->second);
  for (std::size_t i = 3; i < pts.size(); ++i) {
    const auto lm = solve_in_span(F, y, z, pts[i].coords());
    if (!lm || lm->second.code == 0 || lm->first.code == 0) return false;
    if (!F.in_subfield(F.div(lm->first, lm->second))) return false;
  }
  return true;
}

Subplane subplane_from_basis(const FieldTower& F, const std::array<Vec, 3>& basis) {
  if (rank(F, from_columns(basis)) != 3) throw Error(ErrorCode::SingularMatrix, "subplane basis is dependent");
  Subplane s;
  s.basis = basis;
  Vec sum(3, F.zero());
  for (const auto& b : basis)
    for (std::size_t i = 0; i < 3; ++i) sum[i] = F.add(sum[i], b[i]);
  s.frame = {ProjPoint::normalize(F, basis[0]), ProjPoint::normalize(F, basis[1]), ProjPoint::normalize(F, basis[2]),
             ProjPoint::normalize(F, sum)};
  const auto& sub = F.subfield_elements();
  Vec v(3);
  for (auto c1 : sub)
    for (auto c2 : sub)
      for (auto c3 : sub) {
        if (c1.code == 0 && c2.code == 0 && c3.code == 0) continue;
        for (std::size_t i = 0; i < 3; ++i)
          v[i] = F.add(F.add(F.mul(c1, basis[0][i]), F.mul(c2, basis[1][i])), F.mul(c3, basis[2][i]));
        s.points.push_back(ProjPoint::normalize(F, v));
      }
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
  return s;
}

Subplane canonical_subplane(const FieldTower& F) {
  return subplane_from_basis(F, {Vec{F.one(), F.zero(), F.zero()}, Vec{F.zero(), F.one(), F.zero()},
                                 Vec{F.zero(), F.zero(), F.one()}});
}

PlaneIndex::PlaneIndex(Field F) : field_(std::move(F)) {
  const auto& f = *field_;
  points_ = enumerate_points(f, 2);
  per_line_ = f.size() + 1;
  incidence_.resize(points_.size() * per_line_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::size_t k = 0;
    for (const auto& p : points_on(f, ProjLine(points_[i])))
      incidence_[i * per_line_ + k++] = static_cast<std::uint32_t>(point_index(f, p));
  }
}

}  // namespace sigmaconic
