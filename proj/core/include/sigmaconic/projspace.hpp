#pragma once

// Points, lines, pencils, sublines and subplanes of PG(1, q^n) and PG(2, q^n).
//
// A point is stored by its canonical representative: the leftmost non-zero
// coordinate is 1. Points are enumerated in lexicographic order of their
// coordinate codes, so for PG(2, Q) the index of
//   (0,0,1) is 0, (0,1,b) is 1 + b, (1,a,b) is 1 + Q + aQ + b.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sigmaconic/gf.hpp"
#include "sigmaconic/linalg.hpp"

namespace sigmaconic {

class ProjPoint {
 public:
  ProjPoint() = default;

  // Canonical representative of the point spanned by v (2 or 3 coordinates).
  static ProjPoint normalize(const FieldTower& F, std::span<const FieldElem> v);

  std::size_t size() const { return size_; }
  FieldElem operator[](std::size_t i) const { return c_[i]; }
  std::span<const FieldElem> coords() const { return {c_.data(), size_}; }
  Vec vec() const { return Vec(c_.begin(), c_.begin() + size_); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::uint8_t size_ = 0;
  std::array<FieldElem, 3> c_{};
};

// Line u1 x1 + u2 x2 + u3 x3 = 0 of PG(2, q^n), stored by its normalized dual
// coordinates.
class ProjLine {
 public:
  ProjLine() = default;
  explicit ProjLine(ProjPoint dual) : dual_(dual) {}
  static ProjLine from_coords(const FieldTower& F, std::span<const FieldElem> u) {
    return ProjLine(ProjPoint::normalize(F, u));
  }

  const ProjPoint& dual() const { return dual_; }

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  friend auto operator<=>(const ProjLine&, const ProjLine&) = default;

 private:
  ProjPoint dual_;
};

struct Pencil {
  ProjPoint center;
  std::vector<ProjLine> lines;
};

// A subgeometry PG(2, q) of PG(2, q^n): the points <c1 b1 + c2 b2 + c3 b3>
// with (c1, c2, c3) ranging over F_q^3 \ {0}.
struct Subplane {
  std::array<Vec, 3> basis;
  // b1, b2, b3 and b1 + b2 + b3: no three collinear.
  std::array<ProjPoint, 4> frame;
  // Sorted.
  std::vector<ProjPoint> points;

  bool contains(const ProjPoint& p) const;
};

std::uint64_t point_count(const FieldTower& F, int d);
std::vector<ProjPoint> enumerate_points(const FieldTower& F, int d);
std::size_t point_index(const FieldTower& F, const ProjPoint& p);
ProjPoint point_at(const FieldTower& F, int d, std::size_t index);

Vec cross(const FieldTower& F, std::span<const FieldElem> a, std::span<const FieldElem> b);
bool incident(const FieldTower& F, const ProjPoint& p, const ProjLine& l);
ProjLine line_through(const FieldTower& F, const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const FieldTower& F, const ProjLine& a, const ProjLine& b);
// Sorted; exactly q^n + 1 points.
std::vector<ProjPoint> points_on(const FieldTower& F, const ProjLine& l);
Pencil pencil(const FieldTower& F, const ProjPoint& center);
bool collinear(const FieldTower& F, std::span<const ProjPoint> pts);

// Writes x = lambda y + mu z if x lies in the span of y and z (which must be
// independent).
std::optional<std::pair<FieldElem, FieldElem>> solve_in_span(const FieldTower& F, std::span<const FieldElem> y,
                                                             std::span<const FieldElem> z,
                                                             std::span<const FieldElem> x);

// True iff the q+1 collinear points form an F_q-subline PG(1, q). Three of the
// points are sent to 0, 1 and infinity of a coordinatization of the line and
// the remaining points must then have parameters in F_q.
bool is_fq_subline(const FieldTower& F, std::span<const ProjPoint> pts);

Subplane subplane_from_basis(const FieldTower& F, const std::array<Vec, 3>& basis);
// Points with all coordinates in F_q after normalization.
Subplane canonical_subplane(const FieldTower& F);

// Precomputed incidence structure of PG(2, q^n): points and lines share the
// enumeration order, and line_points(i) lists the point indices on line i.
class PlaneIndex {
 public:
  explicit PlaneIndex(Field F);

  const Field& field() const { return field_; }
  std::size_t num_points() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const ProjPoint& point(std::size_t i) const { return points_[i]; }
  ProjLine line(std::size_t i) const { return ProjLine(points_[i]); }
  std::span<const std::uint32_t> line_points(std::size_t i) const {
    return {incidence_.data() + i * per_line_, per_line_};
  }
  std::size_t index_of(const ProjPoint& p) const { return point_index(*field_, p); }

 private:
  Field field_;
  std::vector<ProjPoint> points_;
  std::size_t per_line_ = 0;
  std::vector<std::uint32_t> incidence_;
};

}  // namespace sigmaconic
