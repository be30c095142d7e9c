#include "sigmaconic/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sigmaconic/cfsets.hpp"

namespace sigmaconic {

std::string_view to_string(LineKind k) {
  switch (k) {
    case LineKind::Empty: return "Empty";
    case LineKind::OnePoint: return "OnePoint";
    case LineKind::TwoPoints: return "TwoPoints";
    case LineKind::Subline: return "Subline";
    case LineKind::Full: return "Full";
  }
  return "?";
}

std::string_view to_string(PlaneKind k) {
  switch (k) {
    case PlaneKind::WholePlane: return "WholePlane";
    case PlaneKind::UnionTwoLines: return "UnionTwoLines";
    case PlaneKind::ConeOverSigmaQuadric: return "ConeOverSigmaQuadric";
    case PlaneKind::DegenerateCF: return "DegenerateCF";
    case PlaneKind::CF: return "CF";
    case PlaneKind::KestenbandNondegenerate: return "KestenbandNondegenerate";
  }
  return "?";
}

LineClassification classify_line_form(const SesquiForm& form) {
  const auto& F = form.tower();
  if (form.d() != 1) throw Error(ErrorCode::DimensionMismatch, "expected a form on F_{q^n}^2");
  LineClassification out;
  out.points = absolute_points(form).points;
  const std::size_t k = out.points.size();
  const std::size_t q = F.q();
  if (k == F.size() + 1) {
    out.kind = LineKind::Full;
  } else if (k == 0) {
    out.kind = LineKind::Empty;
  } else if (k == 1) {
    out.kind = LineKind::OnePoint;
  } else if (k == 2) {
    out.kind = LineKind::TwoPoints;
  } else if (k == q + 1 && is_fq_subline(F, out.points)) {
    out.kind = LineKind::Subline;
  } else {
    throw Error(ErrorCode::HypothesisViolation,
                "sigma-quadric of unexpected shape with " + std::to_string(k) + " points");
  }
  out.degenerate = !(k == 0 || k == 2 || (k == q + 1 && out.kind == LineKind::Subline));
  return out;
}

std::map<std::uint32_t, std::uint64_t> LineSpectrum::histogram() const {
  std::map<std::uint32_t, std::uint64_t> h;
  for (auto s : sizes) ++h[s];
  return h;
}

LineSpectrum line_spectrum(const PlaneIndex& index, const AbsolutePointSet& gamma) {
  const auto& F = *index.field();
  std::vector<std::uint8_t> member(index.num_points(), 0);
  for (const auto& p : gamma.points) member[point_index(F, p)] = 1;
  LineSpectrum s;
  s.sizes.resize(index.num_points());
  for (std::size_t l = 0; l < index.num_points(); ++l) {
    std::uint32_t c = 0;
    for (auto i : index.line_points(l)) c += member[i];
    s.sizes[l] = c;
  }
  return s;
}

bool spectrum_sublines_ok(const PlaneIndex& index, const AbsolutePointSet& gamma, const LineSpectrum& spectrum) {
  const auto& F = *index.field();
  const std::uint32_t target = F.q() + 1;
  if (target == F.size() + 1) return true;
  std::vector<ProjPoint> on;
  for (std::size_t l = 0; l < spectrum.sizes.size(); ++l) {
    if (spectrum.sizes[l] != target) continue;
    on.clear();
    for (auto i : index.line_points(l))
      if (gamma.contains(index.point(i))) on.push_back(index.point(i));
    if (!is_fq_subline(F, on)) return false;
  }
  return true;
}

namespace {

ProjLine line_of_span(const FieldTower& F, const std::vector<Vec>& basis) {
  return ProjLine::from_coords(F, cross(F, basis.at(0), basis.at(1)));
}

Vec unit3(const FieldTower& F, std::size_t i) {
  Vec v(3, F.zero());
  v[i] = F.one();
  return v;
}

}  // namespace

PlaneClassification classify_plane_form(const SesquiForm& form) {
  return classify_plane_form(form, absolute_points(form));
}

PlaneClassification classify_plane_form(const SesquiForm& form, AbsolutePointSet gamma) {
  const auto& F = form.tower();
  if (form.d() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a form on F_{q^n}^3");
  PlaneClassification out;
  out.gamma = std::move(gamma);
  out.rank = form_rank(form);
  switch (out.rank) {
    case 0:
      out.kind = PlaneKind::WholePlane;
      return out;
    case 3:
      out.kind = PlaneKind::KestenbandNondegenerate;
      return out;
    case 1: {
      const auto rad = radicals(form);
      out.kind = PlaneKind::UnionTwoLines;
      out.left_line = line_of_span(F, rad.left);
      out.right_line = line_of_span(F, rad.right);
      return out;
    }
    default: break;
  }

  const auto rad = radicals(form);
  out.R = ProjPoint::normalize(F, rad.right.at(0));
  out.L = ProjPoint::normalize(F, rad.left.at(0));
  if (*out.R != *out.L) {
    const auto phi = pencil_collineation_from_form(form);
    out.kind = fixes_line_RL(phi) ? PlaneKind::DegenerateCF : PlaneKind::CF;
    return out;
  }

  out.kind = PlaneKind::ConeOverSigmaQuadric;
  const Vec r = out.R->vec();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const std::array<Vec, 3> cols{r, unit3(F, i), unit3(F, j)};
      const Matrix b = from_columns(cols);
      if (determinant(F, b).code == 0) continue;
      const Matrix n = change_coordinates(form, b).matrix();
      Matrix base(2, 2);
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) base(u, v) = n(u + 1, v + 1);
      out.base = classify_line_form(SesquiForm(form.field(), base));
      out.base_line = ProjLine::from_coords(F, cross(F, unit3(F, i), unit3(F, j)));
      return out;
    }
  }
  throw Error(ErrorCode::SingularMatrix, "no complement to the vertex");
}

std::uint64_t count_trinomial_roots(const FieldTower& F, const TrinomialSpec& t) {
  if (t.r.code == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "r must be non-zero");
  std::uint64_t c = 0;
  for (std::uint32_t i = 0; i < F.size(); ++i) {
    const FieldElem x{i};
    const FieldElem v = F.add(F.add(F.mul(t.r, F.mul(frobenius_q(F, x, t.m), x)), F.mul(t.rho, x)), t.s);
    if (v.code == 0) ++c;
  }
  return c;
}

namespace {

std::int64_t ipow(std::int64_t b, unsigned k) {
  std::int64_t r = 1;
  while (k--) r *= b;
  return r;
}

}  // namespace

std::vector<MenuEntry> kestenband_menu(unsigned q, unsigned N, bool diagonal) {
  if (N < 2) throw Error(ErrorCode::BadDegreeParity, "no Kestenband family for degree 1 over F_q");
  const std::int64_t Q = ipow(q, N);
  const std::int64_t qq = q;
  std::vector<MenuEntry> menu;
  if (N % 2 == 1) {
    const std::int64_t t = ipow(q, (N - 1) / 2 + 1);
    menu = {{"eps=-1", Q - t + 1}, {"eps=0", Q + 1}, {"eps=+1", Q + t + 1}};
    return menu;
  }
  const unsigned k = N / 2;
  const std::int64_t s = ipow(-qq, k);
  menu = {{"D1", Q + 1 - qq * s * (qq - 1)}, {"D2", Q + 1 + s * (qq - 1)}, {"D3", Q + 1 - 2 * s}};
  if (!diagonal) {
    menu.push_back({"N1", Q + qq * s + 1});
    menu.push_back({"N2", Q - s + 1});
    menu.push_back({"N3", Q + 1});
    if (q % 2 == 1) {
      menu.push_back({"N4", Q + ipow(q, k) + 1});
      menu.push_back({"N5", Q - ipow(q, k) + 1});
    }
  }
  return menu;
}

void kestenband_assess(unsigned q, unsigned N, bool diagonal, KestenbandProfile& p) {
  const auto menu = kestenband_menu(q, N, diagonal);
  const auto card = static_cast<std::int64_t>(p.cardinality);
  auto flag = [&](const char* v) { p.violations.emplace_back(v); };

  if (N % 2 == 0) {
    p.family.clear();
    for (const auto& e : menu) {
      if (e.value != card) continue;
      if (!p.family.empty()) p.family += '|';
      p.family += e.tag;
    }
    if (p.family.empty()) flag("cardinality-not-in-menu");
    return;
  }

  const std::int64_t t = ipow(q, (N - 1) / 2 + 1);
  const std::int64_t diff = card - ipow(q, N) - 1;
  if (diff % t == 0 && std::abs(diff / t) <= 1) {
    p.epsilon = static_cast<int>(diff / t);
  } else {
    p.epsilon.reset();
    flag("cardinality-not-in-menu");
    return;
  }

  const int eps = *p.epsilon;
  const std::uint64_t fi = p.fixed_in, fo = p.fixed_out;
  const std::uint64_t q1 = q + 1, q2 = std::uint64_t{q} * q;
  bool ok = true;
  if (q % 2 == 1) {
    if (fo == 0) {
      ok = eps == 0 && fi == 1;
    } else if (fo > 1) {
      ok = eps == 0 && fi == q1 && fo == q2;
    } else {
      if (fi == 0 || fi == 2 || fi == q1) {
        ok = eps == 0;
        if (fi == q1 && !p.fixed_in_collinear) flag("fixed-not-collinear");
      } else if (fi == 1) {
        ok = eps != 0;
      } else {
        ok = false;
      }
    }
  } else {
    if (fo == 0) {
      ok = eps != 0 && fi == 1;
    } else {
      ok = eps == 0 && (fi == 0 || fi == 2 || fi == q1);
      if (fi == q1) {
        ok = ok && fo == q2;
        if (!p.fixed_in_collinear) flag("fixed-not-collinear");
      }
    }
  }
  if (!ok) flag("fixed-profile");
}

bool is_diagonal(const Matrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c && a(r, c).code != 0) return false;
  return true;
}

KestenbandProfile kestenband_profile(const SesquiForm& form) {
  const auto& F = form.tower();
  if (form.d() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a form on F_{q^n}^3");
  if (F.n() < 2) throw Error(ErrorCode::BadDegreeParity, "no Kestenband family for degree 1 over F_q");
  KestenbandProfile p;
  const auto gamma = absolute_points(form);
  const auto fixed = fixed_points(induced_collineation(form));
  std::vector<ProjPoint> on;
  for (const auto& x : fixed) {
    if (gamma.contains(x)) {
      on.push_back(x);
    } else {
      ++p.fixed_out;
    }
  }
  p.cardinality = gamma.size();
  p.fixed_in = on.size();
  p.fixed_in_collinear = collinear(F, on);
  kestenband_assess(F.q(), F.n(), is_diagonal(form.matrix()), p);
  return p;
}

bool is_arc(const FieldTower& F, std::span<const ProjPoint> pts) {
  std::vector<ProjPoint> s(pts.begin(), pts.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<ProjLine> lines;
  for (std::size_t i = 0; i < s.size(); ++i) {
    lines.clear();
    for (std::size_t j = i + 1; j < s.size(); ++j) lines.push_back(line_through(F, s[i], s[j]));
    std::sort(lines.begin(), lines.end());
    if (std::adjacent_find(lines.begin(), lines.end()) != lines.end()) return false;
  }
  return true;
}

}  // namespace sigmaconic
