#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/classify.hpp"

using namespace sigmaconic;

namespace {

Matrix m2(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return Matrix(2, 2, {FieldElem{a}, FieldElem{b}, FieldElem{c}, FieldElem{d}});
}

Matrix m3(std::initializer_list<std::uint32_t> codes) {
  std::vector<FieldElem> v;
  for (auto c : codes) v.push_back(FieldElem{c});
  return Matrix(3, 3, v);
}

ProjPoint pt(const FieldTower& F, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const Vec v{FieldElem{a}, FieldElem{b}, FieldElem{c}};
  return ProjPoint::normalize(F, v);
}

std::set<std::int64_t> values(const std::vector<MenuEntry>& menu) {
  std::set<std::int64_t> s;
  for (const auto& e : menu) s.insert(e.value);
  return s;
}

}  // namespace

TEST(ClassifyLine, PaperShapes) {
  auto F = build_field(3, 1, 2, 1);
  EXPECT_EQ(classify_line_form(SesquiForm(F, m2(1, 0, 0, 0))).kind, LineKind::OnePoint);
  const auto two = classify_line_form(SesquiForm(F, m2(0, 1, 0, 0)));
  EXPECT_EQ(two.kind, LineKind::TwoPoints);
  EXPECT_EQ(two.points.size(), 2u);
  const auto sub = classify_line_form(SesquiForm(F, m2(0, 1, 2, 0)));  // b = -c
  EXPECT_EQ(sub.kind, LineKind::Subline);
  EXPECT_EQ(sub.points.size(), 4u);
  EXPECT_FALSE(sub.degenerate);
  EXPECT_EQ(classify_line_form(SesquiForm(F, m2(0, 0, 0, 0))).kind, LineKind::Full);
}

TEST(ClassifyLine, EmptyWhenMinusDNonSquare) {
  // q = 3 odd; a = 1, b = c = 0, -d a non-square of F_3
  auto F = build_field(3, 1, 3, 1);
  const auto r = classify_line_form(SesquiForm(F, m2(1, 0, 0, 1)));  // -1 = 2 is a non-square mod 3
  EXPECT_EQ(r.kind, LineKind::Empty);
}

// Every 2x2 form over small fields: library shape agrees with a brute-force
// count, and the (q+1)-sets are sublines by a parameter search.
TEST(ClassifyLine, ExhaustiveAgainstOracle) {
  for (auto [p, n, m] : {std::tuple{2u, 3u, 1u}, {2u, 3u, 2u}, {3u, 2u, 1u}}) {
    auto F = build_field(p, 1, n, m);
    const oracle::RefField R(p, F->modulus());
    std::uint64_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= F->q();
    const std::uint32_t Q = F->size();
    std::map<std::size_t, std::size_t> sizes;
    for (std::uint32_t c = 1; c < Q * Q * Q * Q; ++c) {
      const std::vector<std::uint32_t> a{c / (Q * Q * Q), c / (Q * Q) % Q, c / Q % Q, c % Q};
      const auto ref = oracle::gamma(R, a, 2, qm);
      const auto lib = classify_line_form(SesquiForm(F, m2(a[0], a[1], a[2], a[3])));
      ASSERT_EQ(lib.points.size(), ref.size());
      ++sizes[ref.size()];
    }
    for (auto [k, cnt] : sizes) EXPECT_TRUE(k == 0 || k == 1 || k == 2 || k == F->q() + 1) << k;
  }
}

TEST(Trinomial, Examples) {
  auto F = build_field(2, 1, 3, 1);
  // s = 0, rho != 0
  for (std::uint32_t r = 1; r < 8; ++r)
    for (std::uint32_t rho = 1; rho < 8; ++rho)
      EXPECT_EQ(count_trinomial_roots(*F, {FieldElem{r}, FieldElem{rho}, F->zero(), 1}), 2u);
  // rho = 0, s = -r: gcd(q^m + 1, q^n - 1) = gcd(3, 7)
  EXPECT_EQ(count_trinomial_roots(*F, {F->one(), F->zero(), F->one(), 1}), 1u);
  EXPECT_THROW(count_trinomial_roots(*F, {F->zero(), F->one(), F->one(), 1}), Error);
}

TEST(Trinomial, ExhaustiveCountsInLemmaSet) {
  for (auto [p, n, m] : {std::tuple{2u, 3u, 1u}, {2u, 3u, 2u}, {3u, 2u, 1u}, {3u, 3u, 1u}}) {
    auto F = build_field(p, 1, n, m);
    const std::uint32_t Q = F->size();
    for (std::uint32_t r = 1; r < Q; ++r)
      for (std::uint32_t rho = 0; rho < Q; ++rho)
        for (std::uint32_t s = 0; s < Q; ++s) {
          const auto k = count_trinomial_roots(*F, {FieldElem{r}, FieldElem{rho}, FieldElem{s}, m});
          ASSERT_TRUE(k == 0 || k == 1 || k == 2 || k == F->q() + 1) << k;
        }
  }
}

TEST(Menu, OddDegree) {
  EXPECT_EQ(values(kestenband_menu(2, 3, false)), (std::set<std::int64_t>{5, 9, 13}));
  EXPECT_EQ(values(kestenband_menu(3, 3, false)), (std::set<std::int64_t>{19, 28, 37}));
  EXPECT_THROW(kestenband_menu(2, 1, false), Error);
}

TEST(Menu, EvenDegree) {
  EXPECT_EQ(values(kestenband_menu(2, 2, true)), (std::set<std::int64_t>{3, 9}));
  EXPECT_EQ(values(kestenband_menu(3, 2, true)), (std::set<std::int64_t>{4, 16, 28}));
  const auto nd = values(kestenband_menu(3, 2, false));
  for (auto v : {4, 16, 28, 1, 13, 10, 7}) EXPECT_TRUE(nd.count(v)) << v;
}

TEST(Kestenband, IdentityInPG24) {
  auto F = build_field(2, 1, 2, 1);
  const auto prof = kestenband_profile(SesquiForm(F, Matrix::identity(3)));
  EXPECT_EQ(prof.cardinality, 9u);
  EXPECT_TRUE(prof.violations.empty());
  // sigma^2 is the identity on F_4, so every point is fixed
  EXPECT_EQ(prof.fixed_in, 9u);
  EXPECT_EQ(prof.fixed_out, 12u);
  const auto sub = canonical_subplane(*F);
  const auto gamma = absolute_points(SesquiForm(F, Matrix::identity(3)));
  std::size_t on = 0;
  for (const auto& x : sub.points) on += gamma.contains(x);
  EXPECT_EQ(on, 3u);
}

TEST(Kestenband, DiagonalNonCube) {
  auto F = build_field(2, 1, 2, 1);
  const auto prof = kestenband_profile(SesquiForm(F, m3({1, 0, 0, 0, 1, 0, 0, 0, 2})));
  EXPECT_EQ(prof.cardinality, 3u);
  EXPECT_EQ(prof.family, "D2");
}

TEST(Kestenband, Errors) {
  auto F = build_field(2, 1, 3, 1);
  EXPECT_THROW(kestenband_profile(SesquiForm(F, Matrix(3, 3))), Error);
  auto G = build_field(2, 1, 1, 1);
  try {
    kestenband_profile(SesquiForm(G, Matrix::identity(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadDegreeParity);
  }
}

TEST(Kestenband, AssessFlagsBadProfiles) {
  KestenbandProfile p;
  p.cardinality = 7;
  kestenband_assess(2, 3, false, p);
  ASSERT_EQ(p.violations.size(), 1u);
  EXPECT_EQ(p.violations[0], "cardinality-not-in-menu");

  KestenbandProfile r;
  r.cardinality = 9;
  r.fixed_in = 3;
  r.fixed_out = 4;
  r.fixed_in_collinear = false;
  kestenband_assess(2, 3, false, r);
  EXPECT_EQ(r.epsilon, 0);
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), "fixed-not-collinear"), r.violations.end());
}

TEST(ClassifyPlane, PaperForms) {
  auto F = build_field(2, 1, 3, 1);
  // (0,a,b),(0,c,d),(0,0,0); b = 0, d = 1, a != 0
  const auto dcf = classify_plane_form(SesquiForm(F, m3({0, 3, 0, 0, 5, 1, 0, 0, 0})));
  EXPECT_EQ(dcf.kind, PlaneKind::DegenerateCF);
  EXPECT_EQ(dcf.gamma.size(), 17u);
  EXPECT_EQ(*dcf.R, pt(*F, 1, 0, 0));
  EXPECT_EQ(*dcf.L, pt(*F, 0, 0, 1));
  // d = 0, b = 1, c != 0
  const auto cf = classify_plane_form(SesquiForm(F, m3({0, 4, 1, 0, 6, 0, 0, 0, 0})));
  EXPECT_EQ(cf.kind, PlaneKind::CF);
  EXPECT_EQ(cf.gamma.size(), 9u);
  const auto cone = classify_plane_form(SesquiForm(F, m3({0, 0, 0, 0, 1, 0, 0, 0, 1})));
  EXPECT_EQ(cone.kind, PlaneKind::ConeOverSigmaQuadric);
  EXPECT_EQ(*cone.R, pt(*F, 1, 0, 0));
  ASSERT_TRUE(cone.base.has_value());
  // x^{sigma+1} + y^{sigma+1} = 0 on F_8: only (1,1)
  EXPECT_EQ(cone.gamma.size(), cone.base->points.size() * F->size() + 1);
  // rank 1 with x1 x3^sigma = 0
  const auto u = classify_plane_form(SesquiForm(F, m3({0, 0, 1, 0, 0, 0, 0, 0, 0})));
  EXPECT_EQ(u.kind, PlaneKind::UnionTwoLines);
  EXPECT_EQ(u.gamma.size(), 2u * F->size() + 1);
  EXPECT_EQ(classify_plane_form(SesquiForm(F, Matrix::identity(3))).kind, PlaneKind::KestenbandNondegenerate);
  EXPECT_EQ(classify_plane_form(SesquiForm(F, Matrix(3, 3))).kind, PlaneKind::WholePlane);
}

TEST(LineSpectrum, UnionOfLinesAndNondegenerate) {
  auto F = build_field(2, 1, 3, 1);
  PlaneIndex idx(F);
  const auto u = absolute_points(SesquiForm(F, m3({0, 0, 1, 0, 0, 0, 0, 0, 0})));
  EXPECT_EQ(line_spectrum(idx, u).histogram().at(9), 2u);
  const SesquiForm nd(F, m3({1, 2, 0, 0, 1, 3, 4, 0, 1}));
  ASSERT_EQ(form_rank(nd), 3u);
  const auto g = absolute_points(nd);
  const auto s = line_spectrum(idx, g);
  EXPECT_EQ(s.histogram().count(9), 0u);
  EXPECT_TRUE(spectrum_sublines_ok(idx, g, s));
  std::uint64_t incid = 0;
  for (auto v : s.sizes) incid += v;
  EXPECT_EQ(incid, g.size() * 9);
}

TEST(Arc, Basics) {
  auto F = build_field(2, 1, 3, 1);
  const std::vector<ProjPoint> tri{pt(*F, 1, 0, 0), pt(*F, 0, 1, 0), pt(*F, 0, 0, 1)};
  EXPECT_TRUE(is_arc(*F, tri));
  EXPECT_FALSE(is_arc(*F, points_on(*F, ProjLine(pt(*F, 1, 1, 0)))));
}

TEST(Arc, HyperovalsInPG28) {
  auto F = build_field(2, 1, 3, 1);
  for (unsigned m : {1u, 2u}) {
    const auto dg = cf_degenerate_canonical(*F, m);
    std::vector<ProjPoint> h{dg.R, dg.L};
    for (const auto& x : dg.points)
      if (x[2].code != 0) h.push_back(x);
    ASSERT_EQ(h.size(), 10u);
    EXPECT_TRUE(is_arc(*F, h)) << m;
  }
}
