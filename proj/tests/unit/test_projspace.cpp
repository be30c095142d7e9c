#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sigmaconic/projspace.hpp"

using namespace sigmaconic;

namespace {

std::vector<std::uint32_t> codes(const ProjPoint& p) {
  std::vector<std::uint32_t> v;
  for (auto x : p.coords()) v.push_back(x.code);
  return v;
}

ProjPoint pt(const FieldTower& F, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  const Vec v{FieldElem{a}, FieldElem{b}, FieldElem{c}};
  return ProjPoint::normalize(F, v);
}

}  // namespace

TEST(Projspace, EnumerationMatchesNaiveScaling) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}}) {
    auto F = build_field(p, 1, n, 1);
    const oracle::RefField R(p, F->modulus());
    for (int d : {1, 2}) {
      const auto lib = enumerate_points(*F, d);
      const auto ref = oracle::points(R, d + 1);
      ASSERT_EQ(lib.size(), ref.size());
      ASSERT_EQ(point_count(*F, d), ref.size());
      for (std::size_t i = 0; i < lib.size(); ++i) {
        EXPECT_EQ(codes(lib[i]), ref[i]);
        EXPECT_EQ(point_index(*F, lib[i]), i);
        EXPECT_EQ(point_at(*F, d, i), lib[i]);
      }
    }
  }
}

TEST(Projspace, IndexLayout) {
  auto F = build_field(2, 1, 3, 1);
  EXPECT_EQ(point_index(*F, pt(*F, 0, 0, 1)), 0u);
  EXPECT_EQ(point_index(*F, pt(*F, 0, 1, 5)), 6u);
  EXPECT_EQ(point_index(*F, pt(*F, 1, 2, 3)), 1u + 8 + 16 + 3);
}

TEST(Projspace, NormalizeRejectsZero) {
  auto F = build_field(2, 1, 2, 1);
  const Vec z(3, F->zero());
  try {
    ProjPoint::normalize(*F, z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Projspace, LinesAndIncidence) {
  auto F = build_field(3, 1, 2, 1);
  const auto pts = enumerate_points(*F, 2);
  const std::size_t Q = F->size();
  for (const auto& u : pts) {
    const ProjLine l(u);
    const auto on = points_on(*F, l);
    ASSERT_EQ(on.size(), Q + 1);
    std::size_t naive = 0;
    for (const auto& x : pts) naive += incident(*F, x, l);
    EXPECT_EQ(naive, Q + 1);
    EXPECT_TRUE(collinear(*F, on));
    EXPECT_EQ(line_through(*F, on[0], on[1]), l);
  }
  EXPECT_EQ(meet(*F, ProjLine(pt(*F, 1, 0, 0)), ProjLine(pt(*F, 0, 1, 0))), pt(*F, 0, 0, 1));
  try {
    line_through(*F, pts[3], pts[3]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CoincidentPoints);
  }
}

TEST(Projspace, PencilHasAllLinesThroughCenter) {
  auto F = build_field(2, 1, 3, 1);
  const auto c = pt(*F, 1, 3, 5);
  const auto pen = pencil(*F, c);
  EXPECT_EQ(pen.lines.size(), F->size() + 1u);
  std::set<ProjLine> s(pen.lines.begin(), pen.lines.end());
  EXPECT_EQ(s.size(), pen.lines.size());
  for (const auto& l : pen.lines) EXPECT_TRUE(incident(*F, c, l));
}

TEST(Projspace, PlaneIndexAgreesWithIncidence) {
  auto F = build_field(2, 1, 3, 1);
  PlaneIndex idx(F);
  ASSERT_EQ(idx.num_points(), 73u);
  for (std::size_t l = 0; l < idx.num_points(); ++l) {
    std::vector<std::uint32_t> naive;
    for (std::size_t i = 0; i < idx.num_points(); ++i)
      if (incident(*F, idx.point(i), idx.line(l))) naive.push_back(static_cast<std::uint32_t>(i));
    auto got = std::vector<std::uint32_t>(idx.line_points(l).begin(), idx.line_points(l).end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, naive);
  }
}

TEST(Projspace, SublineOfCanonicalLine) {
  auto F = build_field(3, 1, 2, 1);
  // (1, t) for t in F_3, plus (0, 1)
  std::vector<ProjPoint> s;
  for (auto t : F->subfield_elements()) s.push_back(ProjPoint::normalize(*F, Vec{F->one(), t}));
  s.push_back(ProjPoint::normalize(*F, Vec{F->zero(), F->one()}));
  EXPECT_TRUE(is_fq_subline(*F, s));
  s[1] = ProjPoint::normalize(*F, Vec{F->one(), FieldElem{3}});
  EXPECT_FALSE(is_fq_subline(*F, s));
}

// A set of q+1 collinear points is a subline iff it is
// {<y + t c z> : t in F_q} ∪ {<z>} for some y, z in the set and c in F_Q^*.
TEST(Projspace, SublineTestMatchesBruteForce) {
  auto F = build_field(3, 1, 2, 1);
  const auto line = points_on(*F, ProjLine(pt(*F, 1, 1, 0)));
  const std::size_t q = F->q();
  std::set<std::vector<ProjPoint>> sublines;
  for (std::size_t zi = 0; zi < line.size(); ++zi) {
    for (std::size_t yi = 0; yi < line.size(); ++yi) {
      if (yi == zi) continue;
      for (std::uint32_t c = 1; c < F->size(); ++c) {
        std::vector<ProjPoint> s{line[zi]};
        for (auto t : F->subfield_elements()) {
          Vec v(3);
          for (int k = 0; k < 3; ++k)
            v[k] = F->add(line[yi][k], F->mul(F->mul(t, FieldElem{c}), line[zi][k]));
          s.push_back(ProjPoint::normalize(*F, v));
        }
        std::sort(s.begin(), s.end());
        sublines.insert(s);
      }
    }
  }
  // choose(q+1)-subsets of a line of 10 points: check each
  std::size_t hits = 0;
  const std::size_t N = line.size();
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != q + 1) continue;
    std::vector<ProjPoint> s;
    for (std::size_t i = 0; i < N; ++i)
      if (mask >> i & 1) s.push_back(line[i]);
    const bool lib = is_fq_subline(*F, s);
    EXPECT_EQ(lib, sublines.count(s) == 1);
    hits += lib;
  }
  // |PGL(2,9)| / |PGL(2,3)| = 720 / 24
  EXPECT_EQ(hits, 30u);
}

TEST(Projspace, CanonicalSubplane) {
  auto F = build_field(3, 1, 2, 1);
  const auto pi = canonical_subplane(*F);
  EXPECT_EQ(pi.points.size(), 13u);
  for (const auto& x : pi.points)
    for (auto c : x.coords()) EXPECT_TRUE(F->in_subfield(c));
  EXPECT_TRUE(pi.contains(pt(*F, 1, 2, 1)));
  EXPECT_FALSE(pi.contains(pt(*F, 1, 3, 1)));
}

TEST(Projspace, SubplaneRejectsDependentBasis) {
  auto F = build_field(2, 1, 3, 1);
  const std::array<Vec, 3> b{Vec{F->one(), F->zero(), F->zero()}, Vec{F->zero(), F->one(), F->zero()},
                             Vec{F->one(), F->one(), F->zero()}};
  EXPECT_THROW(subplane_from_basis(*F, b), Error);
}
