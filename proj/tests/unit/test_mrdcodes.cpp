#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/mrdcodes.hpp"

using namespace sigmaconic;

namespace {

std::vector<std::vector<std::uint32_t>> rows_of(const FqMatrix& m) {
  std::vector<std::vector<std::uint32_t>> r(m.rows, std::vector<std::uint32_t>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i][j] = m(i, j).code;
  return r;
}

}  // namespace

TEST(Mrd, FieldReduceBasics) {
  auto F = build_field(3, 1, 3, 1);
  const Vec zero(3, F->zero());
  EXPECT_TRUE(field_reduce(*F, zero).is_zero());
  const Vec e1{F->one(), F->zero(), F->zero()};
  const auto m = field_reduce(*F, e1);
  EXPECT_EQ(m.rows, 3u);
  EXPECT_EQ(m.cols, 3u);
  EXPECT_EQ(m(0, 0), F->one());
  for (std::size_t i = 1; i < 9; ++i) EXPECT_EQ(m.entries[i].code, 0u);
}

TEST(Mrd, FieldReduceLinearAndRankMatchesSpanOracle) {
  auto F = build_field(3, 1, 3, 1);
  const oracle::RefField R(3, F->modulus());
  const auto sub = oracle::subfield(R, 3);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint32_t> d(0, 26);
  for (int t = 0; t < 300; ++t) {
    const Vec u{FieldElem{d(rng)}, FieldElem{d(rng)}, FieldElem{d(rng)}};
    const Vec v{FieldElem{d(rng)}, FieldElem{d(rng)}, FieldElem{d(rng)}};
    Vec w(3);
    for (int i = 0; i < 3; ++i) w[i] = F->add(u[i], v[i]);
    EXPECT_EQ(field_reduce(*F, w), add(*F, field_reduce(*F, u), field_reduce(*F, v)));
    const auto mu = field_reduce(*F, u);
    const std::size_t r = rank_fq(*F, mu);
    EXPECT_EQ(r, oracle::rank_by_span(R, sub, rows_of(mu)));
    const FieldElem lam{1 + d(rng) % 26};
    Vec lu(3);
    for (int i = 0; i < 3; ++i) lu[i] = F->mul(lam, u[i]);
    EXPECT_EQ(rank_fq(*F, field_reduce(*F, lu)), r);
  }
}

TEST(Mrd, SingletonBound) {
  EXPECT_EQ(singleton_bound(3, 3, 3, 2), 729u);
  EXPECT_EQ(singleton_bound(2, 3, 5, 3), 32u);
  EXPECT_EQ(singleton_bound(3, 3, 4, 1), 531441u);
  EXPECT_THROW(singleton_bound(3, 3, 3, 0), Error);
  EXPECT_THROW(singleton_bound(3, 4, 3, 2), Error);
}

TEST(Mrd, MinDistanceSmallCodes) {
  auto F = build_field(3, 1, 3, 1);
  RankCode c;
  c.cols = 3;
  c.q = 3;
  const Vec v{F->one(), F->alpha(), F->pow(F->alpha(), 2)};
  const auto M = field_reduce(*F, v);
  ASSERT_EQ(rank_fq(*F, M), 3u);
  c.matrices = {field_reduce(*F, Vec(3, F->zero())), M};
  std::sort(c.matrices.begin(), c.matrices.end());
  EXPECT_EQ(min_rank_distance(*F, c), 3u);
  c.matrices.resize(1);
  EXPECT_THROW(min_rank_distance(*F, c), Error);
}

TEST(Mrd, ExteriorCode) {
  auto F = build_field(3, 1, 3, 1);
  const auto cf = cf_canonical(*F, 1);
  const FieldElem one = F->one();
  const auto X = exterior_set(*F, cf, std::vector<FieldElem>{one});
  const auto code = build_code(*F, X, ScalarSet::AllUnits);
  EXPECT_EQ(code.size(), 729u);
  EXPECT_EQ(min_rank_distance(*F, code), 2u);
  EXPECT_TRUE(nonlinearity_witness(*F, code).has_value());
  // pi'_1 maps to the rank-1 matrices
  const Matrix K = subplane_frame(*F, X.subplane);
  for (const auto& p : X.subplane.points) {
    const auto v = mat_vec(*F, K, p.coords());
    EXPECT_EQ(rank_fq(*F, field_reduce(*F, v)), 1u);
  }
  const auto small = build_code(*F, X, ScalarSet::SubfieldUnits);
  EXPECT_EQ(small.size(), 2u * 28 + 1);
  auto G = build_field(2, 1, 3, 1);
  EXPECT_THROW(build_code(*G, exterior_set(*G, cf_canonical(*G, 1), std::vector<FieldElem>{G->one()}),
                          ScalarSet::AllUnits),
               Error);
}
