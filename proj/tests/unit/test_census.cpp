#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sigmaconic/census.hpp"
#include "sigmaconic/rng.hpp"

using namespace sigmaconic;

namespace {

std::vector<CensusRecord> collect(const CensusEngine& e, CensusSummary* sum = nullptr) {
  std::vector<CensusRecord> out;
  auto s = e.run([&](const CensusRecord& r) { out.push_back(r); });
  if (sum) *sum = s;
  return out;
}

bool same(const CensusRecord& a, const CensusRecord& b) {
  return a.index == b.index && a.a == b.a && a.rank == b.rank && a.kind == b.kind && a.cardinality == b.cardinality &&
         a.epsilon == b.epsilon && a.family == b.family && a.fixed_in == b.fixed_in && a.fixed_out == b.fixed_out &&
         a.spectrum == b.spectrum && a.violations == b.violations;
}

}  // namespace

TEST(Census, ExhaustiveCount) {
  EXPECT_EQ(exhaustive_count(4, MatrixShape::Diagonal), 21u);
  EXPECT_EQ(exhaustive_count(8, MatrixShape::Full), (134217728u - 1) / 7);
  EXPECT_EQ(exhaustive_count(1u << 20, MatrixShape::Full), std::numeric_limits<std::uint64_t>::max());
}

TEST(Census, DiagonalPG24) {
  CensusConfig cfg;
  cfg.shape = MatrixShape::Diagonal;
  CensusSummary sum;
  const auto recs = collect(CensusEngine(build_field(2, 1, 2, 1), cfg), &sum);
  EXPECT_EQ(sum.attempts, 21u);
  EXPECT_EQ(sum.matched, 9u);
  EXPECT_EQ(sum.cardinality, (std::map<std::uint32_t, std::uint64_t>{{3, 6}, {9, 3}}));
  EXPECT_EQ(sum.records_with_violations, 0u);
}

TEST(Census, RecordsMatchOracle) {
  auto F = build_field(3, 1, 2, 1);
  const oracle::RefField R(3, F->modulus());
  CensusConfig cfg;
  cfg.mode = SourceMode::Random;
  cfg.matrix_class = MatrixClass::All;
  cfg.count = 40;
  cfg.seed = 77;
  cfg.verify_sublines = true;
  for (const auto& r : collect(CensusEngine(F, cfg))) {
    const std::vector<std::uint32_t> a(r.a.begin(), r.a.end());
    EXPECT_EQ(r.cardinality, oracle::gamma(R, a, 3, 3).size());
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(Census, RandomDrawsFollowCounterLayout) {
  CensusConfig cfg;
  cfg.mode = SourceMode::Random;
  cfg.matrix_class = MatrixClass::All;
  cfg.count = 5;
  cfg.seed = 1234;
  const auto recs = collect(CensusEngine(build_field(2, 1, 3, 1), cfg));
  ASSERT_EQ(recs.size(), 5u);
  for (std::size_t j = 0; j < recs.size(); ++j)
    for (std::size_t k = 0; k < 9; ++k) EXPECT_EQ(recs[j].a[k], draw_element(1234, 9 * j + k, 8));
}

TEST(Census, DeterministicAndThreadInvariant) {
  auto F = build_field(2, 1, 3, 2);
  CensusConfig cfg;
  cfg.mode = SourceMode::Random;
  cfg.matrix_class = MatrixClass::Degenerate;
  cfg.count = 300;
  cfg.seed = 42;
  const auto a = collect(CensusEngine(F, cfg));
  const auto b = collect(CensusEngine(F, cfg));
  cfg.threads = 3;
  const auto c = collect(CensusEngine(F, cfg));
  ASSERT_EQ(a.size(), 300u);
  ASSERT_EQ(b.size(), a.size());
  ASSERT_EQ(c.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(same(a[i], b[i]));
    EXPECT_TRUE(same(a[i], c[i]));
  }
}

TEST(Census, CapRejectsLargeExhaustive) {
  CensusConfig cfg;
  try {
    CensusEngine(build_field(3, 1, 3, 1), cfg).run([](const CensusRecord&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForExhaustive);
  }
}

TEST(Census, ScalarInvariance) {
  auto F = build_field(3, 1, 2, 1);
  CensusConfig cfg;
  cfg.matrix_class = MatrixClass::All;
  const CensusEngine e(F, cfg);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::uint32_t> d(0, 8);
  for (int t = 0; t < 50; ++t) {
    MatrixCodes a, b;
    for (auto& x : a) x = d(rng);
    const FieldElem rho{1 + d(rng) % 8};
    for (std::size_t i = 0; i < 9; ++i) b[i] = F->mul(rho, FieldElem{a[i]}).code;
    const auto ra = e.process(0, a), rb = e.process(0, b);
    ASSERT_TRUE(ra && rb);
    EXPECT_EQ(ra->cardinality, rb->cardinality);
    EXPECT_EQ(ra->fixed_in, rb->fixed_in);
    EXPECT_EQ(ra->fixed_out, rb->fixed_out);
    EXPECT_EQ(ra->kind, rb->kind);
  }
}
