#pragma once

// Field reduction F_{q^n}^3 -> M_{3,n}(F_q) and rank-distance codes built
// from exterior sets.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/gf.hpp"
#include "sigmaconic/linalg.hpp"

namespace sigmaconic {

// Entries are elements of F_q (held as elements of F_{q^n}), row-major.
struct FqMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<FieldElem> entries;

  FieldElem operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

// Row i holds the coordinates of v_i over 1, alpha, ..., alpha^{n-1}.
FqMatrix field_reduce(const FieldTower& F, std::span<const FieldElem> v);
std::size_t rank_fq(const FieldTower& F, const FqMatrix& m);
FqMatrix add(const FieldTower& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix sub(const FieldTower& F, const FqMatrix& a, const FqMatrix& b);

// K^{-1}, where the columns of K are the basis of pi. In the coordinates
// K^{-1} X the subplane pi becomes PG(2, q), whose field reductions are
// exactly the rank-1 matrices.
Matrix subplane_frame(const FieldTower& F, const Subplane& pi);

// Multipliers applied to each point representative: F_q^* or F_{q^n}^*.
enum class ScalarSet { SubfieldUnits, AllUnits };

struct RankCode {
  std::vector<FqMatrix> matrices;  // sorted, distinct, contains 0
  std::size_t rows = 3, cols = 0;
  std::uint32_t q = 0;
  std::size_t claimed_distance = 2;
  ScalarSet scalars = ScalarSet::AllUnits;

  bool contains(const FqMatrix& m) const;
  std::size_t size() const { return matrices.size(); }
};

// {field_reduce(K^{-1} rho v) : <v> in X, rho in scalars} ∪ {0}.
// Requires q > 2 and n >= 3 (HypothesisViolation).
RankCode build_code(const FieldTower& F, const ExteriorSet& X, ScalarSet scalars);

// Minimum rank of M - M' over distinct pairs. TooSmall below 2 matrices.
std::size_t min_rank_distance(const FieldTower& F, const RankCode& code);

// q^{cols (rows - s + 1)}; requires rows <= cols and 1 <= s <= rows.
std::uint64_t singleton_bound(std::uint64_t q, std::size_t rows, std::size_t cols, std::size_t s);

// Indices (i, j) with M_i + M_j outside the code, if any.
std::optional<std::pair<std::size_t, std::size_t>> nonlinearity_witness(const FieldTower& F, const RankCode& code);

}  // namespace sigmaconic
