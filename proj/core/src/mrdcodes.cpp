#include "sigmaconic/mrdcodes.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace sigmaconic {

bool FqMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](FieldElem x) { return x.code == 0; });
}

FqMatrix field_reduce(const FieldTower& F, std::span<const FieldElem> v) {
  FqMatrix m;
  m.rows = v.size();
  m.cols = F.n();
  m.entries.reserve(m.rows * m.cols);
  for (auto x : v) {
    const auto c = F.subfield_coordinates(x);
    m.entries.insert(m.entries.end(), c.begin(), c.end());
  }
  return m;
}

std::size_t rank_fq(const FieldTower& F, const FqMatrix& m) {
  std::vector<FieldElem> e = m.entries;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && e[piv * m.cols + c].code == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(e[piv * m.cols + k], e[rank * m.cols + k]);
    const FieldElem inv = F.inv(e[rank * m.cols + c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const FieldElem f = F.mul(e[r * m.cols + c], inv);
      if (f.code == 0) continue;
      for (std::size_t k = c; k < m.cols; ++k)
        e[r * m.cols + k] = F.sub(e[r * m.cols + k], F.mul(f, e[rank * m.cols + k]));
    }
    ++rank;
  }
  return rank;
}

namespace {

FqMatrix combine(const FieldTower& F, const FqMatrix& a, const FqMatrix& b, bool subtract) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  FqMatrix out{a.rows, a.cols, a.entries};
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i] = subtract ? F.sub(a.entries[i], b.entries[i]) : F.add(a.entries[i], b.entries[i]);
  return out;
}

}  // namespace

FqMatrix add(const FieldTower& F, const FqMatrix& a, const FqMatrix& b) { return combine(F, a, b, false); }
FqMatrix sub(const FieldTower& F, const FqMatrix& a, const FqMatrix& b) { return combine(F, a, b, true); }

Matrix subplane_frame(const FieldTower& F, const Subplane& pi) { return inverse(F, from_columns(pi.basis)); }

bool RankCode::contains(const FqMatrix& m) const { return std::binary_search(matrices.begin(), matrices.end(), m); }

RankCode build_code(const FieldTower& F, const ExteriorSet& X, ScalarSet scalars) {
  if (F.q() <= 2 || F.n() < 3)
    throw Error(ErrorCode::HypothesisViolation, "the MRD construction needs q > 2 and n >= 3");
  RankCode code;
  code.cols = F.n();
  code.q = F.q();
  code.scalars = scalars;
  const Matrix kinv = subplane_frame(F, X.subplane);
  std::vector<FieldElem> rhos;
  if (scalars == ScalarSet::AllUnits) {
    for (std::uint32_t c = 1; c < F.size(); ++c) rhos.push_back(FieldElem{c});
  } else {
    for (auto a : F.subfield_elements())
      if (a.code != 0) rhos.push_back(a);
  }
  code.matrices.push_back(FqMatrix{3, F.n(), std::vector<FieldElem>(3 * F.n(), F.zero())});
  Vec w(3);
  for (const auto& p : X.points) {
    const Vec v = mat_vec(F, kinv, p.coords());
    for (auto rho : rhos) {
      for (std::size_t i = 0; i < 3; ++i) w[i] = F.mul(rho, v[i]);
      code.matrices.push_back(field_reduce(F, w));
    }
  }
  std::sort(code.matrices.begin(), code.matrices.end());
  code.matrices.erase(std::unique(code.matrices.begin(), code.matrices.end()), code.matrices.end());
  return code;
}

std::size_t min_rank_distance(const FieldTower& F, const RankCode& code) {
  if (code.size() < 2) throw Error(ErrorCode::TooSmall, "need at least two matrices");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      best = std::min(best, rank_fq(F, sub(F, code.matrices[i], code.matrices[j])));
      if (best == 0) return 0;
    }
  return best;
}

std::uint64_t singleton_bound(std::uint64_t q, std::size_t rows, std::size_t cols, std::size_t s) {
  if (q < 2 || rows == 0 || rows > cols || s < 1 || s > rows)
    throw Error(ErrorCode::BadParams, "singleton bound needs rows <= cols and 1 <= s <= rows");
  const std::size_t k = cols * (rows - s + 1);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) throw Error(ErrorCode::BadParams, "bound overflows");
    out *= q;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> nonlinearity_witness(const FieldTower& F, const RankCode& code) {
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i; j < code.size(); ++j)
      if (!code.contains(add(F, code.matrices[i], code.matrices[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace sigmaconic
