#pragma once

// Census over 3x3 forms of PG(2, q^n): for each matrix, |Gamma|, line-type
// spectrum, shape (rank <= 2) or Kestenband profile (rank 3), and the list of
// theorem checks that failed.
//
// Exhaustive mode walks the matrices with first non-zero entry 1 (one per
// scalar class, Gamma being invariant under A -> rho A) in lexicographic order
// of their entry codes. Random mode draws entries from the counter-based
// generator in rng.hpp: attempt j uses draws j*k .. j*k+k-1 (k = 9, or 3 for
// diagonal shape), row-major, and rejected attempts still consume their draws.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmaconic/classify.hpp"
#include "sigmaconic/gf.hpp"
#include "sigmaconic/projspace.hpp"

namespace sigmaconic {

enum class SourceMode { Exhaustive, Random };
enum class MatrixClass { Invertible, Degenerate, All };
enum class MatrixShape { Full, Diagonal };

inline constexpr std::uint64_t kExhaustiveCap = 100'000'000;
// Point-line incidences the engine is willing to tabulate.
inline constexpr std::uint64_t kMaxIncidences = 1ULL << 27;

struct CensusConfig {
  SourceMode mode = SourceMode::Exhaustive;
  MatrixClass matrix_class = MatrixClass::Invertible;
  MatrixShape shape = MatrixShape::Full;
  std::uint64_t count = 0;  // random mode: matrices to accept
  std::uint64_t seed = 0;
  unsigned threads = 1;
  // Check every (q+1)-point line intersection with is_fq_subline.
  bool verify_sublines = false;
  // Rank 2, distinct radicals: compare Gamma with the Steiner construction.
  bool steiner_check = true;
};

using MatrixCodes = std::array<std::uint32_t, 9>;

struct CensusRecord {
  std::uint64_t index = 0;
  MatrixCodes a{};
  unsigned rank = 0;
  PlaneKind kind = PlaneKind::WholePlane;
  std::uint32_t cardinality = 0;
  std::optional<int> epsilon;
  std::string family;
  // rank 3 only
  bool has_fixed = false;
  std::uint32_t fixed_in = 0, fixed_out = 0;
  bool fixed_in_collinear = true;
  // cone only
  std::optional<LineKind> base;
  bool steiner_checked = false;
  // (intersection size, number of lines), ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> spectrum;
  std::vector<std::string> violations;
};

struct CensusSummary {
  std::uint32_t q = 0;  // for the q+1 fixed-point tally
  std::uint64_t attempts = 0;  // matrices enumerated or drawn
  std::uint64_t matched = 0;   // passed the class filter
  std::map<std::uint32_t, std::uint64_t> cardinality;
  std::map<std::string, std::uint64_t> kinds;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> fixed_profiles;
  std::map<int, std::uint64_t> epsilon;
  std::map<std::string, std::uint64_t> families;
  // intersection size -> number of (matrix, line) incidences
  std::map<std::uint32_t, std::uint64_t> spectrum;
  std::uint64_t records_with_violations = 0;
  std::map<std::string, std::uint64_t> violation_kinds;
  std::uint64_t steiner_checked = 0;
  // rank 3 records with q+1 fixed points on Gamma, and how many were collinear
  std::uint64_t q1_fixed = 0, q1_fixed_collinear = 0;

  void add(const CensusRecord& r);
};

// Number of matrices an exhaustive run walks: (Q^k - 1)/(Q - 1) with k = 9 or
// 3. Saturates at UINT64_MAX.
std::uint64_t exhaustive_count(std::uint32_t Q, MatrixShape shape);

class CensusEngine {
 public:
  CensusEngine(Field F, CensusConfig cfg);
  ~CensusEngine();
  CensusEngine(const CensusEngine&) = delete;
  CensusEngine& operator=(const CensusEngine&) = delete;

  const Field& field() const { return field_; }
  const CensusConfig& config() const { return cfg_; }
  const PlaneIndex& index() const { return *index_; }

  // Evaluates one matrix; nullopt if it is filtered out by the class.
  std::optional<CensusRecord> process(std::uint64_t index, const MatrixCodes& a) const;

  // Walks the configured source, calling sink for each record in source
  // order whatever the thread count. Throws TooLargeForExhaustive above
  // kExhaustiveCap.
  CensusSummary run(const std::function<void(const CensusRecord&)>& sink) const;

 private:
  struct Scratch;
  std::optional<CensusRecord> process(std::uint64_t index, const MatrixCodes& a, Scratch& s) const;
  void finish_degenerate(CensusRecord& rec, const std::vector<std::uint8_t>& flags) const;

  Field field_;
  CensusConfig cfg_;
  std::unique_ptr<PlaneIndex> index_;
  // Per point: x, x^sigma, x^{sigma^2} (3 codes each) and the lead position.
  std::vector<std::uint32_t> x_, xs_, xs2_;
  std::vector<std::uint8_t> lead_;
};

}  // namespace sigmaconic
