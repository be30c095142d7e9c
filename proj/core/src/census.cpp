#include "sigmaconic/census.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "sigmaconic/cfsets.hpp"
#include "sigmaconic/rng.hpp"
#include "sigmaconic/sesqui.hpp"

namespace sigmaconic {

void CensusSummary::add(const CensusRecord& r) {
  ++matched;
  ++cardinality[r.cardinality];
  ++kinds[std::string(to_string(r.kind))];
  if (r.has_fixed) {
    ++fixed_profiles[{r.fixed_in, r.fixed_out}];
    if (q != 0 && r.fixed_in == q + 1) {
      ++q1_fixed;
      if (r.fixed_in_collinear) ++q1_fixed_collinear;
    }
  }
  if (r.epsilon) ++epsilon[*r.epsilon];
  if (!r.family.empty()) ++families[r.family];
  for (const auto& [size, lines] : r.spectrum) spectrum[size] += lines;
  if (!r.violations.empty()) ++records_with_violations;
  for (const auto& v : r.violations) ++violation_kinds[v];
  if (r.steiner_checked) ++steiner_checked;
}

std::uint64_t exhaustive_count(std::uint32_t Q, MatrixShape shape) {
  const unsigned k = shape == MatrixShape::Full ? 9 : 3;
  // 1 + Q + ... + Q^{k-1}
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, term = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (total > cap - term) return cap;
    total += term;
    if (i + 1 < k) {
      if (term > cap / Q) return cap;
      term *= Q;
    }
  }
  return total;
}

struct CensusEngine::Scratch {
  std::vector<std::uint8_t> flags;
  std::vector<std::uint32_t> hist;
  std::vector<std::uint32_t> fixed_on;
};

CensusEngine::CensusEngine(Field F, CensusConfig cfg) : field_(std::move(F)), cfg_(cfg) {
  const std::uint64_t Q = field_->size();
  if ((Q * Q + Q + 1) * (Q + 1) > kMaxIncidences)
    throw Error(ErrorCode::FieldTooLarge, "the incidence table of PG(2, " + std::to_string(Q) + ") is too large");
  index_ = std::make_unique<PlaneIndex>(field_);
  const auto& f = *field_;
  const std::size_t P = index_->num_points();
  x_.resize(3 * P);
  xs_.resize(3 * P);
  xs2_.resize(3 * P);
  lead_.resize(P);
  for (std::size_t i = 0; i < P; ++i) {
    const auto& p = index_->point(i);
    std::uint8_t lead = 3;
    for (std::size_t j = 0; j < 3; ++j) {
      x_[3 * i + j] = p[j].code;
      xs_[3 * i + j] = f.sigma(p[j]).code;
      xs2_[3 * i + j] = f.sigma(p[j], 2).code;
      if (lead == 3 && p[j].code != 0) lead = static_cast<std::uint8_t>(j);
    }
    lead_[i] = lead;
  }
}

CensusEngine::~CensusEngine() = default;

std::optional<CensusRecord> CensusEngine::process(std::uint64_t index, const MatrixCodes& a) const {
  Scratch s;
  return process(index, a, s);
}

std::optional<CensusRecord> CensusEngine::process(std::uint64_t index, const MatrixCodes& codes, Scratch& s) const {
  const auto& F = *field_;
  auto M = [&F](std::uint32_t x, std::uint32_t y) { return F.mul(FieldElem{x}, FieldElem{y}).code; };
  auto A = [&F](std::uint32_t x, std::uint32_t y) { return F.add(FieldElem{x}, FieldElem{y}).code; };
  auto S = [&F](std::uint32_t x, std::uint32_t y) { return F.sub(FieldElem{x}, FieldElem{y}).code; };
  const auto& a = codes;

  // Cofactor matrix C of A; C = det(A) (A^t)^{-1}.
  const std::array<std::uint32_t, 9> cof{
      S(M(a[4], a[8]), M(a[5], a[7])), S(M(a[5], a[6]), M(a[3], a[8])), S(M(a[3], a[7]), M(a[4], a[6])),
      S(M(a[2], a[7]), M(a[1], a[8])), S(M(a[0], a[8]), M(a[2], a[6])), S(M(a[1], a[6]), M(a[0], a[7])),
      S(M(a[1], a[5]), M(a[2], a[4])), S(M(a[2], a[3]), M(a[0], a[5])), S(M(a[0], a[4]), M(a[1], a[3]))};
  const std::uint32_t det = A(A(M(a[0], cof[0]), M(a[1], cof[1])), M(a[2], cof[2]));
  const bool invertible = det != 0;
  if (cfg_.matrix_class == MatrixClass::Invertible && !invertible) return std::nullopt;
  if (cfg_.matrix_class == MatrixClass::Degenerate && invertible) return std::nullopt;

  CensusRecord rec;
  rec.index = index;
  rec.a = codes;

  const std::size_t P = index_->num_points();
  s.flags.assign(P, 0);
  std::uint32_t card = 0;
  for (std::size_t i = 0; i < P; ++i) {
    const std::uint32_t* x = &x_[3 * i];
    const std::uint32_t* y = &xs_[3 * i];
    const std::uint32_t t0 = A(A(M(a[0], y[0]), M(a[1], y[1])), M(a[2], y[2]));
    const std::uint32_t t1 = A(A(M(a[3], y[0]), M(a[4], y[1])), M(a[5], y[2]));
    const std::uint32_t t2 = A(A(M(a[6], y[0]), M(a[7], y[1])), M(a[8], y[2]));
    const std::uint32_t v = A(A(M(x[0], t0), M(x[1], t1)), M(x[2], t2));
    if (v == 0) {
      s.flags[i] = 1;
      ++card;
    }
  }
  rec.cardinality = card;

  const std::uint32_t Q = F.size();
  const std::uint32_t q1 = F.q() + 1;
  s.hist.assign(Q + 2, 0);
  for (std::size_t l = 0; l < P; ++l) {
    std::uint32_t c = 0;
    for (auto i : index_->line_points(l)) c += s.flags[i];
    ++s.hist[c];
  }
  bool spectrum_ok = true;
  for (std::uint32_t k = 0; k < s.hist.size(); ++k) {
    if (s.hist[k] == 0) continue;
    rec.spectrum.emplace_back(k, s.hist[k]);
    const bool allowed = k <= 2 || k == q1 || (k == Q + 1 && !invertible);
    spectrum_ok = spectrum_ok && allowed;
  }
  if (!spectrum_ok) rec.violations.emplace_back("spectrum");

  if (cfg_.verify_sublines && q1 != Q + 1 && s.hist[q1] != 0) {
    AbsolutePointSet gamma;
    for (std::size_t i = 0; i < P; ++i)
      if (s.flags[i]) gamma.points.push_back(index_->point(i));
    LineSpectrum ls;
    ls.sizes.resize(P);
    for (std::size_t l = 0; l < P; ++l) {
      std::uint32_t c = 0;
      for (auto i : index_->line_points(l)) c += s.flags[i];
      ls.sizes[l] = c;
    }
    if (!spectrum_sublines_ok(*index_, gamma, ls)) rec.violations.emplace_back("non-subline");
  }

  if (!invertible) {
    finish_degenerate(rec, s.flags);
    return rec;
  }

  rec.rank = 3;
  rec.kind = PlaneKind::KestenbandNondegenerate;
  // f: x -> C A^sigma x^{sigma^2}
  std::array<std::uint32_t, 9> as{}, m{};
  for (std::size_t i = 0; i < 9; ++i) as[i] = F.sigma(FieldElem{a[i]}).code;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m[3 * r + c] = A(A(M(cof[3 * r], as[c]), M(cof[3 * r + 1], as[3 + c])), M(cof[3 * r + 2], as[6 + c]));

  s.fixed_on.clear();
  std::uint32_t fixed_out = 0;
  for (std::size_t i = 0; i < P; ++i) {
    const std::uint32_t* x = &x_[3 * i];
    const std::uint32_t* z = &xs2_[3 * i];
    const std::uint32_t y0 = A(A(M(m[0], z[0]), M(m[1], z[1])), M(m[2], z[2]));
    const std::uint32_t y1 = A(A(M(m[3], z[0]), M(m[4], z[1])), M(m[5], z[2]));
    const std::uint32_t y2 = A(A(M(m[6], z[0]), M(m[7], z[1])), M(m[8], z[2]));
    const std::uint32_t y[3] = {y0, y1, y2};
    const std::uint32_t yl = y[lead_[i]];
    if (y[0] != M(yl, x[0]) || y[1] != M(yl, x[1]) || y[2] != M(yl, x[2])) continue;
    if (s.flags[i]) {
      s.fixed_on.push_back(static_cast<std::uint32_t>(i));
    } else {
      ++fixed_out;
    }
  }
  rec.has_fixed = true;
  rec.fixed_in = static_cast<std::uint32_t>(s.fixed_on.size());
  rec.fixed_out = fixed_out;
  if (s.fixed_on.size() >= 3) {
    const ProjLine l = line_through(F, index_->point(s.fixed_on[0]), index_->point(s.fixed_on[1]));
    for (auto i : s.fixed_on)
      if (!incident(F, index_->point(i), l)) {
        rec.fixed_in_collinear = false;
        break;
      }
  }

  if (F.n() >= 2) {
    KestenbandProfile p;
    p.cardinality = card;
    p.fixed_in = rec.fixed_in;
    p.fixed_out = rec.fixed_out;
    p.fixed_in_collinear = rec.fixed_in_collinear;
    const bool diagonal = a[1] == 0 && a[2] == 0 && a[3] == 0 && a[5] == 0 && a[6] == 0 && a[7] == 0;
    kestenband_assess(F.q(), F.n(), diagonal, p);
    rec.epsilon = p.epsilon;
    rec.family = std::move(p.family);
    for (auto& v : p.violations) rec.violations.push_back(std::move(v));
  }
  return rec;
}

void CensusEngine::finish_degenerate(CensusRecord& rec, const std::vector<std::uint8_t>& flags) const {
  const auto& F = *field_;
  const std::uint32_t Q = F.size();
  const std::uint32_t q1 = F.q() + 1;
  AbsolutePointSet gamma;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) gamma.points.push_back(index_->point(i));

  try {
    const SesquiForm form(field_, Matrix::from_codes(F, 3, 3, rec.a));
    const auto pc = classify_plane_form(form, gamma);
    rec.rank = static_cast<unsigned>(pc.rank);
    rec.kind = pc.kind;
    std::uint64_t expected = 0;
    switch (pc.kind) {
      case PlaneKind::WholePlane: expected = std::uint64_t{Q} * Q + Q + 1; break;
      case PlaneKind::UnionTwoLines: expected = *pc.left_line == *pc.right_line ? Q + 1 : 2 * Q + 1; break;
      case PlaneKind::CF: expected = Q + 1; break;
      case PlaneKind::DegenerateCF: expected = 2 * Q + 1; break;
      case PlaneKind::ConeOverSigmaQuadric:
        rec.base = pc.base->kind;
        expected = 1 + std::uint64_t{Q} * pc.base->points.size();
        break;
      case PlaneKind::KestenbandNondegenerate: break;
    }
    if (rec.cardinality != expected) rec.violations.emplace_back("cardinality-shape");

    if (pc.kind == PlaneKind::CF || pc.kind == PlaneKind::DegenerateCF) {
      for (const auto& [k, lines] : rec.spectrum) {
        const bool ok = pc.kind == PlaneKind::CF ? (k <= 2 || k == q1) : (k == 1 || k == 2 || k == q1 || k == Q + 1);
        if (!ok) {
          rec.violations.emplace_back("spectrum-type");
          break;
        }
      }
      if (cfg_.steiner_check) {
        rec.steiner_checked = true;
        const auto phi = pencil_collineation_from_form(form);
        if (steiner_generate(F, phi) != gamma.points) rec.violations.emplace_back("steiner-mismatch");
      }
    }
  } catch (const Error& e) {
    rec.violations.emplace_back(std::string("classification-error:") + std::string(to_string(e.code())));
  }
}

namespace {

// Produces (index, matrix) pairs in source order.
class Source {
 public:
  Source(const CensusConfig& cfg, std::uint32_t Q) : cfg_(cfg), Q_(Q), k_(cfg.shape == MatrixShape::Full ? 9 : 3) {
    if (cfg.mode == SourceMode::Exhaustive) {
      total_ = exhaustive_count(Q, cfg.shape);
      if (total_ > kExhaustiveCap)
        throw Error(ErrorCode::TooLargeForExhaustive,
                    "exhaustive enumeration needs " +
                        (total_ == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                             : std::to_string(total_)) +
                        " matrices (cap " + std::to_string(kExhaustiveCap) + "); use random mode");
      lead_ = k_ - 1;
      digits_.assign(k_, 0);
      digits_[lead_] = 1;
    } else {
      total_ = std::numeric_limits<std::uint64_t>::max();
    }
  }

  bool next(std::uint64_t& index, MatrixCodes& a) {
    if (next_ >= total_) return false;
    index = next_++;
    std::array<std::uint32_t, 9> d{};
    if (cfg_.mode == SourceMode::Random) {
      for (unsigned i = 0; i < k_; ++i) d[i] = draw_element(cfg_.seed, index * k_ + i, Q_);
    } else {
      std::copy(digits_.begin(), digits_.end(), d.begin());
      advance();
    }
    a.fill(0);
    if (k_ == 9) {
      a = d;
    } else {
      a[0] = d[0];
      a[4] = d[1];
      a[8] = d[2];
    }
    return true;
  }

 private:
  void advance() {
    for (unsigned i = k_; i-- > lead_ + 1;) {
      if (++digits_[i] < Q_) return;
      digits_[i] = 0;
    }
    if (lead_ == 0) return;
    digits_.assign(k_, 0);
    digits_[--lead_] = 1;
  }

  const CensusConfig& cfg_;
  std::uint32_t Q_;
  unsigned k_;
  std::uint64_t total_ = 0, next_ = 0;
  unsigned lead_ = 0;
  std::vector<std::uint32_t> digits_;
};

}  // namespace

CensusSummary CensusEngine::run(const std::function<void(const CensusRecord&)>& sink) const {
  if (cfg_.mode == SourceMode::Random && cfg_.count == 0) throw Error(ErrorCode::BadParams, "random mode needs a count");
  Source src(cfg_, field_->size());
  CensusSummary sum;
  sum.q = field_->q();
  const bool random = cfg_.mode == SourceMode::Random;
  // Rejection sampling gives up after this many draws.
  const std::uint64_t max_attempts = random ? cfg_.count * 10'000 + 1'000'000 : std::numeric_limits<std::uint64_t>::max();
  auto done = [&] { return random && sum.matched >= cfg_.count; };
  auto emit = [&](const CensusRecord& r) {
    sum.add(r);
    if (sink) sink(r);
  };

  const unsigned threads = std::max(1u, cfg_.threads);
  std::uint64_t index = 0;
  MatrixCodes a{};
  if (threads == 1) {
    Scratch s;
    while (!done() && sum.attempts < max_attempts && src.next(index, a)) {
      ++sum.attempts;
      if (auto r = process(index, a, s)) emit(*r);
    }
    return sum;
  }

  constexpr std::size_t kBatch = 1 << 14;
  std::vector<std::pair<std::uint64_t, MatrixCodes>> batch;
  std::vector<std::optional<CensusRecord>> out;
  std::vector<Scratch> scratch(threads);
  while (!done() && sum.attempts < max_attempts) {
    batch.clear();
    while (batch.size() < kBatch && sum.attempts + batch.size() < max_attempts && src.next(index, a))
      batch.emplace_back(index, a);
    if (batch.empty()) break;
    out.assign(batch.size(), std::nullopt);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < batch.size(); i += threads) out[i] = process(batch[i].first, batch[i].second, scratch[t]);
      });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < batch.size() && !done(); ++i) {
      ++sum.attempts;
      if (out[i]) emit(*out[i]);
    }
  }
  return sum;
}

}  // namespace sigmaconic
