#include "sigmaconic/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sigmaconic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::NoIrreducible: return "NoIrreducible";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CoincidentVertices: return "CoincidentVertices";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::MissingOne: return "MissingOne";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::BadDegreeParity: return "BadDegreeParity";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kNoLog = 0xffffffffu;

using Poly = std::vector<std::uint64_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^{p-2}
  std::uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint64_t ic = inv_mod(b.back(), p);
    for (auto& c : b) c = c * ic % p;
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

Poly code_to_poly(std::uint32_t code, unsigned p, unsigned degree) {
  Poly r(degree, 0);
  for (unsigned i = 0; i < degree; ++i) {
    r[i] = code % p;
    code /= p;
  }
  trim(r);
  return r;
}

std::uint32_t poly_to_code(const Poly& a, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return static_cast<std::uint32_t>(code);
}

}  // namespace

namespace detail {

bool is_prime(std::uint64_t k) {
  if (k < 2) return false;
  for (std::uint64_t d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> coeffs, unsigned p) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  if (f[0] == 0) return false;
  // gcd(f, x^{p^i} - x) = 1 for all i <= deg/2
  Poly h{0, 1};
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly g = h;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(unsigned p, unsigned degree) {
  const std::uint64_t count = ipow(p, degree);
  std::vector<std::uint32_t> f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::NoIrreducible,
              "no irreducible polynomial of degree " + std::to_string(degree));
}

}  // namespace detail

Field build_field(unsigned p, unsigned e, unsigned n, unsigned m) {
  return std::make_shared<const FieldTower>(p, e, n, m);
}

FieldTower::FieldTower(unsigned p, unsigned e, unsigned n, unsigned m) : p_(p), e_(e), n_(n), m_(m) {
  if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (e == 0 || n == 0 || m == 0) throw Error(ErrorCode::BadParams, "e, n and m must be positive");
  if (std::gcd(m, n) != 1)
    throw Error(ErrorCode::GcdViolation,
                "gcd(m, n) = " + std::to_string(std::gcd(m, n)) + " for m=" + std::to_string(m) +
                    ", n=" + std::to_string(n));
  std::uint64_t total = 1;
  for (unsigned i = 0; i < e * n; ++i) {
    total *= p;
    if (total > kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge, "q^n exceeds " + std::to_string(kMaxFieldSize));
  }
  size_ = static_cast<std::uint32_t>(total);
  q_ = static_cast<std::uint32_t>(ipow(p, e));
  modulus_ = detail::least_irreducible(p, e * n);
  build_tables();
  build_subfield_basis();
}

void FieldTower::build_tables() {
  const unsigned D = degree();
  const Poly f(modulus_.begin(), modulus_.end());
  const std::uint64_t order = size_ - 1;

  // Primitive element: least code whose order is q^n - 1.
  std::uint32_t gen = 0;
  if (size_ == 2) {
    gen = 1;
  } else {
    const auto factors = prime_factors(order);
    for (std::uint32_t c = 2; c < size_ && gen == 0; ++c) {
      const Poly g = code_to_poly(c, p_, D);
      bool primitive = true;
      for (auto l : factors) {
        const Poly r = poly_powmod(g, order / l, f, p_);
        if (r.size() == 1 && r[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = c;
    }
  }

  exp_.assign(2 * order, FieldElem{});
  log_.assign(size_, kNoLog);
  {
    const Poly g = code_to_poly(gen, p_, D);
    Poly cur{1};
    for (std::uint64_t k = 0; k < order; ++k) {
      const std::uint32_t code = poly_to_code(cur, p_);
      exp_[k] = FieldElem{code};
      exp_[k + order] = FieldElem{code};
      log_[code] = static_cast<std::uint32_t>(k);
      cur = poly_mulmod(cur, g, f, p_);
    }
  }

  neg_.assign(size_, 0);
  for (std::uint32_t c = 0; c < size_; ++c) {
    std::uint32_t r = 0, mult = 1, x = c;
    for (unsigned i = 0; i < D; ++i) {
      const std::uint32_t digit = x % p_;
      x /= p_;
      r += ((p_ - digit) % p_) * mult;
      mult *= p_;
    }
    neg_[c] = r;
  }

  if (p_ != 2) {
    zech_.assign(order, kNoLog);
    for (std::uint64_t k = 0; k < order; ++k) {
      // 1 + g^k: add 1 to the constant coordinate
      const std::uint32_t c = exp_[k].code;
      const std::uint32_t sum = c - (c % p_) + ((c % p_) + 1) % p_;
      zech_[k] = sum == 0 ? kNoLog : log_[sum];
    }
  }

  // sigma: x -> x^{q^m}
  std::uint64_t qm = 1;
  for (unsigned i = 0; i < m_ % n_ * e_; ++i) qm = qm * p_ % order;
  std::uint64_t qm_inv = 1;  // q^{m(n-1)} inverts sigma
  for (unsigned i = 0; i < (m_ * (n_ - 1)) % n_ * e_; ++i) qm_inv = qm_inv * p_ % order;
  sigma_.assign(size_, 0);
  sigma_inv_.assign(size_, 0);
  for (std::uint32_t c = 1; c < size_; ++c) {
    sigma_[c] = exp_[static_cast<std::uint64_t>(log_[c]) * qm % order].code;
    sigma_inv_[c] = exp_[static_cast<std::uint64_t>(log_[c]) * qm_inv % order].code;
  }

  in_subfield_.assign(size_, 0);
  subfield_.clear();
  subfield_.push_back(FieldElem{0});
  in_subfield_[0] = 1;
  const std::uint64_t step = order / (q_ - 1);
  for (std::uint32_t c = 1; c < size_; ++c) {
    if (log_[c] % step == 0) {
      in_subfield_[c] = 1;
      subfield_.push_back(FieldElem{c});
    }
  }

  if (size_ <= 256) {
    dense_ = true;
    mul_tab_.assign(static_cast<std::size_t>(size_) * size_, 0);
    add_tab_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = 0; b < size_; ++b) {
        const std::size_t idx = static_cast<std::size_t>(a) * size_ + b;
        mul_tab_[idx] = static_cast<std::uint8_t>(
            (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]].code);
        add_tab_[idx] = static_cast<std::uint8_t>(
            p_ == 2 ? (a ^ b) : add_zech(FieldElem{a}, FieldElem{b}).code);
      }
    }
  }
}

void FieldTower::build_subfield_basis() {
  const unsigned D = degree();
  // gamma generates F_q^*, so 1, gamma, ..., gamma^{e-1} span F_q over F_p.
  const FieldElem gamma = exp_mod((size_ - 1) / (q_ - 1));
  gamma_powers_.clear();
  FieldElem g = one();
  for (unsigned j = 0; j < e_; ++j) {
    gamma_powers_.push_back(g);
    g = mul(g, gamma);
  }
  // Columns: polynomial coordinates of gamma^j alpha^i, column index i*e + j.
  std::vector<std::uint64_t> mat(static_cast<std::size_t>(D) * 2 * D, 0);
  const std::size_t width = 2 * D;
  for (unsigned i = 0; i < n_; ++i) {
    const FieldElem ai = basis_element(i);
    for (unsigned j = 0; j < e_; ++j) {
      const auto cs = coeffs(mul(gamma_powers_[j], ai));
      const unsigned col = i * e_ + j;
      for (unsigned r = 0; r < D; ++r) mat[r * width + col] = cs[r];
    }
  }
  for (unsigned r = 0; r < D; ++r) mat[r * width + D + r] = 1;
  // Gauss-Jordan over F_p
  for (unsigned col = 0; col < D; ++col) {
    unsigned piv = col;
    while (piv < D && mat[piv * width + col] == 0) ++piv;
    if (piv == D) throw Error(ErrorCode::NoIrreducible, "tower basis is singular");
    if (piv != col)
      for (std::size_t k = 0; k < width; ++k) std::swap(mat[piv * width + k], mat[col * width + k]);
    const std::uint64_t ic = inv_mod(mat[col * width + col], p_);
    for (std::size_t k = 0; k < width; ++k) mat[col * width + k] = mat[col * width + k] * ic % p_;
    for (unsigned r = 0; r < D; ++r) {
      if (r == col || mat[r * width + col] == 0) continue;
      const std::uint64_t c = mat[r * width + col];
      for (std::size_t k = 0; k < width; ++k)
        mat[r * width + k] = (mat[r * width + k] + (p_ - c) * mat[col * width + k]) % p_;
    }
  }
  to_tower_basis_.assign(static_cast<std::size_t>(D) * D, 0);
  for (unsigned r = 0; r < D; ++r)
    for (unsigned c = 0; c < D; ++c)
      to_tower_basis_[r * D + c] = static_cast<std::uint32_t>(mat[r * width + D + c]);
}

FieldElem FieldTower::add_zech(FieldElem a, FieldElem b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t order = size_ - 1;
  const std::uint32_t la = log_[a.code];
  const std::uint32_t lb = log_[b.code];
  const std::uint32_t k = lb >= la ? lb - la : lb + order - la;
  const std::uint32_t z = zech_[k];
  if (z == kNoLog) return FieldElem{0};
  return exp_[la + z];
}

FieldElem FieldTower::from_int(std::int64_t k) const {
  const std::int64_t r = ((k % static_cast<std::int64_t>(p_)) + p_) % p_;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldTower::from_code(std::uint32_t code) const {
  if (code >= size_)
    throw Error(ErrorCode::BadElement,
                "code " + std::to_string(code) + " out of range for field of size " + std::to_string(size_));
  return FieldElem{code};
}

FieldElem FieldTower::from_coeffs(std::span<const std::uint32_t> cs) const {
  if (cs.size() > degree()) throw Error(ErrorCode::BadElement, "too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i] >= p_) throw Error(ErrorCode::BadElement, "coefficient not reduced mod p");
    code = code * p_ + cs[i];
  }
  return FieldElem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldTower::coeffs(FieldElem x) const {
  std::vector<std::uint32_t> out(degree(), 0);
  std::uint32_t c = x.code;
  for (unsigned i = 0; i < degree(); ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElem FieldTower::alpha() const {
  if (degree() == 1) return FieldElem{0};
  return FieldElem{p_};
}

FieldElem FieldTower::basis_element(unsigned i) const {
  if (i >= n_) throw Error(ErrorCode::BadParams, "basis index out of range");
  return pow(alpha(), i);
}

FieldElem FieldTower::inv(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a.code]) % order];
}

FieldElem FieldTower::pow(FieldElem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  FieldElem r = one();
  FieldElem b = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElem FieldTower::sigma_power(FieldElem x, int k) const {
  if (x.code == 0) return x;
  const long kk = ((static_cast<long>(m_) * k) % static_cast<long>(n_) + n_) % n_;
  const std::uint64_t order = size_ - 1;
  std::uint64_t ex = 1;
  for (long i = 0; i < kk * static_cast<long>(e_); ++i) ex = ex * p_ % order;
  if (order == 1) return x;
  return exp_mod(static_cast<std::uint64_t>(log_[x.code]) * ex);
}

FieldElem FieldTower::frobenius_p(FieldElem x, unsigned k) const {
  if (x.code == 0) return x;
  const std::uint64_t order = size_ - 1;
  std::uint64_t ex = 1;
  for (unsigned i = 0; i < k % degree(); ++i) ex = ex * p_ % order;
  if (order == 1) return x;
  return exp_mod(static_cast<std::uint64_t>(log_[x.code]) * ex);
}

FieldElem FieldTower::norm(FieldElem x) const {
  if (x.code == 0) return x;
  const std::uint64_t order = size_ - 1;
  if (order == 1) return x;
  return exp_mod(static_cast<std::uint64_t>(log_[x.code]) * (order / (q_ - 1)));
}

std::vector<FieldElem> FieldTower::norm_class(FieldElem a) const {
  if (a.code == 0) throw Error(ErrorCode::ZeroArgument, "norm class of zero");
  if (!in_subfield(a)) throw Error(ErrorCode::NotInSubfield, "norm value must lie in F_q");
  std::vector<FieldElem> out;
  out.reserve((size_ - 1) / (q_ - 1));
  for (std::uint32_t c = 1; c < size_; ++c)
    if (norm(FieldElem{c}) == a) out.push_back(FieldElem{c});
  return out;
}

bool FieldTower::is_square(FieldElem x) const {
  if (x.code == 0 || p_ == 2) return true;
  return log_[x.code] % 2 == 0;
}

bool FieldTower::is_sigma_norm_value(FieldElem d) const {
  if (d.code == 0) return true;
  const std::uint64_t order = size_ - 1;
  std::uint64_t qm1 = 1;  // q^m + 1 mod order
  for (unsigned i = 0; i < m_ * e_; ++i) qm1 = qm1 * p_ % order;
  qm1 = (qm1 + 1) % order;
  const std::uint64_t r = std::gcd(order, qm1);
  return log_[d.code] % r == 0;
}

std::vector<FieldElem> FieldTower::subfield_coordinates(FieldElem x) const {
  const unsigned D = degree();
  const auto cs = coeffs(x);
  std::vector<FieldElem> out(n_, zero());
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < e_; ++j) {
      const unsigned row = i * e_ + j;
      std::uint64_t d = 0;
      for (unsigned c = 0; c < D; ++c) d = (d + std::uint64_t{to_tower_basis_[row * D + c]} * cs[c]) % p_;
      if (d != 0) out[i] = add(out[i], mul(from_int(static_cast<std::int64_t>(d)), gamma_powers_[j]));
    }
  }
  return out;
}

}  // namespace sigmaconic
