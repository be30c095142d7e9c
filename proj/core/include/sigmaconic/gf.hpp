#pragma once

// Arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^n}, q = p^e.
//
// F_{q^n} is a single extension F_p[x]/(f) of degree e*n. An element is
// identified by its integer code sum c_i p^i over the polynomial-basis
// coordinates c_0..c_{en-1}; this code is also the wire encoding used by
// reports and fixtures. F_q is recovered as the set {x : x^q = x}.
//
// The automorphism attached to a tower is sigma: x -> x^{q^m} with
// gcd(m, n) = 1.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sigmaconic/error.hpp"

namespace sigmaconic {

struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class FieldTower;
using Field = std::shared_ptr<const FieldTower>;

// Largest accepted q^n.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

// Builds F_{q^n} with q = p^e. The modulus is the monic irreducible of degree
// e*n whose coefficient list (c_{en-1}, ..., c_0) is lexicographically least,
// i.e. the one with the smallest code sum c_i p^i.
Field build_field(unsigned p, unsigned e, unsigned n, unsigned m);

class FieldTower {
 public:
  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  // Absolute degree e*n over F_p.
  unsigned degree() const { return e_ * n_; }
  std::uint32_t q() const { return q_; }
  // q^n, the number of elements.
  std::uint32_t size() const { return size_; }

  // Coefficients c_0..c_{en} of the monic modulus, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t k) const;
  FieldElem from_code(std::uint32_t code) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem x) const;
  // The class of x in F_p[x]/(f); a generator of F_{q^n} over F_p.
  FieldElem alpha() const;
  // Primitive element used for the log/exp tables.
  FieldElem generator() const { return exp_[1]; }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (p_ == 2) return {a.code ^ b.code};
    if (dense_) return {add_tab_[a.code * size_ + b.code]};
    return add_zech(a, b);
  }
  FieldElem neg(FieldElem a) const { return {neg_[a.code]}; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (dense_) return {mul_tab_[a.code * size_ + b.code]};
    if (a.code == 0 || b.code == 0) return {0};
    return exp_[log_[a.code] + log_[b.code]];
  }
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  // Square-and-multiply; negative exponents invert first.
  FieldElem pow(FieldElem a, std::int64_t k) const;

  // sigma^k(x) = x^{q^{mk}}; k may be negative.
  FieldElem sigma(FieldElem x, int k = 1) const {
    if (k == 1) return {sigma_[x.code]};
    if (k == -1) return {sigma_inv_[x.code]};
    return sigma_power(x, k);
  }
  // Frobenius x -> x^{p^k}, independent of m.
  FieldElem frobenius_p(FieldElem x, unsigned k) const;

  // N(x) = x^{(q^n - 1)/(q - 1)}, lies in F_q.
  FieldElem norm(FieldElem x) const;
  bool in_subfield(FieldElem x) const { return in_subfield_[x.code] != 0; }
  // Elements of F_q, ascending by code.
  const std::vector<FieldElem>& subfield_elements() const { return subfield_; }
  // N_a = {x : N(x) = a} for a in F_q^*.
  std::vector<FieldElem> norm_class(FieldElem a) const;

  bool is_square(FieldElem x) const;
  // True iff d lies in {x^{q^m + 1}}.
  bool is_sigma_norm_value(FieldElem d) const;

  // Discrete log w.r.t. generator(); x must be non-zero.
  std::uint32_t log(FieldElem x) const { return log_[x.code]; }
  FieldElem exp(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }

  // Coordinates over F_q of x in the basis 1, alpha, ..., alpha^{n-1}.
  std::vector<FieldElem> subfield_coordinates(FieldElem x) const;
  // Basis element alpha^i, i < n.
  FieldElem basis_element(unsigned i) const;

  FieldTower(unsigned p, unsigned e, unsigned n, unsigned m);

 private:
  FieldElem add_zech(FieldElem a, FieldElem b) const;
  FieldElem sigma_power(FieldElem x, int k) const;
  FieldElem exp_mod(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }

  void build_tables();
  void build_subfield_basis();

  unsigned p_, e_, n_, m_;
  std::uint32_t q_ = 0, size_ = 0;
  std::vector<std::uint32_t> modulus_;
  bool dense_ = false;

  std::vector<FieldElem> exp_;  // length 2(size-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNoLog when 1 + g^k = 0
  std::vector<std::uint32_t> sigma_, sigma_inv_;
  std::vector<std::uint8_t> in_subfield_;
  std::vector<std::uint8_t> mul_tab_, add_tab_;
  std::vector<FieldElem> subfield_;

  // F_p-linear change of basis from polynomial coordinates to the
  // coordinates over {gamma^j alpha^i}; gamma generates F_q^*.
  std::vector<std::uint32_t> to_tower_basis_;  // (en) x (en), row-major
  std::vector<FieldElem> gamma_powers_;
};

// Helpers that the tests use as an independent check on the modulus choice.
namespace detail {
bool is_prime(std::uint64_t k);
// Ben-Or irreducibility test over F_p; coeffs constant term first, monic.
bool is_irreducible(std::span<const std::uint32_t> coeffs, unsigned p);
std::vector<std::uint32_t> least_irreducible(unsigned p, unsigned degree);
}  // namespace detail

}  // namespace sigmaconic
