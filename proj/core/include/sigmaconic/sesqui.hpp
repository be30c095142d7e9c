#pragma once

// sigma-sesquilinear forms <x, y> = X^t A Y^sigma on F_{q^n}^2 and F_{q^n}^3.
//
// The form is linear in the first argument and sigma-semilinear in the
// second. Degenerate forms are allowed everywhere except where an inverse of A
// is required (polarity test, induced collineation).

#include <span>
#include <vector>

#include "sigmaconic/gf.hpp"
#include "sigmaconic/linalg.hpp"
#include "sigmaconic/projspace.hpp"

namespace sigmaconic {

class SesquiForm {
 public:
  SesquiForm(Field F, Matrix a);

  const Field& field() const { return field_; }
  const FieldTower& tower() const { return *field_; }
  const Matrix& matrix() const { return a_; }
  // Vector-space dimension d + 1.
  std::size_t dim() const { return a_.rows(); }
  // Projective dimension d.
  int d() const { return static_cast<int>(a_.rows()) - 1; }

 private:
  Field field_;
  Matrix a_;
};

struct RadicalPair {
  std::vector<Vec> left;   // {x : <x, y> = 0 for all y}
  std::vector<Vec> right;  // {y : <x, y> = 0 for all x}
};

struct AbsolutePointSet {
  std::vector<ProjPoint> points;  // sorted

  bool contains(const ProjPoint& p) const;
  std::size_t size() const { return points.size(); }
};

// X -> M X^{sigma^k}
struct Collineation {
  Field field;
  Matrix m;
  int sigma_power = 2;
};

FieldElem evaluate(const SesquiForm& form, std::span<const FieldElem> x, std::span<const FieldElem> y);
// X^t A X^sigma for a single point; the defining equation of Gamma.
FieldElem evaluate(const SesquiForm& form, const ProjPoint& p);

RadicalPair radicals(const SesquiForm& form);
std::size_t form_rank(const SesquiForm& form);

// Exhaustive over pairs of projective points.
bool is_reflexive(const SesquiForm& form);
// A^t^{-1} A^sigma is scalar and sigma^2 = 1. Throws SingularMatrix.
bool is_polarity(const SesquiForm& form);

AbsolutePointSet absolute_points(const SesquiForm& form);

// f: X -> A_t^{-1} A^sigma X^{sigma^2}. Throws SingularMatrix.
Collineation induced_collineation(const SesquiForm& form);
ProjPoint apply(const Collineation& c, const ProjPoint& p);
std::vector<ProjPoint> fixed_points(const Collineation& c);

// The form in new coordinates X = B Y: matrix B^t A B^sigma.
SesquiForm change_coordinates(const SesquiForm& form, const Matrix& b);

}  // namespace sigmaconic
