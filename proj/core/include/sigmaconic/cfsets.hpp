#pragma once

// Steiner-type generation of C_F^m-sets, their canonical models, norm-class
// components, and the exterior sets obtained by swapping components for
// point classes on the line RL.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sigmaconic/gf.hpp"
#include "sigmaconic/linalg.hpp"
#include "sigmaconic/projspace.hpp"
#include "sigmaconic/sesqui.hpp"

namespace sigmaconic {

// Phi: P_R -> P_L. In the coordinates y of the frame B = [R | S | L]
// (X = B y), the line of P_R through (0, alpha, beta) is sent to the line
// alpha' y1 + beta' y2 = 0 of P_L, where (alpha', beta')^t = A' (alpha, beta)^{t sigma}
// and sigma: x -> x^{q^m}.
struct PencilCollineation {
  ProjPoint R;
  ProjPoint L;
  Matrix frame;  // 3x3, columns R, S, L
  Matrix a;      // 2x2, invertible
  unsigned m = 1;
};

PencilCollineation make_pencil_collineation(const FieldTower& F, const ProjPoint& R, const ProjPoint& L,
                                            const Matrix& a, unsigned m);
// Rank-2 form with distinct radicals: R is the right radical, L the left one.
PencilCollineation pencil_collineation_from_form(const SesquiForm& form);
// Phi(RL) = RL.
bool fixes_line_RL(const PencilCollineation& phi);

// {l ∩ Phi(l) : l in P_R}, including all of RL when Phi(RL) = RL. Sorted.
std::vector<ProjPoint> steiner_generate(const FieldTower& F, const PencilCollineation& phi);

// x^{q^m} for an explicit m (independent of the tower's own sigma).
FieldElem frobenius_q(const FieldTower& F, FieldElem x, unsigned m);

struct CfSet {
  std::vector<ProjPoint> points;  // sorted
  ProjPoint R;
  ProjPoint L;
  bool degenerate = false;
  unsigned m = 1;
};

// x1 x3^{q^m} - x2^{q^m + 1} = 0, vertices R = (1,0,0), L = (0,0,1).
CfSet cf_canonical(const FieldTower& F, unsigned m);
// x3 (x1 x3^{q^m - 1} - x2^{q^m}) = 0, vertices R = (1,0,0), L = (0,1,0).
CfSet cf_degenerate_canonical(const FieldTower& F, unsigned m);
// {(t^{q^m+1}, t, 1) : t in F_{q^n}} ∪ {R}. Sorted.
std::vector<ProjPoint> cf_parametric(const FieldTower& F, unsigned m);

// C_a = {(t^{q^m+1}, t, 1) : N(t) = a}, keyed by the code of a in F_q^*.
using ComponentMap = std::map<std::uint32_t, std::vector<ProjPoint>>;
ComponentMap components(const FieldTower& F, const CfSet& cf);

// PG(2, q) inside C_1 spanned by (b^{q^{2m}}, b^{q^m}, b) for b = 1, alpha,
// alpha^2. For n = 3 this is the whole of C_1.
Subplane embed_subplane_in_component(const FieldTower& F, const CfSet& cf);

struct ExteriorSet {
  std::vector<ProjPoint> points;  // sorted
  std::vector<FieldElem> T;
  // J_a = {(-t, 0, 1) : N(t) = a} for a in T
  ComponentMap replaced;
  Subplane subplane;
};

ExteriorSet exterior_set(const FieldTower& F, const CfSet& cf, std::span<const FieldElem> T);

// Every line joining two distinct points of X misses the subplane.
bool verify_exterior(const FieldTower& F, std::span<const ProjPoint> X, const Subplane& pi);

}  // namespace sigmaconic
