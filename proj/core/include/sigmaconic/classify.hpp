#pragma once

// Shapes of sigma-quadrics of PG(1, q^n), of the absolute-point sets of
// degenerate correlations of PG(2, q^n), and the cardinality / fixed-point
// profile of Kestenband sigma-conics.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaconic/gf.hpp"
#include "sigmaconic/projspace.hpp"
#include "sigmaconic/sesqui.hpp"

namespace sigmaconic {

// Full: the zero form, every point is absolute.
enum class LineKind { Empty, OnePoint, TwoPoints, Subline, Full };

struct LineClassification {
  LineKind kind = LineKind::Empty;
  // |Gamma| not in {0, 2, q+1}
  bool degenerate = false;
  std::vector<ProjPoint> points;
};

LineClassification classify_line_form(const SesquiForm& form);

// Intersection size of Gamma with every line, lines in enumeration order.
struct LineSpectrum {
  std::vector<std::uint32_t> sizes;

  std::map<std::uint32_t, std::uint64_t> histogram() const;
};

LineSpectrum line_spectrum(const PlaneIndex& index, const AbsolutePointSet& gamma);
// Every intersection of size q+1 is an F_q-subline.
bool spectrum_sublines_ok(const PlaneIndex& index, const AbsolutePointSet& gamma, const LineSpectrum& spectrum);

// WholePlane: the zero form.
enum class PlaneKind { WholePlane, UnionTwoLines, ConeOverSigmaQuadric, DegenerateCF, CF, KestenbandNondegenerate };

std::string_view to_string(LineKind k);
std::string_view to_string(PlaneKind k);

struct PlaneClassification {
  PlaneKind kind = PlaneKind::WholePlane;
  std::size_t rank = 0;
  AbsolutePointSet gamma;
  // rank 2: right and left radical points (equal for a cone)
  std::optional<ProjPoint> R, L;
  // rank 1: left and right radical lines; Gamma is their union
  std::optional<ProjLine> left_line, right_line;
  // cone: the line the base sigma-quadric lives on, and its shape
  std::optional<ProjLine> base_line;
  std::optional<LineClassification> base;
};

PlaneClassification classify_plane_form(const SesquiForm& form);
// Same, with Gamma already computed.
PlaneClassification classify_plane_form(const SesquiForm& form, AbsolutePointSet gamma);

// r x^{q^m+1} + rho x + s, counted exhaustively over F_{q^n}.
struct TrinomialSpec {
  FieldElem r, rho, s;
  unsigned m = 1;
};

std::uint64_t count_trinomial_roots(const FieldTower& F, const TrinomialSpec& t);

// Cardinalities allowed for a non-degenerate form on F_{q^N}^3.
// Odd N = 2k+1: q^N + eps q^{k+1} + 1.
// Even N = 2k, diagonal: q^N+1+(-q)^{k+1}(q-1), q^N+1+(-q)^k(q-1), q^N+1-2(-q)^k.
// Even N, non-diagonal: q^N-(-q)^{k+1}+1, q^N-(-q)^k+1, q^N+1, for q odd also
// q^N +- q^k + 1, together with the diagonal values.
struct MenuEntry {
  std::string tag;
  std::int64_t value;
};
std::vector<MenuEntry> kestenband_menu(unsigned q, unsigned N, bool diagonal);

struct KestenbandProfile {
  std::uint64_t cardinality = 0;
  std::optional<int> epsilon;  // odd N
  std::string family;          // even N: matching menu tags joined by '|'
  std::uint64_t fixed_in = 0;
  std::uint64_t fixed_out = 0;
  // Fixed points on Gamma are collinear (vacuous for fewer than 3).
  bool fixed_in_collinear = true;
  std::vector<std::string> violations;
};

// Checks a measured (|Gamma|, fixed-point) profile against the theorem family
// for (q, N). Fills epsilon / family and violations.
void kestenband_assess(unsigned q, unsigned N, bool diagonal, KestenbandProfile& profile);

// Throws SingularMatrix for rank < 3 and BadDegreeParity for N = 1.
KestenbandProfile kestenband_profile(const SesquiForm& form);

bool is_diagonal(const Matrix& a);

// No three points collinear.
bool is_arc(const FieldTower& F, std::span<const ProjPoint> pts);

}  // namespace sigmaconic
