#pragma once

#include <optional>

#include "secantlab/hilbert.hpp"
#include "secantlab/resolution.hpp"

namespace secantlab {

/// Affine-chart parametrization of a projectively embedded variety: the
/// coordinate polynomials gamma_0..gamma_N in the parameters, with the chart
/// coordinate identically one. Constraint polynomials cut the parameter
/// space (e.g. a plane curve inside its coordinate plane).
struct ParametrizedVariety {
  RingPtr param_ring;  // over QQ
  std::vector<Polynomial> coords;
  std::vector<Polynomial> constraints;
  std::size_t chart_coord = 0;
  int intrinsic_dim = 0;     // n
  mpz_class line_bundle_power = 0;  // L^n
  std::optional<int> genus;  // curves

  std::size_t ambient_dim() const { return coords.size() - 1; }  // N
};

struct PointOnVariety {
  std::vector<mpq_class> coords;  // homogeneous
  std::size_t chart = 0;          // designated nonzero coordinate
};

struct EmbeddedVariety {
  Ideal ideal;  // homogeneous, in x_0..x_N
  std::optional<ParametrizedVariety> provenance;
  int intrinsic_dim = 0;
  mpz_class line_bundle_power = 0;
  std::optional<int> genus;

  bool contains(const PointOnVariety& pt) const;
};

ParametrizedVariety rational_normal_curve(int d);
ParametrizedVariety veronese(int k);
/// Embeds a plane curve (affine equation over QQ in two variables) by the
/// full space of conics through the plane.
ParametrizedVariety plane_curve_embed(const Polynomial& affine_equation);

/// Graph elimination, chart dehomogenization, homogenization and saturation
/// by the chart coordinate. The returned generators vanish identically under
/// the parametrization (checked modulo the constraints).
EmbeddedVariety implicitize(const ParametrizedVariety& P, const GBOptions& opts = {});

struct SecantOutcome {
  EmbeddedVariety variety;
  GBStats stats;
  bool truncated = false;
};

/// Join of the affine cone with itself: eliminate y from
/// I_X(y) + I_X(x - y); homogeneous by construction.
SecantOutcome secant_join(const EmbeddedVariety& X, const GBOptions& opts = {});

/// Direct parametrization of the secant family by two source points and a
/// line parameter; agrees with secant_join on common examples.
SecantOutcome secant_parametric(const ParametrizedVariety& P, const GBOptions& opts = {});

/// Jacobian ideal: I plus all c x c minors of the Jacobian of a minimal
/// generating set, c the codimension. Returned un-saturated.
Ideal singular_locus(const EmbeddedVariety& X, const GBOptions& opts = {});

/// Set-theoretic comparison V(J) = V(reference) by bidirectional radical
/// membership of generators.
bool same_zero_set(const Ideal& J, const Ideal& reference, const GBOptions& opts = {});

/// Empty in projective space: every variable lies in the radical.
bool projectively_empty(const Ideal& J, const GBOptions& opts = {});

/// Ideal of initial forms at a point of the affine chart: translate to the
/// origin, homogenize, recompute the basis under a weight order that leads
/// with the lowest forms, then extract them.
Ideal tangent_cone(const Ideal& affine_ideal, std::span<const mpq_class> pt,
                   const GBOptions& opts = {});

/// Samuel multiplicity: degree of the tangent cone quotient at the point.
mpz_class multiplicity_at(const EmbeddedVariety& X, const PointOnVariety& pt,
                          const GBOptions& opts = {});

/// Chart helpers.
Ideal dehomogenize(const Ideal& I, std::size_t chart);
std::vector<mpq_class> affine_coords(const PointOnVariety& pt, std::size_t nvars);

Ideal change_field_ideal(const Ideal& I, const FieldSpec& f);
EmbeddedVariety change_field_variety(const EmbeddedVariety& X, const FieldSpec& f);

}  // namespace secantlab
