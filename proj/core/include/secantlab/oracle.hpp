#pragma once

#include "secantlab/report.hpp"
#include "secantlab/variety.hpp"

namespace secantlab {

enum class TriState { Yes, No, Unknown };
std::string to_string(TriState t);

/// Discrete description of an embedded variety, enough to evaluate every
/// criterion the oracle knows about.
struct VarietyDescriptor {
  enum class Kind { Curve, Hypersurface, Custom };
  Kind kind = Kind::Curve;

  // curve(g, degL)
  int genus = 0;
  mpz_class degL = 0;

  // hypersurface(n, d, k): degree-d hypersurface in P^{n+1} embedded by O(k)
  int n_dim = 1;
  int hyp_degree = 0;
  int twist = 0;

  // custom(n, h, Ln, assumption_flag)
  std::vector<mpz_class> custom_h;
  mpz_class custom_Ln = 0;
  bool assumption_flag = false;

  static VarietyDescriptor curve(int g, mpz_class degL);
  static VarietyDescriptor hypersurface(int n, int d, int k);
  static VarietyDescriptor custom(int n, std::vector<mpz_class> h, mpz_class Ln,
                                  bool assumption);

  int n() const;
  /// h^0..h^n of the structure sheaf; h[0] = 1.
  std::vector<mpz_class> h_vector() const;
  mpz_class l_power() const;  // L^n
  void validate() const;
};

template <typename T>
struct Cited {
  T value{};
  std::string citation;
  bool operator==(const Cited&) const = default;
};

struct Verdict {
  Cited<bool> assumption_satisfied;
  std::string assumption_reason;
  Cited<TriState> normal;
  Cited<TriState> du_bois;
  Cited<bool> cm;
  Cited<long> depth_at_X_points;  // -1 when the depth formula does not apply
  Cited<TriState> rational;
  Cited<mpz_class> multiplicity;
  Cited<bool> deficient_warning;

  /// rational = yes forces cm and Du Bois (the singularity hierarchy).
  bool hierarchy_consistent() const;
};

/// Positivity hypothesis check; the reason string records the derivation.
Cited<bool> check_assumption(const VarietyDescriptor& D);

struct HypersurfaceCohomology {
  std::vector<mpz_class> h;   // h^0..h^n of O_X
  mpz_class hn_twisted;       // rank of H^n(X, O_X(k))
};

/// Exact cohomology bookkeeping for a degree-d hypersurface in P^{n+1}:
/// h^n(O_X) = C(d-1, n+1) and h^n(X, O(k)) = C(d-k-1, n+1) (zero when the
/// top argument drops below n+1).
HypersurfaceCohomology hypersurface_cohomology(int n, int d, int k);

Verdict predict(const VarietyDescriptor& D);

std::string verdict_json(const Verdict& v);
std::string descriptor_json(const VarietyDescriptor& D);
VarietyDescriptor descriptor_from_json(const std::string& text);

/// Reconciliation harness: runs the secant pipeline on X and compares every
/// computable quantity against the oracle's prediction. Budget exhaustion
/// marks items skipped, never failed.
Report verify(const VarietyDescriptor& D, const EmbeddedVariety& X, const PointOnVariety& pt,
              const RunConfig& config);

}  // namespace secantlab
