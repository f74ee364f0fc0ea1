#include "secantlab/oracle.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "secantlab/io.hpp"

namespace secantlab {

namespace {

const MonomialOrder kOrd = MonomialOrder::grevlex();

mpz_class binom(long top, long k) {
  if (top < 0 || k < 0 || top < k) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return b;
}

constexpr const char* kCiteCurveBound = "curve positivity bound deg L >= 2g+3";
constexpr const char* kCiteAdjointForm =
    "adjoint form L = omega_X (x) A^(2(n+1)) (x) B, A very ample, B nef";
constexpr const char* kCiteNormal = "secants of sufficiently positive embeddings are normal";
constexpr const char* kCiteNormalHyp =
    "normal generation of b*L(-2E) holds for twists k >= (d+3)/2";
constexpr const char* kCiteDuBois = "under the positivity assumption the secant is Du Bois";
constexpr const char* kCiteNonDuBois =
    "H^n(X, L) != 0 gives a nonvanishing n-th direct image of O(-Phi), so not Du Bois";
constexpr const char* kCiteDepth =
    "depth at points of X equals n+2+max{i <= n-1 : h^1(O_X)=..=h^i(O_X)=0}";
constexpr const char* kCiteCurveCM = "secants of curves under the degree bound are Cohen-Macaulay";
constexpr const char* kCiteRational =
    "rational singularities exactly when h^i(O_X)=0 for all 1 <= i <= n";
constexpr const char* kCiteMultiplicity = "Samuel multiplicity at a point of X is L^n - 2^n";
constexpr const char* kCiteDeficient =
    "3-very ampleness not established; the secant may be deficient (2-uple Veronese surface)";
constexpr const char* kCiteSingAlongX = "the secant is singular exactly along X";
constexpr const char* kCiteSecantDim = "dim of the secant is 2n+1 under 3-very ampleness";
constexpr const char* kCiteNotPredicted = "hypotheses unmet; no prediction";

}  // namespace

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes:
      return "yes";
    case TriState::No:
      return "no";
    case TriState::Unknown:
      return "unknown";
  }
  return "?";
}

VarietyDescriptor VarietyDescriptor::curve(int g, mpz_class degL) {
  VarietyDescriptor d;
  d.kind = Kind::Curve;
  d.genus = g;
  d.degL = std::move(degL);
  d.n_dim = 1;
  d.validate();
  return d;
}

VarietyDescriptor VarietyDescriptor::hypersurface(int n, int deg, int k) {
  VarietyDescriptor d;
  d.kind = Kind::Hypersurface;
  d.n_dim = n;
  d.hyp_degree = deg;
  d.twist = k;
  d.validate();
  return d;
}

VarietyDescriptor VarietyDescriptor::custom(int n, std::vector<mpz_class> h, mpz_class Ln,
                                            bool assumption) {
  VarietyDescriptor d;
  d.kind = Kind::Custom;
  d.n_dim = n;
  d.custom_h = std::move(h);
  d.custom_Ln = std::move(Ln);
  d.assumption_flag = assumption;
  d.validate();
  return d;
}

int VarietyDescriptor::n() const { return kind == Kind::Curve ? 1 : n_dim; }

std::vector<mpz_class> VarietyDescriptor::h_vector() const {
  switch (kind) {
    case Kind::Curve:
      return {1, genus};
    case Kind::Hypersurface:
      return hypersurface_cohomology(n_dim, hyp_degree, twist).h;
    case Kind::Custom:
      return custom_h;
  }
  throw StructuralError("bad descriptor kind");
}

mpz_class VarietyDescriptor::l_power() const {
  switch (kind) {
    case Kind::Curve:
      return degL;
    case Kind::Hypersurface: {
      mpz_class p = hyp_degree;
      for (int i = 0; i < n_dim; ++i) p *= twist;
      return p;
    }
    case Kind::Custom:
      return custom_Ln;
  }
  throw StructuralError("bad descriptor kind");
}

void VarietyDescriptor::validate() const {
  switch (kind) {
    case Kind::Curve:
      if (genus < 0 || degL < 1) throw StructuralError("curve descriptor needs g >= 0, degL >= 1");
      break;
    case Kind::Hypersurface:
      if (n_dim < 1 || hyp_degree < 1 || twist < 1) {
        throw StructuralError("hypersurface descriptor needs n, d, k >= 1");
      }
      break;
    case Kind::Custom:
      if (n_dim < 1) throw StructuralError("custom descriptor needs n >= 1");
      if (custom_h.size() != static_cast<std::size_t>(n_dim) + 1) {
        throw StructuralError("custom h-vector must list h^0..h^n");
      }
      if (custom_h[0] != 1) throw StructuralError("h^0(O_X) must be 1");
      for (const mpz_class& v : custom_h) {
        if (v < 0) throw StructuralError("negative cohomology rank");
      }
      break;
  }
}

Cited<bool> check_assumption(const VarietyDescriptor& D) {
  std::ostringstream reason;
  switch (D.kind) {
    case VarietyDescriptor::Kind::Curve: {
      mpz_class bound = 2 * mpz_class(D.genus) + 3;
      bool ok = D.degL >= bound;
      reason << "deg L = " << D.degL.get_str() << (ok ? " >= " : " < ") << "2g+3 = "
             << bound.get_str();
      return {ok, kCiteCurveBound};
    }
    case VarietyDescriptor::Kind::Hypersurface: {
      // omega_X = O(d-n-2), A = O(1): L = O(k) = omega_X (x) A^(2(n+1)) (x) O(k-d-n),
      // so the nef factor needs k - d - n >= 0.
      long slack = static_cast<long>(D.twist) - D.hyp_degree - D.n_dim;
      bool ok = slack >= 0;
      reason << "L = O(k) = omega_X (x) O(1)^(2(n+1)) (x) O(k-d-n); nef slack k-d-n = " << slack;
      return {ok, kCiteAdjointForm};
    }
    case VarietyDescriptor::Kind::Custom:
      reason << "assumption flag declared by the descriptor: "
             << (D.assumption_flag ? "true" : "false");
      return {D.assumption_flag, D.n_dim == 1 ? kCiteCurveBound : kCiteAdjointForm};
  }
  throw StructuralError("bad descriptor kind");
}

HypersurfaceCohomology hypersurface_cohomology(int n, int d, int k) {
  if (n < 1 || d < 1) throw StructuralError("hypersurface cohomology needs n, d >= 1");
  HypersurfaceCohomology out;
  out.h.assign(static_cast<std::size_t>(n) + 1, 0);
  out.h[0] = 1;
  out.h[static_cast<std::size_t>(n)] = binom(d - 1, n + 1);
  out.hn_twisted = binom(d - k - 1, n + 1);
  return out;
}

Verdict predict(const VarietyDescriptor& D) {
  D.validate();
  const int n = D.n();
  const std::vector<mpz_class> h = D.h_vector();

  Verdict v;
  Cited<bool> assumption = check_assumption(D);
  std::ostringstream reason_echo;
  switch (D.kind) {
    case VarietyDescriptor::Kind::Curve: {
      mpz_class bound = 2 * mpz_class(D.genus) + 3;
      reason_echo << "deg L = " << D.degL.get_str() << (assumption.value ? " >= " : " < ")
                  << "2g+3 = " << bound.get_str();
      break;
    }
    case VarietyDescriptor::Kind::Hypersurface:
      reason_echo << "nef slack k-d-n = "
                  << static_cast<long>(D.twist) - D.hyp_degree - D.n_dim;
      break;
    case VarietyDescriptor::Kind::Custom:
      reason_echo << "declared flag";
      break;
  }
  v.assumption_satisfied = assumption;
  v.assumption_reason = reason_echo.str();

  const bool three_very_ample =
      assumption.value ||
      (D.kind == VarietyDescriptor::Kind::Hypersurface && D.twist >= 3);
  v.deficient_warning = {!three_very_ample, kCiteDeficient};

  if (assumption.value) {
    v.normal = {TriState::Yes, kCiteNormal};
    v.du_bois = {TriState::Yes, kCiteDuBois};
    long max_i = 0;
    for (int i = 1; i <= n - 1; ++i) {
      bool all_zero = true;
      for (int j = 1; j <= i; ++j) all_zero = all_zero && h[static_cast<std::size_t>(j)] == 0;
      if (all_zero) max_i = i;
    }
    v.depth_at_X_points = {n + 2 + max_i, kCiteDepth};
    bool cm = v.depth_at_X_points.value == 2 * n + 1;
    v.cm = {cm, n == 1 ? kCiteCurveCM : kCiteDepth};
    bool all_h_zero = true;
    for (int j = 1; j <= n; ++j) all_h_zero = all_h_zero && h[static_cast<std::size_t>(j)] == 0;
    v.rational = {all_h_zero ? TriState::Yes : TriState::No, kCiteRational};
  } else if (D.kind == VarietyDescriptor::Kind::Hypersurface && D.twist >= 3 &&
             2 * D.twist >= D.hyp_degree + 3) {
    v.normal = {TriState::Yes, kCiteNormalHyp};
    HypersurfaceCohomology hc = hypersurface_cohomology(D.n_dim, D.hyp_degree, D.twist);
    if (hc.hn_twisted != 0) {
      v.du_bois = {TriState::No, kCiteNonDuBois};
      v.rational = {TriState::No, kCiteRational};
    } else {
      v.du_bois = {TriState::Unknown, kCiteNonDuBois};
      v.rational = {TriState::Unknown, kCiteRational};
    }
    v.cm = {false, kCiteNotPredicted};
    v.depth_at_X_points = {-1, kCiteNotPredicted};
  } else {
    v.normal = {TriState::Unknown, kCiteNotPredicted};
    v.du_bois = {TriState::Unknown, kCiteNotPredicted};
    v.rational = {TriState::Unknown, kCiteNotPredicted};
    v.cm = {false, kCiteNotPredicted};
    v.depth_at_X_points = {-1, kCiteNotPredicted};
  }

  mpz_class two_n = 1;
  for (int i = 0; i < n; ++i) two_n *= 2;
  v.multiplicity = {D.l_power() - two_n, kCiteMultiplicity};
  return v;
}

bool Verdict::hierarchy_consistent() const {
  if (rational.value == TriState::Yes) {
    return cm.value && du_bois.value == TriState::Yes;
  }
  return true;
}

namespace {

nlohmann::json cited_json(const std::string& value, const std::string& citation) {
  return {{"value", value}, {"citation", citation}};
}

}  // namespace

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["assumption_satisfied"] = {{"value", v.assumption_satisfied.value},
                               {"reason", v.assumption_reason},
                               {"citation", v.assumption_satisfied.citation}};
  j["normal"] = cited_json(to_string(v.normal.value), v.normal.citation);
  j["du_bois"] = cited_json(to_string(v.du_bois.value), v.du_bois.citation);
  j["cm"] = {{"value", v.cm.value}, {"citation", v.cm.citation}};
  j["depth_at_X_points"] = {{"value", v.depth_at_X_points.value},
                            {"citation", v.depth_at_X_points.citation}};
  j["rational"] = cited_json(to_string(v.rational.value), v.rational.citation);
  j["multiplicity"] = {{"value", v.multiplicity.value.get_str()},
                       {"citation", v.multiplicity.citation}};
  j["deficient_warning"] = {{"value", v.deficient_warning.value},
                            {"citation", v.deficient_warning.citation}};
  return j.dump(2);
}

std::string descriptor_json(const VarietyDescriptor& D) {
  nlohmann::json j;
  switch (D.kind) {
    case VarietyDescriptor::Kind::Curve:
      j["kind"] = "curve";
      j["g"] = D.genus;
      j["degL"] = static_cast<long>(D.degL.get_si());
      break;
    case VarietyDescriptor::Kind::Hypersurface:
      j["kind"] = "hypersurface";
      j["n"] = D.n_dim;
      j["d"] = D.hyp_degree;
      j["k"] = D.twist;
      break;
    case VarietyDescriptor::Kind::Custom: {
      j["kind"] = "custom";
      j["n"] = D.n_dim;
      nlohmann::json h = nlohmann::json::array();
      for (const mpz_class& v : D.custom_h) h.push_back(static_cast<long>(v.get_si()));
      j["h"] = h;
      j["Ln"] = static_cast<long>(D.custom_Ln.get_si());
      j["assumption"] = D.assumption_flag;
      break;
    }
  }
  return j.dump(2);
}

VarietyDescriptor descriptor_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "curve") {
    return VarietyDescriptor::curve(j.at("g").get<int>(), mpz_class(j.at("degL").get<long>()));
  }
  if (kind == "hypersurface") {
    return VarietyDescriptor::hypersurface(j.at("n").get<int>(), j.at("d").get<int>(),
                                           j.at("k").get<int>());
  }
  if (kind == "custom") {
    std::vector<mpz_class> h;
    for (const auto& v : j.at("h")) h.push_back(mpz_class(v.get<long>()));
    return VarietyDescriptor::custom(j.at("n").get<int>(), std::move(h),
                                     mpz_class(j.at("Ln").get<long>()),
                                     j.at("assumption").get<bool>());
  }
  throw StructuralError("unknown descriptor kind: " + kind);
}

Report verify(const VarietyDescriptor& D, const EmbeddedVariety& X, const PointOnVariety& pt,
              const RunConfig& config) {
  const Verdict v = predict(D);
  const int n = D.n();
  const GBOptions opts = config.gb_options();

  Report report;
  report.command = "verify";
  report.stats.field = config.field;
  report.inputs_digest = digest_inputs({descriptor_json(D), ideal_fingerprint(X.ideal)});

  if (X.intrinsic_dim != n) throw ContractError("descriptor dimension disagrees with the fixture");

  report.items.push_back(make_item("assumption",
                                   v.assumption_satisfied.value ? "satisfied" : "not satisfied",
                                   "", v.assumption_reason));

  EmbeddedVariety Xf = change_field_variety(X, config.field);

  std::optional<SecantOutcome> secant;
  try {
    secant = secant_join(Xf, opts);
    report.absorb(secant->stats);
    if (secant->truncated) {
      report.items.push_back(skipped_item("secant", "", "degree cap truncated the join"));
      secant.reset();
    } else {
      report.items.push_back(make_item("secant", "",
                                       std::to_string(secant->variety.ideal.generators().size()) +
                                           " generators"));
    }
  } catch (const BudgetExceeded& e) {
    report.absorb(e.stats);
    report.items.push_back(skipped_item("secant", "", "budget exhausted during the join"));
  }

  if (!secant) {
    for (const char* name : {"secant_dim", "secant_degree", "singular_locus", "acm",
                             "depth_at_point", "multiplicity"}) {
      report.items.push_back(skipped_item(name, "", "secant unavailable"));
    }
    return report;
  }
  const EmbeddedVariety& sigma = secant->variety;

  std::optional<HilbertData> hd;
  try {
    hd = dim_degree(sigma.ideal, opts);
    if (v.deficient_warning.value) {
      ReportItem item = make_item("deficiency", "dim < " + std::to_string(2 * n + 1),
                                  "dim " + std::to_string(hd->projective_dim),
                                  v.deficient_warning.citation);
      item.status = hd->projective_dim < 2 * n + 1 ? ItemStatus::Pass : ItemStatus::Fail;
      report.items.push_back(item);
    } else {
      report.items.push_back(make_item("secant_dim", std::to_string(2 * n + 1),
                                       std::to_string(hd->projective_dim), kCiteSecantDim));
    }
    report.items.push_back(make_item("secant_degree", "", hd->degree.get_str()));
  } catch (const BudgetExceeded& e) {
    report.absorb(e.stats);
    report.items.push_back(skipped_item("secant_dim", std::to_string(2 * n + 1), "budget"));
  }

  if (!v.deficient_warning.value) {
    try {
      Ideal jac = singular_locus(sigma, opts);
      bool matches = same_zero_set(jac, Xf.ideal, opts);
      report.items.push_back(make_item("singular_locus", "V(jacobian) = X",
                                       matches ? "V(jacobian) = X" : "mismatch",
                                       kCiteSingAlongX));
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(skipped_item("singular_locus", "V(jacobian) = X", "budget"));
    }
  }

  if (n == 1 && v.assumption_satisfied.value) {
    try {
      GradedDepthInfo gd = graded_depth(sigma.ideal, opts);
      ReportItem item = make_item("acm", "depth = dim cone",
                                  gd.acm ? "depth = dim cone" : "depth " + std::to_string(gd.depth) +
                                                                    " < dim " + std::to_string(gd.krull_dim),
                                  kCiteCurveCM);
      report.items.push_back(item);
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(skipped_item("acm", "depth = dim cone", "budget"));
    }
  }

  if (v.depth_at_X_points.value >= 0) {
    try {
      Ideal affine = dehomogenize(sigma.ideal, pt.chart);
      std::vector<mpq_class> apt = affine_coords(pt, sigma.ideal.ring()->nvars());
      long depth = depth_at_point(affine, apt, opts);
      report.items.push_back(make_item("depth_at_point",
                                       std::to_string(v.depth_at_X_points.value),
                                       std::to_string(depth), v.depth_at_X_points.citation));
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(
          skipped_item("depth_at_point", std::to_string(v.depth_at_X_points.value), "budget"));
    }
  }

  if (!v.deficient_warning.value) {
    try {
      mpz_class mult = multiplicity_at(sigma, pt, opts);
      report.items.push_back(make_item("multiplicity", v.multiplicity.value.get_str(),
                                       mult.get_str(), v.multiplicity.citation));
    } catch (const BudgetExceeded& e) {
      report.absorb(e.stats);
      report.items.push_back(
          skipped_item("multiplicity", v.multiplicity.value.get_str(), "budget"));
    }
  }

  return report;
}

}  // namespace secantlab
