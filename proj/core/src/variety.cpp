#include "secantlab/variety.hpp"

#include <algorithm>

namespace secantlab {

namespace {

const MonomialOrder kOrd = MonomialOrder::grevlex();

RingPtr x_ring(std::size_t count, const FieldSpec& field, const std::string& stem = "x") {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (std::size_t i = 0; i < count; ++i) vars.push_back(stem + std::to_string(i));
  return make_ring(std::move(vars), field);
}

Scalar qq_one() { return Scalar::one(FieldSpec::rationals()); }

}  // namespace

bool EmbeddedVariety::contains(const PointOnVariety& pt) const {
  const RingPtr& ring = ideal.ring();
  if (pt.coords.size() != ring->nvars()) throw StructuralError("point arity mismatch");
  if (pt.chart >= pt.coords.size() || pt.coords[pt.chart] == 0) {
    throw StructuralError("chart coordinate must be nonzero");
  }
  std::vector<Scalar> coords;
  coords.reserve(pt.coords.size());
  for (const mpq_class& q : pt.coords) coords.push_back(Scalar::from_mpq(ring->field, q));
  for (const Polynomial& g : ideal.generators()) {
    if (!g.evaluate(coords).is_zero()) return false;
  }
  return true;
}

ParametrizedVariety rational_normal_curve(int d) {
  if (d < 2) throw StructuralError("rational normal curve needs degree >= 2");
  RingPtr pr = make_ring({"t"}, FieldSpec::rationals());
  ParametrizedVariety P;
  P.param_ring = pr;
  for (int i = 0; i <= d; ++i) {
    P.coords.push_back(Polynomial::term(pr, kOrd, Monomial::variable(1, 0, static_cast<std::uint16_t>(i)),
                                        qq_one()));
  }
  P.chart_coord = 0;
  P.intrinsic_dim = 1;
  P.line_bundle_power = d;
  P.genus = 0;
  return P;
}

ParametrizedVariety veronese(int k) {
  if (k < 1) throw StructuralError("Veronese embedding needs k >= 1");
  RingPtr pr = make_ring({"u", "v"}, FieldSpec::rationals());
  ParametrizedVariety P;
  P.param_ring = pr;
  for (int d = 0; d <= k; ++d) {
    for (int a = d; a >= 0; --a) {
      std::vector<std::uint16_t> exps = {static_cast<std::uint16_t>(a),
                                         static_cast<std::uint16_t>(d - a)};
      P.coords.push_back(Polynomial::term(pr, kOrd, Monomial(std::move(exps)), qq_one()));
    }
  }
  P.chart_coord = 0;
  P.intrinsic_dim = 2;
  P.line_bundle_power = mpz_class(k) * k;
  return P;
}

ParametrizedVariety plane_curve_embed(const Polynomial& affine_equation) {
  const RingPtr& pr = affine_equation.ring();
  if (pr->nvars() != 2) throw StructuralError("plane curve equation needs two variables");
  if (!pr->field.is_rational()) throw StructuralError("plane curve fixture must be over QQ");
  const int d = static_cast<int>(affine_equation.total_degree());
  if (d < 3) throw StructuralError("plane curve degree must be >= 3");
  ParametrizedVariety P;
  P.param_ring = pr;
  for (int t = 0; t <= 2; ++t) {
    for (int a = t; a >= 0; --a) {
      std::vector<std::uint16_t> exps = {static_cast<std::uint16_t>(a),
                                         static_cast<std::uint16_t>(t - a)};
      P.coords.push_back(Polynomial::term(pr, kOrd, Monomial(std::move(exps)), qq_one()));
    }
  }
  P.constraints = {affine_equation};
  P.chart_coord = 0;
  P.intrinsic_dim = 1;
  P.line_bundle_power = 2 * d;  // degree of the curve under the conic system
  P.genus = (d - 1) * (d - 2) / 2;
  return P;
}

namespace {

/// Substitute chart = 1, homogenize the rest with the chart variable, then
/// saturate by it. The input ideal lives in the full x-ring.
Ideal close_up_chart(const Ideal& affine_image, std::size_t chart, const GBOptions& opts) {
  const RingPtr& ring = affine_image.ring();
  const std::size_t n = ring->nvars();

  // substitution images: chart -> 1, others -> themselves
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(i == chart
                         ? Polynomial::constant(ring, kOrd, Scalar::one(ring->field))
                         : Polynomial::variable(ring, kOrd, i));
  }
  std::vector<Polynomial> homogenized;
  std::vector<std::size_t> idmap(n);
  for (std::size_t i = 0; i < n; ++i) idmap[i] = i;
  for (const Polynomial& g : affine_image.generators()) {
    Polynomial dehom = g.substitute(images);
    if (dehom.is_zero()) continue;
    homogenized.push_back(homogenize(dehom, ring, chart, idmap, kOrd));
  }
  Ideal closed(ring, std::move(homogenized));
  return saturation(closed, Polynomial::variable(ring, kOrd, chart), opts);
}

/// Maps a parametrization into a combined (params..., extra..., coords...)
/// ring. Offsets address where each block starts.
struct CombinedRing {
  RingPtr ring;
  std::size_t coord_base = 0;
};

Polynomial eval_identity_check(const ParametrizedVariety& P, const Polynomial& gen) {
  // substitute the parametrization into a generator; must vanish mod constraints
  std::vector<Polynomial> images;
  images.reserve(P.coords.size());
  for (const Polynomial& c : P.coords) images.push_back(c);
  Polynomial value = gen.substitute(images);
  if (P.constraints.empty() || value.is_zero()) return value;
  Ideal C(P.param_ring, P.constraints);
  GBResult gb = C.groebner_basis(kOrd, {});
  return normal_form(value, gb.basis, kOrd);
}

}  // namespace

EmbeddedVariety implicitize(const ParametrizedVariety& P, const GBOptions& opts) {
  const std::size_t m = P.param_ring->nvars();
  const std::size_t N1 = P.coords.size();
  if (N1 < 2) throw StructuralError("parametrization needs at least two coordinates");
  if (!P.coords[P.chart_coord].is_constant() || P.coords[P.chart_coord].is_zero()) {
    throw StructuralError("chart coordinate of the parametrization must be 1");
  }

  std::vector<std::string> vars = P.param_ring->vars;
  for (std::size_t i = 0; i < N1; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr big = make_ring(std::move(vars), FieldSpec::rationals());

  std::vector<std::size_t> pmap(m);
  for (std::size_t i = 0; i < m; ++i) pmap[i] = i;

  std::vector<Polynomial> gens;
  for (const Polynomial& c : P.constraints) gens.push_back(c.map_to_ring(big, pmap, kOrd));
  for (std::size_t i = 0; i < N1; ++i) {
    Polynomial xi = Polynomial::variable(big, kOrd, m + i);
    gens.push_back(xi - P.coords[i].map_to_ring(big, pmap, kOrd));
  }

  Ideal graph(big, std::move(gens));
  Ideal image = eliminate(graph, m, opts);
  Ideal closed = close_up_chart(image, P.chart_coord, opts);

  // identity check: every generator vanishes under the parametrization
  for (const Polynomial& g : closed.generators()) {
    if (!eval_identity_check(P, g).is_zero()) {
      throw ContractError("implicitization generator fails the substitution identity");
    }
  }

  EmbeddedVariety X{std::move(closed), P, P.intrinsic_dim, P.line_bundle_power, P.genus};
  return X;
}

namespace {

Ideal eliminate_with_stats(const Ideal& I, std::size_t drop, const GBOptions& opts,
                           GBStats* stats, bool* truncated) {
  MonomialOrder ord = MonomialOrder::block_elim(static_cast<std::uint32_t>(drop));
  GBResult gb = I.groebner_basis(ord, opts);
  if (stats) *stats = gb.stats;
  if (truncated) *truncated = gb.truncated;
  return eliminate(I, drop, opts);
}

}  // namespace

SecantOutcome secant_join(const EmbeddedVariety& X, const GBOptions& opts) {
  const RingPtr& ring = X.ideal.ring();
  const std::size_t n1 = ring->nvars();
  if (!is_homogeneous_ideal(X.ideal)) throw ContractError("secant join needs a homogeneous ideal");
  if (X.ideal.is_zero_ideal()) throw ContractError("secant join of the full space");

  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n1; ++i) vars.push_back("y" + std::to_string(i));
  for (const std::string& v : ring->vars) vars.push_back(v);
  RingPtr big = make_ring(std::move(vars), ring->field);

  std::vector<std::size_t> ymap(n1);
  for (std::size_t i = 0; i < n1; ++i) ymap[i] = i;

  // images x_i - y_i for the second cone copy (z = x - y after eliminating
  // the z block against the linear relations x = y + z)
  std::vector<Polynomial> xy_images;
  for (std::size_t i = 0; i < n1; ++i) {
    xy_images.push_back(Polynomial::variable(big, kOrd, n1 + i) -
                        Polynomial::variable(big, kOrd, i));
  }

  std::vector<Polynomial> gens;
  for (const Polynomial& g : X.ideal.generators()) {
    gens.push_back(g.map_to_ring(big, ymap, kOrd));   // I_X(y)
    gens.push_back(g.substitute(xy_images));          // I_X(x - y)
  }

  SecantOutcome out{EmbeddedVariety{Ideal(ring, {}), X.provenance, X.intrinsic_dim,
                                    X.line_bundle_power, X.genus},
                    GBStats{}, false};
  Ideal joined = eliminate_with_stats(Ideal(big, std::move(gens)), n1, opts, &out.stats,
                                      &out.truncated);
  // re-home into the input ring
  std::vector<std::size_t> idmap(n1);
  for (std::size_t i = 0; i < n1; ++i) idmap[i] = i;
  std::vector<Polynomial> rehomed;
  for (const Polynomial& g : joined.generators()) {
    rehomed.push_back(g.map_to_ring(ring, idmap, kOrd));
  }
  out.variety.ideal = Ideal(ring, std::move(rehomed));
  return out;
}

SecantOutcome secant_parametric(const ParametrizedVariety& P, const GBOptions& opts) {
  const std::size_t m = P.param_ring->nvars();
  const std::size_t N1 = P.coords.size();

  std::vector<std::string> vars;
  for (const std::string& v : P.param_ring->vars) vars.push_back("u_" + v);
  for (const std::string& v : P.param_ring->vars) vars.push_back("v_" + v);
  vars.push_back("s");
  for (std::size_t i = 0; i < N1; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr big = make_ring(std::move(vars), FieldSpec::rationals());

  std::vector<std::size_t> umap(m), vmap(m);
  for (std::size_t i = 0; i < m; ++i) {
    umap[i] = i;
    vmap[i] = m + i;
  }
  Polynomial s = Polynomial::variable(big, kOrd, 2 * m);
  Polynomial one = Polynomial::constant(big, kOrd, qq_one());

  std::vector<Polynomial> gens;
  for (const Polynomial& c : P.constraints) {
    gens.push_back(c.map_to_ring(big, umap, kOrd));
    gens.push_back(c.map_to_ring(big, vmap, kOrd));
  }
  for (std::size_t i = 0; i < N1; ++i) {
    Polynomial xi = Polynomial::variable(big, kOrd, 2 * m + 1 + i);
    Polynomial gu = P.coords[i].map_to_ring(big, umap, kOrd);
    Polynomial gv = P.coords[i].map_to_ring(big, vmap, kOrd);
    gens.push_back(xi - ((one - s) * gu + s * gv));
  }

  SecantOutcome out{EmbeddedVariety{Ideal(x_ring(N1, FieldSpec::rationals()), {}), P,
                                    P.intrinsic_dim, P.line_bundle_power, P.genus},
                    GBStats{}, false};
  Ideal image = eliminate_with_stats(Ideal(big, std::move(gens)), 2 * m + 1, opts, &out.stats,
                                     &out.truncated);
  out.variety.ideal = close_up_chart(image, P.chart_coord, opts);
  return out;
}

namespace {

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols) {
  const RingPtr& ring = m[0][0].ring();
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial acc = Polynomial::zero(ring, kOrd);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[rows[0]][cols[k]].is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != k) sub_cols.push_back(cols[l]);
    }
    Polynomial minor = poly_det(m, sub_rows, sub_cols);
    Polynomial termp = m[rows[0]][cols[k]] * minor;
    acc = (k % 2 == 0) ? acc + termp : acc - termp;
  }
  return acc;
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + n - k) return;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Ideal singular_locus(const EmbeddedVariety& X, const GBOptions& opts) {
  const RingPtr& ring = X.ideal.ring();
  HilbertData h = dim_degree(X.ideal, opts);
  if (h.zero_ring) throw ContractError("singular locus of the empty scheme");
  const long codim = static_cast<long>(ring->nvars()) - 1 - h.projective_dim;
  if (codim <= 0) throw ContractError("singular locus needs positive codimension");

  std::vector<Polynomial> gens = minimal_generators(X.ideal, opts);
  const std::size_t r = gens.size();
  const std::size_t n = ring->nvars();
  const std::size_t c = static_cast<std::size_t>(codim);
  if (r < c) throw ContractError("generator count below the codimension");

  std::vector<std::vector<Polynomial>> jac(r, std::vector<Polynomial>(n, Polynomial::zero(ring, kOrd)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = gens[i].derivative(j);
  }

  std::vector<Polynomial> out = gens;
  combinations(r, c, [&](const std::vector<std::size_t>& rows) {
    combinations(n, c, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = poly_det(jac, rows, cols);
      if (!d.is_zero()) out.push_back(d);
    });
  });
  return Ideal(ring, std::move(out));
}

bool same_zero_set(const Ideal& J, const Ideal& reference, const GBOptions& opts) {
  for (const Polynomial& g : reference.generators()) {
    if (!radical_membership(g, J, opts)) return false;
  }
  for (const Polynomial& g : J.generators()) {
    if (!radical_membership(g, reference, opts)) return false;
  }
  return true;
}

bool projectively_empty(const Ideal& J, const GBOptions& opts) {
  const RingPtr& ring = J.ring();
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (!radical_membership(Polynomial::variable(ring, kOrd, i), J, opts)) return false;
  }
  return true;
}

Ideal dehomogenize(const Ideal& I, std::size_t chart) {
  const RingPtr& ring = I.ring();
  if (chart >= ring->nvars()) throw StructuralError("chart out of range");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i != chart) vars.push_back(ring->vars[i]);
  }
  RingPtr target = make_ring(std::move(vars), ring->field);
  std::vector<Polynomial> images;
  std::size_t out_idx = 0;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i == chart) {
      images.push_back(Polynomial::constant(target, kOrd, Scalar::one(ring->field)));
    } else {
      images.push_back(Polynomial::variable(target, kOrd, out_idx++));
    }
  }
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) {
    Polynomial d = g.substitute(images);
    if (!d.is_zero()) gens.push_back(d);
  }
  return Ideal(target, std::move(gens));
}

std::vector<mpq_class> affine_coords(const PointOnVariety& pt, std::size_t nvars) {
  if (pt.coords.size() != nvars) throw StructuralError("point arity mismatch");
  if (pt.coords[pt.chart] == 0) throw StructuralError("chart coordinate must be nonzero");
  std::vector<mpq_class> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i == pt.chart) continue;
    mpq_class q = pt.coords[i] / pt.coords[pt.chart];
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Ideal tangent_cone(const Ideal& affine_ideal, std::span<const mpq_class> pt,
                   const GBOptions& opts) {
  const RingPtr& ring = affine_ideal.ring();
  const std::size_t n = ring->nvars();
  if (pt.size() != n) throw StructuralError("point arity mismatch");

  std::vector<Scalar> coords;
  for (const mpq_class& q : pt) coords.push_back(Scalar::from_mpq(ring->field, q));
  for (const Polynomial& g : affine_ideal.generators()) {
    if (!g.evaluate(coords).is_zero()) throw ContractError("point is not on the variety");
  }

  // translate the point to the origin
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < n; ++i) {
    shift.push_back(Polynomial::variable(ring, kOrd, i) +
                    Polynomial::constant(ring, kOrd, coords[i]));
  }
  std::vector<Polynomial> translated;
  for (const Polynomial& g : affine_ideal.generators()) {
    Polynomial t = g.substitute(shift);
    if (!t.is_zero()) translated.push_back(t);
  }
  if (translated.empty()) return Ideal(ring, {});

  // graded basis, then homogenize: generates the full homogenized ideal
  GBResult base = Ideal(ring, std::move(translated)).groebner_basis(kOrd, opts);

  std::vector<std::string> hv = {"thom"};
  for (int k = 0; ring->var_index(hv[0]); ++k) hv[0] = "thom" + std::to_string(k);
  std::vector<std::string> vars = hv;
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr hring = make_ring(std::move(vars), ring->field);
  std::vector<std::size_t> vmap(n);
  for (std::size_t i = 0; i < n; ++i) vmap[i] = i + 1;

  std::vector<Polynomial> hgens;
  for (const Polynomial& g : base.basis) hgens.push_back(homogenize(g, hring, 0, vmap, kOrd));

  // weight order leading with the homogenizing variable: within one
  // homogeneous element the highest t-power carries the lowest forms
  std::vector<std::int64_t> w(n + 1, 0);
  w[0] = 1;
  MonomialOrder word = MonomialOrder::weight_grevlex(std::move(w));
  GBResult hgb = Ideal(hring, std::move(hgens)).groebner_basis(word, opts);

  // dehomogenize and keep the lowest-degree form of each element
  std::vector<Polynomial> initial_forms;
  std::vector<Polynomial> dehom_images;
  dehom_images.push_back(Polynomial::constant(ring, kOrd, Scalar::one(ring->field)));
  for (std::size_t i = 0; i < n; ++i) dehom_images.push_back(Polynomial::variable(ring, kOrd, i));
  for (const Polynomial& g : hgb.basis) {
    Polynomial affine = g.substitute(dehom_images);
    if (affine.is_zero()) continue;
    std::uint32_t low = affine.total_degree();
    for (const Term& t : affine.terms()) low = std::min(low, t.mono.degree());
    std::vector<Term> forms;
    for (const Term& t : affine.terms()) {
      if (t.mono.degree() == low) forms.push_back(t);
    }
    initial_forms.push_back(Polynomial::from_terms(ring, kOrd, std::move(forms)));
  }
  return Ideal(ring, std::move(initial_forms));
}

mpz_class multiplicity_at(const EmbeddedVariety& X, const PointOnVariety& pt,
                          const GBOptions& opts) {
  if (!X.contains(pt)) throw ContractError("point is not on the variety");
  Ideal affine = dehomogenize(X.ideal, pt.chart);
  std::vector<mpq_class> apt = affine_coords(pt, X.ideal.ring()->nvars());
  Ideal cone = tangent_cone(affine, apt, opts);
  HilbertData h = dim_degree(cone, opts);
  if (h.zero_ring) throw ContractError("tangent cone collapsed to the unit ideal");
  return h.degree;
}

Ideal change_field_ideal(const Ideal& I, const FieldSpec& f) {
  if (I.ring()->field == f) return I;
  RingPtr target = make_ring(I.ring()->vars, f);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.change_field(f, target));
  return Ideal(target, std::move(gens));
}

EmbeddedVariety change_field_variety(const EmbeddedVariety& X, const FieldSpec& f) {
  EmbeddedVariety out = X;
  out.ideal = change_field_ideal(X.ideal, f);
  return out;
}

}  // namespace secantlab
