#include <doctest.h>

#include <random>

#include "secantlab/io.hpp"
#include "secantlab/variety.hpp"

using namespace secantlab;

namespace {

const MonomialOrder grev = MonomialOrder::grevlex();

Polynomial parse(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r, grev); }

bool same_ideal(const Ideal& a, const Ideal& b) {
  for (const Polynomial& g : a.generators()) {
    if (!ideal_membership(g, b, grev)) return false;
  }
  for (const Polynomial& g : b.generators()) {
    if (!ideal_membership(g, a, grev)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational normal curve construction") {
  ParametrizedVariety c2 = rational_normal_curve(2);
  REQUIRE(c2.coords.size() == 3);
  CHECK(c2.coords[0].is_constant());
  CHECK(c2.line_bundle_power == 2);
  CHECK(rational_normal_curve(4).coords.size() == 5);
  CHECK(rational_normal_curve(5).line_bundle_power == 5);
  CHECK(*rational_normal_curve(5).genus == 0);
}

TEST_CASE("veronese construction") {
  ParametrizedVariety v1 = veronese(1);
  CHECK(v1.coords.size() == 3);
  ParametrizedVariety v2 = veronese(2);
  CHECK(v2.coords.size() == 6);
  CHECK(v2.intrinsic_dim == 2);
  CHECK(v2.line_bundle_power == 4);
}

TEST_CASE("implicitize the conic") {
  EmbeddedVariety X = implicitize(rational_normal_curve(2));
  REQUIRE(X.ideal.generators().size() == 1);
  // canonical scaling: positive integral lead, grevlex lead x1^2
  CHECK(X.ideal.generators()[0] == parse("x1^2 - x0*x2", X.ideal.ring()));
  CHECK(same_ideal(X.ideal, Ideal(X.ideal.ring(), {parse("x0*x2 - x1^2", X.ideal.ring())})));
}

TEST_CASE("implicitize the twisted cubic: three quadrics, dim 1, degree 3") {
  EmbeddedVariety X = implicitize(rational_normal_curve(3));
  CHECK(X.ideal.generators().size() == 3);
  for (const Polynomial& g : X.ideal.generators()) {
    CHECK(g.is_homogeneous());
    CHECK(g.total_degree() == 2);
  }
  HilbertData h = dim_degree(X.ideal);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 3);
}

TEST_CASE("implicitize the 2-uple Veronese surface: six quadrics, dim 2, degree 4") {
  EmbeddedVariety X = implicitize(veronese(2));
  CHECK(X.ideal.generators().size() == 6);
  HilbertData h = dim_degree(X.ideal);
  CHECK(h.projective_dim == 2);
  CHECK(h.degree == 4);
}

TEST_CASE("parametrization samples satisfy the implicit equations") {
  std::mt19937_64 rng(5);
  for (int d : {3, 4}) {
    EmbeddedVariety X = implicitize(rational_normal_curve(d));
    const FieldSpec& f = X.ideal.ring()->field;
    for (int trial = 0; trial < 30; ++trial) {
      mpq_class t(static_cast<long>(rng() % 61) - 30, 1 + static_cast<long>(rng() % 9));
      t.canonicalize();
      std::vector<Scalar> pt;
      mpq_class power = 1;
      for (int i = 0; i <= d; ++i) {
        pt.push_back(Scalar::from_mpq(f, power));
        power *= t;
      }
      for (const Polynomial& g : X.ideal.generators()) CHECK(g.evaluate(pt).is_zero());
    }
  }
}

TEST_CASE("secant of the conic fills the plane") {
  EmbeddedVariety conic = implicitize(rational_normal_curve(2));
  SecantOutcome sec = secant_join(conic);
  CHECK(sec.variety.ideal.generators().empty());
}

TEST_CASE("secant of the twisted cubic fills P^3") {
  EmbeddedVariety X = implicitize(rational_normal_curve(3));
  SecantOutcome sec = secant_join(X);
  CHECK(sec.variety.ideal.generators().empty());

  // parametric route agrees: closure of the secant family is everything
  SecantOutcome par = secant_parametric(rational_normal_curve(3));
  CHECK(par.variety.ideal.generators().empty());
}

TEST_CASE("secant of the rational normal quartic is a cubic hypersurface") {
  EmbeddedVariety X = implicitize(rational_normal_curve(4));
  SecantOutcome sec = secant_join(X);
  REQUIRE(sec.variety.ideal.generators().size() == 1);
  const Polynomial& cubic = sec.variety.ideal.generators()[0];
  CHECK(cubic.is_homogeneous());
  CHECK(cubic.total_degree() == 3);
  HilbertData h = dim_degree(sec.variety.ideal);
  CHECK(h.projective_dim == 3);
  CHECK(h.degree == 3);

  // join and parametric construction give the same ideal
  SecantOutcome par = secant_parametric(rational_normal_curve(4));
  CHECK(same_ideal(sec.variety.ideal, par.variety.ideal));

  // the containment is strict and one-sided: I_Sigma inside I_X
  for (const Polynomial& g : sec.variety.ideal.generators()) {
    CHECK(ideal_membership(g, X.ideal, grev));
  }
  CHECK(!ideal_membership(X.ideal.generators()[0], sec.variety.ideal, grev));
}

TEST_CASE("singular locus pins") {
  // cusp x^3 - y^2 (projective cuspidal cubic in P^2 touches this affinely;
  // use the plane projective curve zy^2 = x^3)
  RingPtr r = make_ring({"x", "y", "z"}, FieldSpec::rationals());
  EmbeddedVariety cuspidal{Ideal(r, {parse("y^2*z - x^3", r)}), std::nullopt, 1, 3, 0};
  Ideal jac = singular_locus(cuspidal);
  // V(jac) = {(0:0:1)}: x and y lie in the radical, z does not
  CHECK(radical_membership(parse("x", r), jac));
  CHECK(radical_membership(parse("y", r), jac));
  CHECK(!radical_membership(parse("z", r), jac));

  // a smooth conic has empty singular locus
  EmbeddedVariety conic = implicitize(rational_normal_curve(2));
  Ideal cjac = singular_locus(conic);
  CHECK(projectively_empty(cjac));
}

TEST_CASE("tangent cone pins") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  std::vector<mpq_class> origin = {0, 0};

  Ideal cusp(r, {parse("y^2 - x^3", r)});
  Ideal tc1 = tangent_cone(cusp, origin);
  CHECK(same_ideal(tc1, Ideal(r, {parse("y^2", r)})));

  Ideal node(r, {parse("y^2 - x^2 - x^3", r)});
  Ideal tc2 = tangent_cone(node, origin);
  CHECK(same_ideal(tc2, Ideal(r, {parse("y^2 - x^2", r)})));

  Ideal smooth(r, {parse("y - x^2", r)});
  Ideal tc3 = tangent_cone(smooth, origin);
  CHECK(same_ideal(tc3, Ideal(r, {parse("y", r)})));

  for (const Ideal& tc : {tc1, tc2, tc3}) {
    for (const Polynomial& g : tc.generators()) CHECK(g.is_homogeneous());
  }

  // translated point: same cone shape away from the origin
  Ideal shifted(r, {parse("y^2 - 2*y + 1 - x^3", r)});  // (y-1)^2 = x^3 at (0, 1)
  std::vector<mpq_class> at{0, 1};
  Ideal tc4 = tangent_cone(shifted, at);
  CHECK(same_ideal(tc4, Ideal(r, {parse("y^2", r)})));

  std::vector<mpq_class> off{1, 2};
  CHECK_THROWS_AS(tangent_cone(cusp, off), ContractError);
}

TEST_CASE("multiplicity at points of the quartic curve secant") {
  EmbeddedVariety X = implicitize(rational_normal_curve(4));
  SecantOutcome sec = secant_join(X);

  PointOnVariety pt{{1, 0, 0, 0, 0}, 0};
  CHECK(multiplicity_at(sec.variety, pt) == 2);

  // a smooth point of the curve itself has multiplicity 1
  PointOnVariety cpt{{1, 1, 1, 1, 1}, 0};
  CHECK(X.contains(cpt));
  CHECK(multiplicity_at(X, cpt) == 1);

  PointOnVariety offpt{{1, 2, 3, 4, 5}, 0};
  CHECK_THROWS_AS(multiplicity_at(X, offpt), ContractError);
}

TEST_CASE("rational normal quartic has dimension 1, degree 4") {
  EmbeddedVariety X = implicitize(rational_normal_curve(4));
  HilbertData h = dim_degree(X.ideal);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 4);
}

TEST_CASE("multiplicity is 1 at random smooth points") {
  std::mt19937_64 rng(31);
  // points of the curves themselves
  for (int d : {4, 5}) {
    EmbeddedVariety X = implicitize(rational_normal_curve(d));
    for (int trial = 0; trial < 10; ++trial) {
      mpq_class t(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      t.canonicalize();
      PointOnVariety pt;
      mpq_class power = 1;
      for (int i = 0; i <= d; ++i) {
        pt.coords.push_back(power);
        power *= t;
      }
      pt.chart = 0;
      REQUIRE(X.contains(pt));
      CHECK(multiplicity_at(X, pt) == 1);
    }
  }
  // smooth points of the quartic secant away from the curve
  EmbeddedVariety X4 = implicitize(rational_normal_curve(4));
  SecantOutcome sec = secant_join(change_field_variety(X4, FieldSpec::prime(32003)));
  for (int trial = 0; trial < 10; ++trial) {
    mpq_class u(static_cast<long>(rng() % 7) - 3);
    mpq_class v(static_cast<long>(rng() % 7) + 4);  // u != v
    mpq_class s(1 + static_cast<long>(rng() % 5), 7);
    s.canonicalize();
    PointOnVariety pt;
    mpq_class pu = 1, pv = 1;
    for (int i = 0; i <= 4; ++i) {
      pt.coords.push_back((1 - s) * pu + s * pv);
      pu *= u;
      pv *= v;
    }
    pt.chart = 0;
    if (!sec.variety.contains(pt)) continue;  // degenerate draw
    CHECK(multiplicity_at(sec.variety, pt) == 1);
  }
}

TEST_CASE("plane cubic embedding produces the elliptic normal sextic") {
  RingPtr plane = make_ring({"x", "y"}, FieldSpec::rationals());
  Polynomial cubic = parse("y^2 - x^3 + x", plane);
  ParametrizedVariety P = plane_curve_embed(cubic);
  CHECK(P.intrinsic_dim == 1);
  CHECK(P.line_bundle_power == 6);
  CHECK(*P.genus == 1);

  EmbeddedVariety E = implicitize(P);
  CHECK(E.ideal.ring()->nvars() == 6);
  HilbertData h = dim_degree(E.ideal);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 6);
  // nine quadrics cut the sextic
  std::size_t quadrics = 0;
  for (const Polynomial& g : E.ideal.generators()) {
    if (g.total_degree() == 2) ++quadrics;
  }
  CHECK(quadrics == 9);
}
