#include <doctest.h>

#include <random>

#include "secantlab/ideal.hpp"
#include "secantlab/io.hpp"
#include "secantlab/variety.hpp"

using namespace secantlab;

namespace {

const MonomialOrder grev = MonomialOrder::grevlex();

Polynomial parse(const std::string& s, const RingPtr& r,
                 const MonomialOrder& ord = MonomialOrder::grevlex()) {
  return parse_polynomial(s, r, ord);
}

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const std::string& s : gens) ps.push_back(parse(s, r));
  return Ideal(r, ps);
}

}  // namespace

TEST_CASE("already-reduced bases come back unchanged") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  Ideal I = ideal_of(r, {"x", "y"});
  GBResult gb = buchberger(I, grev);
  REQUIRE(gb.basis.size() == 2);
  CHECK(gb.basis[0] == parse("y", r));
  CHECK(gb.basis[1] == parse("x", r));

  // idempotence: recomputing from the reduced basis returns it unchanged
  Ideal J(r, gb.basis);
  GBResult gb2 = buchberger(J, grev);
  REQUIRE(gb2.basis.size() == gb.basis.size());
  for (std::size_t i = 0; i < gb.basis.size(); ++i) CHECK(gb.basis[i] == gb2.basis[i]);
}

TEST_CASE("principal ideals are their own basis") {
  RingPtr r = make_ring({"x0", "x1", "x2"}, FieldSpec::rationals());
  GBResult gb = buchberger(ideal_of(r, {"x0*x2 - x1^2"}), grev);
  REQUIRE(gb.basis.size() == 1);
  // monic under grevlex, where x1^2 beats x0*x2
  CHECK(gb.basis[0] == parse("x1^2 - x0*x2", r));
}

TEST_CASE("lex elimination of the affine twisted cubic parametrization") {
  RingPtr r = make_ring({"t", "x", "y"}, FieldSpec::rationals());
  Ideal I = ideal_of(r, {"x - t^2", "y - t^3"});
  GBResult gb = buchberger(I, MonomialOrder::lex());
  bool found = false;
  for (const Polynomial& g : gb.basis) {
    bool has_t = false;
    for (const Term& term : g.terms()) {
      if (term.mono[0] > 0) has_t = true;
    }
    if (!has_t && g.monic() == parse("x^3 - y^2", r).monic()) found = true;
  }
  CHECK(found);
}

TEST_CASE("eliminate reproduces implicit equations") {
  RingPtr r = make_ring({"t", "x", "y"}, FieldSpec::rationals());
  Ideal I = ideal_of(r, {"x - t^2", "y - t^3"});
  Ideal E = eliminate(I, 1);
  REQUIRE(E.generators().size() == 1);
  RingPtr xy = E.ring();
  CHECK(E.generators()[0] == parse("x^3 - y^2", xy));

  // linear substitution case
  RingPtr r2 = make_ring({"u", "x", "y"}, FieldSpec::rationals());
  Ideal E2 = eliminate(ideal_of(r2, {"x - u", "y - u"}), 1);
  REQUIRE(E2.generators().size() == 1);
  CHECK(E2.generators()[0] == parse("x - y", E2.ring()));

  // u^2 + 1 eliminates to the zero ideal over QQ
  RingPtr r3 = make_ring({"u", "x"}, FieldSpec::rationals());
  Ideal E3 = eliminate(ideal_of(r3, {"u^2 + 1"}), 1);
  CHECK(E3.generators().empty());
}

TEST_CASE("elimination output vanishes on parameter samples") {
  RingPtr r = make_ring({"t", "x", "y", "z"}, FieldSpec::rationals());
  Ideal I = ideal_of(r, {"x - t^2", "y - t^3", "z - t^4"});
  Ideal E = eliminate(I, 1);
  REQUIRE(!E.generators().empty());
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    long tv = static_cast<long>(rng() % 41) - 20;
    mpq_class t(tv, 1 + static_cast<long>(rng() % 7));
    t.canonicalize();
    std::vector<Scalar> pt = {Scalar::from_mpq(E.ring()->field, t * t),
                              Scalar::from_mpq(E.ring()->field, t * t * t),
                              Scalar::from_mpq(E.ring()->field, t * t * t * t)};
    for (const Polynomial& g : E.generators()) CHECK(g.evaluate(pt).is_zero());
  }
}

TEST_CASE("membership pins and soundness") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  CHECK(ideal_membership(parse("x^2", r), ideal_of(r, {"x"}), grev));
  CHECK(!ideal_membership(parse("x", r), ideal_of(r, {"x^2"}), grev));

  // f*g reduces to zero modulo GB((f)), over both fields
  std::mt19937_64 rng(17);
  for (const FieldSpec& field : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    RingPtr rr = make_ring({"x", "y"}, field);
    auto random_poly = [&] {
      std::vector<Term> ts;
      for (int i = 0; i < 4; ++i) {
        std::vector<std::uint16_t> e{static_cast<std::uint16_t>(rng() % 3),
                                     static_cast<std::uint16_t>(rng() % 3)};
        ts.push_back(Term{Monomial(e), Scalar::from_int(field, static_cast<long>(rng() % 9) - 4)});
      }
      return Polynomial::from_terms(rr, grev, ts);
    };
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial f = random_poly();
      Polynomial g = random_poly();
      if (f.is_zero()) continue;
      CHECK(ideal_membership(f * g, Ideal(rr, {f}), grev));
    }
  }
}

TEST_CASE("radical membership via the adjoined inverse variable") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  CHECK(radical_membership(parse("x", r), ideal_of(r, {"x^2"})));
  CHECK(!radical_membership(parse("y", r), ideal_of(r, {"x^2"})));
  // (x+y)^3 (x-y) and (x+y)^2 generate an ideal whose radical contains x+y
  Ideal I = ideal_of(r, {"x^4 + 2*x^3*y - 2*x*y^3 - y^4", "x^2 + 2*x*y + y^2"});
  CHECK(radical_membership(parse("x + y", r), I));
  CHECK(!radical_membership(parse("x - y", r), I));
}

TEST_CASE("saturation pins and idempotence") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  Ideal a = saturation(ideal_of(r, {"x*y"}), parse("x", r));
  REQUIRE(a.generators().size() == 1);
  CHECK(a.generators()[0] == parse("y", r));

  // (x^2, x*y) : x^infty: the brute monomial-saturation oracle divides each
  // generator by every x-power, giving (1, y) = (1); geometrically
  // V(x^2, xy) \ V(x) is empty.
  Ideal b = saturation(ideal_of(r, {"x^2", "x*y"}), parse("x", r));
  REQUIRE(b.generators().size() == 1);
  CHECK(b.generators()[0].is_constant());

  // nonzerodivisor: (x) : y^infty = (x)
  Ideal c = saturation(ideal_of(r, {"x"}), parse("y", r));
  REQUIRE(c.generators().size() == 1);
  CHECK(c.generators()[0] == parse("x", r));

  // idempotence on a random-ish example
  Ideal I = ideal_of(r, {"x^3*y - x^2", "x^2*y^2"});
  Ideal once = saturation(I, parse("x", r));
  Ideal twice = saturation(once, parse("x", r));
  for (const Polynomial& g : once.generators()) CHECK(ideal_membership(g, twice, grev));
  for (const Polynomial& g : twice.generators()) CHECK(ideal_membership(g, once, grev));
}

TEST_CASE("ideal quotient pins") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  Ideal q1 = ideal_quotient(ideal_of(r, {"x*y"}), ideal_of(r, {"x"}));
  CHECK(ideal_membership(parse("y", r), q1, grev));
  CHECK(!ideal_membership(parse("x", r), q1, grev));

  Ideal q2 = ideal_quotient(ideal_of(r, {"x^2"}), ideal_of(r, {"x"}));
  CHECK(ideal_membership(parse("x", r), q2, grev));
  CHECK(!ideal_membership(Polynomial::constant(r, grev, Scalar::one(r->field)), q2, grev));

  // (x^2 y, x y^2) : (xy) = (x, y), brute-checked on monomial ideals
  Ideal q3 = ideal_quotient(ideal_of(r, {"x^2*y", "x*y^2"}), ideal_of(r, {"x*y"}));
  CHECK(ideal_membership(parse("x", r), q3, grev));
  CHECK(ideal_membership(parse("y", r), q3, grev));
  CHECK(!ideal_membership(Polynomial::constant(r, grev, Scalar::one(r->field)), q3, grev));
}

TEST_CASE("degree cap flags truncation without failing") {
  RingPtr r = make_ring({"t", "x", "y"}, FieldSpec::rationals());
  Ideal I = ideal_of(r, {"x - t^2", "y - t^3"});
  GBOptions opts;
  opts.degree_cap = 2;
  GBResult gb = I.groebner_basis(MonomialOrder::lex(), opts);
  CHECK(gb.truncated);

  GBOptions tiny;
  tiny.timeout_seconds = 0.0;  // expire immediately
  CHECK_THROWS_AS(buchberger(ideal_of(r, {"x - t^2", "y - t^3"}), MonomialOrder::lex(), tiny),
                  BudgetExceeded);
}

TEST_CASE("unit ideals collapse to (1)") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::prime(32003));
  GBResult gb = buchberger(ideal_of(r, {"x + 1", "x"}), grev);
  REQUIRE(gb.basis.size() == 1);
  CHECK(gb.basis[0].is_constant());
}

TEST_CASE("Fp and QQ bases agree on a stable example") {
  RingPtr rq = make_ring({"x", "y", "z"}, FieldSpec::rationals());
  Ideal Iq = ideal_of(rq, {"x^2 + y*z", "x*z - y^2 + z^2"});
  GBResult gq = buchberger(Iq, grev);

  Ideal Ip = change_field_ideal(Iq, FieldSpec::prime(32003));
  GBResult gp = buchberger(Ip, grev);
  REQUIRE(gq.basis.size() == gp.basis.size());
  for (std::size_t i = 0; i < gq.basis.size(); ++i) {
    CHECK(gq.basis[i].leading_monomial() == gp.basis[i].leading_monomial());
  }
}
