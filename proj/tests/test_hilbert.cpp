#include <doctest.h>

#include <random>

#include "secantlab/hilbert.hpp"
#include "secantlab/io.hpp"
#include "support/brute.hpp"

using namespace secantlab;
using secantlab::testing::brute_quotient_dim;

namespace {

const MonomialOrder grev = MonomialOrder::grevlex();

Polynomial parse(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r, grev); }

}  // namespace

TEST_CASE("series numerator pins") {
  CHECK(hilbert_series_numerator(2, {}) == std::vector<mpz_class>{1});
  // principal (x^2) in (x, y): 1 - t^2
  CHECK(hilbert_series_numerator(2, {Monomial({2, 0})}) ==
        std::vector<mpz_class>{1, 0, -1});
  CHECK(hilbert_series_numerator(2, {Monomial({1, 1})}) ==
        std::vector<mpz_class>{1, 0, -1});
}

TEST_CASE("numerator is independent of generator order and of the degree-compatible order used") {
  RingPtr r = make_ring({"x", "y", "z"}, FieldSpec::rationals());
  std::vector<Polynomial> gens = {parse("x^2 - y*z", r), parse("x*y - z^2", r),
                                  parse("y^3 - x*z^2", r)};
  Ideal a(r, gens);
  std::vector<Polynomial> rev(gens.rbegin(), gens.rend());
  Ideal b(r, rev);
  CHECK(dim_degree(a).numerator == dim_degree(b).numerator);

  // weight-grevlex with weight one is degree compatible; same series
  MonomialOrder w1 = MonomialOrder::weight_grevlex({1, 1, 1});
  GBResult gw = a.groebner_basis(w1);
  std::vector<Monomial> leads;
  for (const Polynomial& g : gw.basis) leads.push_back(g.leading_monomial());
  CHECK(hilbert_series_numerator(3, leads) == dim_degree(a).numerator);
}

TEST_CASE("dimension, degree and Hilbert polynomial against the brute-force window") {
  RingPtr r = make_ring({"x", "y", "z", "w"}, FieldSpec::rationals());
  std::vector<Ideal> samples = {
      Ideal(r, {parse("x*z - y^2", r), parse("y*w - z^2", r), parse("x*w - y*z", r)}),
      Ideal(r, {parse("x^2", r)}),
      Ideal(r, {parse("x", r), parse("y", r)}),
      Ideal(r, {parse("x*y - z*w", r)}),
  };
  for (const Ideal& I : samples) {
    HilbertData h = dim_degree(I);
    for (long d = 0; d <= 6; ++d) {
      CHECK(h.series_coefficient(4, d) == brute_quotient_dim(I, static_cast<std::uint32_t>(d)));
      if (d >= static_cast<long>(h.reduced_numerator.size())) {
        CHECK(mpq_class(h.series_coefficient(4, d)) == h.polynomial_value(d));
      }
    }
  }
}

TEST_CASE("twisted cubic has dimension 1, degree 3") {
  RingPtr r = make_ring({"x", "y", "z", "w"}, FieldSpec::rationals());
  Ideal I(r, {parse("x*z - y^2", r), parse("y*w - z^2", r), parse("x*w - y*z", r)});
  HilbertData h = dim_degree(I);
  CHECK(h.projective_dim == 1);
  CHECK(h.degree == 3);
  CHECK(h.krull_dim == 2);
}

TEST_CASE("unit ideal yields the zero ring") {
  RingPtr r = make_ring({"x", "y"}, FieldSpec::rationals());
  Ideal I(r, {Polynomial::constant(r, grev, Scalar::one(r->field))});
  HilbertData h = dim_degree(I);
  CHECK(h.zero_ring);
  CHECK(h.degree == 0);
}
