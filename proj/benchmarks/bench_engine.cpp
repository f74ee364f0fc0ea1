#include <benchmark/benchmark.h>

#include "secantlab/hilbert.hpp"
#include "secantlab/io.hpp"
#include "secantlab/variety.hpp"

using namespace secantlab;

namespace {

const MonomialOrder grev = MonomialOrder::grevlex();

Ideal twisted_cubic(const FieldSpec& f) {
  RingPtr r = make_ring({"x", "y", "z", "w"}, f);
  return Ideal(r, {parse_polynomial("x*z - y^2", r, grev), parse_polynomial("y*w - z^2", r, grev),
                   parse_polynomial("x*w - y*z", r, grev)});
}

void BM_normal_form(benchmark::State& state) {
  RingPtr r = make_ring({"x", "y", "z", "w"}, FieldSpec::prime(32003));
  Ideal I = twisted_cubic(FieldSpec::prime(32003));
  GBResult gb = I.groebner_basis(grev);
  Polynomial f = parse_polynomial("x^5*w^3 - 3*y^4*z^2 + z^7 - w", r, grev);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(f, gb.basis, grev));
  }
}
BENCHMARK(BM_normal_form);

void BM_buchberger_implicitize_quartic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(implicitize(rational_normal_curve(4)));
  }
}
BENCHMARK(BM_buchberger_implicitize_quartic)->Unit(benchmark::kMillisecond);

void BM_secant_join_quartic(benchmark::State& state) {
  EmbeddedVariety X = change_field_variety(implicitize(rational_normal_curve(4)),
                                           FieldSpec::prime(32003));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secant_join(X).variety.ideal.generators().size());
  }
}
BENCHMARK(BM_secant_join_quartic)->Unit(benchmark::kMillisecond);

void BM_hilbert_numerator(benchmark::State& state) {
  std::vector<Monomial> leads;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      std::vector<std::uint16_t> e(6, 0);
      e[static_cast<std::size_t>(i)] += 1;
      e[static_cast<std::size_t>(j)] += 2;
      leads.push_back(Monomial(e));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_series_numerator(6, leads));
  }
}
BENCHMARK(BM_hilbert_numerator);

}  // namespace

BENCHMARK_MAIN();
