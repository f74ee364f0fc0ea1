#pragma once

#include "secantlab/ideal.hpp"

namespace secantlab {

/// Hilbert series/polynomial data of a homogeneous quotient S/I.
struct HilbertData {
  std::vector<mpz_class> numerator;      // N(t) with series N(t)/(1-t)^nvars
  std::vector<mpz_class> reduced_numerator;  // N / (1-t)^(pole drop)
  std::vector<mpq_class> hilbert_polynomial;  // coefficients in d, ascending
  long krull_dim = 0;        // of S/I (0 for artinian quotients)
  long projective_dim = 0;   // krull_dim - 1 (-1 for empty projective sets)
  mpz_class degree = 0;
  bool zero_ring = false;    // S/I = 0 (unit ideal)

  /// dim_k (S/I)_d from the series, any d >= 0.
  mpz_class series_coefficient(std::size_t nvars, long d) const;
  /// Value of the Hilbert polynomial at d.
  mpq_class polynomial_value(long d) const;
};

/// Numerator of the Hilbert series of S/(leads): sum_d dim_k (S/in)_d t^d
/// times (1-t)^nvars, computed by pivot-splitting recursion. Independent of
/// the input order of the monomials.
std::vector<mpz_class> hilbert_series_numerator(std::size_t nvars, std::vector<Monomial> leads);

/// Dimension, degree and Hilbert data of a homogeneous ideal via the initial
/// ideal under grevlex.
HilbertData dim_degree(const Ideal& I, const GBOptions& opts = {});

HilbertData hilbert_from_leads(std::size_t nvars, std::vector<Monomial> leads);

std::string hilbert_json(const HilbertData& h);

}  // namespace secantlab
