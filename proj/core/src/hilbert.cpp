#include "secantlab/hilbert.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace secantlab {

namespace {

using ZPoly = std::vector<mpz_class>;  // integer polynomial in t, ascending

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly shift(const ZPoly& a, std::size_t k) {
  if (a.empty()) return a;
  ZPoly r(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly nb = b;
  for (mpz_class& c : nb) c = -c;
  return add(a, nb);
}

mpz_class value_at_one(const ZPoly& p) {
  mpz_class s = 0;
  for (const mpz_class& c : p) s += c;
  return s;
}

// interreduce: drop monomials divisible by another in the list
std::vector<Monomial> interreduce(std::vector<Monomial> leads) {
  std::sort(leads.begin(), leads.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Monomial::raw_less(a, b);
  });
  std::vector<Monomial> out;
  for (const Monomial& m : leads) {
    bool redundant = false;
    for (const Monomial& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

ZPoly numerator_rec(std::vector<Monomial> leads) {
  leads = interreduce(std::move(leads));
  if (leads.empty()) return {mpz_class(1)};
  if (leads[0].is_one()) return {};  // zero ring

  // pairwise coprime => product of (1 - t^deg)
  bool coprime = true;
  for (std::size_t i = 0; i < leads.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < leads.size() && coprime; ++j) {
      coprime = leads[i].coprime(leads[j]);
    }
  }
  if (coprime) {
    ZPoly acc{mpz_class(1)};
    for (const Monomial& m : leads) {
      acc = sub(acc, shift(acc, m.degree()));
    }
    return acc;
  }

  // pivot: the variable occurring in the most generators
  const std::size_t n = leads[0].nvars();
  std::vector<std::size_t> freq(n, 0);
  for (const Monomial& m : leads) {
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] > 0) ++freq[v];
    }
  }
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());

  // S/(I + (x)) and S/(I : x):  N(I) = N(I + (x)) + t * N(I : x)
  std::vector<Monomial> plus, quot;
  plus.push_back(Monomial::variable(n, pivot));
  for (const Monomial& m : leads) {
    if (m[pivot] == 0) plus.push_back(m);
    std::vector<std::uint16_t> exps = m.exponents();
    if (exps[pivot] > 0) exps[pivot] -= 1;
    quot.push_back(Monomial(std::move(exps)));
  }
  return add(numerator_rec(std::move(plus)), shift(numerator_rec(std::move(quot)), 1));
}

mpq_class binomial_q(const mpq_class& top, long k) {
  mpq_class r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (top - i) / mpq_class(i + 1);
  }
  return r;
}

}  // namespace

std::vector<mpz_class> hilbert_series_numerator(std::size_t nvars, std::vector<Monomial> leads) {
  for (const Monomial& m : leads) {
    if (m.nvars() != nvars) throw StructuralError("lead monomial variable-count mismatch");
  }
  ZPoly n = numerator_rec(std::move(leads));
  if (n.empty()) n = {mpz_class(0)};
  return n;
}

HilbertData hilbert_from_leads(std::size_t nvars, std::vector<Monomial> leads) {
  HilbertData h;
  h.numerator = hilbert_series_numerator(nvars, std::move(leads));
  ZPoly cur = h.numerator;
  trim(cur);
  if (cur.empty()) {
    h.zero_ring = true;
    h.krull_dim = 0;
    h.projective_dim = -1;
    h.degree = 0;
    h.reduced_numerator = {mpz_class(0)};
    return h;
  }
  long drops = 0;
  while (value_at_one(cur) == 0) {
    ZPoly q(cur.size() - 1, 0);
    mpz_class carry = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      carry += cur[i];
      q[i] = carry;
    }
    cur = std::move(q);
    trim(cur);
    ++drops;
  }
  h.reduced_numerator = cur;
  h.krull_dim = static_cast<long>(nvars) - drops;
  h.projective_dim = h.krull_dim - 1;
  h.degree = value_at_one(cur);

  // Hilbert polynomial: HP(d) = sum_i a_i * C(d - i + q - 1, q - 1), q = krull_dim
  const long q = h.krull_dim;
  if (q <= 0) {
    h.hilbert_polynomial = {};  // eventually zero
  } else {
    // expand in the falling-factorial-free way: evaluate at q sample points
    // and solve? Direct expansion is simpler: C(d - i + q - 1, q - 1) is a
    // degree q-1 polynomial in d; accumulate coefficients via interpolation
    // on d = 0..q-1 against the exact binomial formula.
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(q), 0);
    // Lagrange interpolation over sample points d = 0..q-1 of the exact value
    std::vector<mpq_class> values;
    for (long d = 0; d < q; ++d) {
      mpq_class v = 0;
      for (std::size_t i = 0; i < h.reduced_numerator.size(); ++i) {
        v += mpq_class(h.reduced_numerator[i]) *
             binomial_q(mpq_class(d) - static_cast<long>(i) + q - 1, q - 1);
      }
      values.push_back(v);
    }
    // Newton forward differences to get polynomial coefficients
    std::vector<mpq_class> diffs = values;
    for (std::size_t level = 1; level < diffs.size(); ++level) {
      for (std::size_t i = diffs.size() - 1; i >= level; --i) {
        diffs[i] -= diffs[i - 1];
        if (i == level) break;
      }
    }
    // p(d) = sum_k diffs[k] * C(d, k); expand C(d, k) into monomial coeffs
    std::vector<std::vector<mpq_class>> choose(static_cast<std::size_t>(q));
    choose[0] = {mpq_class(1)};
    for (std::size_t k = 1; k < choose.size(); ++k) {
      // C(d, k) = C(d, k-1) * (d - (k-1)) / k
      const auto& prev = choose[k - 1];
      std::vector<mpq_class> cur_poly(prev.size() + 1, 0);
      for (std::size_t i = 0; i < prev.size(); ++i) {
        cur_poly[i + 1] += prev[i];
        cur_poly[i] -= prev[i] * static_cast<long>(k - 1);
      }
      for (mpq_class& c : cur_poly) c /= static_cast<long>(k);
      choose[k] = std::move(cur_poly);
    }
    for (std::size_t k = 0; k < choose.size(); ++k) {
      for (std::size_t i = 0; i < choose[k].size(); ++i) {
        coeffs[i] += diffs[k] * choose[k][i];
      }
    }
    h.hilbert_polynomial = std::move(coeffs);
  }
  return h;
}

mpz_class HilbertData::series_coefficient(std::size_t nvars, long d) const {
  // [t^d] N(t) / (1-t)^nvars = sum_i N_i * C(d - i + nvars - 1, nvars - 1)
  mpz_class acc = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    long top = d - static_cast<long>(i) + static_cast<long>(nvars) - 1;
    long k = static_cast<long>(nvars) - 1;
    if (top < k || top < 0) continue;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    acc += numerator[i] * b;
  }
  return acc;
}

mpq_class HilbertData::polynomial_value(long d) const {
  mpq_class acc = 0;
  mpq_class power = 1;
  for (const mpq_class& c : hilbert_polynomial) {
    acc += c * power;
    power *= d;
  }
  return acc;
}

HilbertData dim_degree(const Ideal& I, const GBOptions& opts) {
  if (!is_homogeneous_ideal(I)) throw ContractError("dimension/degree need a homogeneous ideal");
  std::vector<Monomial> leads;
  if (!I.is_zero_ideal()) {
    GBResult gb = I.groebner_basis(MonomialOrder::grevlex(), opts);
    leads.reserve(gb.basis.size());
    for (const Polynomial& g : gb.basis) leads.push_back(g.leading_monomial());
  }
  return hilbert_from_leads(I.ring()->nvars(), std::move(leads));
}

std::string hilbert_json(const HilbertData& h) {
  nlohmann::json j;
  j["dim"] = h.projective_dim;
  j["degree"] = h.degree.get_str();
  j["hilbert_numerator"] = nlohmann::json::array();
  for (const mpz_class& c : h.numerator) j["hilbert_numerator"].push_back(c.get_str());
  return j.dump();
}

}  // namespace secantlab
