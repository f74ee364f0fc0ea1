#include "secantlab/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace secantlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Buchberger loop with the Gebauer-Moeller pair update and normal selection
/// (lowest lcm degree first, ties by the ambient order, then indices).
class Engine {
 public:
  Engine(RingPtr ring, MonomialOrder ord, GBOptions opts)
      : ring_(std::move(ring)), ord_(std::move(ord)), opts_(std::move(opts)) {
    stats_.field = ring_->field;
  }

  GBResult run(const std::vector<Polynomial>& gens) {
    start_ = Clock::now();
    for (const Polynomial& g : gens) {
      if (g.is_zero()) continue;
      install(g.with_order(ord_).monic());
      if (unit_found_) return finish();
    }
    while (!pairs_.empty()) {
      check_budget();
      Pair p = *pairs_.begin();
      if (opts_.degree_cap && p.deg > *opts_.degree_cap) {
        truncated_ = true;
        pairs_.clear();
        break;
      }
      pairs_.erase(pairs_.begin());
      ++stats_.spairs;
      stats_.max_degree = std::max(stats_.max_degree, p.deg);
      Polynomial s = spoly(p);
      Polynomial r = reduce(std::move(s));
      if (!r.is_zero()) {
        install(r.monic());
        if (unit_found_) return finish();
      }
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    std::uint32_t deg;
  };

  struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      Cmp c = compare(a.lcm, b.lcm, *ord);
      if (c != Cmp::Equal) return c == Cmp::Less;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void check_budget() {
    if (opts_.timeout_seconds && seconds_since(start_) > *opts_.timeout_seconds) {
      stats_.wall_seconds = seconds_since(start_);
      throw BudgetExceeded("Groebner computation exceeded its time budget", stats_);
    }
  }

  Monomial pair_lcm(std::size_t i, std::size_t j) const {
    return Monomial::lcm(basis_[i].leading_monomial(), basis_[j].leading_monomial());
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Monomial mf = p.lcm.divided_by(f.leading_monomial());
    Monomial mg = p.lcm.divided_by(g.leading_monomial());
    Scalar one = Scalar::one(ring_->field);
    return f.times_term(mf, one) - g.times_term(mg, one);
  }

  Polynomial reduce(Polynomial h) {
    std::vector<Term> tail;
    std::size_t steps = 0;
    while (!h.is_zero()) {
      const Term& lt = h.leading_term();
      bool hit = false;
      for (const Polynomial& g : basis_) {
        if (g.leading_monomial().divides(lt.mono)) {
          h = h - g.times_term(lt.mono.divided_by(g.leading_monomial()), lt.coeff);
          hit = true;
          break;
        }
      }
      if (!hit) {
        tail.push_back(lt);
        h = h - Polynomial::term(h.ring(), ord_, lt.mono, lt.coeff);
      }
      if (++steps % 1024 == 0) check_budget();
    }
    return Polynomial::from_terms(ring_, ord_, std::move(tail));
  }

  /// Gebauer-Moeller UPDATE: installs h as basis element t, pruning the pair
  /// set with the product and chain criteria.
  void install(Polynomial h) {
    stats_.max_degree = std::max(stats_.max_degree, h.total_degree());
    if (h.is_constant()) unit_found_ = true;
    const std::size_t t = basis_.size();
    basis_.push_back(std::move(h));
    const Monomial& lmh = basis_[t].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = pair_lcm(i, t);
      candidates.push_back(Pair{i, t, l, l.degree()});
    }
    // First pass: drop a new pair when another new pair's lcm strictly
    // divides its lcm, or an earlier one has the same lcm. Coprime-lead
    // pairs survive this stage so they can dominate others.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& pa = candidates[a];
      if (basis_[pa.i].leading_monomial().coprime(lmh)) {
        kept.push_back(pa);
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        const Pair& pb = candidates[b];
        dominated = pb.lcm.divides(pa.lcm) && !(pa.lcm == pb.lcm && b > a);
      }
      if (!dominated) kept.push_back(pa);
    }
    // Second pass: the product criterion discards coprime-lead pairs.
    std::vector<Pair> fresh;
    for (const Pair& p : kept) {
      if (!basis_[p.i].leading_monomial().coprime(lmh)) fresh.push_back(p);
    }
    // Third pass: prune old pairs strictly dominated by the new element.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      bool drop = lmh.divides(p.lcm) && !(pair_lcm(p.i, t) == p.lcm) && !(pair_lcm(p.j, t) == p.lcm);
      it = drop ? pairs_.erase(it) : std::next(it);
    }
    for (Pair& p : fresh) pairs_.insert(std::move(p));
  }

  GBResult finish() {
    GBResult out;
    out.truncated = truncated_;
    if (unit_found_) {
      out.basis = {Polynomial::constant(ring_, ord_, Scalar::one(ring_->field))};
      stats_.wall_seconds = seconds_since(start_);
      out.stats = stats_;
      return out;
    }
    // Minimalize: drop elements whose lead is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (i == j) continue;
        const Monomial& lj = basis_[j].leading_monomial();
        if (lj.divides(basis_[i].leading_monomial())) {
          // On equal leads keep the later element (the earlier reduces by it).
          if (!(lj == basis_[i].leading_monomial()) || j > i) {
            redundant = true;
            break;
          }
        }
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_less(a.leading_monomial(), b.leading_monomial(), ord_);
    });
    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = normal_form(minimal[i], others, ord_);
      if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_less(a.leading_monomial(), b.leading_monomial(), ord_);
    });
    out.basis = std::move(reduced);
    stats_.wall_seconds = seconds_since(start_);
    out.stats = stats_;
    return out;
  }

  RingPtr ring_;
  MonomialOrder ord_;
  GBOptions opts_;
  GBStats stats_;
  Clock::time_point start_;
  std::vector<Polynomial> basis_;
  std::set<Pair, PairLess> pairs_{PairLess{&ord_}};
  bool truncated_ = false;
  bool unit_found_ = false;
};

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw StructuralError("null ring");
  for (Polynomial& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw StructuralError("generator outside the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GBResult Ideal::groebner_basis(const MonomialOrder& ord, const GBOptions& opts) const {
  CacheKey key{static_cast<int>(ord.kind), ord.block, ord.weights};
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  Engine engine(ring_, ord, opts);
  GBResult result = engine.run(gens_);
  if (!result.truncated && !opts.stop_on_unit) {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->entries.emplace(key, result);
  }
  return result;
}

GBResult buchberger(const Ideal& I, const MonomialOrder& ord, const GBOptions& opts) {
  return I.groebner_basis(ord, opts);
}

namespace {

/// Canonical generator scaling: monic over F_p; primitive integral with
/// positive leading coefficient over QQ.
Polynomial canonical_scale(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (!f.ring()->field.is_rational()) return f.monic();
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Term& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rational().get_den().get_mpz_t());
  }
  for (const Term& t : f.terms()) {
    mpz_class n = t.coeff.rational().get_num() * den_lcm / t.coeff.rational().get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  Polynomial r = f.scaled(Scalar::from_mpq(f.ring()->field, scale));
  if (r.leading_coeff().rational() < 0) r = r.negated();
  return r;
}

}  // namespace

Ideal eliminate(const Ideal& I, std::size_t drop_count, const GBOptions& opts) {
  const RingPtr& ring = I.ring();
  if (drop_count > ring->nvars()) throw StructuralError("elimination block exceeds variable count");
  MonomialOrder ord = MonomialOrder::block_elim(static_cast<std::uint32_t>(drop_count));
  GBResult gb = I.groebner_basis(ord, opts);

  std::vector<std::string> kept(ring->vars.begin() + static_cast<std::ptrdiff_t>(drop_count),
                                ring->vars.end());
  RingPtr target = make_ring(std::move(kept), ring->field);
  std::vector<std::size_t> var_map(ring->nvars(), 0);

  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.basis) {
    bool pure = true;
    for (const Term& t : g.terms()) {
      for (std::size_t i = 0; i < drop_count && pure; ++i) {
        if (t.mono[i] > 0) pure = false;
      }
      if (!pure) break;
    }
    if (!pure) continue;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      var_map[i] = i >= drop_count ? i - drop_count : 0;
    }
    out.push_back(canonical_scale(
        g.map_to_ring(target, var_map, MonomialOrder::grevlex())));
  }
  return Ideal(target, std::move(out));
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const MonomialOrder& ord,
                      const GBOptions& opts) {
  if (!same_ring(f.ring(), I.ring())) throw StructuralError("membership test across rings");
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  GBResult gb = I.groebner_basis(ord, opts);
  return normal_form(f, gb.basis, ord).is_zero();
}

std::pair<RingPtr, std::vector<Polynomial>> prepend_variable(const Ideal& I,
                                                             const std::string& name_hint,
                                                             const MonomialOrder& ord) {
  const RingPtr& ring = I.ring();
  std::string name = name_hint;
  for (int k = 0; ring->var_index(name); ++k) name = name_hint + std::to_string(k);
  std::vector<std::string> vars;
  vars.push_back(name);
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr ext = make_ring(std::move(vars), ring->field);
  std::vector<std::size_t> var_map(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) var_map[i] = i + 1;
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) {
    gens.push_back(g.map_to_ring(ext, var_map, ord));
  }
  return {ext, std::move(gens)};
}

bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opts) {
  if (!same_ring(f.ring(), I.ring())) throw StructuralError("membership test across rings");
  if (f.is_zero()) return true;
  MonomialOrder ord = MonomialOrder::grevlex();
  auto [ext, gens] = prepend_variable(I, "zrab", ord);
  std::vector<std::size_t> var_map(f.ring()->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i + 1;
  Polynomial fz = f.map_to_ring(ext, var_map, ord);
  Polynomial z = Polynomial::variable(ext, ord, 0);
  Polynomial one = Polynomial::constant(ext, ord, Scalar::one(ext->field));
  gens.push_back(one - z * fz);
  GBOptions o = opts;
  o.stop_on_unit = true;
  GBResult gb = Ideal(ext, std::move(gens)).groebner_basis(ord, o);
  return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
}

Ideal saturation(const Ideal& I, const Polynomial& f, const GBOptions& opts) {
  if (f.is_zero()) throw StructuralError("saturation by the zero polynomial");
  if (!same_ring(f.ring(), I.ring())) throw StructuralError("saturation across rings");
  MonomialOrder ord = MonomialOrder::grevlex();
  auto [ext, gens] = prepend_variable(I, "zsat", ord);
  std::vector<std::size_t> var_map(f.ring()->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i + 1;
  Polynomial fz = f.map_to_ring(ext, var_map, ord);
  Polynomial z = Polynomial::variable(ext, ord, 0);
  Polynomial one = Polynomial::constant(ext, ord, Scalar::one(ext->field));
  gens.push_back(one - z * fz);
  Ideal extended(ext, std::move(gens));
  Ideal dropped = eliminate(extended, 1, opts);
  // re-home into the original ring object
  std::vector<std::size_t> id_map(I.ring()->nvars());
  for (std::size_t i = 0; i < id_map.size(); ++i) id_map[i] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& g : dropped.generators()) {
    out.push_back(g.map_to_ring(I.ring(), id_map, MonomialOrder::grevlex()));
  }
  return Ideal(I.ring(), std::move(out));
}

namespace {

/// Exact division g / f; throws if the division leaves a remainder.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const MonomialOrder& ord) {
  Polynomial h = g.with_order(ord);
  Polynomial fo = f.with_order(ord);
  std::vector<Term> quotient;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!fo.leading_monomial().divides(lt.mono)) {
      throw StructuralError("inexact polynomial division");
    }
    Monomial q = lt.mono.divided_by(fo.leading_monomial());
    Scalar c = lt.coeff / fo.leading_coeff();
    h = h - fo.times_term(q, c);
    quotient.push_back(Term{std::move(q), std::move(c)});
  }
  return Polynomial::from_terms(g.ring(), ord, std::move(quotient));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  if (!same_ring(I.ring(), J.ring())) throw StructuralError("intersection across rings");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring(), {});
  MonomialOrder ord = MonomialOrder::grevlex();
  auto [ext, gi] = prepend_variable(I, "tmix", ord);
  Polynomial t = Polynomial::variable(ext, ord, 0);
  Polynomial one = Polynomial::constant(ext, ord, Scalar::one(ext->field));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : gi) gens.push_back(t * g);
  std::vector<std::size_t> var_map(I.ring()->nvars());
  for (std::size_t i = 0; i < var_map.size(); ++i) var_map[i] = i + 1;
  for (const Polynomial& g : J.generators()) {
    gens.push_back((one - t) * g.map_to_ring(ext, var_map, ord));
  }
  Ideal dropped = eliminate(Ideal(ext, std::move(gens)), 1, opts);
  std::vector<std::size_t> id_map(I.ring()->nvars());
  for (std::size_t i = 0; i < id_map.size(); ++i) id_map[i] = i;
  std::vector<Polynomial> out;
  for (const Polynomial& g : dropped.generators()) {
    out.push_back(g.map_to_ring(I.ring(), id_map, MonomialOrder::grevlex()));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  if (!same_ring(I.ring(), J.ring())) throw StructuralError("quotient across rings");
  MonomialOrder ord = MonomialOrder::grevlex();
  if (J.is_zero_ideal()) {
    // I : (0) is the unit ideal
    return Ideal(I.ring(), {Polynomial::constant(I.ring(), ord, Scalar::one(I.ring()->field))});
  }
  std::optional<Ideal> acc;
  for (const Polynomial& f : J.generators()) {
    // (I : f) = (1/f) * (I intersect (f))
    Ideal meet = intersect(I, Ideal(I.ring(), {f}), opts);
    std::vector<Polynomial> quots;
    for (const Polynomial& g : meet.generators()) {
      quots.push_back(canonical_scale(exact_divide(g, f, ord)));
    }
    Ideal qf(I.ring(), std::move(quots));
    acc = acc ? intersect(*acc, qf, opts) : qf;
  }
  return *acc;
}

bool is_homogeneous_ideal(const Ideal& I) {
  for (const Polynomial& g : I.generators()) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

std::vector<Polynomial> minimal_generators(const Ideal& I, const GBOptions& opts) {
  MonomialOrder ord = MonomialOrder::grevlex();
  if (!is_homogeneous_ideal(I)) throw ContractError("minimal generators need a homogeneous ideal");
  std::vector<Polynomial> sorted = I.generators();
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return order_less(a.with_order(ord).leading_monomial(), b.with_order(ord).leading_monomial(), ord);
  });
  std::vector<Polynomial> kept;
  for (const Polynomial& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    if (!ideal_membership(g, Ideal(I.ring(), kept), ord, opts)) kept.push_back(g);
  }
  return kept;
}

}  // namespace secantlab
