#include "secantlab/modvec.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace secantlab {

namespace {

// POT: lower component dominates; ties by the ambient monomial order.
Cmp mod_compare(const ModTerm& a, const ModTerm& b, const MonomialOrder& ord) {
  if (a.comp != b.comp) return a.comp < b.comp ? Cmp::Greater : Cmp::Less;
  return compare(a.mono, b.mono, ord);
}

}  // namespace

VecPoly::VecPoly(RingPtr ring, MonomialOrder ord, std::uint32_t rank)
    : ring_(std::move(ring)), order_(std::move(ord)), rank_(rank) {
  if (!ring_) throw StructuralError("null ring");
}

void VecPoly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [&](const ModTerm& a, const ModTerm& b) {
    return mod_compare(a, b, order_) == Cmp::Greater;
  });
  std::vector<ModTerm> out;
  out.reserve(terms_.size());
  for (ModTerm& t : terms_) {
    if (t.comp >= rank_) throw StructuralError("module term component out of range");
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

VecPoly VecPoly::from_terms(RingPtr ring, MonomialOrder ord, std::uint32_t rank,
                            std::vector<ModTerm> terms) {
  VecPoly v(std::move(ring), std::move(ord), rank);
  v.terms_ = std::move(terms);
  v.normalize();
  return v;
}

VecPoly VecPoly::from_entries(std::uint32_t rank, std::span<const Polynomial> entries,
                              const MonomialOrder& ord) {
  if (entries.empty()) throw StructuralError("empty module column");
  if (entries.size() != rank) throw StructuralError("module column rank mismatch");
  VecPoly v(entries[0].ring(), ord, rank);
  for (std::uint32_t c = 0; c < rank; ++c) {
    for (const Term& t : entries[c].terms()) {
      v.terms_.push_back(ModTerm{c, t.mono, t.coeff});
    }
  }
  v.normalize();
  return v;
}

VecPoly VecPoly::basis_vector(RingPtr ring, MonomialOrder ord, std::uint32_t rank,
                              std::uint32_t comp) {
  VecPoly v(ring, std::move(ord), rank);
  v.terms_.push_back(ModTerm{comp, Monomial::one(ring->nvars()), Scalar::one(ring->field)});
  return v;
}

const ModTerm& VecPoly::leading() const {
  if (terms_.empty()) throw StructuralError("leading term of the zero vector");
  return terms_.front();
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
  if (!same_ring(ring_, o.ring_) || rank_ != o.rank_) throw StructuralError("module element mismatch");
  VecPoly r(ring_, order_, rank_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = mod_compare(terms_[i], o.terms_[j], order_);
    if (c == Cmp::Greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Cmp::Less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(ModTerm{terms_[i].comp, terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const { return *this + o.negated(); }

VecPoly VecPoly::negated() const {
  VecPoly r(ring_, order_, rank_);
  r.terms_.reserve(terms_.size());
  for (const ModTerm& t : terms_) r.terms_.push_back(ModTerm{t.comp, t.mono, t.coeff.negated()});
  return r;
}

VecPoly VecPoly::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return VecPoly(ring_, order_, rank_);
  VecPoly r(ring_, order_, rank_);
  r.terms_.reserve(terms_.size());
  for (const ModTerm& t : terms_) r.terms_.push_back(ModTerm{t.comp, t.mono.times(m), t.coeff * c});
  return r;
}

VecPoly VecPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().coeff.inverse();
  VecPoly r(ring_, order_, rank_);
  r.terms_.reserve(terms_.size());
  for (const ModTerm& t : terms_) r.terms_.push_back(ModTerm{t.comp, t.mono, t.coeff * inv});
  return r;
}

Polynomial VecPoly::entry(std::uint32_t comp) const {
  std::vector<Term> out;
  for (const ModTerm& t : terms_) {
    if (t.comp == comp) out.push_back(Term{t.mono, t.coeff});
  }
  return Polynomial::from_terms(ring_, order_, std::move(out));
}

std::vector<Polynomial> VecPoly::entries() const {
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (std::uint32_t c = 0; c < rank_; ++c) out.push_back(entry(c));
  return out;
}

VecPoly VecPoly::tail_block(std::uint32_t from) const {
  VecPoly r(ring_, order_, rank_ - from);
  for (const ModTerm& t : terms_) {
    if (t.comp >= from) r.terms_.push_back(ModTerm{t.comp - from, t.mono, t.coeff});
  }
  return r;
}

bool VecPoly::supported_below(std::uint32_t below) const {
  for (const ModTerm& t : terms_) {
    if (t.comp >= below) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

/// Buchberger over a free module, position-over-term order, all pairs with a
/// shared leading component processed; no pair criteria, so every reduction
/// to zero in the leading block certifies its bookkeeping relation.
class ModuleEngine {
 public:
  ModuleEngine(RingPtr ring, MonomialOrder ord, GBOptions opts)
      : ring_(std::move(ring)), ord_(std::move(ord)), opts_(std::move(opts)) {
    stats_.field = ring_->field;
  }

  std::vector<VecPoly> run(std::span<const VecPoly> gens) {
    start_ = Clock::now();
    for (const VecPoly& g : gens) {
      if (!g.is_zero()) install(g.monic());
    }
    while (!pairs_.empty()) {
      check_budget();
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.spairs;
      stats_.max_degree = std::max(stats_.max_degree, p.deg);
      VecPoly r = reduce(svector(p));
      if (!r.is_zero()) install(r.monic());
    }
    return basis_;
  }

  VecPoly reduce(VecPoly h) {
    std::vector<ModTerm> tail;
    std::size_t steps = 0;
    while (!h.is_zero()) {
      const ModTerm& lt = h.leading();
      bool hit = false;
      for (const VecPoly& g : basis_) {
        const ModTerm& lg = g.leading();
        if (lg.comp == lt.comp && lg.mono.divides(lt.mono)) {
          h = h - g.times_term(lt.mono.divided_by(lg.mono), lt.coeff / lg.coeff);
          hit = true;
          break;
        }
      }
      if (!hit) {
        tail.push_back(lt);
        h = h - VecPoly::from_terms(h.ring(), ord_, h.rank(), {lt});
      }
      if (++steps % 1024 == 0) check_budget();
    }
    return VecPoly::from_terms(ring_, ord_, rank_, std::move(tail));
  }

  GBStats stats() const {
    GBStats s = stats_;
    s.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return s;
  }

 private:
  struct Pair {
    std::size_t i, j;
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
    if (opts_.timeout_seconds) {
      double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > *opts_.timeout_seconds) {
        GBStats s = stats_;
        s.wall_seconds = elapsed;
        throw BudgetExceeded("module Groebner computation exceeded its time budget", s);
      }
    }
  }

  VecPoly svector(const Pair& p) const {
    const VecPoly& f = basis_[p.i];
    const VecPoly& g = basis_[p.j];
    Scalar one = Scalar::one(ring_->field);
    return f.times_term(p.lcm.divided_by(f.leading().mono), one) -
           g.times_term(p.lcm.divided_by(g.leading().mono), one);
  }

  void install(VecPoly h) {
    rank_ = h.rank();
    const std::size_t t = basis_.size();
    for (std::size_t i = 0; i < t; ++i) {
      const ModTerm& a = basis_[i].leading();
      const ModTerm& b = h.leading();
      if (a.comp != b.comp) continue;
      Monomial l = Monomial::lcm(a.mono, b.mono);
      pairs_.insert(Pair{i, t, l, l.degree()});
    }
    basis_.push_back(std::move(h));
  }

  RingPtr ring_;
  MonomialOrder ord_;
  GBOptions opts_;
  GBStats stats_;
  Clock::time_point start_;
  std::uint32_t rank_ = 0;
  std::vector<VecPoly> basis_;
  std::set<Pair, PairLess> pairs_{PairLess{&ord_}};
};

/// Builds the bookkeeping-augmented elements (col_i padded into the leading
/// block, basis vector i in the trailing block).
std::vector<VecPoly> augment(std::span<const VecPoly> cols, std::uint32_t m, std::uint32_t k) {
  std::vector<VecPoly> out;
  out.reserve(cols.size());
  for (std::uint32_t i = 0; i < cols.size(); ++i) {
    std::vector<ModTerm> terms;
    for (const ModTerm& t : cols[i].terms()) terms.push_back(t);
    terms.push_back(ModTerm{m + i, Monomial::one(cols[i].ring()->nvars()),
                            Scalar::one(cols[i].ring()->field)});
    out.push_back(VecPoly::from_terms(cols[i].ring(), cols[i].order(), m + k, std::move(terms)));
  }
  return out;
}

}  // namespace

SyzygyResult module_syzygies(std::span<const VecPoly> cols, const GBOptions& opts) {
  if (cols.empty()) return {};
  const RingPtr& ring = cols[0].ring();
  const MonomialOrder& ord = cols[0].order();
  const std::uint32_t m = cols[0].rank();
  const std::uint32_t k = static_cast<std::uint32_t>(cols.size());
  for (const VecPoly& c : cols) {
    if (!same_ring(c.ring(), ring) || c.rank() != m) throw StructuralError("mixed module columns");
  }

  SyzygyResult out;
  std::vector<VecPoly> work;
  std::vector<VecPoly> augmented = augment(cols, m, k);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (cols[i].is_zero()) {
      // a zero column contributes its own basis vector as a syzygy
      out.syzygies.push_back(VecPoly::basis_vector(ring, ord, k, i));
    } else {
      work.push_back(augmented[i]);
    }
  }
  ModuleEngine engine(ring, ord, opts);
  std::vector<VecPoly> gb = engine.run(work);
  out.stats = engine.stats();
  for (const VecPoly& g : gb) {
    if (g.leading().comp >= m) {
      out.syzygies.push_back(g.tail_block(m));
    } else {
      // leading block part of the element belongs to the module GB
      std::vector<ModTerm> head;
      for (const ModTerm& t : g.terms()) {
        if (t.comp < m) head.push_back(t);
      }
      out.basis.push_back(VecPoly::from_terms(ring, ord, m, std::move(head)));
    }
  }
  return out;
}

std::vector<std::vector<Polynomial>> module_lift(std::span<const VecPoly> cols,
                                                 std::span<const VecPoly> targets,
                                                 const GBOptions& opts) {
  if (cols.empty()) {
    for (const VecPoly& t : targets) {
      if (!t.is_zero()) throw ContractError("target outside the column span");
    }
    return std::vector<std::vector<Polynomial>>(targets.size());
  }
  const RingPtr& ring = cols[0].ring();
  const MonomialOrder& ord = cols[0].order();
  const std::uint32_t m = cols[0].rank();
  const std::uint32_t k = static_cast<std::uint32_t>(cols.size());

  std::vector<VecPoly> augmented = augment(cols, m, k);
  ModuleEngine engine(ring, ord, opts);
  engine.run(augmented);

  std::vector<std::vector<Polynomial>> lifts;
  for (const VecPoly& t : targets) {
    if (t.rank() != m) throw StructuralError("target rank mismatch");
    std::vector<ModTerm> padded(t.terms().begin(), t.terms().end());
    VecPoly embedded = VecPoly::from_terms(ring, ord, m + k, std::move(padded));
    VecPoly r = engine.reduce(embedded);
    bool leading_zero = true;
    for (const ModTerm& mt : r.terms()) {
      if (mt.comp < m) {
        leading_zero = false;
        break;
      }
    }
    if (!leading_zero) throw ContractError("target outside the column span");
    lifts.push_back(r.tail_block(m).negated().entries());
  }
  return lifts;
}

}  // namespace secantlab
