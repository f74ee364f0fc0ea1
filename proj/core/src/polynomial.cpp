#include "secantlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace secantlab {

namespace {

std::optional<std::size_t> find_index(const std::vector<std::string>& vars, std::string_view name) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
  return find_index(vars, name);
}

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field) {
  if (vars.size() > kMaxVariables) {
    throw StructuralError("too many ring variables: " + std::to_string(vars.size()));
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw StructuralError("empty variable name");
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) throw StructuralError("duplicate variable name: " + vars[i]);
    }
  }
  return std::make_shared<const Ring>(Ring{std::move(vars), field});
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder ord)
    : ring_(std::move(ring)), order_(std::move(ord)) {
  if (!ring_) throw StructuralError("null ring");
}

Polynomial Polynomial::constant(RingPtr ring, MonomialOrder ord, Scalar c) {
  Polynomial p(std::move(ring), std::move(ord));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial::one(p.ring_->nvars()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, MonomialOrder ord, std::size_t i) {
  Polynomial p(std::move(ring), std::move(ord));
  p.terms_.push_back(Term{Monomial::variable(p.ring_->nvars(), i), Scalar::one(p.ring_->field)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, MonomialOrder ord, Monomial m, Scalar c) {
  Polynomial p(std::move(ring), std::move(ord));
  if (m.nvars() != p.ring_->nvars()) throw StructuralError("monomial/ring variable-count mismatch");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, MonomialOrder ord, std::vector<Term> terms) {
  Polynomial p(std::move(ring), std::move(ord));
  for (const Term& t : terms) {
    if (t.mono.nvars() != p.ring_->nvars()) throw StructuralError("monomial/ring variable-count mismatch");
    if (!(t.coeff.field() == p.ring_->field)) throw StructuralError("coefficient field mismatch");
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order_greater(a.mono, b.mono, order_);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = terms_.front().mono.degree();
  for (const Term& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

Polynomial Polynomial::with_order(const MonomialOrder& ord) const {
  if (ord == order_) return *this;
  Polynomial p(ring_, ord);
  p.terms_ = terms_;
  p.normalize();
  return p;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw StructuralError("ring signature mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::optional<Polynomial> resorted;
  if (!(o.order_ == order_)) resorted = o.with_order(order_);
  const Polynomial& rhs = resorted ? *resorted : o;
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    Cmp c = compare(terms_[i].mono, rhs.terms_[j].mono, order_);
    if (c == Cmp::Greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Cmp::Less) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + rhs.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negated(); }

Polynomial Polynomial::negated() const {
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff.negated()});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.mono.times(m), t.coeff * c});
  // multiplicativity of the order keeps the list sorted
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::optional<Polynomial> resorted;
  if (!(o.order_ == order_)) resorted = o.with_order(order_);
  const Polynomial& rhs = resorted ? *resorted : o;
  if (terms_.size() > rhs.terms_.size()) return rhs * *this;
  Polynomial acc(ring_, order_);
  for (const Term& t : terms_) {
    acc = acc + rhs.times_term(t.mono, t.coeff);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_, order_);
  for (const Term& t : terms_) {
    std::uint16_t e = t.mono[var];
    if (e == 0) continue;
    std::vector<std::uint16_t> exps = t.mono.exponents();
    exps[var] = static_cast<std::uint16_t>(e - 1);
    r.terms_.push_back(Term{Monomial(std::move(exps)), t.coeff * Scalar::from_int(ring_->field, e)});
  }
  r.normalize();
  return r;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw StructuralError("evaluation point arity mismatch");
  Scalar acc = Scalar::zero(ring_->field);
  for (const Term& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint16_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw StructuralError("substitution arity mismatch");
  if (images.empty()) throw StructuralError("substitution into an empty ring");
  const RingPtr& target = images[0].ring();
  const MonomialOrder& ord = images[0].order();
  for (const Polynomial& g : images) {
    if (!same_ring(g.ring(), target)) throw StructuralError("substitution images in different rings");
  }
  // power cache per variable
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint16_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, ord, Scalar::one(target->field)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial acc(target, ord);
  for (const Term& t : terms_) {
    mpq_class q = t.coeff.field().is_rational()
                      ? t.coeff.rational()
                      : mpq_class(static_cast<long>(t.coeff.residue()));
    Polynomial prod = Polynomial::constant(target, ord, Scalar::from_mpq(target->field, q));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::map_to_ring(const RingPtr& target, std::span<const std::size_t> var_map,
                                   const MonomialOrder& ord) const {
  if (var_map.size() != ring_->nvars()) throw StructuralError("variable map arity mismatch");
  if (!(target->field == ring_->field)) throw StructuralError("field mismatch in ring map");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint16_t> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] > 0) exps.at(var_map[i]) = t.mono[i];
    }
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, ord, std::move(out));
}

Polynomial Polynomial::change_field(const FieldSpec& f, const RingPtr& target) const {
  if (ring_->field == f) return *this;
  if (!ring_->field.is_rational()) throw StructuralError("can only map QQ coefficients into another field");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Scalar c = Scalar::from_mpq(f, t.coeff.rational());
    if (!c.is_zero()) out.push_back(Term{t.mono, std::move(c)});
  }
  return Polynomial::from_terms(target, order_, std::move(out));
}

bool Polynomial::equals(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  std::optional<Polynomial> resorted;
  if (!(o.order_ == order_)) resorted = o.with_order(order_);
  const Polynomial& rhs = resorted ? *resorted : o;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string coeff = t.coeff.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    std::string mag = negative ? coeff.substr(1) : coeff;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool printed_coeff = false;
    if (mag != "1" || t.mono.is_one()) {
      out << mag;
      printed_coeff = true;
    }
    bool first_var = true;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed_coeff || !first_var) out << '*';
      out << ring_->vars[i];
      if (t.mono[i] > 1) out << '^' << t.mono[i];
      first_var = false;
      printed_coeff = true;
    }
  }
  return out.str();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gens,
                       const MonomialOrder& ord) {
  for (const Polynomial& g : gens) {
    check_same_ring(f, g);
    if (g.is_zero()) throw StructuralError("zero divisor polynomial in division");
  }
  std::vector<Polynomial> divisors;
  divisors.reserve(gens.size());
  for (const Polynomial& g : gens) divisors.push_back(g.with_order(ord));

  Polynomial h = f.with_order(ord);
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    bool reduced = false;
    for (const Polynomial& g : divisors) {
      if (g.leading_monomial().divides(lt.mono)) {
        Monomial q = lt.mono.divided_by(g.leading_monomial());
        Scalar c = lt.coeff / g.leading_coeff();
        h = h - g.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      h = h - Polynomial::term(h.ring(), ord, lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(f.ring(), ord, std::move(remainder));
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target, std::size_t homog_var,
                      std::span<const std::size_t> var_map, const MonomialOrder& ord) {
  if (var_map.size() != f.ring()->nvars()) throw StructuralError("variable map arity mismatch");
  const std::uint32_t d = f.total_degree();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<std::uint16_t> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) exps.at(var_map[i]) = t.mono[i];
    exps.at(homog_var) = static_cast<std::uint16_t>(d - t.mono.degree());
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, ord, std::move(out));
}

}  // namespace secantlab
