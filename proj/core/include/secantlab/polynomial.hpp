#pragma once

#include <span>
#include <string>
#include <vector>

#include "secantlab/ring.hpp"

namespace secantlab {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending in the
/// polynomial's ambient monomial order, with no zero coefficients.
class Polynomial {
 public:
  Polynomial(RingPtr ring, MonomialOrder ord);

  static Polynomial zero(RingPtr ring, MonomialOrder ord) { return Polynomial(std::move(ring), std::move(ord)); }
  static Polynomial constant(RingPtr ring, MonomialOrder ord, Scalar c);
  static Polynomial variable(RingPtr ring, MonomialOrder ord, std::size_t i);
  static Polynomial term(RingPtr ring, MonomialOrder ord, Monomial m, Scalar c);
  static Polynomial from_terms(RingPtr ring, MonomialOrder ord, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  std::uint32_t total_degree() const;  // max term degree; 0 for the zero polynomial
  bool is_homogeneous() const;

  /// Re-sorts the term list under another ambient order.
  Polynomial with_order(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negated() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Ring morphism: variable i of this ring maps to images[i] (all images in
  /// one shared target ring).
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Renames variables into a target ring: variable i here becomes variable
  /// var_map[i] there. Coefficient fields must agree.
  Polynomial map_to_ring(const RingPtr& target, std::span<const std::size_t> var_map,
                         const MonomialOrder& ord) const;

  /// Maps QQ coefficients into another field (identity on matching fields).
  Polynomial change_field(const FieldSpec& f, const RingPtr& target) const;

  /// Same ring and same set of terms (order-insensitive).
  bool equals(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return equals(o); }

  /// Canonical text form, e.g. "3*x0^2*x1 - 1/2*x2".
  std::string to_string() const;

 private:
  void normalize();  // sort descending, combine duplicates, drop zeros

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

/// Remainder of f under multivariate division by gens: no term of the result
/// is divisible by any leading monomial of gens, and f minus the result lies
/// in the ideal generated by gens. Reduces by the first divisor in listed
/// order, so the result is deterministic for a fixed generator list.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> gens,
                       const MonomialOrder& ord);

/// Homogenizes f with the variable at homog_var of the target ring; var_map
/// sends each variable of f's ring to its slot in the target ring.
Polynomial homogenize(const Polynomial& f, const RingPtr& target, std::size_t homog_var,
                      std::span<const std::size_t> var_map, const MonomialOrder& ord);

}  // namespace secantlab
