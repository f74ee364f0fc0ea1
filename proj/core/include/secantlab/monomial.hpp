#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secantlab/errors.hpp"

namespace secantlab {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr std::uint32_t kMaxExponent = (1u << 16) - 1;

/// Exponent vector with cached total degree. At most 64 variables, each
/// exponent below 2^16.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint16_t e = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divided_by(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Raw lexicographic comparison of exponent vectors; a stable key for
  /// containers, unrelated to any monomial order.
  static bool raw_less(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::uint32_t degree_ = 0;
  std::vector<std::uint16_t> exps_;
};

enum class Cmp : int { Less = -1, Equal = 0, Greater = 1 };

/// A total multiplicative order on monomials.
struct MonomialOrder {
  enum class Kind : std::uint8_t { Lex, GrevLex, BlockElim, WeightGrevLex };

  Kind kind = Kind::GrevLex;
  std::uint32_t block = 0;              // BlockElim: size of the leading block
  std::vector<std::int64_t> weights;    // WeightGrevLex

  static MonomialOrder lex() { return {Kind::Lex, 0, {}}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0, {}}; }
  static MonomialOrder block_elim(std::uint32_t leading_block) {
    return {Kind::BlockElim, leading_block, {}};
  }
  static MonomialOrder weight_grevlex(std::vector<std::int64_t> w) {
    return {Kind::WeightGrevLex, 0, std::move(w)};
  }

  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;
};

Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

inline bool order_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return compare(a, b, ord) == Cmp::Less;
}
inline bool order_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return compare(a, b, ord) == Cmp::Greater;
}

}  // namespace secantlab
