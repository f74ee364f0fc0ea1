#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "secantlab/errors.hpp"

namespace secantlab {

/// Coefficient field: the exact rationals, or a prime field F_p with p an odd
/// prime below 2^31.
struct FieldSpec {
  enum class Kind : std::uint8_t { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t p = 0;  // modulus, Prime only

  static FieldSpec rationals() { return FieldSpec{Kind::Rational, 0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return kind == Kind::Rational; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;
};

bool is_odd_prime_u32(std::uint32_t p);

/// An element of one of the two supported fields. Rationals are kept in
/// lowest terms with positive denominator; prime-field residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_mpz(const FieldSpec& f, const mpz_class& v);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& v);
  /// Parses "a" or "a/b" with arbitrary-precision integers a, b.
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // exact; division by zero throws
  Scalar negated() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: lowest-terms "a" or "a/b" over QQ, the residue over F_p.
  std::string to_string() const;

  /// Rational payload (QQ scalars only).
  const mpq_class& rational() const;
  /// Residue payload (F_p scalars only).
  std::uint64_t residue() const;

 private:
  Scalar(FieldSpec f, std::uint64_t r) : field_(f), v_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}

  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> v_;
};

/// Maps a rational number into the field (for F_p the denominator must be a
/// unit mod p).
Scalar scalar_from_rational(const FieldSpec& f, const mpq_class& q);

}  // namespace secantlab
