#include "secantlab/field.hpp"

#include <cstdlib>
#include <utility>

namespace secantlab {

bool is_odd_prime_u32(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_odd_prime_u32(p)) {
    throw StructuralError("field modulus must be an odd prime below 2^31: " + std::to_string(p));
  }
  return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::name() const {
  return is_rational() ? "QQ" : "Fp " + std::to_string(p);
}

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw StructuralError("division by zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw StructuralError("noninvertible residue in F_p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_p(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1});
}

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  return from_mpz(f, mpz_class(v));
}

Scalar Scalar::from_mpz(const FieldSpec& f, const mpz_class& v) {
  if (f.is_rational()) return Scalar(f, mpq_class(v));
  return Scalar(f, mpz_mod_p(v, f.p));
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& v) {
  if (f.is_rational()) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  std::uint64_t num = mpz_mod_p(v.get_num(), f.p);
  std::uint64_t den = mpz_mod_p(v.get_den(), f.p);
  return Scalar(f, mod_mul(num, mod_inv(den, f.p), f.p));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    mpz_class n;
    if (n.set_str(text, 10) != 0) throw StructuralError("bad coefficient: " + text);
    return from_mpz(f, n);
  }
  mpz_class num, den;
  if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0) {
    throw StructuralError("bad coefficient: " + text);
  }
  if (den == 0) throw StructuralError("zero denominator: " + text);
  mpq_class q(num, den);
  q.canonicalize();
  return scalar_from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw StructuralError("field mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
  return Scalar(field_, mod_add(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
  return Scalar(field_, mod_sub(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
  return Scalar(field_, mod_mul(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::negated() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t r = std::get<std::uint64_t>(v_);
  return Scalar(field_, r == 0 ? 0 : field_.p - r);
}

Scalar Scalar::inverse() const {
  if (field_.is_rational()) {
    const mpq_class& q = std::get<mpq_class>(v_);
    if (q == 0) throw StructuralError("division by zero in QQ");
    return Scalar(field_, mpq_class(1 / q));
  }
  return Scalar(field_, mod_inv(std::get<std::uint64_t>(v_), field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw StructuralError("not a rational scalar");
  return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw StructuralError("not a prime-field scalar");
  return std::get<std::uint64_t>(v_);
}

Scalar scalar_from_rational(const FieldSpec& f, const mpq_class& q) {
  return Scalar::from_mpq(f, q);
}

}  // namespace secantlab
