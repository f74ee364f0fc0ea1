#include "secantlab/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace secantlab {

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  if (exps_.size() > kMaxVariables) {
    throw StructuralError("too many variables: " + std::to_string(exps_.size()));
  }
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint16_t e) {
  Monomial m(nvars);
  m.exps_.at(i) = e;
  m.degree_ = e;
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) throw StructuralError("monomial variable-count mismatch");
  Monomial r(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    std::uint32_t e = std::uint32_t{exps_[i]} + o.exps_[i];
    if (e > kMaxExponent) throw StructuralError("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) throw StructuralError("monomial variable-count mismatch");
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  if (nvars() != o.nvars()) throw StructuralError("monomial variable-count mismatch");
  Monomial r(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (o.exps_[i] > exps_[i]) throw StructuralError("inexact monomial division");
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
  }
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw StructuralError("monomial variable-count mismatch");
  Monomial r(a.nvars());
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw StructuralError("monomial variable-count mismatch");
  Monomial r(a.nvars());
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  if (nvars() != o.nvars()) throw StructuralError("monomial variable-count mismatch");
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  }
  return true;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::BlockElim:
      return "elim:" + std::to_string(block);
    case Kind::WeightGrevLex:
      return "weight-grevlex";
  }
  return "?";
}

namespace {

// Graded reverse lexicographic comparison over an index range.
Cmp grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Equal;
}

}  // namespace

Cmp compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  const std::size_t n = a.nvars();
  if (n != b.nvars()) throw StructuralError("monomial variable-count mismatch");
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Less : Cmp::Greater;
      }
      return Cmp::Equal;
    case MonomialOrder::Kind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::BlockElim: {
      if (ord.block > n) throw StructuralError("elimination block exceeds variable count");
      Cmp c = grevlex_range(a, b, 0, ord.block);
      if (c != Cmp::Equal) return c;
      return grevlex_range(a, b, ord.block, n);
    }
    case MonomialOrder::Kind::WeightGrevLex: {
      if (ord.weights.size() != n) throw StructuralError("weight vector length mismatch");
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += ord.weights[i] * a[i];
        wb += ord.weights[i] * b[i];
      }
      if (wa != wb) return wa < wb ? Cmp::Less : Cmp::Greater;
      return grevlex_range(a, b, 0, n);
    }
  }
  throw StructuralError("unknown monomial order");
}

}  // namespace secantlab
