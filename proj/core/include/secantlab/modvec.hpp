#pragma once

#include <span>

#include "secantlab/ideal.hpp"

namespace secantlab {

struct ModTerm {
  std::uint32_t comp;
  Monomial mono;
  Scalar coeff;
};

/// Element of a free module S^rank. Terms are sorted descending under the
/// position-over-term extension of the ambient order: lower component first,
/// ties by the monomial order.
class VecPoly {
 public:
  VecPoly(RingPtr ring, MonomialOrder ord, std::uint32_t rank);

  static VecPoly from_terms(RingPtr ring, MonomialOrder ord, std::uint32_t rank,
                            std::vector<ModTerm> terms);
  static VecPoly from_entries(std::uint32_t rank, std::span<const Polynomial> entries,
                              const MonomialOrder& ord);
  static VecPoly basis_vector(RingPtr ring, MonomialOrder ord, std::uint32_t rank,
                              std::uint32_t comp);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  std::uint32_t rank() const { return rank_; }
  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& leading() const;

  VecPoly operator+(const VecPoly& o) const;
  VecPoly operator-(const VecPoly& o) const;
  VecPoly negated() const;
  VecPoly times_term(const Monomial& m, const Scalar& c) const;
  VecPoly monic() const;

  Polynomial entry(std::uint32_t comp) const;
  std::vector<Polynomial> entries() const;

  /// Restriction to components [from, rank), renumbered to start at zero.
  VecPoly tail_block(std::uint32_t from) const;
  /// True when every term has component below `below`.
  bool supported_below(std::uint32_t below) const;

 private:
  void normalize();

  RingPtr ring_;
  MonomialOrder order_;
  std::uint32_t rank_;
  std::vector<ModTerm> terms_;
};

struct SyzygyResult {
  std::vector<VecPoly> syzygies;  // generate the full syzygy module of the inputs
  std::vector<VecPoly> basis;     // module Groebner basis of the input span
  GBStats stats;
};

/// Syzygies of a list of module elements, computed from the Groebner basis
/// of the bookkeeping-augmented module (every S-pair reduction that kills the
/// leading block leaves its lifted relation in the trailing block).
SyzygyResult module_syzygies(std::span<const VecPoly> cols, const GBOptions& opts = {});

/// Expresses each target over the given columns: returns X with
/// sum_i cols[i] * X[j][i] = targets[j]; throws ContractError when a target
/// is not in the column span.
std::vector<std::vector<Polynomial>> module_lift(std::span<const VecPoly> cols,
                                                 std::span<const VecPoly> targets,
                                                 const GBOptions& opts = {});

}  // namespace secantlab
