#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "secantlab/polynomial.hpp"

namespace secantlab {

struct GBStats {
  std::uint64_t spairs = 0;
  std::uint32_t max_degree = 0;
  double wall_seconds = 0.0;
  FieldSpec field;
};

struct GBOptions {
  std::optional<std::uint32_t> degree_cap;
  std::optional<double> timeout_seconds;
  bool stop_on_unit = false;  // bail out as soon as the basis contains a unit
};

struct GBResult {
  std::vector<Polynomial> basis;  // reduced basis, leads ascending
  GBStats stats;
  bool truncated = false;  // a surviving pair exceeded the degree cap
};

/// Raised when a computation exceeds its time budget; carries the statistics
/// accumulated so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, GBStats stats)
      : std::runtime_error(what), stats(std::move(stats)) {}
  GBStats stats;
};

/// Finitely generated ideal with cached reduced Groebner bases per order.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Reduced Groebner basis; complete (untruncated) results are cached per
  /// order, and cache writes are idempotent.
  GBResult groebner_basis(const MonomialOrder& ord, const GBOptions& opts = {}) const;

 private:
  using CacheKey = std::tuple<int, std::uint32_t, std::vector<std::int64_t>>;
  struct Cache {
    std::mutex mu;
    std::map<CacheKey, GBResult> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

GBResult buchberger(const Ideal& I, const MonomialOrder& ord, const GBOptions& opts = {});

/// Elimination ideal: drops the leading block of `drop_count` variables and
/// returns I intersected with the subring of the remaining ones, as an ideal
/// of a fresh ring in those variables.
Ideal eliminate(const Ideal& I, std::size_t drop_count, const GBOptions& opts = {});

bool ideal_membership(const Polynomial& f, const Ideal& I, const MonomialOrder& ord,
                      const GBOptions& opts = {});

/// Rabinowitsch: f lies in the radical of I iff 1 lies in I + (1 - z*f).
bool radical_membership(const Polynomial& f, const Ideal& I, const GBOptions& opts = {});

/// I : f^infinity, via elimination of z from I + (1 - z*f).
Ideal saturation(const Ideal& I, const Polynomial& f, const GBOptions& opts = {});

/// I : J = { f : f*J contained in I }.
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

/// Irredundant homogeneous generating set: drops generators lying in the
/// ideal of the earlier ones, scanning by ascending degree.
std::vector<Polynomial> minimal_generators(const Ideal& I, const GBOptions& opts = {});

bool is_homogeneous_ideal(const Ideal& I);

/// Extends the ring by one fresh variable in front; returns the new ring and
/// the images of the old generators.
std::pair<RingPtr, std::vector<Polynomial>> prepend_variable(const Ideal& I,
                                                             const std::string& name_hint,
                                                             const MonomialOrder& ord);

}  // namespace secantlab
