#pragma once

#include <map>

#include "secantlab/modvec.hpp"

namespace secantlab {

/// Map of free modules, stored densely: entries[row][col], target_rank rows
/// by source_rank columns. Degree vectors are kept for graded complexes and
/// empty otherwise.
struct FreeModuleMap {
  RingPtr ring;
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<std::vector<Polynomial>> entries;
  std::vector<std::int64_t> source_degrees;
  std::vector<std::int64_t> target_degrees;

  static FreeModuleMap from_columns(const RingPtr& ring, std::size_t target_rank,
                                    std::span<const VecPoly> cols);
  std::vector<VecPoly> columns(const MonomialOrder& ord) const;
  FreeModuleMap transpose() const;
  const Polynomial& at(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

/// Checks entrywise that a.compose(b) == 0, i.e. a(b(x)) vanishes.
bool composes_to_zero(const FreeModuleMap& a, const FreeModuleMap& b);

struct ResolutionData {
  RingPtr ring;
  std::vector<FreeModuleMap> maps;  // d_1 .. d_c over F_0 = S (resolution of S/I)
  bool minimal = false;
  std::map<std::pair<long, long>, std::size_t> betti;  // (i, j) -> rank, graded case

  std::size_t pd() const { return maps.size(); }
};

ResolutionData free_resolution(const Ideal& I, bool minimal, const GBOptions& opts = {});

/// Syzygy map of a polynomial generator list (rank-one case of the module
/// engine): columns generate the kernel of [gens]: S^r -> S.
FreeModuleMap syzygies_of(std::span<const Polynomial> gens, const MonomialOrder& ord,
                          const GBOptions& opts = {});

struct GradedDepthInfo {
  long depth = 0;
  long pd = 0;
  long krull_dim = 0;
  bool acm = false;  // depth == krull_dim
};

/// Depth of S/I at the irrelevant maximal ideal, via depth = #vars - pd.
GradedDepthInfo graded_depth(const Ideal& I, const GBOptions& opts = {});

struct ExtModule {
  std::size_t gens = 0;        // presented as coker(relations : S^m -> S^gens)
  FreeModuleMap relations;
  Ideal annihilator;
  bool zero = true;            // annihilator is the unit ideal
};

struct ExtFamily {
  std::vector<ExtModule> ext;  // index j = 0..pd
};

/// Ext^j(S/I, S) for j = 0..pd, presented as cokernels with annihilators.
ExtFamily ext_family(const Ideal& I, const GBOptions& opts = {});

/// Depth of the local ring of S/I at a rational point of V(I), by the
/// support criterion on Ext modules: depth = #vars - max{ j : every
/// generator of ann Ext^j vanishes at the point }.
long depth_at_point(const Ideal& I, std::span<const mpq_class> pt, const GBOptions& opts = {});

std::string betti_json(const ResolutionData& res, long depth);

}  // namespace secantlab
