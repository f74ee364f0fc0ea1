#include "secantlab/resolution.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "secantlab/hilbert.hpp"

namespace secantlab {

namespace {

const MonomialOrder kOrd = MonomialOrder::grevlex();

Polynomial zero_poly(const RingPtr& ring) { return Polynomial::zero(ring, kOrd); }

}  // namespace

FreeModuleMap FreeModuleMap::from_columns(const RingPtr& ring, std::size_t target_rank,
                                          std::span<const VecPoly> cols) {
  FreeModuleMap m;
  m.ring = ring;
  m.target_rank = target_rank;
  m.source_rank = cols.size();
  m.entries.assign(target_rank, std::vector<Polynomial>(cols.size(), zero_poly(ring)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != target_rank) throw StructuralError("column rank mismatch");
    std::vector<Polynomial> es = cols[j].entries();
    for (std::size_t i = 0; i < target_rank; ++i) m.entries[i][j] = es[i];
  }
  return m;
}

std::vector<VecPoly> FreeModuleMap::columns(const MonomialOrder& ord) const {
  std::vector<VecPoly> out;
  out.reserve(source_rank);
  for (std::size_t j = 0; j < source_rank; ++j) {
    std::vector<Polynomial> col;
    col.reserve(target_rank);
    for (std::size_t i = 0; i < target_rank; ++i) col.push_back(entries[i][j]);
    out.push_back(VecPoly::from_entries(static_cast<std::uint32_t>(target_rank), col, ord));
  }
  return out;
}

FreeModuleMap FreeModuleMap::transpose() const {
  FreeModuleMap t;
  t.ring = ring;
  t.source_rank = target_rank;
  t.target_rank = source_rank;
  t.entries.assign(t.target_rank, std::vector<Polynomial>(t.source_rank, zero_poly(ring)));
  for (std::size_t i = 0; i < target_rank; ++i) {
    for (std::size_t j = 0; j < source_rank; ++j) t.entries[j][i] = entries[i][j];
  }
  return t;
}

bool composes_to_zero(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.source_rank != b.target_rank) throw StructuralError("non-composable maps");
  for (std::size_t i = 0; i < a.target_rank; ++i) {
    for (std::size_t j = 0; j < b.source_rank; ++j) {
      Polynomial acc = zero_poly(a.ring);
      for (std::size_t k = 0; k < a.source_rank; ++k) {
        acc = acc + a.entries[i][k] * b.entries[k][j];
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

FreeModuleMap syzygies_of(std::span<const Polynomial> gens, const MonomialOrder& ord,
                          const GBOptions& opts) {
  if (gens.empty()) throw StructuralError("syzygies of an empty list");
  std::vector<VecPoly> cols;
  cols.reserve(gens.size());
  for (const Polynomial& g : gens) {
    cols.push_back(VecPoly::from_entries(1, std::span<const Polynomial>(&g, 1), ord));
  }
  SyzygyResult syz = module_syzygies(cols, opts);
  return FreeModuleMap::from_columns(gens[0].ring(), gens.size(), syz.syzygies);
}

namespace {

bool is_nonzero_constant(const Polynomial& p) {
  return !p.is_zero() && p.is_constant();
}

/// Removes the unit at (row, col) of maps[k] by a change of basis: Schur
/// complement on maps[k], drop of row `col` in maps[k+1] and of column `row`
/// in maps[k-1]. Quasi-isomorphism of the complex.
void prune_at(std::vector<FreeModuleMap>& maps, std::size_t k, std::size_t row, std::size_t col) {
  FreeModuleMap& A = maps[k];
  const Polynomial pivot = A.entries[row][col];
  const Scalar u_inv = pivot.leading_coeff().inverse();

  for (std::size_t r = 0; r < A.target_rank; ++r) {
    if (r == row) continue;
    if (A.entries[r][col].is_zero()) continue;
    Polynomial factor = A.entries[r][col].scaled(u_inv);
    for (std::size_t c = 0; c < A.source_rank; ++c) {
      if (c == col) continue;
      A.entries[r][c] = A.entries[r][c] - factor * A.entries[row][c];
    }
  }
  // drop row `row` and column `col` of A
  A.entries.erase(A.entries.begin() + static_cast<std::ptrdiff_t>(row));
  for (auto& r : A.entries) r.erase(r.begin() + static_cast<std::ptrdiff_t>(col));
  A.target_rank -= 1;
  A.source_rank -= 1;
  if (!A.target_degrees.empty()) A.target_degrees.erase(A.target_degrees.begin() + static_cast<std::ptrdiff_t>(row));
  if (!A.source_degrees.empty()) A.source_degrees.erase(A.source_degrees.begin() + static_cast<std::ptrdiff_t>(col));

  if (k + 1 < maps.size()) {
    FreeModuleMap& B = maps[k + 1];
    B.entries.erase(B.entries.begin() + static_cast<std::ptrdiff_t>(col));
    B.target_rank -= 1;
    if (!B.target_degrees.empty()) B.target_degrees.erase(B.target_degrees.begin() + static_cast<std::ptrdiff_t>(col));
  }
  if (k > 0) {
    FreeModuleMap& C = maps[k - 1];
    for (auto& r : C.entries) r.erase(r.begin() + static_cast<std::ptrdiff_t>(row));
    C.source_rank -= 1;
    if (!C.source_degrees.empty()) C.source_degrees.erase(C.source_degrees.begin() + static_cast<std::ptrdiff_t>(row));
  }
}

void prune_constants(std::vector<FreeModuleMap>& maps) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k < maps.size() && !again; ++k) {
      FreeModuleMap& A = maps[k];
      for (std::size_t i = 0; i < A.target_rank && !again; ++i) {
        for (std::size_t j = 0; j < A.source_rank && !again; ++j) {
          if (is_nonzero_constant(A.entries[i][j])) {
            if (k == 0) throw ContractError("resolution of the unit ideal");
            prune_at(maps, k, i, j);
            again = true;
          }
        }
      }
    }
    while (!maps.empty() && maps.back().source_rank == 0) maps.pop_back();
  }
}

std::int64_t column_degree(const VecPoly& col, const std::vector<std::int64_t>& target_degrees) {
  std::int64_t deg = -1;
  for (const ModTerm& t : col.terms()) {
    std::int64_t d = static_cast<std::int64_t>(t.mono.degree()) + target_degrees[t.comp];
    if (deg == -1) deg = d;
    if (d != deg) throw ContractError("nonhomogeneous syzygy column in a graded resolution");
  }
  return deg;
}

}  // namespace

ResolutionData free_resolution(const Ideal& I, bool minimal, const GBOptions& opts) {
  const RingPtr& ring = I.ring();
  const bool graded = is_homogeneous_ideal(I);
  if (minimal && !graded) {
    throw ContractError("minimal resolution requires a homogeneous ideal");
  }

  ResolutionData res;
  res.ring = ring;
  if (I.is_zero_ideal()) {
    res.minimal = minimal;
    if (graded) res.betti[{0, 0}] = 1;
    return res;
  }

  std::vector<Polynomial> gens = minimal ? minimal_generators(I, opts) : I.generators();
  for (Polynomial& g : gens) g = g.with_order(kOrd);

  FreeModuleMap d1;
  d1.ring = ring;
  d1.target_rank = 1;
  d1.source_rank = gens.size();
  d1.entries.assign(1, gens);
  if (graded) {
    d1.target_degrees = {0};
    for (const Polynomial& g : gens) d1.source_degrees.push_back(g.total_degree());
  }
  res.maps.push_back(std::move(d1));

  const std::size_t cap = ring->nvars() + 4;
  while (!res.maps.empty()) {
    std::vector<VecPoly> cols = res.maps.back().columns(kOrd);
    SyzygyResult syz = module_syzygies(cols, opts);
    if (syz.syzygies.empty()) break;
    FreeModuleMap next = FreeModuleMap::from_columns(ring, cols.size(), syz.syzygies);
    if (graded) {
      next.target_degrees = res.maps.back().source_degrees;
      for (const VecPoly& c : syz.syzygies) {
        next.source_degrees.push_back(column_degree(c, next.target_degrees));
      }
    }
    res.maps.push_back(std::move(next));
    prune_constants(res.maps);
    if (res.maps.size() > cap) throw ContractError("resolution exceeded the syzygy length bound");
  }

  res.minimal = minimal;
  if (graded) {
    res.betti[{0, 0}] = 1;
    for (std::size_t i = 0; i < res.maps.size(); ++i) {
      for (std::int64_t d : res.maps[i].source_degrees) {
        res.betti[{static_cast<long>(i + 1), d}] += 1;
      }
    }
  }
  return res;
}

GradedDepthInfo graded_depth(const Ideal& I, const GBOptions& opts) {
  if (!is_homogeneous_ideal(I)) throw ContractError("graded depth requires a homogeneous ideal");
  HilbertData h = dim_degree(I, opts);
  if (h.zero_ring) throw ContractError("graded depth of the unit ideal");

  ResolutionData res = free_resolution(I, true, opts);
  GradedDepthInfo info;
  info.pd = static_cast<long>(res.pd());
  info.depth = static_cast<long>(I.ring()->nvars()) - info.pd;
  info.krull_dim = h.krull_dim;
  info.acm = info.depth == info.krull_dim;
  return info;
}

namespace {

Ideal annihilator_of_cokernel(const FreeModuleMap& rel, std::size_t gens_rank,
                              const GBOptions& opts) {
  const RingPtr& ring = rel.ring;
  if (gens_rank == 0) {
    return Ideal(ring, {Polynomial::constant(ring, kOrd, Scalar::one(ring->field))});
  }
  std::vector<VecPoly> rel_cols = rel.source_rank > 0
                                      ? rel.columns(kOrd)
                                      : std::vector<VecPoly>{};
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < gens_rank; ++i) {
    std::vector<VecPoly> cols;
    cols.push_back(VecPoly::basis_vector(ring, kOrd, static_cast<std::uint32_t>(gens_rank),
                                         static_cast<std::uint32_t>(i)));
    cols.insert(cols.end(), rel_cols.begin(), rel_cols.end());
    SyzygyResult syz = module_syzygies(cols, opts);
    std::vector<Polynomial> firsts;
    for (const VecPoly& s : syz.syzygies) {
      Polynomial f = s.entry(0);
      if (!f.is_zero()) firsts.push_back(f);
    }
    Ideal quot(ring, std::move(firsts));
    acc = acc ? intersect(*acc, quot, opts) : quot;
  }
  return *acc;
}

bool contains_unit(const Ideal& I, const GBOptions& opts) {
  if (I.is_zero_ideal()) return false;
  for (const Polynomial& g : I.generators()) {
    if (is_nonzero_constant(g)) return true;
  }
  GBResult gb = I.groebner_basis(kOrd, opts);
  return gb.basis.size() == 1 && is_nonzero_constant(gb.basis[0]);
}

}  // namespace

ExtFamily ext_family(const Ideal& I, const GBOptions& opts) {
  const RingPtr& ring = I.ring();
  if (contains_unit(I, opts)) throw ContractError("Ext family of the unit ideal");

  ResolutionData res = free_resolution(I, false, opts);
  const std::size_t c = res.pd();

  ExtFamily fam;
  for (std::size_t j = 0; j <= c; ++j) {
    // rank of F_j: maps[j] = d_{j+1} : F_{j+1} -> F_j has target rank F_j
    const std::size_t ambient_rank =
        j < c ? res.maps[j].target_rank : (c == 0 ? 1 : res.maps[c - 1].source_rank);

    // kernel generators K of d_{j+1}^T; at the top of the resolution the
    // whole module F_c^* is the kernel
    std::vector<VecPoly> kernel_gens;
    if (j < c) {
      FreeModuleMap dt = res.maps[j].transpose();  // d_{j+1}^T : F_j^* -> F_{j+1}^*
      std::vector<VecPoly> cols = dt.columns(kOrd);
      SyzygyResult syz = module_syzygies(cols, opts);
      kernel_gens = std::move(syz.syzygies);
    } else {
      for (std::size_t i = 0; i < ambient_rank; ++i) {
        kernel_gens.push_back(VecPoly::basis_vector(ring, kOrd,
                                                    static_cast<std::uint32_t>(ambient_rank),
                                                    static_cast<std::uint32_t>(i)));
      }
    }

    if (kernel_gens.empty()) {
      FreeModuleMap none;
      none.ring = ring;
      fam.ext.push_back(ExtModule{
          0, std::move(none),
          Ideal(ring, {Polynomial::constant(ring, kOrd, Scalar::one(ring->field))}), true});
      continue;
    }

    std::vector<VecPoly> relation_cols;
    if (j >= 1) {
      FreeModuleMap dprev_t = res.maps[j - 1].transpose();  // d_j^T : F_{j-1}^* -> F_j^*
      std::vector<VecPoly> images = dprev_t.columns(kOrd);
      std::vector<std::vector<Polynomial>> lifted = module_lift(kernel_gens, images, opts);
      for (const auto& expr : lifted) {
        relation_cols.push_back(VecPoly::from_entries(
            static_cast<std::uint32_t>(kernel_gens.size()), expr, kOrd));
      }
    }
    SyzygyResult ksyz = module_syzygies(kernel_gens, opts);
    for (VecPoly& s : ksyz.syzygies) relation_cols.push_back(std::move(s));

    FreeModuleMap relations = FreeModuleMap::from_columns(ring, kernel_gens.size(), relation_cols);
    Ideal ann = annihilator_of_cokernel(relations, kernel_gens.size(), opts);
    bool zero = contains_unit(ann, opts);
    fam.ext.push_back(ExtModule{kernel_gens.size(), std::move(relations), std::move(ann), zero});
  }
  return fam;
}

long depth_at_point(const Ideal& I, std::span<const mpq_class> pt, const GBOptions& opts) {
  const RingPtr& ring = I.ring();
  if (pt.size() != ring->nvars()) throw StructuralError("point arity mismatch");
  std::vector<Scalar> coords;
  coords.reserve(pt.size());
  for (const mpq_class& q : pt) coords.push_back(Scalar::from_mpq(ring->field, q));
  for (const Polynomial& g : I.generators()) {
    if (!g.evaluate(coords).is_zero()) throw ContractError("point is not on the variety");
  }

  ExtFamily fam = ext_family(I, opts);
  long max_j = 0;
  for (std::size_t j = 0; j < fam.ext.size(); ++j) {
    const ExtModule& e = fam.ext[j];
    if (e.zero) continue;
    bool vanishes = true;
    for (const Polynomial& g : e.annihilator.generators()) {
      if (!g.evaluate(coords).is_zero()) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) max_j = static_cast<long>(j);
  }
  return static_cast<long>(ring->nvars()) - max_j;
}

std::string betti_json(const ResolutionData& res, long depth) {
  nlohmann::json j;
  j["betti"] = nlohmann::json::array();
  for (const auto& [key, rank] : res.betti) {
    j["betti"].push_back({key.first, key.second, rank});
  }
  j["pd"] = res.pd();
  j["depth"] = depth;
  return j.dump();
}

}  // namespace secantlab
