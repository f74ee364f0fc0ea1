#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secantlab/field.hpp"
#include "secantlab/monomial.hpp"

namespace secantlab {

/// Ring signature: named variables over a coefficient field.
struct Ring {
  std::vector<std::string> vars;
  FieldSpec field;

  std::size_t nvars() const { return vars.size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, FieldSpec field);

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace secantlab
