#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secantlab/ideal.hpp"
#include "secantlab/polynomial.hpp"

namespace secantlab {

/// Parses the textual polynomial syntax: integer or a/b coefficients, `*`,
/// `^`, variable identifiers, e.g. "3*x0^2*x1 - 1/2*x2".
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& ord);

/// Variety metadata carried by fixture files.
struct FixtureMeta {
  int n = 0;                 // intrinsic dimension
  mpz_class Ln = 0;          // L^n
  std::optional<int> genus;  // curves only

  bool operator==(const FixtureMeta&) const = default;
};

/// Contents of an ideal text file: "ring <field> <vars...>" header, optional
/// "meta n=.. Ln=.. genus=.." block, one generator per line, '#' comments.
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<FixtureMeta> meta;
};

IdealFile parse_ideal_text(std::istream& in, const MonomialOrder& ord);
IdealFile read_ideal_file(const std::string& path, const MonomialOrder& ord);
std::string ideal_text(const RingPtr& ring, const std::vector<Polynomial>& gens,
                       const std::optional<FixtureMeta>& meta);
void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& gens,
                      const std::optional<FixtureMeta>& meta);

std::string meta_json(const FixtureMeta& meta);
FixtureMeta meta_from_json(const std::string& text);

/// Canonical text of ring and generators; stable digest input.
std::string ideal_fingerprint(const Ideal& I);

}  // namespace secantlab
