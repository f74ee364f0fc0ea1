#include "secantlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace secantlab {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  char take() {
    skip_ws();
    return text[pos++];
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw StructuralError("expected a number at '" + std::string(text.substr(start)) + "'");
    return std::string(text.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) throw StructuralError("expected an identifier at '" + std::string(text.substr(start)) + "'");
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            const MonomialOrder& ord) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.peek() == '+' || lx.peek() == '-') {
      negative = lx.take() == '-';
    } else if (!first) {
      throw StructuralError("expected '+' or '-' between terms in: " + text);
    }
    first = false;

    mpq_class coeff(1);
    bool saw_coeff = false;
    if (!lx.done() && std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      mpz_class num(lx.number(), 10);
      mpz_class den(1);
      if (!lx.done() && lx.peek() == '/') {
        lx.take();
        den = mpz_class(lx.number(), 10);
        if (den == 0) throw StructuralError("zero denominator in: " + text);
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      saw_coeff = true;
    }
    if (negative) coeff = -coeff;

    std::vector<std::uint16_t> exps(ring->nvars(), 0);
    bool expect_factor = false;
    if (saw_coeff && !lx.done() && lx.peek() == '*') {
      lx.take();
      expect_factor = true;
    }
    while (!lx.done()) {
      char c = lx.peek();
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
        if (expect_factor) throw StructuralError("dangling '*' in: " + text);
        break;
      }
      std::string name = lx.ident();
      auto idx = ring->var_index(name);
      if (!idx) throw StructuralError("unknown variable '" + name + "' in: " + text);
      std::uint32_t e = 1;
      if (!lx.done() && lx.peek() == '^') {
        lx.take();
        e = static_cast<std::uint32_t>(std::stoul(lx.number()));
      }
      std::uint32_t total = exps[*idx] + e;
      if (total > kMaxExponent) throw StructuralError("exponent overflow in: " + text);
      exps[*idx] = static_cast<std::uint16_t>(total);
      expect_factor = false;
      if (!lx.done() && lx.peek() == '*') {
        lx.take();
        expect_factor = true;
      } else {
        break;
      }
    }
    if (expect_factor) throw StructuralError("dangling '*' in: " + text);
    terms.push_back(Term{Monomial(std::move(exps)), Scalar::from_mpq(ring->field, coeff)});
  }
  return Polynomial::from_terms(ring, ord, std::move(terms));
}

namespace {

FieldSpec parse_field(std::istringstream& line) {
  std::string fieldname;
  line >> fieldname;
  if (fieldname == "QQ") return FieldSpec::rationals();
  if (fieldname == "Fp") {
    unsigned long p = 0;
    line >> p;
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  throw StructuralError("unknown field '" + fieldname + "' (expected QQ or Fp <p>)");
}

FixtureMeta parse_meta_line(std::istringstream& line) {
  FixtureMeta meta;
  std::string kv;
  bool saw_n = false, saw_ln = false;
  while (line >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw StructuralError("bad meta entry: " + kv);
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "n") {
      meta.n = std::stoi(value);
      saw_n = true;
    } else if (key == "Ln") {
      meta.Ln = mpz_class(value, 10);
      saw_ln = true;
    } else if (key == "genus") {
      if (value != "none") meta.genus = std::stoi(value);
    } else {
      throw StructuralError("unknown meta key: " + key);
    }
  }
  if (!saw_n || !saw_ln) throw StructuralError("meta line needs n= and Ln=");
  return meta;
}

}  // namespace

IdealFile parse_ideal_text(std::istream& in, const MonomialOrder& ord) {
  IdealFile out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "ring") {
      if (out.ring) throw StructuralError("duplicate ring header");
      FieldSpec field = parse_field(ls);
      std::vector<std::string> vars;
      std::string v;
      while (ls >> v) vars.push_back(v);
      if (vars.empty()) throw StructuralError("ring header without variables");
      out.ring = make_ring(std::move(vars), field);
    } else if (head == "meta") {
      out.meta = parse_meta_line(ls);
    } else {
      if (!out.ring) throw StructuralError("generator before ring header");
      out.generators.push_back(parse_polynomial(line, out.ring, ord));
    }
  }
  if (!out.ring) throw StructuralError("missing ring header");
  return out;
}

IdealFile read_ideal_file(const std::string& path, const MonomialOrder& ord) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  return parse_ideal_text(in, ord);
}

std::string ideal_text(const RingPtr& ring, const std::vector<Polynomial>& gens,
                       const std::optional<FixtureMeta>& meta) {
  std::ostringstream out;
  out << "ring " << (ring->field.is_rational() ? "QQ" : "Fp " + std::to_string(ring->field.p));
  for (const std::string& v : ring->vars) out << ' ' << v;
  out << '\n';
  if (meta) {
    out << "meta n=" << meta->n << " Ln=" << meta->Ln.get_str() << " genus=";
    if (meta->genus) {
      out << *meta->genus;
    } else {
      out << "none";
    }
    out << '\n';
  }
  for (const Polynomial& g : gens) out << g.to_string() << '\n';
  return out.str();
}

void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& gens,
                      const std::optional<FixtureMeta>& meta) {
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path);
  out << ideal_text(ring, gens, meta);
}

std::string meta_json(const FixtureMeta& meta) {
  nlohmann::json j;
  j["n"] = meta.n;
  j["Ln"] = meta.Ln.get_str();
  if (meta.genus) {
    j["genus"] = *meta.genus;
  } else {
    j["genus"] = nullptr;
  }
  return j.dump(2) + "\n";
}

FixtureMeta meta_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FixtureMeta meta;
  meta.n = j.at("n").get<int>();
  meta.Ln = mpz_class(j.at("Ln").get<std::string>(), 10);
  if (!j.at("genus").is_null()) meta.genus = j.at("genus").get<int>();
  return meta;
}

std::string ideal_fingerprint(const Ideal& I) {
  return ideal_text(I.ring(), I.generators(), std::nullopt);
}

}  // namespace secantlab
