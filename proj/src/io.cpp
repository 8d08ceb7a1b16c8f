#include "polarforge/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "polarforge/polarize.hpp"

namespace polarforge {

using nlohmann::json;

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
};

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '*' &&
         c != '^' && c != ',';
}

Monomial parse_monomial_token(const std::string& tok, const Ring& ring,
                              std::size_t line, std::size_t col) {
  if (tok == "1") return Monomial(ring);
  std::vector<Exp> exps(ring.size(), Exp(0));
  std::size_t pos = 0;
  while (pos < tok.size()) {
    std::size_t start = pos;
    while (pos < tok.size() && is_name_char(tok[pos]) && tok[pos] != '^')
      ++pos;
    std::string name = tok.substr(start, pos - start);
    auto idx = ring.find(name);
    if (!idx)
      throw ParseError("unknown variable '" + name + "'", line, col + start);
    Exp k = 1;
    if (pos < tok.size() && tok[pos] == '^') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
        ++pos;
      std::string digits = tok.substr(dstart, pos - dstart);
      if (digits.empty() ||
          (pos < tok.size() && tok[pos] != '*'))
        throw ParseError("malformed exponent after '" + name + "^'", line,
                         col + dstart);
      k = Exp(digits);
    }
    exps[*idx] += k;
    if (pos < tok.size()) {
      if (tok[pos] != '*')
        throw ParseError("expected '*' between factors", line, col + pos);
      ++pos;
      if (pos == tok.size())
        throw ParseError("trailing '*' in monomial", line, col + pos);
    }
  }
  return Monomial(ring, std::move(exps));
}

}  // namespace

ParsedIdeal parse_ideal(const std::string& text) {
  std::size_t header_end = text.find('\n');
  std::string header =
      header_end == std::string::npos ? text : text.substr(0, header_end);
  std::istringstream hs(header);
  std::string kind;
  hs >> kind;
  Ring ring;
  if (kind == "ring") {
    std::vector<std::string> names;
    std::string n;
    while (hs >> n) names.push_back(n);
    if (names.empty())
      throw ParseError("'ring' header needs at least one variable", 1, 1);
    ring = Ring::plain(std::move(names));
  } else if (kind == "polar") {
    int n = 0, d = 0;
    if (!(hs >> n >> d) || n < 1 || d < 1)
      throw ParseError("'polar' header needs positive <n> <d>", 1, 1);
    std::vector<std::string> names;
    std::string b;
    while (hs >> b) names.push_back(b);
    if (static_cast<int>(names.size()) != n)
      throw ParseError("'polar' header needs exactly n basenames", 1, 1);
    ring = polar_ring(n, d, names);
  } else {
    throw ParseError("header must start with 'ring' or 'polar'", 1, 1);
  }

  std::vector<Monomial> gens;
  if (header_end != std::string::npos) {
    Cursor cur{text};
    while (cur.pos <= header_end) cur.advance();
    while (!cur.done()) {
      while (!cur.done() && (std::isspace(static_cast<unsigned char>(cur.peek())) ||
                             cur.peek() == ','))
        cur.advance();
      if (cur.done()) break;
      std::size_t tline = cur.line, tcol = cur.col;
      std::string tok;
      while (!cur.done() && cur.peek() != ',' && cur.peek() != '\n' &&
             !std::isspace(static_cast<unsigned char>(cur.peek()))) {
        tok.push_back(cur.peek());
        cur.advance();
      }
      gens.push_back(parse_monomial_token(tok, ring, tline, tcol));
    }
  }
  MonomialIdeal ideal = MonomialIdeal::from_generators(ring, gens);
  bool minimal = ideal.gens().size() == gens.size();
  return {std::move(ideal), minimal};
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    const Exp& e = m.exponent(k);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += m.ring().var(k).name;
    if (e > 1) out += "^" + e.str();
  }
  return out;
}

std::string to_string(const MonomialPrime& p) {
  std::string out = "(";
  bool first = true;
  for (auto v : p.support()) {
    if (!first) out += ", ";
    out += p.ring().var(v).name;
    first = false;
  }
  return out + ")";
}

std::string serialize(const MonomialIdeal& I) {
  std::string out;
  const Ring& r = I.ring();
  if (r.is_bi_indexed()) {
    out = "polar " + std::to_string(r.base_count()) + " " +
          std::to_string(r.slot_count());
    for (const auto& b : r.base_names()) out += " " + b;
  } else {
    out = "ring";
    for (const auto& v : r.vars()) out += " " + v.name;
  }
  out += "\n";
  bool first = true;
  for (const auto& g : I.gens()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  out += "\n";
  return out;
}

namespace {

json exp_json(const Exp& e) {
  if (e <= std::numeric_limits<long long>::max())
    return static_cast<long long>(e);
  return e.str();
}

}  // namespace

json to_json(const Ring& r) {
  json j;
  if (r.is_bi_indexed()) {
    j["kind"] = "polar";
    j["n"] = r.base_count();
    j["d"] = r.slot_count();
    j["base"] = r.base_names();
  } else {
    j["kind"] = "plain";
    json names = json::array();
    for (const auto& v : r.vars()) names.push_back(v.name);
    j["vars"] = names;
  }
  return j;
}

json to_json(const Monomial& m) { return to_string(m); }

json to_json(const MonomialPrime& p) {
  json names = json::array();
  for (auto v : p.support()) names.push_back(p.ring().var(v).name);
  return names;
}

json to_json(const MonomialIdeal& I) {
  json j;
  j["ring"] = to_json(I.ring());
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(to_string(g));
  j["generators"] = gens;
  return j;
}

json to_json(const BettiTable& t) {
  json arr = json::array();
  for (const auto& [key, v] : t.entries)
    arr.push_back({{"i", key.first}, {"j", exp_json(key.second)}, {"value", v}});
  return arr;
}

json to_json(const KPolynomial& k) {
  json arr = json::array();
  for (const auto& [deg, c] : k.coeffs)
    arr.push_back({{"degree", exp_json(deg)}, {"coeff", c}});
  return arr;
}

json to_json(const Filtration& F) {
  json j;
  j["base"] = to_json(F.base);
  j["method"] = F.spec.method == PolMethod::box ? "box" : "mixed";
  if (F.spec.method == PolMethod::mixed) j["A"] = F.spec.A;
  j["d"] = F.spec.d;
  j["polarized"] = to_json(F.polarized);
  json steps = json::array();
  for (const auto& s : F.steps)
    steps.push_back({{"adjoined", to_string(s.adjoined)},
                     {"image", to_string(s.image)},
                     {"prime", to_json(s.prime)},
                     {"shift", exp_json(s.shift)}});
  j["steps"] = steps;
  j["terminal"] = to_json(F.terminal);
  return j;
}

json to_json(const PushedFiltration& F) {
  json j;
  json steps = json::array();
  for (const auto& s : F.steps)
    steps.push_back({{"image", to_string(s.image)},
                     {"prime", to_json(s.prime)},
                     {"shift", exp_json(s.shift)}});
  j["steps"] = steps;
  j["terminal"] = to_json(F.terminal);
  return j;
}

json to_json(const PolarizationReport& r) {
  json j;
  j["depolarizes"] = r.depolarizes;
  j["hilbert_equal"] = r.hilbert_equal;
  j["betti_equal"] = r.betti_equal;
  j["ok"] = r.ok;
  if (r.witness)
    j["witness"] = {{"i", r.witness->i},
                    {"j", exp_json(r.witness->j)},
                    {"base", r.witness->base_value},
                    {"polarized", r.witness->polar_value}};
  j["betti_base"] = to_json(r.betti_base);
  j["betti_polarized"] = to_json(r.betti_polar);
  return j;
}

}  // namespace polarforge
