#pragma once

#include <string>

#include "polarforge/betti.hpp"
#include "polarforge/filtration.hpp"
#include "polarforge/types.hpp"

#include <nlohmann/json_fwd.hpp>

namespace polarforge {

/// Ideal text format:
///   line 1: "ring <name> <name> ..."            (plain ring)
///        or "polar <n> <d> <basename...>"       (bi-indexed ring)
///   rest:   comma- or newline-separated monomials, each a '*'-joined
///           product of "var" or "var^k" factors; "1" is the unit.
/// An empty generator list is the zero ideal.
struct ParsedIdeal {
  MonomialIdeal ideal;
  bool input_was_minimal = true;
};
ParsedIdeal parse_ideal(const std::string& text);

std::string to_string(const Monomial& m);
std::string to_string(const MonomialPrime& p);
/// Inverse of parse_ideal (up to generator order and minimality).
std::string serialize(const MonomialIdeal& I);

nlohmann::json to_json(const Ring& r);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const MonomialPrime& p);
nlohmann::json to_json(const MonomialIdeal& I);
nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const KPolynomial& k);
nlohmann::json to_json(const Filtration& F);
nlohmann::json to_json(const PushedFiltration& F);
nlohmann::json to_json(const PolarizationReport& r);

}  // namespace polarforge
