#pragma once

#include <random>
#include <string>
#include <vector>

#include "polarforge/io.hpp"
#include "polarforge/types.hpp"

namespace pftest {

inline polarforge::MonomialIdeal ideal(const std::string& text) {
  return polarforge::parse_ideal(text).ideal;
}

inline polarforge::Monomial mono(const polarforge::Ring& r,
                                 const std::string& text) {
  using namespace polarforge;
  auto parsed = parse_ideal(serialize(MonomialIdeal(r)) + text);
  if (parsed.ideal.gens().size() != 1) throw Error("expected one monomial");
  return parsed.ideal.gens()[0];
}

// Ring-name-insensitive comparison: same sorted exponent vectors.
inline bool same_gens(const polarforge::MonomialIdeal& a,
                      const polarforge::MonomialIdeal& b) {
  if (a.gens().size() != b.gens().size()) return false;
  for (std::size_t k = 0; k < a.gens().size(); ++k) {
    auto ea = a.gens()[k].exponents();
    auto eb = b.gens()[k].exponents();
    const std::size_t mx = std::max(ea.size(), eb.size());
    ea.resize(mx);
    eb.resize(mx);
    if (ea != eb) return false;
  }
  return true;
}

inline polarforge::Monomial random_monomial(std::mt19937_64& rng,
                                            const polarforge::Ring& r,
                                            int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, static_cast<int>(r.size()) - 1);
  std::vector<polarforge::Exp> e(r.size(), polarforge::Exp(0));
  int d = deg(rng);
  for (int t = 0; t < d; ++t) e[var(rng)] += 1;
  return polarforge::Monomial(r, std::move(e));
}

}  // namespace pftest
