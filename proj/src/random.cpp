#include "polarforge/random.hpp"

#include "polarforge/core.hpp"

namespace polarforge {

MonomialIdeal random_borel_ideal(std::mt19937_64& rng,
                                 const RandomBorelParams& params) {
  if (params.nvars < 1 || params.max_degree < 1 || params.seed_count < 1)
    throw Error("random_borel_ideal: bad parameters");
  std::vector<std::string> names;
  for (int i = 1; i <= params.nvars; ++i)
    names.push_back("x" + std::to_string(i));
  Ring ring = Ring::plain(names);
  std::uniform_int_distribution<int> deg_dist(1, params.max_degree);
  std::uniform_int_distribution<int> var_dist(0, params.nvars - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Monomial> seeds;
    for (int s = 0; s < params.seed_count; ++s) {
      std::vector<Exp> e(ring.size(), Exp(0));
      int deg = deg_dist(rng);
      for (int t = 0; t < deg; ++t) e[var_dist(rng)] += 1;
      seeds.emplace_back(ring, std::move(e));
    }
    MonomialIdeal I = borel_closure(ring, std::move(seeds));
    if (static_cast<int>(I.gens().size()) <= params.max_generators) return I;
  }
  throw SizeError("random_borel_ideal: could not stay under the generator cap");
}

ShiftSequence random_shift_sequence(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> step(0, 3);
  std::vector<std::size_t> v(length, 0);
  for (std::size_t i = 1; i < length; ++i) v[i] = v[i - 1] + step(rng);
  return ShiftSequence(std::move(v));
}

}  // namespace polarforge
