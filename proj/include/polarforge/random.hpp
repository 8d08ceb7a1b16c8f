#pragma once

#include <random>

#include "polarforge/shift.hpp"
#include "polarforge/types.hpp"

namespace polarforge {

struct RandomBorelParams {
  int nvars = 4;        // ring size (exact)
  int max_degree = 4;   // per seed monomial
  int seed_count = 4;   // monomials fed to the Borel closure
  int max_generators = 20;  // resample until the closure fits
};

/// Borel closure of a handful of random monomials, resampled until the
/// minimal generating set stays within max_generators.
MonomialIdeal random_borel_ideal(std::mt19937_64& rng,
                                 const RandomBorelParams& params);

/// Random non-decreasing shift sequence with a_0 = 0 and steps in 0..3.
ShiftSequence random_shift_sequence(std::mt19937_64& rng, std::size_t length);

}  // namespace polarforge
