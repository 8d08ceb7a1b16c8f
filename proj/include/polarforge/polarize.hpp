#pragma once

#include <vector>

#include "polarforge/types.hpp"

namespace polarforge {

enum class PolMethod { standard, box, mixed };

/// Which polarization operator to apply, and over how many slots.
struct PolarizationSpec {
  PolMethod method = PolMethod::box;
  std::vector<int> A;  // boxed base indices, 1-based; mixed only
  int d = 0;           // slot count; 0 = max generator degree
};

/// k[x_{i,j} | 1 <= i <= n, 1 <= j <= d] with variables ordered
/// (i major, j minor) and display names "<base>_<j>".
Ring polar_ring(int n, int d, const std::vector<std::string>& basenames);

/// Standard polarization: x_i^{a_i} -> x_{i,1} ... x_{i,a_i}.
Monomial std_pol(const Monomial& m, const Ring& target);

/// Box polarization: the i-th factor of the expansion goes to slot i.
Monomial box_pol(const Monomial& m, const Ring& target);

/// Mixed: box on base indices in A, standard on the rest.
Monomial box_pol_A(const Monomial& m, const std::vector<int>& A,
                   const Ring& target);

Monomial apply_pol(const Monomial& m, const PolarizationSpec& spec,
                   const Ring& target);

/// Operator applied generator-wise. Asserts that images of the minimal
/// system are pairwise non-dividing (all three operators preserve
/// minimality; a violation is an internal bug).
MonomialIdeal apply_pol(const MonomialIdeal& I, const PolarizationSpec& spec);

/// Target ring for apply_pol(I, spec): n bases, spec.d slots (or the max
/// generator degree when spec.d == 0).
Ring pol_target_ring(const MonomialIdeal& I, const PolarizationSpec& spec);

/// Slot-erasing map phi: x_{i,j} -> x_i, generator-wise, minimalized.
MonomialIdeal depolarize(const MonomialIdeal& J);
Monomial depolarize(const Monomial& m, const Ring& plain_target);

}  // namespace polarforge
