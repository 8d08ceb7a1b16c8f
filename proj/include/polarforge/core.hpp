#pragma once

#include <vector>

#include "polarforge/types.hpp"

namespace polarforge {

/// Factor expansion m = x_{a_1} ... x_{a_e} with a_1 <= ... <= a_e,
/// returned as 1-based base indices. Plain rings only.
std::vector<int> expand(const Monomial& m);

/// True iff some minimal generator divides m.
bool member(const MonomialIdeal& I, const Monomial& m);

/// Inclusion-minimal generating set, canonically ordered.
MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

/// Monomial-ideal colon (I : m), computed as ( g / gcd(g, m) ).
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

/// nu(m): largest 1-based index with positive exponent. Errors on m = 1.
int nu(const Monomial& m);
int nu_ideal(const MonomialIdeal& I);
/// nu restricted to the index set A (1-based). Errors when supp(m) misses A.
int nu_restricted(const Monomial& m, const std::vector<int>& A);

/// Borel fixed (strongly stable): closed under all moves x_j/x_i, j < i.
bool is_borel_fixed(const MonomialIdeal& I);
/// Stable: closed under moves x_j/x_nu(m) only.
bool is_stable(const MonomialIdeal& I);
/// A witness for a failed Borel move: generator g and indices (j, i)
/// such that (x_j / x_i) * g is outside the ideal.
struct BorelWitness {
  Monomial generator;
  int from_index;  // i, 1-based
  int to_index;    // j < i
};
std::optional<BorelWitness> borel_violation(const MonomialIdeal& I);

/// Smallest Borel fixed ideal containing the given monomials.
MonomialIdeal borel_closure(const Ring& ring, std::vector<Monomial> gens);

/// Minimal primes of a squarefree monomial ideal: the inclusion-minimal
/// hitting sets of the generator supports. Capped at 24 variables.
std::vector<MonomialPrime> minimal_primes_squarefree(const MonomialIdeal& J);

/// Facets of the Stanley-Reisner complex of a squarefree ideal, i.e. the
/// complements of the minimal primes' supports, in canonical prime order.
std::vector<std::vector<std::size_t>> stanley_reisner_facets(
    const MonomialIdeal& J);

}  // namespace polarforge
