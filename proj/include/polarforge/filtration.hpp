#pragma once

#include <optional>
#include <vector>

#include "polarforge/betti.hpp"
#include "polarforge/polarize.hpp"
#include "polarforge/shift.hpp"
#include "polarforge/types.hpp"

namespace polarforge {

/// One step of the prime filtration of the polarized quotient: the
/// monomial adjoined downstairs, its polarized image, the colon prime,
/// and the degree shift of the cyclic factor.
struct FiltrationStep {
  Monomial adjoined;    // in S
  Monomial image;       // in the polarized ring
  MonomialPrime prime;  // in the polarized ring
  Exp shift;            // = deg(image)
};

struct Filtration {
  MonomialIdeal base;      // the input ideal I
  PolarizationSpec spec;   // box or mixed
  MonomialIdeal polarized; // apply_pol(base, spec)
  std::vector<FiltrationStep> steps;
  MonomialPrime terminal;  // the prime the chain ends in

  /// Step primes followed by the terminal prime.
  std::vector<MonomialPrime> primes() const;
};

/// Pivot choice: l = nu(I), m = lex-max generator with nu(m) = l.
/// When m = x_l the ideal is already the prime (x_1..x_l).
struct Pivot {
  int l;
  Monomial m;
  Monomial m1;  // m / x_l; the unit monomial at a prime
  bool is_prime;
};
Pivot select_pivot(const MonomialIdeal& I);

/// The colon prime (x_{i, b_i + 1} | 1 <= i <= l) with b the partial
/// exponent sums of m1.
MonomialPrime claim2_prime(const Monomial& m1, int l, const Ring& target);

/// Mixed variant: slot b_i + 1 (A-restricted partial sums) for boxed
/// indices, slot a_i + 1 for the rest.
MonomialPrime claim2_prime_mixed(const Monomial& m1, int l,
                                 const std::vector<int>& A,
                                 const Ring& target);

/// Runs the filtration construction for a Borel fixed ideal, asserting
/// at every step that the intermediate ideal stays Borel fixed, that
/// the claimed prime equals the brute-force colon, and that polarizing
/// the enlarged ideal adds exactly the image monomial.
Filtration pretty_clean_filtration(const MonomialIdeal& I,
                                   const PolarizationSpec& spec);

struct PrettyCleanReport {
  bool pretty_clean = false;
  bool codim_nonincreasing = false;  // stronger witnessed property
};
PrettyCleanReport check_pretty_clean(const std::vector<MonomialPrime>& primes);
PrettyCleanReport is_pretty_clean(const Filtration& F);

/// Distinct primes of the filtration; must match the minimal primes of
/// the (squarefree) polarized ideal.
std::vector<MonomialPrime> ass_from_filtration(const Filtration& F);

/// Slot sequence (c_1..c_m) of a prime of the shape (x_{i,c_i} | i<=m),
/// or nullopt when the support is not of that shape.
std::optional<std::vector<int>> prime_slot_sequence(const MonomialPrime& p);

/// Facets in reverse filtration order (terminal prime first), checked
/// against is_shelling before being returned.
std::vector<std::vector<std::size_t>> shelling_order(const Filtration& F);

/// Bjorner-Wachs non-pure shellability of an ordered facet list.
bool is_shelling(const std::vector<std::vector<std::size_t>>& facets);

/// Sum of t^{shift} (1-t)^{codim} over all steps plus the terminal
/// prime with shift 0; equals K of the polarized quotient.
KPolynomial filtration_k_polynomial(const Filtration& F);

/// The filtration pushed along psi into T (box method only).
struct PushedStep {
  Monomial image;
  MonomialPrime prime;
  Exp shift;
};
struct PushedFiltration {
  Ring target;
  std::vector<PushedStep> steps;
  MonomialPrime terminal;
  std::vector<MonomialPrime> primes() const;
};
PushedFiltration push_filtration(const Filtration& F, const ShiftSequence& a);

}  // namespace polarforge
