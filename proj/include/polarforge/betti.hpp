#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarforge/types.hpp"

namespace polarforge {

/// Coefficient field for homology ranks. Rational is exact and the
/// default; GF(p) exists to expose characteristic dependence.
struct FieldSpec {
  enum class Kind { rational, gfp };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;

  /// "rational" or "gfp:<prime>".
  static FieldSpec parse(const std::string& text);
  /// Reads POLARFORGE_FIELD, defaulting to rational.
  static FieldSpec from_env();
};

/// Graded Betti numbers of the ideal I (so beta_{0,j} counts degree-j
/// minimal generators). Absent entries are zero.
struct BettiTable {
  std::map<std::pair<int, Exp>, std::uint64_t> entries;

  std::uint64_t at(int i, const Exp& j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Numerator of the Hilbert series of S/I over (1-t)^{#vars}.
struct KPolynomial {
  std::map<Exp, long long> coeffs;  // zero coefficients are absent

  void add(const Exp& degree, long long c);
  /// Multiplies by (1-t)^k.
  KPolynomial times_one_minus_t(std::size_t k) const;
  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
};

/// Candidate multidegrees for nonzero Betti numbers: componentwise
/// maxima of nonempty generator subsets.
std::vector<std::vector<Exp>> lcm_lattice_degrees(const MonomialIdeal& I);

/// Simplicial complex on an explicit vertex list, faces as bitmasks.
/// An empty face list is the void complex; mask 0 is the empty face.
struct SimplicialComplex {
  std::vector<std::size_t> vertices;  // global variable indices
  std::vector<std::uint32_t> faces;   // sorted, downward closed
};

/// Upper Koszul complex of I at multidegree b: squarefree tau <= b
/// with x^{b-tau} in I, as a complex on supp(b).
SimplicialComplex upper_koszul(const MonomialIdeal& I,
                               const std::vector<Exp>& b);

/// Reduced homology ranks; slot r holds rank of H~_{r-1}, so slot 0 is
/// H~_{-1} (rank 1 exactly for the complex {empty face}).
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                const FieldSpec& field = {});

/// Full graded Betti table via upper-Koszul homology. Desk-scale caps:
/// at most 20 generators and 24 variables.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field = {},
                       unsigned threads = 1);

/// Eliahou-Kervaire closed form for stable ideals:
/// beta_{i, deg(u)+i} += C(nu(u)-1, i) over u in G(I).
BettiTable ek_betti(const MonomialIdeal& I);

/// K_{S/I}(t) by inclusion-exclusion over generator subsets.
KPolynomial k_polynomial(const MonomialIdeal& I);

/// K-polynomial the given Betti table of an ideal implies:
/// 1 + sum (-1)^{i+1} beta_{i,j} t^j.
KPolynomial k_from_betti(const BettiTable& table);

struct BettiMismatch {
  int i;
  Exp j;
  std::uint64_t base_value;
  std::uint64_t polar_value;
};

struct PolarizationReport {
  bool depolarizes = false;    // phi(J) = I
  bool hilbert_equal = false;  // K_{S~/J} = K_{S/I}
  bool betti_equal = false;
  bool ok = false;  // depolarizes && betti_equal
  std::optional<BettiMismatch> witness;
  BettiTable betti_base;
  BettiTable betti_polar;
};

/// Checks that J is a polarization of I: the depolarization condition
/// plus equality of Betti tables, with the Hilbert-series comparison as
/// a mandatory cross-check (disagreement given the depolarization
/// condition is an internal error).
PolarizationReport verify_polarization(const MonomialIdeal& I,
                                       const MonomialIdeal& J,
                                       const FieldSpec& field = {},
                                       unsigned threads = 1);

}  // namespace polarforge
