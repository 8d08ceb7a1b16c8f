#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarforge/types.hpp"

namespace polarforge {

/// Non-decreasing shift sequence a_0 <= a_1 <= ... with a_0 = 0.
class ShiftSequence {
 public:
  explicit ShiftSequence(std::vector<std::size_t> values);

  /// a_i = i (the classical squarefree operation).
  static ShiftSequence identity(std::size_t length);
  /// a_i = i * n (the flattening of a bi-indexed ring with n bases).
  static ShiftSequence flat(std::size_t length, std::size_t n);
  /// Parses "id", "flat" or an explicit "0,1,3,..." list.
  static ShiftSequence parse(const std::string& text, std::size_t length,
                             std::size_t n);

  std::size_t length() const { return values_.size(); }
  std::size_t at(std::size_t i) const { return values_.at(i); }
  std::size_t back() const { return values_.back(); }
  bool strictly_increasing() const;

 private:
  std::vector<std::size_t> values_;
};

/// Target ring k[x_1..x_N] with N = n + a_{d-1}.
Ring shift_target_ring(std::size_t n, const ShiftSequence& a);

/// m^{sigma(a)}: the i-th factor of the expansion shifted by a_{i-1}.
Monomial sigma_a(const Monomial& m, const ShiftSequence& a,
                 const Ring& target);

/// Generator-wise sigma(a) into the ring of shift_target_ring, minimalized.
/// `collapsed`, when given, reports whether minimalization dropped images
/// (possible only for non-Borel input).
MonomialIdeal sigma_a_ideal(const MonomialIdeal& I, const ShiftSequence& a,
                            bool* collapsed = nullptr);

/// Specialization psi: x_{i,j} -> x_{i + a_{j-1}} applied generator-wise.
MonomialIdeal psi_specialize(const MonomialIdeal& J, const ShiftSequence& a);
Monomial psi_specialize(const Monomial& m, const ShiftSequence& a,
                        const Ring& target);

}  // namespace polarforge
