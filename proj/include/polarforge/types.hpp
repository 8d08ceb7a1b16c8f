#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarforge {

/// Exponents are arbitrary-precision non-negative integers.
using Exp = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
  using Error::Error;
};
struct UnsupportedRingError : Error {
  using Error::Error;
};
/// Input outside an operation's mathematical domain (e.g. non-squarefree).
struct DomainError : Error {
  using Error::Error;
};
/// Desk-scale cap exceeded (generator count, variable count).
struct SizeError : Error {
  using Error::Error;
};
struct DegreeOverflowError : Error {
  using Error::Error;
};
struct UndefinedValueError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
/// A cross-checked identity failed; signals an implementation bug.
struct InternalError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// One ring variable. A plain ring has only `name`; in a bi-indexed
/// (polarized) ring every variable carries (base, slot), both 1-based,
/// and the display name is "<basename>_<slot>".
struct VarDescriptor {
  std::string name;
  int base = 0;  // 0 in a plain ring
  int slot = 0;

  bool bi_indexed() const { return base > 0; }
  friend bool operator==(const VarDescriptor&, const VarDescriptor&) = default;
};

/// Ordered variable list, shared by value. Cheap to copy.
class Ring {
 public:
  Ring() : Ring(std::vector<VarDescriptor>{}) {}

  static Ring plain(std::vector<std::string> names);
  /// Bi-indexed ring; descriptors must be lex-sorted by (base, slot).
  static Ring bi_indexed(std::vector<VarDescriptor> vars,
                         std::vector<std::string> base_names);

  std::size_t size() const { return impl_->vars.size(); }
  const VarDescriptor& var(std::size_t k) const { return impl_->vars[k]; }
  const std::vector<VarDescriptor>& vars() const { return impl_->vars; }
  bool is_bi_indexed() const { return impl_->bi; }

  /// Number of distinct base indices (bi-indexed rings only).
  int base_count() const;
  /// Max slot index over all variables (bi-indexed rings only).
  int slot_count() const;
  const std::vector<std::string>& base_names() const;
  /// 0-based position of x_{base,slot}; throws if absent.
  std::size_t index_of(int base, int slot) const;

  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.impl_ == b.impl_ || a.impl_->vars == b.impl_->vars;
  }

 private:
  struct Impl {
    std::vector<VarDescriptor> vars;
    std::vector<std::string> base_names;  // bi-indexed only
    bool bi = false;
  };
  explicit Ring(std::vector<VarDescriptor> vars,
                std::vector<std::string> base_names = {}, bool bi = false);
  std::shared_ptr<const Impl> impl_;
};

/// Monomial as an exponent vector over a fixed ring.
class Monomial {
 public:
  explicit Monomial(Ring ring)
      : ring_(std::move(ring)), exps_(ring_.size(), Exp(0)) {}
  Monomial(Ring ring, std::vector<Exp> exps);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return exps_.size(); }
  const Exp& exponent(std::size_t k) const { return exps_[k]; }
  const std::vector<Exp>& exponents() const { return exps_; }

  Exp degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial times_var(std::size_t k) const;
  /// this / other; requires other | this.
  Monomial quotient(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  std::vector<Exp> exps_;
};

/// Lexicographic comparison with x_1 > x_2 > ... (ignores degree).
/// Returns <0, 0, >0 as a is smaller, equal, greater than b.
int lex_compare(const Monomial& a, const Monomial& b);

/// Canonical generator order: degree ascending, then lex descending.
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// Prime ideal generated by a subset of the variables.
class MonomialPrime {
 public:
  MonomialPrime(Ring ring, std::vector<std::size_t> support);

  const Ring& ring() const { return ring_; }
  const std::vector<std::size_t>& support() const { return support_; }
  std::size_t codim() const { return support_.size(); }
  bool contains(const MonomialPrime& other) const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support_ == b.support_ && a.ring_ == b.ring_;
  }
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.support_.size() != b.support_.size())
      return a.support_.size() < b.support_.size();
    return a.support_ < b.support_;
  }

 private:
  Ring ring_;
  std::vector<std::size_t> support_;  // sorted, unique, 0-based
};

/// Monomial ideal, held by its minimal generating set in canonical order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

  /// Minimalizes and sorts; the standard constructor path.
  static MonomialIdeal from_generators(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_ && a.ring_ == b.ring_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

inline void require_same_ring(const Ring& a, const Ring& b,
                              const char* where) {
  if (!(a == b))
    throw RingMismatchError(std::string(where) + ": ring mismatch");
}

}  // namespace polarforge
