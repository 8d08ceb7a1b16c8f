#include "polarforge/polarize.hpp"

#include <algorithm>
#include <set>

#include "polarforge/core.hpp"

namespace polarforge {

Ring polar_ring(int n, int d, const std::vector<std::string>& basenames) {
  if (n < 1 || d < 1) throw Error("polar_ring: n and d must be positive");
  if (basenames.size() != static_cast<std::size_t>(n))
    throw Error("polar_ring: expected one basename per base index");
  std::vector<VarDescriptor> vars;
  vars.reserve(static_cast<std::size_t>(n) * d);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= d; ++j)
      vars.push_back({basenames[i - 1] + "_" + std::to_string(j), i, j});
  return Ring::bi_indexed(std::move(vars), basenames);
}

namespace {

int small_exp(const Exp& e, const char* where) {
  if (e > 1000000) throw SizeError(std::string(where) + ": exponent too large");
  return static_cast<int>(e);
}

void check_plain_source(const Monomial& m, const Ring& target,
                        const char* where) {
  if (m.ring().is_bi_indexed())
    throw UnsupportedRingError(std::string(where) + ": source must be plain");
  if (!target.is_bi_indexed())
    throw UnsupportedRingError(std::string(where) +
                               ": target must be bi-indexed");
  if (target.base_count() < static_cast<int>(m.nvars()))
    throw RingMismatchError(std::string(where) +
                            ": target has too few base variables");
}

}  // namespace

Monomial std_pol(const Monomial& m, const Ring& target) {
  check_plain_source(m, target, "std_pol");
  const int d = target.slot_count();
  std::vector<Exp> e(target.size(), Exp(0));
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    int a = small_exp(m.exponent(k), "std_pol");
    if (a > d)
      throw DegreeOverflowError("std_pol: exponent exceeds slot count");
    for (int j = 1; j <= a; ++j)
      e[target.index_of(static_cast<int>(k) + 1, j)] = 1;
  }
  return Monomial(target, std::move(e));
}

Monomial box_pol(const Monomial& m, const Ring& target) {
  check_plain_source(m, target, "box_pol");
  const int d = target.slot_count();
  if (m.degree() > d)
    throw DegreeOverflowError("box_pol: degree exceeds slot count");
  std::vector<Exp> e(target.size(), Exp(0));
  int b = 0;  // running partial sum of exponents
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    int a = small_exp(m.exponent(k), "box_pol");
    for (int j = b + 1; j <= b + a; ++j)
      e[target.index_of(static_cast<int>(k) + 1, j)] = 1;
    b += a;
  }
  return Monomial(target, std::move(e));
}

Monomial box_pol_A(const Monomial& m, const std::vector<int>& A,
                   const Ring& target) {
  check_plain_source(m, target, "box_pol_A");
  const int d = target.slot_count();
  std::set<int> boxed(A.begin(), A.end());
  for (int i : A)
    if (i < 1 || static_cast<std::size_t>(i) > m.nvars())
      throw Error("box_pol_A: index outside 1..n");
  std::vector<Exp> e(target.size(), Exp(0));
  int b = 0;  // partial sum over boxed indices only
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    const int i = static_cast<int>(k) + 1;
    int a = small_exp(m.exponent(k), "box_pol_A");
    if (boxed.count(i)) {
      if (b + a > d)
        throw DegreeOverflowError("box_pol_A: boxed degree exceeds slots");
      for (int j = b + 1; j <= b + a; ++j) e[target.index_of(i, j)] = 1;
      b += a;
    } else {
      if (a > d)
        throw DegreeOverflowError("box_pol_A: exponent exceeds slot count");
      for (int j = 1; j <= a; ++j) e[target.index_of(i, j)] = 1;
    }
  }
  return Monomial(target, std::move(e));
}

Monomial apply_pol(const Monomial& m, const PolarizationSpec& spec,
                   const Ring& target) {
  switch (spec.method) {
    case PolMethod::standard:
      return std_pol(m, target);
    case PolMethod::box:
      return box_pol(m, target);
    case PolMethod::mixed:
      return box_pol_A(m, spec.A, target);
  }
  throw Error("apply_pol: unknown method");
}

Ring pol_target_ring(const MonomialIdeal& I, const PolarizationSpec& spec) {
  if (I.ring().is_bi_indexed())
    throw UnsupportedRingError("apply_pol: input already bi-indexed");
  Exp maxdeg = 1;
  for (const auto& g : I.gens()) maxdeg = std::max(maxdeg, g.degree());
  int d = spec.d > 0 ? spec.d : small_exp(maxdeg, "apply_pol");
  if (d < maxdeg)
    throw DegreeOverflowError("apply_pol: d below max generator degree");
  std::vector<std::string> names;
  for (const auto& v : I.ring().vars()) names.push_back(v.name);
  return polar_ring(static_cast<int>(I.ring().size()), d, names);
}

MonomialIdeal apply_pol(const MonomialIdeal& I, const PolarizationSpec& spec) {
  Ring target = pol_target_ring(I, spec);
  std::vector<Monomial> images;
  images.reserve(I.gens().size());
  for (const auto& g : I.gens())
    images.push_back(apply_pol(g, spec, target));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < images.size(); ++j)
      if (i != j && images[i].divides(images[j]))
        throw InternalError(
            "apply_pol: operator image of a minimal system is not minimal");
  return MonomialIdeal::from_generators(target, std::move(images));
}

Monomial depolarize(const Monomial& m, const Ring& plain_target) {
  if (!m.ring().is_bi_indexed())
    throw UnsupportedRingError("depolarize: plain-ring input");
  std::vector<Exp> e(plain_target.size(), Exp(0));
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m.exponent(k) == 0) continue;
    int base = m.ring().var(k).base;
    e.at(base - 1) += m.exponent(k);
  }
  return Monomial(plain_target, std::move(e));
}

MonomialIdeal depolarize(const MonomialIdeal& J) {
  if (!J.ring().is_bi_indexed())
    throw UnsupportedRingError("depolarize: plain-ring input");
  Ring plain = Ring::plain(J.ring().base_names());
  std::vector<Monomial> gens;
  for (const auto& g : J.gens()) gens.push_back(depolarize(g, plain));
  return minimalize(plain, std::move(gens));
}

}  // namespace polarforge
