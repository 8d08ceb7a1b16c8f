#include "polarforge/filtration.hpp"

#include <algorithm>
#include <set>

#include "polarforge/core.hpp"

namespace polarforge {

namespace {

constexpr int kStepLimit = 10000;

MonomialIdeal ideal_of_prime(const MonomialPrime& p) {
  std::vector<Monomial> gens;
  for (auto v : p.support())
    gens.push_back(Monomial(p.ring()).times_var(v));
  return MonomialIdeal::from_generators(p.ring(), std::move(gens));
}

}  // namespace

std::vector<MonomialPrime> Filtration::primes() const {
  std::vector<MonomialPrime> ps;
  for (const auto& s : steps) ps.push_back(s.prime);
  ps.push_back(terminal);
  return ps;
}

std::vector<MonomialPrime> PushedFiltration::primes() const {
  std::vector<MonomialPrime> ps;
  for (const auto& s : steps) ps.push_back(s.prime);
  ps.push_back(terminal);
  return ps;
}

Pivot select_pivot(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw PreconditionError("select_pivot: ideal must be proper and nonzero");
  if (!is_borel_fixed(I))
    throw PreconditionError("select_pivot: ideal is not Borel fixed");
  const int l = nu_ideal(I);
  const Monomial* best = nullptr;
  for (const auto& g : I.gens()) {
    if (nu(g) != l) continue;
    if (!best || lex_compare(g, *best) > 0) best = &g;
  }
  Monomial xl = Monomial(I.ring()).times_var(static_cast<std::size_t>(l) - 1);
  const bool at_prime = (*best == xl);
  return Pivot{l, *best, at_prime ? Monomial(I.ring()) : best->quotient(xl),
               at_prime};
}

MonomialPrime claim2_prime(const Monomial& m1, int l, const Ring& target) {
  const int d = target.slot_count();
  std::vector<std::size_t> supp;
  Exp b = 0;
  for (int i = 1; i <= l; ++i) {
    b += m1.exponent(static_cast<std::size_t>(i) - 1);
    if (b + 1 > d) throw DegreeOverflowError("claim2_prime: slot overflow");
    supp.push_back(target.index_of(i, static_cast<int>(b) + 1));
  }
  return MonomialPrime(target, std::move(supp));
}

MonomialPrime claim2_prime_mixed(const Monomial& m1, int l,
                                 const std::vector<int>& A,
                                 const Ring& target) {
  const int d = target.slot_count();
  std::set<int> boxed(A.begin(), A.end());
  std::vector<std::size_t> supp;
  Exp b = 0;  // partial sums over boxed indices only
  for (int i = 1; i <= l; ++i) {
    Exp slot;
    if (boxed.count(i)) {
      b += m1.exponent(static_cast<std::size_t>(i) - 1);
      slot = b + 1;
    } else {
      slot = m1.exponent(static_cast<std::size_t>(i) - 1) + 1;
    }
    if (slot > d)
      throw DegreeOverflowError("claim2_prime_mixed: slot overflow");
    supp.push_back(target.index_of(i, static_cast<int>(slot)));
  }
  return MonomialPrime(target, std::move(supp));
}

Filtration pretty_clean_filtration(const MonomialIdeal& I,
                                   const PolarizationSpec& spec) {
  if (spec.method == PolMethod::standard)
    throw Error("pretty_clean_filtration: method must be box or mixed");
  if (I.is_zero() || I.is_unit())
    throw PreconditionError(
        "pretty_clean_filtration: ideal must be proper and nonzero");
  if (auto w = borel_violation(I))
    throw PreconditionError(
        "pretty_clean_filtration: not Borel fixed (move x_" +
        std::to_string(w->to_index) + "/x_" + std::to_string(w->from_index) +
        " escapes)");

  // Fix the slot count up front so every intermediate ideal polarizes
  // into the same ring.
  PolarizationSpec fixed = spec;
  Ring target = pol_target_ring(I, fixed);
  fixed.d = target.slot_count();

  Filtration F{I, fixed, apply_pol(I, fixed), {}, MonomialPrime(target, {})};
  MonomialIdeal current = I;
  MonomialIdeal polarized = F.polarized;

  for (int step = 0;; ++step) {
    if (step > kStepLimit)
      throw InternalError("pretty_clean_filtration: step limit exceeded");
    Pivot pivot = select_pivot(current);
    if (pivot.is_prime) {
      std::vector<std::size_t> supp;
      for (int i = 1; i <= pivot.l; ++i) supp.push_back(target.index_of(i, 1));
      F.terminal = MonomialPrime(target, std::move(supp));
      if (!(polarized == ideal_of_prime(F.terminal)))
        throw InternalError(
            "pretty_clean_filtration: terminal ideal is not the expected prime");
      return F;
    }
    Monomial image = apply_pol(pivot.m1, fixed, target);
    MonomialPrime prime =
        fixed.method == PolMethod::box
            ? claim2_prime(pivot.m1, pivot.l, target)
            : claim2_prime_mixed(pivot.m1, pivot.l, fixed.A, target);
    // The adjoined image is new, and its colon is exactly the claimed prime.
    if (member(polarized, image))
      throw InternalError("pretty_clean_filtration: image already in ideal");
    if (!(colon(polarized, image) == ideal_of_prime(prime)))
      throw InternalError(
          "pretty_clean_filtration: claimed prime differs from colon");
    std::vector<Monomial> next_gens = current.gens();
    next_gens.push_back(pivot.m1);
    MonomialIdeal next = minimalize(current.ring(), std::move(next_gens));
    if (!is_borel_fixed(next))
      throw InternalError(
          "pretty_clean_filtration: enlarged ideal lost Borel fixedness");
    MonomialIdeal next_polarized = apply_pol(next, fixed);
    std::vector<Monomial> expect = polarized.gens();
    expect.push_back(image);
    if (!(next_polarized == minimalize(target, std::move(expect))))
      throw InternalError(
          "pretty_clean_filtration: polarized chain is not J + (image)");
    F.steps.push_back({pivot.m1, image, prime, image.degree()});
    current = std::move(next);
    polarized = std::move(next_polarized);
  }
}

PrettyCleanReport check_pretty_clean(const std::vector<MonomialPrime>& primes) {
  PrettyCleanReport r{true, true};
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[j].contains(primes[i]) && !(primes[i] == primes[j]))
        r.pretty_clean = false;
      if (primes[j].codim() > primes[i].codim()) r.codim_nonincreasing = false;
    }
  return r;
}

PrettyCleanReport is_pretty_clean(const Filtration& F) {
  return check_pretty_clean(F.primes());
}

std::optional<std::vector<int>> prime_slot_sequence(const MonomialPrime& p) {
  if (!p.ring().is_bi_indexed()) return std::nullopt;
  std::vector<int> slots;
  int expected_base = 1;
  for (auto v : p.support()) {
    const auto& desc = p.ring().var(v);
    if (desc.base != expected_base) return std::nullopt;
    slots.push_back(desc.slot);
    ++expected_base;
  }
  return slots;
}

std::vector<MonomialPrime> ass_from_filtration(const Filtration& F) {
  if (!is_pretty_clean(F).pretty_clean)
    throw PreconditionError("ass_from_filtration: filtration not pretty clean");
  std::vector<MonomialPrime> distinct;
  for (const auto& p : F.primes())
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);
  for (const auto& p : distinct) {
    auto slots = prime_slot_sequence(p);
    if (!slots)
      throw InternalError("ass_from_filtration: prime with unexpected shape");
    if (F.spec.method == PolMethod::box &&
        !std::is_sorted(slots->begin(), slots->end()))
      throw InternalError(
          "ass_from_filtration: slot sequence not non-decreasing");
  }
  std::sort(distinct.begin(), distinct.end());
  auto oracle = minimal_primes_squarefree(F.polarized);
  if (!(distinct == oracle))
    throw InternalError(
        "ass_from_filtration: primes differ from the minimal-primes oracle");
  return distinct;
}

bool is_shelling(const std::vector<std::vector<std::size_t>>& facets) {
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (i != j && std::includes(facets[i].begin(), facets[i].end(),
                                  facets[j].begin(), facets[j].end()))
        throw Error("is_shelling: containment among facets");
  auto intersect = [](const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };
  for (std::size_t k = 1; k < facets.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      auto with_i = intersect(facets[k], facets[i]);
      bool found = false;
      for (std::size_t j = 0; j < k && !found; ++j) {
        auto with_j = intersect(facets[k], facets[j]);
        if (facets[k].size() - with_j.size() != 1) continue;
        found = std::includes(with_j.begin(), with_j.end(), with_i.begin(),
                              with_i.end());
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> shelling_order(const Filtration& F) {
  if (!is_pretty_clean(F).pretty_clean)
    throw PreconditionError("shelling_order: filtration not pretty clean");
  auto ps = F.primes();
  std::vector<MonomialPrime> seen;
  std::vector<std::vector<std::size_t>> facets;
  const std::size_t n = F.polarized.ring().size();
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    if (std::find(seen.begin(), seen.end(), *it) != seen.end()) continue;
    seen.push_back(*it);
    std::vector<std::size_t> f;
    std::size_t next = 0;
    for (auto v : it->support()) {
      for (; next < v; ++next) f.push_back(next);
      next = v + 1;
    }
    for (; next < n; ++next) f.push_back(next);
    facets.push_back(std::move(f));
  }
  if (!is_shelling(facets))
    throw InternalError("shelling_order: reverse order is not a shelling");
  return facets;
}

KPolynomial filtration_k_polynomial(const Filtration& F) {
  KPolynomial total;
  for (const auto& s : F.steps) {
    KPolynomial term;
    term.add(s.shift, 1);
    term = term.times_one_minus_t(s.prime.codim());
    for (const auto& [deg, c] : term.coeffs) total.add(deg, c);
  }
  KPolynomial term;
  term.add(Exp(0), 1);
  term = term.times_one_minus_t(F.terminal.codim());
  for (const auto& [deg, c] : term.coeffs) total.add(deg, c);
  return total;
}

namespace {

MonomialPrime push_prime(const MonomialPrime& p, const ShiftSequence& a,
                         const Ring& target) {
  std::vector<std::size_t> supp;
  for (auto v : p.support()) {
    const auto& desc = p.ring().var(v);
    std::size_t idx = static_cast<std::size_t>(desc.base) +
                      a.at(static_cast<std::size_t>(desc.slot) - 1);
    supp.push_back(idx - 1);
  }
  std::sort(supp.begin(), supp.end());
  if (std::adjacent_find(supp.begin(), supp.end()) != supp.end())
    throw InternalError("push_filtration: codimension dropped under psi");
  return MonomialPrime(target, std::move(supp));
}

}  // namespace

PushedFiltration push_filtration(const Filtration& F, const ShiftSequence& a) {
  if (F.spec.method != PolMethod::box)
    throw PreconditionError("push_filtration: box filtrations only");
  if (static_cast<std::size_t>(F.polarized.ring().slot_count()) > a.length())
    throw Error("push_filtration: shift sequence shorter than slot count");
  Ring target = shift_target_ring(F.base.ring().size(), a);
  PushedFiltration out{target, {}, MonomialPrime(target, {})};
  for (const auto& s : F.steps) {
    MonomialPrime q = push_prime(s.prime, a, target);
    if (q.codim() != s.prime.codim())
      throw InternalError("push_filtration: codimension dropped under psi");
    out.steps.push_back({psi_specialize(s.image, a, target), q, s.shift});
  }
  out.terminal = push_prime(F.terminal, a, target);
  if (out.terminal.codim() != F.terminal.codim())
    throw InternalError("push_filtration: codimension dropped under psi");
  return out;
}

}  // namespace polarforge
