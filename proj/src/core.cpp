#include "polarforge/core.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace polarforge {

std::vector<int> expand(const Monomial& m) {
  if (m.ring().is_bi_indexed())
    throw UnsupportedRingError("expand: bi-indexed ring");
  std::vector<int> alpha;
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    Exp e = m.exponent(k);
    if (e > 1000000) throw SizeError("expand: exponent too large to expand");
    for (Exp c = 0; c < e; ++c) alpha.push_back(static_cast<int>(k) + 1);
  }
  return alpha;
}

bool member(const MonomialIdeal& I, const Monomial& m) {
  require_same_ring(I.ring(), m.ring(), "member");
  for (const auto& g : I.gens())
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
  require_same_ring(I.ring(), m.ring(), "colon");
  std::vector<Monomial> q;
  q.reserve(I.gens().size());
  for (const auto& g : I.gens())
    q.push_back(g.quotient(Monomial::gcd(g, m)));
  return minimalize(I.ring(), std::move(q));
}

int nu(const Monomial& m) {
  if (m.ring().is_bi_indexed()) throw UnsupportedRingError("nu: bi-indexed ring");
  for (std::size_t k = m.nvars(); k > 0; --k)
    if (m.exponent(k - 1) > 0) return static_cast<int>(k);
  throw UndefinedValueError("nu(1) is undefined");
}

int nu_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) throw UndefinedValueError("nu of the zero ideal");
  int l = 0;
  for (const auto& g : I.gens()) l = std::max(l, nu(g));
  return l;
}

int nu_restricted(const Monomial& m, const std::vector<int>& A) {
  if (m.ring().is_bi_indexed()) throw UnsupportedRingError("nu: bi-indexed ring");
  int best = 0;
  for (int i : A)
    if (i >= 1 && static_cast<std::size_t>(i) <= m.nvars() &&
        m.exponent(i - 1) > 0)
      best = std::max(best, i);
  if (best == 0)
    throw UndefinedValueError("nu_A: support does not meet A");
  return best;
}

std::optional<BorelWitness> borel_violation(const MonomialIdeal& I) {
  if (I.ring().is_bi_indexed())
    throw UnsupportedRingError("is_borel_fixed: bi-indexed ring");
  // Checking minimal generators suffices; the moves propagate to all of I.
  for (const auto& g : I.gens()) {
    for (std::size_t i = 1; i < g.nvars(); ++i) {
      if (g.exponent(i) == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Monomial moved = g.times_var(j).quotient(
            Monomial(g.ring()).times_var(i));
        if (!member(I, moved))
          return BorelWitness{g, static_cast<int>(i) + 1,
                              static_cast<int>(j) + 1};
      }
    }
  }
  return std::nullopt;
}

bool is_borel_fixed(const MonomialIdeal& I) {
  return !borel_violation(I).has_value();
}

bool is_stable(const MonomialIdeal& I) {
  if (I.ring().is_bi_indexed())
    throw UnsupportedRingError("is_stable: bi-indexed ring");
  for (const auto& g : I.gens()) {
    if (g.is_unit()) continue;
    std::size_t l = static_cast<std::size_t>(nu(g)) - 1;
    for (std::size_t j = 0; j < l; ++j) {
      Monomial moved =
          g.times_var(j).quotient(Monomial(g.ring()).times_var(l));
      if (!member(I, moved)) return false;
    }
  }
  return true;
}

MonomialIdeal borel_closure(const Ring& ring, std::vector<Monomial> gens) {
  if (ring.is_bi_indexed())
    throw UnsupportedRingError("borel_closure: bi-indexed ring");
  std::set<std::vector<Exp>> seen;
  std::vector<Monomial> work = gens;
  std::vector<Monomial> all;
  for (const auto& g : gens) seen.insert(g.exponents());
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    all.push_back(m);
    for (std::size_t i = 1; i < m.nvars(); ++i) {
      if (m.exponent(i) == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Monomial moved =
            m.times_var(j).quotient(Monomial(ring).times_var(i));
        if (seen.insert(moved.exponents()).second) work.push_back(moved);
      }
    }
  }
  return minimalize(ring, std::move(all));
}

namespace {

constexpr std::size_t kHittingSetVarCap = 24;

void enumerate_hitting_sets(const std::vector<std::uint32_t>& supports,
                            std::uint32_t chosen,
                            std::set<std::uint32_t>& out) {
  std::uint32_t pending = 0;
  bool all_hit = true;
  for (auto s : supports) {
    if ((s & chosen) == 0) {
      pending = s;
      all_hit = false;
      break;
    }
  }
  if (all_hit) {
    // Minimality: every chosen variable must privately hit some support.
    for (std::uint32_t v = chosen; v;) {
      std::uint32_t bit = v & (~v + 1);
      v ^= bit;
      bool needed = false;
      for (auto s : supports)
        if ((s & (chosen ^ bit)) == 0) {
          needed = true;
          break;
        }
      if (!needed) return;
    }
    out.insert(chosen);
    return;
  }
  for (std::uint32_t v = pending; v;) {
    std::uint32_t bit = v & (~v + 1);
    v ^= bit;
    enumerate_hitting_sets(supports, chosen | bit, out);
  }
}

}  // namespace

std::vector<MonomialPrime> minimal_primes_squarefree(const MonomialIdeal& J) {
  if (J.ring().size() > kHittingSetVarCap)
    throw SizeError("minimal_primes_squarefree: more than 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : J.gens()) {
    if (!g.is_squarefree())
      throw DomainError("minimal_primes_squarefree: non-squarefree generator");
    std::uint32_t s = 0;
    for (auto k : g.support()) s |= (std::uint32_t{1} << k);
    supports.push_back(s);
  }
  if (J.is_unit()) return {};  // support of 1 cannot be hit
  std::set<std::uint32_t> raw;
  enumerate_hitting_sets(supports, 0, raw);
  // The leaf minimality check is local; prune against each other globally.
  std::vector<MonomialPrime> primes;
  for (auto a : raw) {
    bool minimal = true;
    for (auto b : raw)
      if (b != a && (b & a) == b) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < J.ring().size(); ++k)
      if (a & (std::uint32_t{1} << k)) supp.push_back(k);
    primes.emplace_back(J.ring(), std::move(supp));
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<std::vector<std::size_t>> stanley_reisner_facets(
    const MonomialIdeal& J) {
  auto primes = minimal_primes_squarefree(J);
  std::vector<std::vector<std::size_t>> facets;
  for (const auto& p : primes) {
    std::vector<std::size_t> f;
    std::size_t next = 0;
    for (auto v : p.support()) {
      for (; next < v; ++next) f.push_back(next);
      next = v + 1;
    }
    for (; next < J.ring().size(); ++next) f.push_back(next);
    facets.push_back(std::move(f));
  }
  return facets;
}

}  // namespace polarforge
