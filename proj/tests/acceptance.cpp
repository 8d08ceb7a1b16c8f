// End-to-end acceptance checks.  Each criterion prints one pass/fail line;
// the exit status is nonzero if any of them fail.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polarforge/betti.hpp"
#include "polarforge/core.hpp"
#include "polarforge/filtration.hpp"
#include "polarforge/io.hpp"
#include "polarforge/polarize.hpp"
#include "polarforge/random.hpp"
#include "polarforge/shift.hpp"

using namespace polarforge;

namespace {

MonomialIdeal ideal(const std::string& text) {
  return parse_ideal(text).ideal;
}

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// The 200 pseudo-random Borel-fixed ideals shared by criteria 5 and 6.
std::vector<MonomialIdeal> borel_corpus() {
  std::vector<MonomialIdeal> out;
  std::mt19937_64 rng(2026);
  while (out.size() < 200) {
    RandomBorelParams params;
    params.nvars = 1 + static_cast<int>(rng() % 4);
    MonomialIdeal I = random_borel_ideal(rng, params);
    if (I.is_zero() || I.is_unit()) continue;
    out.push_back(std::move(I));
  }
  return out;
}

void criterion_1(Check& c) {
  auto I = ideal("ring x y z\nx^2, x*y, x*z, y^2, y*z");
  c.require(serialize(apply_pol(I, {PolMethod::box, {}, 0})) ==
                "polar 3 2 x y z\n"
                "x_1*x_2, x_1*y_2, x_1*z_2, y_1*y_2, y_1*z_2\n",
            "box image of the running example");
  c.require(serialize(apply_pol(I, {PolMethod::standard, {}, 0})) ==
                "polar 3 2 x y z\n"
                "x_1*x_2, x_1*y_1, x_1*z_1, y_1*y_2, y_1*z_1\n",
            "standard image of the running example");
}

void criterion_2(Check& c) {
  Ring s = Ring::plain({"x", "y"});
  Ring t = polar_ring(2, 3, {"x", "y"});
  Monomial m = parse_ideal("ring x y\nx*y^2").ideal.gens()[0];
  c.require(to_string(box_pol(m, t)) == "x_1*y_2*y_3", "box of x*y^2");
  c.require(to_string(std_pol(m, t)) == "x_1*y_1*y_2", "standard of x*y^2");
}

void criterion_3(Check& c) {
  auto borel = ideal("ring x y z\nx^2, x*y, x*z, y^2, y*z");
  for (const auto& t : {betti_table(borel), ek_betti(borel)}) {
    c.require(t.at(0, 2) == 5 && t.at(1, 3) == 6 && t.at(2, 4) == 2 &&
                  t.entries.size() == 3,
              "betti table of the Borel example");
  }
  auto stable = ideal("ring x y z\nx*y*z, x^2*y, x*y^2, x^3");
  for (const auto& t : {betti_table(stable), ek_betti(stable)}) {
    c.require(t.at(0, 3) == 4 && t.at(1, 4) == 4 && t.at(2, 5) == 1 &&
                  t.entries.size() == 3,
              "betti table of the stable example");
  }
}

void criterion_4(Check& c) {
  auto check_one = [&](const std::string& text, bool expect_ok) {
    auto I = ideal(text);
    auto r = verify_polarization(I, apply_pol(I, {PolMethod::box, {}, 0}));
    c.require(r.ok == expect_ok, "verdict for " + text);
    c.require(r.hilbert_equal == r.betti_equal,
              "hilbert/betti verdict agreement for " + text);
    if (!expect_ok)
      c.require(r.witness.has_value() &&
                    r.witness->base_value != r.witness->polar_value,
                "betti mismatch witness for " + text);
  };
  check_one("ring x y z\nx^2, x*y, x*z, y^2, y*z", true);
  check_one("ring x y z\nx^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2", true);
  check_one("ring x y z\nx*y*z, x^2*y, x*y^2, x^3", false);
}

void criterion_5(Check& c, const std::vector<MonomialIdeal>& corpus) {
  for (const auto& I : corpus) {
    auto r = verify_polarization(I, apply_pol(I, {PolMethod::box, {}, 0}));
    if (!r.ok) {
      c.require(false, "box fails to verify on " + serialize(I));
      return;
    }
  }
}

// The filtration engine internally re-derives every claimed colon ideal by
// brute force and re-checks Claim 1 (Borel-fixedness of each intermediate
// ideal); any mismatch throws.  ass_from_filtration likewise throws unless
// the filtration primes reproduce the minimal-primes oracle exactly.
void filtration_suite(Check& c, const MonomialIdeal& I,
                      const PolarizationSpec& spec, bool check_slots) {
  auto F = pretty_clean_filtration(I, spec);
  auto report = is_pretty_clean(F);
  c.require(report.pretty_clean, "pretty clean on " + serialize(I));
  auto ass = ass_from_filtration(F);
  c.require(!ass.empty(), "associated primes on " + serialize(I));
  if (check_slots) {
    for (const auto& p : ass) {
      auto slots = prime_slot_sequence(p);
      c.require(slots.has_value() &&
                    std::is_sorted(slots->begin(), slots->end()),
                "slot monotonicity on " + serialize(I));
    }
  }
  c.require(filtration_k_polynomial(F) == k_polynomial(F.polarized),
            "K-polynomial telescope on " + serialize(I));
  c.require(is_shelling(shelling_order(F)), "shelling on " + serialize(I));
}

void criterion_6(Check& c, const std::vector<MonomialIdeal>& corpus) {
  for (const auto& I : corpus) {
    filtration_suite(c, I, {PolMethod::box, {}, 0}, true);
    if (!c.ok) return;
  }
}

void criterion_7(Check& c) {
  std::mt19937_64 rng(2027);
  int done = 0;
  while (done < 100) {
    RandomBorelParams params;
    params.nvars = 1 + static_cast<int>(rng() % 4);
    MonomialIdeal I = random_borel_ideal(rng, params);
    if (I.is_zero() || I.is_unit()) continue;
    std::vector<int> A;
    for (int i = 1; i <= static_cast<int>(I.ring().size()); ++i)
      if (rng() % 2) A.push_back(i);
    PolarizationSpec spec{PolMethod::mixed, A, 0};
    auto r = verify_polarization(I, apply_pol(I, spec));
    c.require(r.ok, "mixed verification on " + serialize(I));
    filtration_suite(c, I, spec, false);
    if (!c.ok) return;
    ++done;
  }
}

void criterion_8(Check& c) {
  std::mt19937_64 rng(2028);
  int done = 0;
  while (done < 100) {
    RandomBorelParams params;
    params.nvars = 1 + static_cast<int>(rng() % 3);
    MonomialIdeal I = random_borel_ideal(rng, params);
    if (I.is_zero() || I.is_unit()) continue;
    const std::size_t n = I.ring().size();
    auto J = apply_pol(I, {PolMethod::box, {}, 0});
    const std::size_t d = static_cast<std::size_t>(J.ring().slot_count());
    ShiftSequence a = done % 3 == 0   ? ShiftSequence::identity(d)
                      : done % 3 == 1 ? ShiftSequence::flat(d, n)
                                      : random_shift_sequence(rng, d);
    auto S = sigma_a_ideal(I, a);
    c.require(betti_table(I) == betti_table(S),
              "betti invariance under sigma on " + serialize(I));
    c.require(psi_specialize(J, a) == S,
              "psi specialization on " + serialize(I));
    if (done % 3 == 1) {
      // flattening: every box variable must map to a distinct target variable
      Ring t = J.ring();
      Ring target = shift_target_ring(n, a);
      std::vector<bool> seen(target.size(), false);
      bool bijective = target.size() == t.size();
      for (std::size_t k = 0; k < t.size() && bijective; ++k) {
        const auto& v = t.var(k);
        std::size_t img = static_cast<std::size_t>(v.base - 1) +
                          static_cast<std::size_t>(a.at(v.slot - 1));
        if (img >= target.size() || seen[img]) bijective = false;
        else seen[img] = true;
      }
      c.require(bijective, "flattening bijection on " + serialize(I));
    }
    if (!c.ok) return;
    ++done;
  }
}

void criterion_9(Check& c) {
  std::mt19937_64 rng(2029);
  int done = 0;
  while (done < 50) {
    RandomBorelParams params;
    params.nvars = 1 + static_cast<int>(rng() % 3);
    MonomialIdeal I = random_borel_ideal(rng, params);
    if (I.is_zero() || I.is_unit()) continue;
    auto F = pretty_clean_filtration(I, {PolMethod::box, {}, 0});
    std::size_t d = static_cast<std::size_t>(F.polarized.ring().slot_count());
    auto a = random_shift_sequence(rng, d);
    std::optional<PushedFiltration> pushed;
    try {
      pushed = push_filtration(F, a);
    } catch (const InternalError&) {
      continue;  // psi collided two primes; not a valid instance
    }
    const PushedFiltration& P = *pushed;
    c.require(check_pretty_clean(P.primes()).pretty_clean,
              "pushed filtration pretty clean on " + serialize(I));
    for (std::size_t k = 0; k < P.steps.size(); ++k)
      c.require(P.steps[k].prime.codim() == F.steps[k].prime.codim(),
                "codim preservation on " + serialize(I));
    c.require(P.terminal.codim() == F.terminal.codim(),
              "terminal codim on " + serialize(I));
    if (!c.ok) return;
    ++done;
  }
}

void criterion_10(Check& c) {
  std::mt19937_64 rng(2030);
  int done = 0;
  while (done < 50) {
    RandomBorelParams params;
    params.nvars = 1 + static_cast<int>(rng() % 3);
    params.max_degree = 3;
    MonomialIdeal I = random_borel_ideal(rng, params);
    if (I.is_zero() || I.is_unit()) continue;
    std::vector<int> A;
    for (int i = 1; i <= static_cast<int>(I.ring().size()); ++i)
      if (rng() % 2) A.push_back(i);
    PolarizationSpec box{PolMethod::box, {}, 0};
    Ring t = pol_target_ring(I, box);
    int d = t.slot_count();
    Ring tA = pol_target_ring(I, {PolMethod::mixed, A, d});
    auto J = apply_pol(I, box);
    auto JA = apply_pol(I, {PolMethod::mixed, A, d});
    std::vector<Monomial> level{Monomial(I.ring())};
    for (int deg = 1; deg <= d; ++deg) {
      std::vector<Monomial> next;
      for (const auto& m : level)
        for (std::size_t v = 0; v < I.ring().size(); ++v)
          next.push_back(m.times_var(v));
      level = std::move(next);
      for (const auto& m : level) {
        if (!member(I, m)) continue;
        c.require(member(J, box_pol(m, t)),
                  "box saturation on " + serialize(I));
        c.require(member(JA, box_pol_A(m, A, tA)),
                  "mixed saturation on " + serialize(I));
        if (!c.ok) return;
      }
    }
    ++done;
  }
}

}  // namespace

int main() {
  auto corpus = borel_corpus();
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 golden box/standard polarizations", criterion_1},
      {"2 golden single-monomial images", criterion_2},
      {"3 betti engine vs closed form", criterion_3},
      {"4 verification verdicts", criterion_4},
      {"5 box verifies on 200 random Borel ideals",
       [&](Check& c) { criterion_5(c, corpus); }},
      {"6 filtration suite on the same 200 ideals",
       [&](Check& c) { criterion_6(c, corpus); }},
      {"7 mixed polarization suite, 100 pairs", criterion_7},
      {"8 shift operation suite, 100 pairs", criterion_8},
      {"9 pushed filtration suite, 50 instances", criterion_9},
      {"10 saturation lemma, 50 ideals", criterion_10},
  };
  bool all_ok = true;
  for (auto& [name, fn] : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
      c.ok = false;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (c.ok) {
      std::printf("criterion %s: pass (%lld ms)\n", name.c_str(),
                  static_cast<long long>(ms));
    } else {
      std::printf("criterion %s: FAIL (%s)\n", name.c_str(), c.detail.c_str());
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
