#include "polarforge/betti.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>
#include <unordered_map>

#include "polarforge/core.hpp"
#include "polarforge/polarize.hpp"

namespace polarforge {

namespace {

constexpr std::size_t kGeneratorCap = 20;
constexpr std::size_t kVariableCap = 24;

void check_caps(const MonomialIdeal& I, const char* where) {
  if (I.gens().size() > kGeneratorCap)
    throw SizeError(std::string(where) + ": more than 20 generators");
  if (I.ring().size() > kVariableCap)
    throw SizeError(std::string(where) + ": more than 24 variables");
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text.empty() || text == "rational") return {};
  if (text.rfind("gfp:", 0) == 0) {
    FieldSpec f;
    f.kind = Kind::gfp;
    std::string num = text.substr(4);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad field spec: " + text);
    f.p = std::stoull(num);
    if (f.p < 2) throw Error("field characteristic must be at least 2");
    return f;
  }
  throw Error("bad field spec: " + text);
}

FieldSpec FieldSpec::from_env() {
  const char* v = std::getenv("POLARFORGE_FIELD");
  return parse(v ? v : "");
}

void KPolynomial::add(const Exp& degree, long long c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

KPolynomial KPolynomial::times_one_minus_t(std::size_t k) const {
  KPolynomial r = *this;
  for (std::size_t t = 0; t < k; ++t) {
    KPolynomial next;
    for (const auto& [deg, c] : r.coeffs) {
      next.add(deg, c);
      next.add(deg + 1, -c);
    }
    r = std::move(next);
  }
  return r;
}

std::vector<std::vector<Exp>> lcm_lattice_degrees(const MonomialIdeal& I) {
  if (I.gens().size() > kGeneratorCap)
    throw SizeError("lcm_lattice_degrees: more than 20 generators");
  std::set<std::vector<Exp>> degs;
  for (const auto& g : I.gens()) {
    std::vector<std::vector<Exp>> fresh;
    fresh.push_back(g.exponents());
    for (const auto& d : degs) {
      std::vector<Exp> j(d);
      for (std::size_t k = 0; k < j.size(); ++k)
        if (g.exponent(k) > j[k]) j[k] = g.exponent(k);
      fresh.push_back(std::move(j));
    }
    for (auto& f : fresh) degs.insert(std::move(f));
  }
  return {degs.begin(), degs.end()};
}

SimplicialComplex upper_koszul(const MonomialIdeal& I,
                               const std::vector<Exp>& b) {
  if (b.size() != I.ring().size())
    throw RingMismatchError("upper_koszul: degree length mismatch");
  SimplicialComplex K;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k] > 0) K.vertices.push_back(k);
  if (K.vertices.size() > kVariableCap)
    throw SizeError("upper_koszul: support larger than 24");
  // g | x^{b - tau}  iff  g <= b and tau avoids { v : g_v = b_v }.
  std::vector<std::uint32_t> blocked;
  for (const auto& g : I.gens()) {
    bool below = true;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (g.exponent(k) > b[k]) {
        below = false;
        break;
      }
    if (!below) continue;
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < K.vertices.size(); ++v)
      if (g.exponent(K.vertices[v]) == b[K.vertices[v]])
        mask |= (std::uint32_t{1} << v);
    blocked.push_back(mask);
  }
  if (blocked.empty()) return K;  // x^b outside I: the void complex
  const std::uint32_t full = K.vertices.empty()
                                 ? 0
                                 : (K.vertices.size() == 32
                                        ? ~std::uint32_t{0}
                                        : (std::uint32_t{1} << K.vertices.size()) - 1);
  for (std::uint32_t tau = 0;; ++tau) {
    for (auto m : blocked)
      if ((tau & m) == 0) {
        K.faces.push_back(tau);
        break;
      }
    if (tau == full) break;
  }
  std::sort(K.faces.begin(), K.faces.end(),
            [](std::uint32_t a, std::uint32_t c) {
              int pa = __builtin_popcount(a);
              int pc = __builtin_popcount(c);
              return pa != pc ? pa < pc : a < c;
            });
  return K;
}

namespace {

struct RationalOps {
  using Elem = boost::multiprecision::cpp_rational;
  static Elem one() { return 1; }
  static bool is_zero(const Elem& e) { return e == 0; }
  static Elem neg(const Elem& e) { return -e; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem div(const Elem& a, const Elem& b) { return a / b; }
  static Elem sub_mul(const Elem& a, const Elem& f, const Elem& b) {
    return a - f * b;
  }
};

struct GfpOps {
  std::uint64_t p;
  using Elem = std::uint64_t;
  Elem one() const { return 1; }
  bool is_zero(Elem e) const { return e % p == 0; }
  Elem neg(Elem e) const { return (p - e % p) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem inv(Elem a) const {
    // Fermat; p is prime.
    Elem r = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem sub_mul(Elem a, Elem f, Elem b) const {
    return (a + p - mul(f, b) % p) % p;
  }
};

template <class Ops>
using SparseRow = std::vector<std::pair<int, typename Ops::Elem>>;

// row - factor * pivot, both sorted by column; pivot has leading coeff 1.
template <class Ops>
SparseRow<Ops> eliminate(const SparseRow<Ops>& row, const SparseRow<Ops>& piv,
                         const typename Ops::Elem& factor, const Ops& ops) {
  SparseRow<Ops> out;
  out.reserve(row.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || piv[j].first < row[i].first) {
      auto v = ops.neg(ops.mul(factor, piv[j].second));
      if (!ops.is_zero(v)) out.emplace_back(piv[j].first, v);
      ++j;
    } else {
      auto v = ops.sub_mul(row[i].second, factor, piv[j].second);
      if (!ops.is_zero(v)) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Ops>
std::size_t sparse_rank(std::vector<SparseRow<Ops>> rows, const Ops& ops) {
  std::unordered_map<int, std::size_t> pivot_of_col;
  std::vector<SparseRow<Ops>> pivots;
  std::size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      int col = row.front().first;
      auto it = pivot_of_col.find(col);
      if (it == pivot_of_col.end()) {
        auto lead = row.front().second;
        for (auto& [c, v] : row) v = ops.div(v, lead);
        pivot_of_col.emplace(col, pivots.size());
        pivots.push_back(std::move(row));
        ++rank;
        break;
      }
      row = eliminate<Ops>(row, pivots[it->second], row.front().second, ops);
    }
  }
  return rank;
}

template <class Ops>
std::vector<std::size_t> boundary_ranks(
    const std::vector<std::vector<std::uint32_t>>& by_card, const Ops& ops) {
  // ranks[c] = rank of the boundary map from c-card faces down.
  std::vector<std::size_t> ranks(by_card.size() + 1, 0);
  for (std::size_t c = 1; c < by_card.size(); ++c) {
    std::unordered_map<std::uint32_t, int> index;
    for (std::size_t k = 0; k < by_card[c - 1].size(); ++k)
      index.emplace(by_card[c - 1][k], static_cast<int>(k));
    std::vector<SparseRow<Ops>> rows;
    rows.reserve(by_card[c].size());
    for (auto face : by_card[c]) {
      SparseRow<Ops> row;
      int t = 0;
      for (std::uint32_t rest = face; rest; ++t) {
        std::uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        auto sub = index.at(face ^ bit);
        auto coeff = (t % 2 == 0) ? ops.one() : ops.neg(ops.one());
        row.emplace_back(sub, coeff);
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    ranks[c] = sparse_rank<Ops>(std::move(rows), ops);
  }
  return ranks;
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                const FieldSpec& field) {
  if (K.faces.empty()) return {};
  std::size_t max_card = 0;
  for (auto f : K.faces)
    max_card = std::max<std::size_t>(max_card, __builtin_popcount(f));
  std::vector<std::vector<std::uint32_t>> by_card(max_card + 1);
  for (auto f : K.faces) by_card[__builtin_popcount(f)].push_back(f);

  std::vector<std::size_t> dranks;
  if (field.kind == FieldSpec::Kind::gfp)
    dranks = boundary_ranks(by_card, GfpOps{field.p});
  else
    dranks = boundary_ranks(by_card, RationalOps{});

  std::vector<std::size_t> h(max_card + 1, 0);
  for (std::size_t c = 0; c <= max_card; ++c)
    h[c] = by_card[c].size() - dranks[c] - dranks[c + 1];
  return h;
}

namespace {

void accumulate_degree(const MonomialIdeal& I, const std::vector<Exp>& b,
                       const FieldSpec& field, BettiTable& out) {
  auto ranks = reduced_homology_ranks(upper_koszul(I, b), field);
  Exp total = 0;
  for (const auto& e : b) total += e;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] > 0) out.entries[{static_cast<int>(i), total}] += ranks[i];
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field,
                       unsigned threads) {
  check_caps(I, "betti_table");
  auto degrees = lcm_lattice_degrees(I);
  BettiTable table;
  if (threads <= 1 || degrees.size() < 2) {
    for (const auto& b : degrees) accumulate_degree(I, b, field, table);
    return table;
  }
  unsigned nt = std::min<unsigned>(threads, degrees.size());
  std::vector<BettiTable> partial(nt);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < degrees.size(); k += nt)
        accumulate_degree(I, degrees[k], field, partial[t]);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : partial)
    for (const auto& [key, v] : p.entries) table.entries[key] += v;
  return table;
}

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

BettiTable ek_betti(const MonomialIdeal& I) {
  if (!is_stable(I))
    throw PreconditionError("ek_betti: ideal is not stable");
  BettiTable table;
  for (const auto& u : I.gens()) {
    if (u.is_unit()) {
      table.entries[{0, Exp(0)}] += 1;
      continue;
    }
    unsigned top = static_cast<unsigned>(nu(u)) - 1;
    Exp d = u.degree();
    for (unsigned i = 0; i <= top; ++i)
      table.entries[{static_cast<int>(i), d + i}] += binomial(top, i);
  }
  return table;
}

namespace {

void kpoly_dfs(const std::vector<Monomial>& gens, std::size_t from,
               std::vector<Exp>& lcm, int parity, KPolynomial& out) {
  Exp deg = 0;
  for (const auto& e : lcm) deg += e;
  out.add(deg, parity);
  for (std::size_t k = from; k < gens.size(); ++k) {
    std::vector<Exp> saved;
    bool changed = false;
    for (std::size_t v = 0; v < lcm.size(); ++v)
      if (gens[k].exponent(v) > lcm[v]) {
        if (!changed) {
          saved = lcm;
          changed = true;
        }
        lcm[v] = gens[k].exponent(v);
      }
    kpoly_dfs(gens, k + 1, lcm, -parity, out);
    if (changed) lcm = std::move(saved);
  }
}

}  // namespace

KPolynomial k_polynomial(const MonomialIdeal& I) {
  if (I.gens().size() > kGeneratorCap)
    throw SizeError("k_polynomial: more than 20 generators");
  KPolynomial out;
  std::vector<Exp> lcm(I.ring().size(), Exp(0));
  kpoly_dfs(I.gens(), 0, lcm, 1, out);
  return out;
}

KPolynomial k_from_betti(const BettiTable& table) {
  KPolynomial out;
  out.add(Exp(0), 1);
  for (const auto& [key, v] : table.entries) {
    long long sign = key.first % 2 == 0 ? -1 : 1;
    out.add(key.second, sign * static_cast<long long>(v));
  }
  return out;
}

PolarizationReport verify_polarization(const MonomialIdeal& I,
                                       const MonomialIdeal& J,
                                       const FieldSpec& field,
                                       unsigned threads) {
  if (I.ring().is_bi_indexed())
    throw RingMismatchError("verify_polarization: I must live in a plain ring");
  if (!J.ring().is_bi_indexed())
    throw RingMismatchError("verify_polarization: J must be bi-indexed");
  {
    const auto& base = J.ring().base_names();
    if (base.size() != I.ring().size())
      throw RingMismatchError("verify_polarization: base count mismatch");
    for (std::size_t k = 0; k < base.size(); ++k)
      if (base[k] != I.ring().var(k).name)
        throw RingMismatchError("verify_polarization: base name mismatch");
  }
  for (const auto& g : J.gens())
    if (!g.is_squarefree())
      throw DomainError("verify_polarization: J is not squarefree");

  PolarizationReport report;
  report.depolarizes = depolarize(J) == I;
  report.hilbert_equal = k_polynomial(I) == k_polynomial(J);
  report.betti_base = betti_table(I, field, threads);
  report.betti_polar = betti_table(J, field, threads);
  report.betti_equal = report.betti_base == report.betti_polar;
  if (!report.betti_equal) {
    std::set<std::pair<int, Exp>> keys;
    for (const auto& [k, v] : report.betti_base.entries) keys.insert(k);
    for (const auto& [k, v] : report.betti_polar.entries) keys.insert(k);
    for (const auto& k : keys) {
      auto a = report.betti_base.at(k.first, k.second);
      auto b = report.betti_polar.at(k.first, k.second);
      if (a != b) {
        report.witness = BettiMismatch{k.first, k.second, a, b};
        break;
      }
    }
  }
  if (report.depolarizes && report.hilbert_equal != report.betti_equal)
    throw InternalError(
        "verify_polarization: Hilbert and Betti verdicts disagree");
  report.ok = report.depolarizes && report.betti_equal;
  return report;
}

}  // namespace polarforge
