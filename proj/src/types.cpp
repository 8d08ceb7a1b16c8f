#include "polarforge/types.hpp"

#include <algorithm>
#include <set>

namespace polarforge {

Ring::Ring(std::vector<VarDescriptor> vars, std::vector<std::string> base_names,
           bool bi) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v.name).second)
      throw Error("duplicate variable name: " + v.name);
    if (bi != v.bi_indexed())
      throw Error("mixed plain and bi-indexed variables in one ring");
  }
  if (bi) {
    for (std::size_t k = 1; k < vars.size(); ++k) {
      const auto& p = vars[k - 1];
      const auto& q = vars[k];
      if (std::pair(p.base, p.slot) >= std::pair(q.base, q.slot))
        throw Error("bi-indexed variables must be sorted by (base, slot)");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->vars = std::move(vars);
  impl->base_names = std::move(base_names);
  impl->bi = bi;
  impl_ = std::move(impl);
}

Ring Ring::plain(std::vector<std::string> names) {
  std::vector<VarDescriptor> vars;
  vars.reserve(names.size());
  for (auto& n : names) vars.push_back({std::move(n), 0, 0});
  return Ring(std::move(vars));
}

Ring Ring::bi_indexed(std::vector<VarDescriptor> vars,
                      std::vector<std::string> base_names) {
  return Ring(std::move(vars), std::move(base_names), true);
}

int Ring::base_count() const {
  if (!is_bi_indexed()) throw UnsupportedRingError("base_count: plain ring");
  int n = 0;
  for (const auto& v : impl_->vars) n = std::max(n, v.base);
  return n;
}

int Ring::slot_count() const {
  if (!is_bi_indexed()) throw UnsupportedRingError("slot_count: plain ring");
  int d = 0;
  for (const auto& v : impl_->vars) d = std::max(d, v.slot);
  return d;
}

const std::vector<std::string>& Ring::base_names() const {
  if (!is_bi_indexed()) throw UnsupportedRingError("base_names: plain ring");
  return impl_->base_names;
}

std::size_t Ring::index_of(int base, int slot) const {
  for (std::size_t k = 0; k < impl_->vars.size(); ++k)
    if (impl_->vars[k].base == base && impl_->vars[k].slot == slot) return k;
  throw Error("no variable with bi-index (" + std::to_string(base) + "," +
              std::to_string(slot) + ")");
}

std::optional<std::size_t> Ring::find(const std::string& name) const {
  for (std::size_t k = 0; k < impl_->vars.size(); ++k)
    if (impl_->vars[k].name == name) return k;
  return std::nullopt;
}

Monomial::Monomial(Ring ring, std::vector<Exp> exps)
    : ring_(std::move(ring)), exps_(std::move(exps)) {
  if (exps_.size() != ring_.size())
    throw Error("exponent vector length does not match ring");
  for (const auto& e : exps_)
    if (e < 0) throw Error("negative exponent");
}

Exp Monomial::degree() const {
  Exp d = 0;
  for (const auto& e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const Exp& e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const Exp& e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > 0) s.push_back(k);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_, "divides");
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_ring(ring_, other.ring_, "times");
  std::vector<Exp> e(exps_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::times_var(std::size_t k) const {
  std::vector<Exp> e(exps_);
  e.at(k) += 1;
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::quotient(const Monomial& other) const {
  require_same_ring(ring_, other.ring_, "quotient");
  std::vector<Exp> e(exps_);
  for (std::size_t k = 0; k < e.size(); ++k) {
    e[k] -= other.exps_[k];
    if (e[k] < 0) throw Error("quotient: divisor does not divide");
  }
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring_, b.ring_, "gcd");
  std::vector<Exp> e(a.exps_);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (b.exps_[k] < e[k]) e[k] = b.exps_[k];
  return Monomial(a.ring_, std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring_, b.ring_, "lcm");
  std::vector<Exp> e(a.exps_);
  for (std::size_t k = 0; k < e.size(); ++k)
    if (b.exps_[k] > e[k]) e[k] = b.exps_[k];
  return Monomial(a.ring_, std::move(e));
}

int lex_compare(const Monomial& a, const Monomial& b) {
  require_same_ring(a.ring(), b.ring(), "lex_compare");
  for (std::size_t k = 0; k < a.nvars(); ++k) {
    if (a.exponent(k) != b.exponent(k))
      return a.exponent(k) > b.exponent(k) ? 1 : -1;
  }
  return 0;
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  Exp da = a.degree();
  Exp db = b.degree();
  if (da != db) return da < db;
  return lex_compare(a, b) > 0;
}

MonomialPrime::MonomialPrime(Ring ring, std::vector<std::size_t> support)
    : ring_(std::move(ring)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()),
                 support_.end());
  for (auto k : support_)
    if (k >= ring_.size()) throw Error("prime support index out of range");
}

bool MonomialPrime::contains(const MonomialPrime& other) const {
  return std::includes(support_.begin(), support_.end(),
                       other.support_.begin(), other.support_.end());
}

MonomialIdeal MonomialIdeal::from_generators(Ring ring,
                                             std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "ideal");
  // Drop duplicates and anything divisible by another generator.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i))
        keep = false;
    }
    if (keep) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(), graded_lex_before);
  MonomialIdeal I(std::move(ring));
  I.gens_ = std::move(minimal);
  return I;
}

}  // namespace polarforge
