#include "polarforge/shift.hpp"

#include <algorithm>

#include "polarforge/core.hpp"

namespace polarforge {

ShiftSequence::ShiftSequence(std::vector<std::size_t> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw Error("shift sequence must be non-empty");
  if (values_[0] != 0) throw Error("shift sequence must start with a_0 = 0");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1])
      throw Error("shift sequence must be non-decreasing");
}

ShiftSequence ShiftSequence::identity(std::size_t length) {
  std::vector<std::size_t> v(length);
  for (std::size_t i = 0; i < length; ++i) v[i] = i;
  return ShiftSequence(std::move(v));
}

ShiftSequence ShiftSequence::flat(std::size_t length, std::size_t n) {
  std::vector<std::size_t> v(length);
  for (std::size_t i = 0; i < length; ++i) v[i] = i * n;
  return ShiftSequence(std::move(v));
}

ShiftSequence ShiftSequence::parse(const std::string& text, std::size_t length,
                                   std::size_t n) {
  if (text == "id") return identity(length);
  if (text == "flat") return flat(length, n);
  std::vector<std::size_t> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad shift sequence entry: '" + tok + "'");
    v.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.size() < length)
    throw Error("shift sequence shorter than the maximum generator degree");
  return ShiftSequence(std::move(v));
}

bool ShiftSequence::strictly_increasing() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] <= values_[i - 1]) return false;
  return true;
}

Ring shift_target_ring(std::size_t n, const ShiftSequence& a) {
  std::size_t N = n + a.back();
  if (N > 100000) throw SizeError("shift target ring too large");
  std::vector<std::string> names;
  names.reserve(N);
  for (std::size_t i = 1; i <= N; ++i)
    names.push_back("x" + std::to_string(i));
  return Ring::plain(std::move(names));
}

Monomial sigma_a(const Monomial& m, const ShiftSequence& a,
                 const Ring& target) {
  if (target.is_bi_indexed())
    throw UnsupportedRingError("sigma_a: target must be plain");
  auto alpha = expand(m);
  if (alpha.size() > a.length())
    throw Error("sigma_a: degree exceeds shift sequence length");
  std::vector<Exp> e(target.size(), Exp(0));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::size_t idx = static_cast<std::size_t>(alpha[i]) + a.at(i);  // 1-based
    if (idx > target.size())
      throw SizeError("sigma_a: target ring has too few variables");
    e[idx - 1] += 1;
  }
  return Monomial(target, std::move(e));
}

MonomialIdeal sigma_a_ideal(const MonomialIdeal& I, const ShiftSequence& a,
                            bool* collapsed) {
  Exp maxdeg = 0;
  for (const auto& g : I.gens()) maxdeg = std::max(maxdeg, g.degree());
  if (maxdeg > a.length())
    throw Error("sigma_a_ideal: shift sequence shorter than max degree");
  Ring target = shift_target_ring(I.ring().size(), a);
  std::vector<Monomial> images;
  for (const auto& g : I.gens()) images.push_back(sigma_a(g, a, target));
  MonomialIdeal result = minimalize(target, images);
  if (collapsed) *collapsed = result.gens().size() != images.size();
  return result;
}

Monomial psi_specialize(const Monomial& m, const ShiftSequence& a,
                        const Ring& target) {
  if (!m.ring().is_bi_indexed())
    throw UnsupportedRingError("psi_specialize: plain-ring input");
  std::vector<Exp> e(target.size(), Exp(0));
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m.exponent(k) == 0) continue;
    const auto& v = m.ring().var(k);
    std::size_t idx = static_cast<std::size_t>(v.base) +
                      a.at(static_cast<std::size_t>(v.slot) - 1);
    if (idx > target.size())
      throw SizeError("psi_specialize: target ring has too few variables");
    e[idx - 1] += m.exponent(k);
  }
  return Monomial(target, std::move(e));
}

MonomialIdeal psi_specialize(const MonomialIdeal& J, const ShiftSequence& a) {
  if (!J.ring().is_bi_indexed())
    throw UnsupportedRingError("psi_specialize: plain-ring input");
  if (static_cast<std::size_t>(J.ring().slot_count()) > a.length())
    throw Error("psi_specialize: shift sequence shorter than slot count");
  Ring target = shift_target_ring(J.ring().base_count(), a);
  std::vector<Monomial> images;
  for (const auto& g : J.gens()) images.push_back(psi_specialize(g, a, target));
  return minimalize(target, std::move(images));
}

}  // namespace polarforge
