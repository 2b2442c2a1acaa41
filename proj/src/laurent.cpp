#include "atomcert/laurent.hpp"

#include <sstream>

namespace atomcert {

LaurentPoly LaurentPoly::monomial(int exp, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::circle_weight() {
  LaurentPoly p;
  p.terms_[2] = -1;
  p.terms_[-2] = -1;
  return p;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> LaurentPoly::min_deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPoly::span() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first - terms_.begin()->first;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) out *= base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.str() << "*A^" << it->first;
  }
  return os.str();
}

std::vector<std::pair<int, std::string>> LaurentPoly::to_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
  return out;
}

LaurentPoly LaurentPoly::from_pairs(
    const std::vector<std::pair<int, std::string>>& pairs) {
  LaurentPoly p;
  for (const auto& [e, c] : pairs) p.add_term(e, BigInt(c));
  return p;
}

}  // namespace atomcert
