#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atomcert {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in the variable A with exact integer coefficients.
// Invariant: the coefficient map never stores a zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, BigInt coeff);
  // -A^2 - A^-2, the weight of one state circle.
  static LaurentPoly circle_weight();

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int exp) const;

  std::optional<int> min_deg() const;
  std::optional<int> max_deg() const;
  // max_deg - min_deg; absent for the zero polynomial.
  std::optional<int> span() const;

  void add_term(int exp, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly pow(unsigned k) const;
  // A -> A^-1 (coefficient map reflection).
  LaurentPoly substitute_inverse() const;

  // Text form, descending exponents: "-1*A^5 + -1*A^-3 + 1*A^-7".
  // The zero polynomial prints as "0".
  std::string to_string() const;
  // Exponent-ascending (exp, coefficient-as-decimal-string) pairs.
  std::vector<std::pair<int, std::string>> to_pairs() const;
  static LaurentPoly from_pairs(
      const std::vector<std::pair<int, std::string>>& pairs);

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace atomcert
