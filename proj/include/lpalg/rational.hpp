#pragma once

#include <optional>
#include <vector>

#include "lpalg/poly.hpp"

namespace lpalg {

// Unreduced quotient, as produced by substitution before any cancellation.
struct Fraction {
  LaurentPoly num;
  LaurentPoly den;
};

// num/den with num, den polynomials, gcd(num, den) = 1 and den sign-normalized.
// The representation is canonical, so == is equality of rational functions.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(const LaurentPoly& p);

  static RationalFn constant(std::size_t nvars, const Integer& c);
  static RationalFn variable(std::size_t nvars, std::size_t i);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  // Denominator a monic monomial, i.e. an element of Z[x^{+-1}].
  bool is_laurent() const { return den_.size() == 1 && den_.terms().begin()->second == 1; }
  std::optional<LaurentPoly> as_laurent() const;

  RationalFn pow(int e) const;
  RationalFn inverse() const;
  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }
  bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

  friend RationalFn reduce_fraction(const LaurentPoly& num, const LaurentPoly& den);
  friend RationalFn normalize_fraction(const LaurentPoly& num, const LaurentPoly& den);

 private:
  RationalFn(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {}
  static RationalFn from_coprime(LaurentPoly n, LaurentPoly d);

  LaurentPoly num_;
  LaurentPoly den_;
};

// Reduction by polynomial gcd only; no shortcut through Laurent division.
RationalFn reduce_fraction(const LaurentPoly& num, const LaurentPoly& den);
// Same result as reduce_fraction, trying exact Laurent division first.
RationalFn normalize_fraction(const LaurentPoly& num, const LaurentPoly& den);

// p with slot `var` replaced by `value`; value lives in p's ring.
Fraction substitute_unreduced(const LaurentPoly& p, std::size_t var, const RationalFn& value);
RationalFn substitute(const LaurentPoly& p, std::size_t var, const RationalFn& value);
RationalFn substitute(const RationalFn& f, std::size_t var, const RationalFn& value);

// p(values[0], ..., values[m-1]); all values share one target ring.
Fraction evaluate_unreduced(const LaurentPoly& p, const std::vector<RationalFn>& values);
RationalFn evaluate(const LaurentPoly& p, const std::vector<RationalFn>& values);
RationalFn evaluate(const RationalFn& f, const std::vector<RationalFn>& values);

}  // namespace lpalg
