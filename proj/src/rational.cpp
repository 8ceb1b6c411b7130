#include "lpalg/rational.hpp"

#include <algorithm>

namespace lpalg {

namespace {

// Splits a Laurent polynomial into (polynomial, positive monomial).
std::pair<LaurentPoly, LaurentPoly> split_laurent(const LaurentPoly& p) {
  Exponents m = p.min_exponents();
  for (int& v : m) v = v < 0 ? -v : 0;
  return {p.shifted(m), LaurentPoly::monomial(m)};
}

}  // namespace

RationalFn::RationalFn(const LaurentPoly& p) {
  auto [n, d] = split_laurent(p);
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFn RationalFn::constant(std::size_t nvars, const Integer& c) {
  return RationalFn(LaurentPoly::constant(nvars, c));
}

RationalFn RationalFn::variable(std::size_t nvars, std::size_t i) {
  return RationalFn(LaurentPoly::variable(nvars, i), LaurentPoly::constant(nvars, 1));
}

std::optional<LaurentPoly> RationalFn::as_laurent() const {
  if (!is_laurent()) return std::nullopt;
  const Exponents& e = den_.terms().begin()->first;
  Exponents neg(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  return num_.shifted(neg);
}

RationalFn RationalFn::from_coprime(LaurentPoly n, LaurentPoly d) {
  if (!is_sign_normalized(d)) {
    n = -n;
    d = -d;
  }
  return RationalFn(std::move(n), std::move(d));
}

RationalFn RationalFn::pow(int e) const {
  if (e >= 0) return RationalFn(num_.pow(e), den_.pow(e));
  if (is_zero()) throw DomainError("negative power of zero");
  return from_coprime(den_.pow(-e), num_.pow(-e));
}

RationalFn RationalFn::inverse() const { return pow(-1); }

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return normalize_fraction(a.num_ + b.num_, a.den_);
  return normalize_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return RationalFn::constant(a.nvars(), 0);
  if (a.den_.is_one() && b.den_.is_one()) return RationalFn(a.num_ * b.num_, a.den_);
  return normalize_fraction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn reduce_fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.nvars() != den.nvars()) throw DomainError("ring mismatch in fraction");
  const std::size_t n = num.nvars();
  if (num.is_zero()) return RationalFn::constant(n, 0);
  Exponents shift(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    shift[i] = std::max({0, -num.min_exponent(i), -den.min_exponent(i)});
  LaurentPoly N = num.shifted(shift), D = den.shifted(shift);
  LaurentPoly g = gcd(N, D);
  auto qn = exact_div(N, g), qd = exact_div(D, g);
  if (!qn || !qd) throw InternalError("gcd does not divide its arguments");
  return RationalFn::from_coprime(std::move(*qn), std::move(*qd));
}

RationalFn normalize_fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) return RationalFn::constant(num.nvars(), 0);
  if (auto q = laurent_div(num, den)) return RationalFn(*q);
  return reduce_fraction(num, den);
}

Fraction substitute_unreduced(const LaurentPoly& p, std::size_t var, const RationalFn& value) {
  if (value.nvars() != p.nvars()) throw DomainError("ring mismatch in substitution");
  const std::size_t n = p.nvars();
  if (p.is_zero()) return {p, LaurentPoly::constant(n, 1)};
  const int lo = std::min(p.min_exponent(var), 0);
  const int hi = std::max(p.max_exponent(var), 0);
  std::vector<LaurentPoly> a_pow{LaurentPoly::constant(n, 1)}, b_pow{LaurentPoly::constant(n, 1)};
  for (int i = 1; i <= hi - lo; ++i) {
    a_pow.push_back(a_pow.back() * value.num());
    b_pow.push_back(b_pow.back() * value.den());
  }
  Fraction out{LaurentPoly(n), a_pow[-lo] * b_pow[hi]};
  for (auto& [e, c] : p.collect(var)) out.num += c * a_pow[e - lo] * b_pow[hi - e];
  return out;
}

RationalFn substitute(const LaurentPoly& p, std::size_t var, const RationalFn& value) {
  if (!p.depends_on(var)) return RationalFn(p);
  Fraction f = substitute_unreduced(p, var, value);
  return normalize_fraction(f.num, f.den);
}

RationalFn substitute(const RationalFn& f, std::size_t var, const RationalFn& value) {
  Fraction a = substitute_unreduced(f.num(), var, value);
  Fraction b = substitute_unreduced(f.den(), var, value);
  return normalize_fraction(a.num * b.den, a.den * b.num);
}

Fraction evaluate_unreduced(const LaurentPoly& p, const std::vector<RationalFn>& values) {
  if (values.size() != p.nvars()) throw DomainError("evaluate: wrong number of values");
  if (values.empty()) return {p, LaurentPoly::constant(0, 1)};
  const std::size_t n = values.front().nvars();
  const std::size_t m = p.nvars();
  std::vector<int> lo(m), hi(m);
  std::vector<std::vector<LaurentPoly>> a_pow(m), b_pow(m);
  LaurentPoly den = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = std::min(p.min_exponent(i), 0);
    hi[i] = std::max(p.max_exponent(i), 0);
    a_pow[i].push_back(LaurentPoly::constant(n, 1));
    b_pow[i].push_back(LaurentPoly::constant(n, 1));
    const bool trivial_den = values[i].den().is_one();
    for (int k = 1; k <= hi[i] - lo[i]; ++k) {
      a_pow[i].push_back(a_pow[i].back() * values[i].num());
      b_pow[i].push_back(trivial_den ? b_pow[i].back() : b_pow[i].back() * values[i].den());
    }
    den *= a_pow[i][-lo[i]] * b_pow[i][hi[i]];
  }
  LaurentPoly num(n);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t = LaurentPoly::constant(n, c);
    for (std::size_t i = 0; i < m; ++i) {
      const LaurentPoly& a = a_pow[i][e[i] - lo[i]];
      const LaurentPoly& b = b_pow[i][hi[i] - e[i]];
      if (!a.is_one()) t = t * a;
      if (!b.is_one()) t = t * b;
    }
    num += t;
  }
  return {num, den};
}

RationalFn evaluate(const LaurentPoly& p, const std::vector<RationalFn>& values) {
  Fraction f = evaluate_unreduced(p, values);
  return normalize_fraction(f.num, f.den);
}

RationalFn evaluate(const RationalFn& f, const std::vector<RationalFn>& values) {
  Fraction a = evaluate_unreduced(f.num(), values);
  Fraction b = evaluate_unreduced(f.den(), values);
  return normalize_fraction(a.num * b.den, a.den * b.num);
}

}  // namespace lpalg
