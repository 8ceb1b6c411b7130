#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lpalg {

using Integer = mpz_class;
using Rational = mpq_class;

// One exponent per ring slot. std::vector's lexicographic operator< is the
// monomial order used everywhere: a < b iff the first nonzero entry of b - a
// is positive.
using Exponents = std::vector<int>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a computation contradicts a proven identity; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LaurentMonomial {
  Exponents exponents;
  Integer coeff{1};

  bool operator==(const LaurentMonomial&) const = default;
};

// Sparse Laurent polynomial over the integers. Exponents may be negative; a
// value whose exponents are all nonnegative is an ordinary polynomial (see
// is_polynomial), so one type carries both.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1);
  static LaurentPoly monomial(const Exponents& e, const Integer& c = 1);
  static LaurentPoly monomial(const LaurentMonomial& m) { return monomial(m.exponents, m.coeff); }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;
  bool depends_on(std::size_t i) const;
  int min_exponent(std::size_t i) const;
  int max_exponent(std::size_t i) const;
  Exponents min_exponents() const;
  Integer coefficient(const Exponents& e) const;
  Integer constant_term() const { return coefficient(Exponents(nvars_, 0)); }

  // The coefficient of x_i^power, as an element with x_i removed (exponent 0).
  LaurentPoly coefficient_in(std::size_t i, int power) const;
  std::map<int, LaurentPoly> collect(std::size_t i) const;

  void add_term(const Exponents& e, const Integer& c);
  // this -= c * x^shift * q, done in place on the term map.
  void sub_scaled(const LaurentPoly& q, const Exponents& shift, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  // Arbitrary total order, for use as a container key.
  bool operator<(const LaurentPoly& o) const {
    return nvars_ != o.nvars_ ? nvars_ < o.nvars_ : terms_ < o.terms_;
  }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly shifted(const Exponents& by) const;
  // x_i <- 0. Requires no negative exponent of x_i.
  LaurentPoly at_zero(std::size_t i) const;
  // Old slot i moves to slot target_slot[i] of a ring with new_nvars slots.
  // A slot mapped to -1 must not occur in p.
  LaurentPoly remap(const std::vector<int>& target_slot, std::size_t new_nvars) const;
  Integer content() const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

Exponents add(const Exponents& a, const Exponents& b);
Exponents sub(const Exponents& a, const Exponents& b);

// The monomial order's minimal term (`lex_first`) and maximal term.
LaurentMonomial lex_first(const LaurentPoly& p);
LaurentMonomial lex_last(const LaurentPoly& p);

bool is_sign_normalized(const LaurentPoly& p);
LaurentPoly sign_normalized(const LaurentPoly& p);

// p = m * q with every variable of q at minimum exponent 0 and q sign-normalized.
std::pair<LaurentMonomial, LaurentPoly> monomial_content(const LaurentPoly& p);
// Same, but only variables with index in [first, last) are stripped.
std::pair<LaurentMonomial, LaurentPoly> monomial_content(const LaurentPoly& p, std::size_t first,
                                                        std::size_t last);

// Division in the polynomial ring: absent if q does not divide p or if the
// quotient would need negative exponents while p and q are polynomials.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q);
// Division in the Laurent polynomial ring.
std::optional<LaurentPoly> laurent_div(const LaurentPoly& p, const LaurentPoly& q);
// Largest a with q^a | p in the Laurent ring; q must not be a unit.
int divisibility_order(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly* quotient = nullptr);

// Polynomial gcd with canonical sign; its integer content is the gcd of the
// inputs' contents, and gcd(p, 0) = sign-normalized p.
// Laurent inputs are first cleared of negative exponents.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly primitive_part(const LaurentPoly& p);
bool is_unit(const LaurentPoly& p);          // +-1
bool is_laurent_unit(const LaurentPoly& p);  // +-monomial
LaurentPoly derivative(const LaurentPoly& p, std::size_t i);

}  // namespace lpalg
