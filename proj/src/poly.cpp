#include "lpalg/poly.hpp"

#include <algorithm>
#include <limits>

namespace lpalg {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int power) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Integer& c) {
  LaurentPoly p(e.size());
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int v) { return v == 0; });
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return false;
  return true;
}

bool LaurentPoly::depends_on(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

int LaurentPoly::min_exponent(std::size_t i) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::max_exponent(std::size_t i) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return terms_.empty() ? 0 : m;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(nvars_, 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly LaurentPoly::coefficient_in(std::size_t i, int power) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != power) continue;
    Exponents f = e;
    f[i] = 0;
    r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
  }
  return r;
}

std::map<int, LaurentPoly> LaurentPoly::collect(std::size_t i) const {
  std::map<int, LaurentPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[i] = 0;
    auto [it, fresh] = out.try_emplace(e[i], nvars_);
    it->second.terms_.emplace(std::move(f), c);
  }
  return out;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != nvars_) throw DomainError("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::sub_scaled(const LaurentPoly& q, const Exponents& shift, const Integer& c) {
  Exponents key(nvars_);
  Integer t;
  for (const auto& [e, qc] : q.terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) key[i] = e[i] + shift[i];
    t = qc * c;
    auto [it, fresh] = terms_.try_emplace(key);
    it->second -= t;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw DomainError("ring mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw DomainError("ring mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("ring mismatch in multiplication");
  LaurentPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.nvars_;
  Exponents key(n);
  Integer t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) key[i] = ea[i] + eb[i];
      t = ca * cb;
      auto [it, fresh] = r.terms_.try_emplace(key);
      it->second += t;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add(e, by), c);
  return r;
}

LaurentPoly LaurentPoly::at_zero(std::size_t i) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < 0) throw DomainError("cannot set a variable with negative exponent to zero");
    if (e[i] == 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::remap(const std::vector<int>& target_slot, std::size_t new_nvars) const {
  if (target_slot.size() != nvars_) throw DomainError("remap size mismatch");
  LaurentPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (target_slot[i] < 0) throw DomainError("remap drops a variable that occurs");
      f[target_slot[i]] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LaurentMonomial lex_first(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("lex_first of zero");
  const auto& [e, c] = *p.terms().begin();
  return {e, c};
}

LaurentMonomial lex_last(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("lex_last of zero");
  const auto& [e, c] = *p.terms().rbegin();
  return {e, c};
}

bool is_sign_normalized(const LaurentPoly& p) {
  return p.is_zero() || p.terms().rbegin()->second > 0;
}

LaurentPoly sign_normalized(const LaurentPoly& p) { return is_sign_normalized(p) ? p : -p; }

std::pair<LaurentMonomial, LaurentPoly> monomial_content(const LaurentPoly& p) {
  return monomial_content(p, 0, p.nvars());
}

std::pair<LaurentMonomial, LaurentPoly> monomial_content(const LaurentPoly& p, std::size_t first,
                                                        std::size_t last) {
  if (p.is_zero()) throw DomainError("monomial_content of zero");
  Exponents m(p.nvars(), 0);
  for (std::size_t i = first; i < last; ++i) m[i] = p.min_exponent(i);
  Exponents neg(p.nvars());
  for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
  LaurentPoly q = p.shifted(neg);
  Integer sign = 1;
  if (!is_sign_normalized(q)) {
    sign = -1;
    q = -q;
  }
  return {LaurentMonomial{m, sign}, q};
}

namespace {

// Leading-term division of polynomials that have no monomial factor.
std::optional<LaurentPoly> divide_stripped(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.nvars();
  Exponents bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = a.max_exponent(i) - b.max_exponent(i);
    if (bound[i] < 0) return std::nullopt;
  }
  const auto& [lb, cb] = *b.terms().rbegin();
  LaurentPoly q(n);
  LaurentPoly r = a;
  Exponents t(n);
  Integer qc, rem;
  while (!r.is_zero()) {
    const auto& [lr, cr] = *r.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = lr[i] - lb[i];
      if (t[i] < 0 || t[i] > bound[i]) return std::nullopt;
    }
    mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
    if (rem != 0) return std::nullopt;
    q.add_term(t, qc);
    r.sub_scaled(b, t, qc);
  }
  return q;
}

}  // namespace

std::optional<LaurentPoly> laurent_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DomainError("division by zero");
  if (p.nvars() != q.nvars()) throw DomainError("ring mismatch in division");
  if (p.is_zero()) return LaurentPoly(p.nvars());
  auto [mp, p0] = monomial_content(p);
  auto [mq, q0] = monomial_content(q);
  std::optional<LaurentPoly> r;
  if (q0.is_constant()) {
    Integer c = q0.terms().begin()->second;
    if (p0.content() % c != 0) return std::nullopt;
    LaurentPoly out(p.nvars());
    for (const auto& [e, v] : p0.terms()) out.add_term(e, Integer(v / c));
    r = std::move(out);
  } else {
    r = divide_stripped(p0, q0);
    if (!r) return std::nullopt;
  }
  *r *= Integer(mp.coeff * mq.coeff);
  return r->shifted(sub(mp.exponents, mq.exponents));
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = laurent_div(p, q);
  if (r && p.is_polynomial() && q.is_polynomial() && !r->is_polynomial()) return std::nullopt;
  return r;
}

int divisibility_order(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly* quotient) {
  if (is_laurent_unit(q)) throw DomainError("divisibility order by a unit is unbounded");
  if (p.is_zero()) throw DomainError("divisibility order of zero is unbounded");
  int a = 0;
  LaurentPoly cur = p;
  while (auto next = laurent_div(cur, q)) {
    cur = std::move(*next);
    ++a;
  }
  if (quotient) *quotient = std::move(cur);
  return a;
}

bool is_unit(const LaurentPoly& p) {
  if (!p.is_constant() || p.is_zero()) return false;
  const Integer& c = p.terms().begin()->second;
  return c == 1 || c == -1;
}

bool is_laurent_unit(const LaurentPoly& p) {
  if (p.size() != 1) return false;
  const Integer& c = p.terms().begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly derivative(const LaurentPoly& p, std::size_t i) {
  LaurentPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

}  // namespace lpalg
