#include "lpalg/irreducible.hpp"

#include <algorithm>
#include <random>

namespace lpalg {

namespace {

using Dense = std::vector<Integer>;  // index = degree

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer eval(const Dense& f, const Integer& t) {
  Integer acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * t + f[i];
  return acc;
}

std::optional<Dense> divide(Dense f, const Dense& g) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return std::nullopt;
  Dense q(f.size() - dg, 0);
  for (std::size_t i = f.size(); i-- > dg;) {
    if (f[i] == 0) continue;
    if (f[i] % g[dg] != 0) return std::nullopt;
    Integer c = f[i] / g[dg];
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (f[i] != 0) return std::nullopt;
  return q;
}

std::vector<Integer> positive_divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Coefficients of the degree <= m interpolant, or absent if not integral.
std::optional<Dense> interpolate(const std::vector<Integer>& t, const std::vector<Integer>& y) {
  const std::size_t k = t.size();
  std::vector<Rational> dd(y.begin(), y.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(t[i] - t[i - level]);
  std::vector<Rational> c{dd[k - 1]};
  for (std::size_t i = k - 1; i-- > 0;) {
    // c <- c * (x - t_i) + dd[i]
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * Rational(t[i]);
    }
    next[0] += dd[i];
    c = std::move(next);
  }
  Dense out;
  for (auto& r : c) {
    r.canonicalize();
    if (r.get_den() != 1) return std::nullopt;
    out.push_back(r.get_num());
  }
  trim(out);
  return out;
}

// Kronecker's method. Returns a proper factor, nothing when irreducible, and
// sets `exhausted` when the budget runs out first.
std::optional<Dense> kronecker_factor(const Dense& f, long& budget, bool& exhausted) {
  exhausted = false;
  const std::size_t d = f.size() - 1;
  for (std::size_t m = 1; m <= d / 2; ++m) {
    std::vector<std::pair<std::size_t, Integer>> candidates;  // (#divisors, t)
    for (int step = 0; candidates.size() < 3 * (m + 1) + 2 && step < 200; ++step) {
      Integer t = (step % 2 == 0) ? Integer(step / 2) : Integer(-(step + 1) / 2);
      Integer v = eval(f, t);
      if (v == 0 || abs(v) > Integer("10000000000")) continue;
      candidates.emplace_back(positive_divisors(v).size(), t);
    }
    if (candidates.size() < m + 1) {
      exhausted = true;
      return std::nullopt;
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Integer> pts;
    std::vector<std::vector<Integer>> choices;
    for (std::size_t j = 0; j <= m; ++j) {
      pts.push_back(candidates[j].second);
      std::vector<Integer> pos = positive_divisors(eval(f, pts.back()));
      std::vector<Integer> all;
      for (const auto& p : pos) {
        all.push_back(p);
        if (j > 0) all.push_back(-p);  // the first value fixes the sign of the factor
      }
      choices.push_back(std::move(all));
    }
    std::vector<std::size_t> idx(m + 1, 0);
    std::vector<Integer> vals(m + 1);
    while (true) {
      if (--budget < 0) {
        exhausted = true;
        return std::nullopt;
      }
      for (std::size_t j = 0; j <= m; ++j) vals[j] = choices[j][idx[j]];
      if (auto g = interpolate(pts, vals); g && g->size() == m + 1) {
        if (divide(f, *g)) return g;
      }
      std::size_t j = 0;
      while (j <= m && ++idx[j] == choices[j].size()) idx[j++] = 0;
      if (j > m) break;
    }
  }
  return std::nullopt;
}

Dense to_dense(const LaurentPoly& p, std::size_t v) {
  Dense f(p.max_exponent(v) + 1, 0);
  for (const auto& [e, c] : p.terms()) f[e[v]] += c;
  return f;
}

LaurentPoly from_dense(const Dense& f, std::size_t nvars, std::size_t v) {
  LaurentPoly p(nvars);
  Exponents e(nvars, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    e[v] = static_cast<int>(i);
    p.add_term(e, f[i]);
  }
  return p;
}

Integer dense_content(const Dense& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

IrreducibilityVerdict reducible(LaurentPoly w, std::string why) {
  return {Irreducibility::Reducible, sign_normalized(w), std::move(why)};
}

}  // namespace

const char* to_string(Irreducibility k) {
  switch (k) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unit: return "unit";
    case Irreducibility::Unknown: return "unknown";
  }
  return "unknown";
}

IrreducibilityVerdict check_irreducible(const LaurentPoly& p_in, std::size_t nactive, long budget) {
  if (p_in.is_zero()) return {Irreducibility::Unknown, std::nullopt, "zero polynomial"};
  const std::size_t n = p_in.nvars();
  LaurentPoly p = monomial_content(p_in, nactive, n).second;
  if (!p.is_polynomial()) return {Irreducibility::Unknown, std::nullopt, "negative exponent on an active variable"};
  if (is_unit(p)) return {Irreducibility::Unit, std::nullopt, "unit"};

  for (std::size_t i = 0; i < nactive; ++i) {
    if (p.min_exponent(i) > 0 && !p.is_monomial())
      return reducible(LaurentPoly::variable(n, i), "divisible by a variable");
  }
  if (p.is_monomial()) {
    const auto& [e, c] = *p.terms().begin();
    int degree = 0;
    for (int x : e) degree += x;
    if (degree == 0)
      return is_prime(abs(c)) ? IrreducibilityVerdict{Irreducibility::Irreducible, std::nullopt, "prime constant"}
                              : reducible(LaurentPoly::constant(n, positive_divisors(c)[1]),
                                          "composite constant");
    if (degree == 1 && (c == 1 || c == -1)) return {Irreducibility::Irreducible, std::nullopt, "single variable"};
    for (std::size_t i = 0; i < nactive; ++i)
      if (e[i] > 0) return reducible(LaurentPoly::variable(n, i), "monomial");
    return reducible(LaurentPoly::constant(n, abs(c)), "monomial with content");
  }

  Integer content = p.content();
  if (content != 1) return reducible(LaurentPoly::constant(n, content), "integer content");

  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (p.depends_on(i)) vars.push_back(i);

  for (std::size_t v : vars) {
    auto coeffs = p.collect(v);
    LaurentPoly g(n);
    for (auto& [deg, c] : coeffs) {
      g = gcd(g, c);
      if (g.is_one()) break;
    }
    if (!g.is_one()) return reducible(g, "content in a variable");
  }
  for (std::size_t v : vars)
    if (p.max_exponent(v) == 1) return {Irreducibility::Irreducible, std::nullopt, "linear in a variable with trivial content"};

  if (vars.size() == 1) {
    bool exhausted = false;
    Dense f = to_dense(p, vars[0]);
    if (auto g = kronecker_factor(f, budget, exhausted))
      return reducible(from_dense(*g, n, vars[0]), "factor found by interpolation");
    if (exhausted) return {Irreducibility::Unknown, std::nullopt, "budget exhausted"};
    return {Irreducibility::Irreducible, std::nullopt, "no factor of degree <= d/2"};
  }

  for (std::size_t v : vars) {
    LaurentPoly g = gcd(p, derivative(p, v));
    if (!g.is_constant()) return reducible(g, "repeated factor");
  }

  // A specialization of the other variables that keeps the degree in v and is
  // irreducible over Q certifies irreducibility (content in v is trivial).
  std::size_t v = vars[0];
  for (std::size_t u : vars)
    if (p.max_exponent(u) < p.max_exponent(v)) v = u;
  const int dv = p.max_exponent(v);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(-7, 7);
  for (int attempt = 0; attempt < 24 && budget > 0; ++attempt) {
    Dense f(dv + 1, 0);
    std::vector<Integer> values(n, 0);
    for (std::size_t u : vars)
      if (u != v) values[u] = pick(rng);
    for (const auto& [e, c] : p.terms()) {
      Integer term = c;
      for (std::size_t u : vars) {
        if (u == v) continue;
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), values[u].get_mpz_t(), e[u]);
        term *= pw;
      }
      f[e[v]] += term;
    }
    if (f[dv] == 0 || f[0] == 0) continue;
    Integer c = dense_content(f);
    for (auto& x : f) x /= c;
    bool exhausted = false;
    if (!kronecker_factor(f, budget, exhausted) && !exhausted)
      return {Irreducibility::Irreducible, std::nullopt, "irreducible specialization"};
  }
  return {Irreducibility::Unknown, std::nullopt, "no certificate within budget"};
}

}  // namespace lpalg
