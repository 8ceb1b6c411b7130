#include "lpalg/poly.hpp"

#include <algorithm>
#include <optional>

namespace lpalg {

namespace {

int degree_in(const LaurentPoly& p, std::size_t v) { return p.is_zero() ? -1 : p.max_exponent(v); }

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly shift_var(const LaurentPoly& p, std::size_t v, int by) {
  Exponents e(p.nvars(), 0);
  e[v] = by;
  return p.shifted(e);
}

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = laurent_div(a, b);
  if (!q) throw InternalError("gcd: expected exact division failed");
  return *q;
}

// gcd over Z[other variables] of the coefficients of p in v.
LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  auto coeffs = p.collect(v);
  LaurentPoly g(p.nvars());
  for (auto& [deg, c] : coeffs) {
    g = gcd_poly(g, c);
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly primitive_in(const LaurentPoly& p, std::size_t v) {
  return sign_normalized(divide_or_throw(p, content_in(p, v)));
}

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const LaurentPoly lb = b.coefficient_in(v, db);
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const int dr = degree_in(r, v);
    if (dr < db) break;
    LaurentPoly lr = r.coefficient_in(v, dr);
    r = lb * r - shift_var(lr * b, v, dr - db);
  }
  return r;
}

// Both inputs primitive in v with positive v-degree.
LaurentPoly primitive_prs(LaurentPoly a, LaurentPoly b, std::size_t v) {
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
  while (true) {
    LaurentPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return sign_normalized(b);
    if (degree_in(r, v) == 0) return LaurentPoly::constant(a.nvars(), 1);
    a = std::move(b);
    b = primitive_in(r, v);
  }
}

Integer max_norm(const LaurentPoly& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms())
    if (abs(c) > m) m = abs(c);
  return m;
}

LaurentPoly divide_content(const LaurentPoly& p, const Integer& c) {
  LaurentPoly r(p.nvars());
  for (const auto& [e, v] : p.terms()) r.add_term(e, Integer(v / c));
  return r;
}

// x_v <- xi.
LaurentPoly evaluate_at(const LaurentPoly& p, std::size_t v, const Integer& xi) {
  LaurentPoly r(p.nvars());
  Integer pw;
  for (const auto& [e, c] : p.terms()) {
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e[v]));
    Exponents f = e;
    f[v] = 0;
    r.add_term(f, Integer(c * pw));
  }
  return r;
}

// Inverse of evaluate_at for small coefficients: each coefficient is written
// in base xi with digits in (-xi/2, xi/2].
LaurentPoly xi_adic(const LaurentPoly& h, std::size_t v, const Integer& xi) {
  LaurentPoly r(h.nvars());
  const Integer half = xi / 2;
  for (const auto& [e, c0] : h.terms()) {
    Integer c = c0, d;
    Exponents f = e;
    for (int i = 0; c != 0; ++i) {
      mpz_fdiv_r(d.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      if (d != 0) {
        f[v] = i;
        r.add_term(f, d);
      }
      c = (c - d) / xi;
    }
  }
  return r;
}

// Heuristic gcd: evaluate the last variable at a large integer, recurse, and
// rebuild the candidate from its base-xi digits. A candidate that divides
// both inputs is the gcd once xi exceeds twice the smaller norm. Absent when
// every evaluation point fails.
std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  const std::size_t n = a_in.nvars();
  Integer ca = a_in.content(), cb = b_in.content(), g0;
  mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  std::size_t v = n;
  for (std::size_t i = n; i-- > 0;) {
    if (a_in.depends_on(i) || b_in.depends_on(i)) {
      v = i;
      break;
    }
  }
  if (v == n || a_in.is_constant() || b_in.is_constant()) return LaurentPoly::constant(n, g0);
  const LaurentPoly a = divide_content(a_in, ca), b = divide_content(b_in, cb);

  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const LaurentPoly ea = evaluate_at(a, v, xi), eb = evaluate_at(b, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto h = heuristic_gcd(ea, eb)) {
        LaurentPoly cand = xi_adic(*h, v, xi);
        if (!cand.is_zero()) {
          cand = sign_normalized(divide_content(cand, cand.content()));
          if (exact_div(a, cand) && exact_div(b, cand)) return cand * g0;
        }
      }
    }
    Integer r;
    mpz_root(r.get_mpz_t(), xi.get_mpz_t(), 4);
    xi = xi * 73794 * r / 27011;
  }
  return std::nullopt;
}

// Polynomial inputs; the result is sign-normalized and carries the gcd of
// the integer contents.
LaurentPoly gcd_poly(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  if (a_in.is_zero()) return sign_normalized(b_in);
  if (b_in.is_zero()) return sign_normalized(a_in);
  const std::size_t n = a_in.nvars();
  Exponents ma = a_in.min_exponents(), mb = b_in.min_exponents(), mg(n);
  for (std::size_t i = 0; i < n; ++i) {
    mg[i] = std::min(ma[i], mb[i]);
    ma[i] = -ma[i];
    mb[i] = -mb[i];
  }
  LaurentPoly a = a_in.shifted(ma);
  LaurentPoly b = b_in.shifted(mb);

  if (a.is_constant() || b.is_constant()) {
    Integer c;
    mpz_gcd(c.get_mpz_t(), Integer(a.content()).get_mpz_t(), Integer(b.content()).get_mpz_t());
    return LaurentPoly::monomial(mg, c);
  }
  if (b.size() > a.size()) std::swap(a, b);
  if (auto q = laurent_div(a, b)) return sign_normalized(b.shifted(mg));
  if (auto h = heuristic_gcd(a, b)) return sign_normalized(h->shifted(mg));

  std::size_t v = n;
  for (std::size_t i = n; i-- > 0;) {
    if (a.depends_on(i) && b.depends_on(i)) {
      v = i;
      break;
    }
  }
  if (v == n) {
    // No shared variable: the gcd lives in the coefficients.
    std::size_t w = 0;
    while (!a.depends_on(w)) ++w;
    return sign_normalized(gcd_poly(content_in(a, w), b).shifted(mg));
  }
  LaurentPoly ca = content_in(a, v);
  LaurentPoly cb = content_in(b, v);
  LaurentPoly c = gcd_poly(ca, cb);
  LaurentPoly g = primitive_prs(divide_or_throw(a, ca), divide_or_throw(b, cb), v);
  return sign_normalized((c * g).shifted(mg));
}

LaurentPoly clear_negative(const LaurentPoly& p) {
  Exponents m = p.min_exponents();
  for (int& v : m) v = v < 0 ? -v : 0;
  return p.shifted(m);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.nvars() != q.nvars()) throw DomainError("ring mismatch in gcd");
  return gcd_poly(clear_negative(p), clear_negative(q));
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r(p.nvars());
  Integer c = p.content();
  for (const auto& [e, v] : p.terms()) r.add_term(e, Integer(v / c));
  return sign_normalized(r);
}

}  // namespace lpalg
