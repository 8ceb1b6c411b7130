#include "lpalg/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace lpalg {

LaurentPoly LeadingPart::terms() const {
  Exponents e = active;
  e.resize(coeff.nvars(), 0);
  return LaurentPoly::monomial(e) * coeff;
}

LeadingPart leading_part(const LaurentPoly& p, std::size_t n) {
  if (p.is_zero()) throw DomainError("leading part of zero");
  LeadingPart out;
  const Exponents& first = p.terms().begin()->first;
  out.active.assign(first.begin(), first.begin() + n);
  out.coeff = LaurentPoly(p.nvars());
  // Terms sharing the active prefix are contiguous at the front.
  for (const auto& [e, c] : p.terms()) {
    if (!std::equal(e.begin(), e.begin() + n, out.active.begin())) break;
    Exponents rest = e;
    std::fill(rest.begin(), rest.begin() + n, 0);
    out.coeff.add_term(rest, c);
  }
  return out;
}

namespace {

LaurentPoly denominator_monomial(const HatData& h, std::size_t k, std::size_t nslots) {
  Exponents e(nslots, 0);
  for (Eigen::Index i = 0; i < h.denom.rows(); ++i) e[i] = h.denom(i, k);
  return LaurentPoly::monomial(e);
}

bool hat_is_exchange(const LPSeed& s, const HatData& h, std::string* witness) {
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (h.hat[k] == s.exchange[k]) continue;
    if (witness)
      *witness = "hat F_" + s.active[k] + " = " + to_string(h.hat[k], s.names()) + " = F_" + s.active[k] + "/" +
                 to_string(denominator_monomial(h, k, s.nslots()), s.names());
    return false;
  }
  return true;
}

// Conditions (ii)-(iv), which depend on the order of the cluster but not on
// the exchange Laurent polynomials.
void shape_conditions(const LPSeed& s, Condition12Report& r) {
  const std::size_t n = s.rank();
  const VarNames names = s.names();
  r.M.clear();
  r.f.clear();
  r.v.clear();
  r.J.clear();
  r.tail_index.assign(n, std::nullopt);
  for (int c = 1; c < 4; ++c) {
    r.holds[c] = true;
    r.witnesses[c].clear();
  }

  for (std::size_t k = 0; k < n; ++k) {
    const LaurentPoly& F = s.exchange[k];
    LeadingPart lead = leading_part(F, n);
    r.M.push_back(lead.terms());
    r.f.push_back(F - r.M.back());
    r.v.push_back(lead.active);
    for (std::size_t i = 0; i <= k; ++i) {
      if (lead.active[i] == 0) continue;
      r.holds[1] = false;
      r.witnesses[1].push_back({k, "M_" + s.active[k] + " = " + to_string(r.M.back(), names) + " contains " + s.active[i]});
      break;
    }
    if (k >= 1 && !F.depends_on(0)) r.J.push_back(k);
  }

  for (std::size_t k = 1; k < n; ++k) {
    const LaurentPoly& f = r.f[k];
    if (s.exchange[k].depends_on(0)) {
      for (const auto& [e, c] : f.terms()) {
        if (e[0] > 0) continue;
        r.holds[2] = false;
        r.witnesses[2].push_back({k, "F_" + s.active[k] + " has the term " +
                                         to_string(LaurentPoly::monomial(e, c), names) + " free of " + s.active[0]});
        break;
      }
    } else if (k >= 2) {
      std::vector<std::size_t> qualifying;
      for (std::size_t i = 1; i < k; ++i)
        if (r.v[i][k] > 0) qualifying.push_back(i);
      if (qualifying.empty()) continue;
      for (std::size_t i : qualifying) {
        bool ok = true;
        for (const auto& [e, c] : f.terms()) ok = ok && e[i] > 0;
        if (ok) {
          r.tail_index[k] = i;
          break;
        }
      }
      if (!r.tail_index[k]) {
        r.holds[3] = false;
        std::string idx;
        for (std::size_t i : qualifying) idx += (idx.empty() ? "" : ", ") + s.active[i];
        r.witnesses[3].push_back({k, "F_" + s.active[k] + " - M_" + s.active[k] + " = " + to_string(f, names) +
                                         " is not divisible by any of " + idx});
      }
    }
  }
}

void require(const LPSeed& s, const HatData& h, bool shape) {
  std::string witness;
  if (!hat_is_exchange(s, h, &witness)) throw DomainError("condition (i) fails: " + witness);
  if (shape) {
    Condition12Report r;
    shape_conditions(s, r);
    if (!r.holds[1]) throw DomainError("condition (ii) fails: " + r.witnesses[1].front().detail);
  }
}

// Expansions of the standard monomials of a seed satisfying (i) and (ii).
class StandardBasis {
 public:
  StandardBasis(const LPSeed& s, bool phi_images) : n_(s.rank()), N_(s.nslots()), phi_(phi_images) {
    for (std::size_t i = 0; i < n_; ++i) {
      LaurentPoly xp = s.exchange[i] * LaurentPoly::monomial(unit(i, -1));
      if (phi_ && i > 0) xp = xp.at_zero(0);
      prime_.push_back(xp);
      v_.push_back(leading_part(s.exchange[i], n_).active);
    }
  }

  StandardIndex solve(const Exponents& e) const {
    StandardIndex a(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      long val = e[i];
      for (std::size_t j = 0; j < i; ++j)
        if (a[j] < 0) val += static_cast<long>(a[j]) * v_[j][i];
      a[i] = static_cast<int>(val);
    }
    return a;
  }

  const LaurentPoly& value(const StandardIndex& a) {
    auto it = values_.find(a);
    if (it != values_.end()) return it->second;
    LaurentPoly out = LaurentPoly::constant(N_, 1);
    Exponents plain(N_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] >= 0) {
        plain[i] = a[i];
      } else {
        if (phi_ && i == 0) throw DomainError("x'_1 lies outside the domain of phi");
        out = out * prime_power(i, -a[i]);
      }
    }
    out = out * LaurentPoly::monomial(plain);
    return values_.emplace(a, std::move(out)).first->second;
  }

  const LaurentPoly& prime(std::size_t i) const { return prime_[i]; }

 private:
  Exponents unit(std::size_t i, int power) const {
    Exponents e(N_, 0);
    e[i] = power;
    return e;
  }

  const LaurentPoly& prime_power(std::size_t i, int m) {
    auto& powers = powers_[i];
    if (powers.empty()) powers.push_back(LaurentPoly::constant(N_, 1));
    while (static_cast<int>(powers.size()) <= m) powers.push_back(powers.back() * prime_[i]);
    return powers[m];
  }

  std::size_t n_, N_;
  bool phi_;
  std::vector<LaurentPoly> prime_;
  std::vector<Exponents> v_;
  std::map<std::size_t, std::vector<LaurentPoly>> powers_;
  std::map<StandardIndex, LaurentPoly> values_;
};

LowerVerdict eliminate(LaurentPoly residual, std::size_t n, StandardBasis& basis, long budget,
                       std::map<StandardIndex, LaurentPoly>& terms, long& steps, std::string& certificate,
                       const VarNames& names) {
  while (!residual.is_zero()) {
    if (steps >= budget) return LowerVerdict::BudgetExhausted;
    ++steps;
    LeadingPart lead = leading_part(residual, n);
    StandardIndex a = basis.solve(lead.active);
    const LaurentPoly& V = basis.value(a);
    LeadingPart vl = leading_part(V, n);
    if (vl.active != lead.active) throw InternalError("standard monomial has an unexpected leading monomial");
    auto r = laurent_div(lead.coeff, vl.coeff);
    if (!r) {
      certificate = "leading term " + to_string(lead.terms(), names) + " is not an R-multiple of the leading term " +
                    to_string(vl.terms(), names) + " of the matching standard monomial";
      return LowerVerdict::NonMember;
    }
    residual -= *r * V;
    auto& t = terms[a];
    t = t.nvars() == 0 ? *r : t + *r;
    if (t.is_zero()) terms.erase(a);
  }
  return LowerVerdict::Member;
}

}  // namespace

Condition12Report check_condition_1_2(const LPSeed& s) {
  Condition12Report r;
  HatData h = exchange_laurent(s);
  r.holds[0] = true;
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (h.hat[k] == s.exchange[k]) continue;
    r.holds[0] = false;
    r.witnesses[0].push_back({k, "hat F_" + s.active[k] + " = " + to_string(h.hat[k], s.names()) + " = F_" +
                                     s.active[k] + "/" + to_string(denominator_monomial(h, k, s.nslots()), s.names())});
  }
  shape_conditions(s, r);
  return r;
}

LaurentPoly standard_monomial_value(const LPSeed& s, const StandardIndex& a) {
  if (a.size() != s.rank()) throw DomainError("standard index has the wrong length");
  require(s, exchange_laurent(s), false);
  StandardBasis basis(s, false);
  return basis.value(a);
}

namespace {

LaurentMonomial leading_index_map_unchecked(const LPSeed& s, const StandardIndex& a) {
  LaurentMonomial out{Exponents(s.nslots(), 0), 1};
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (a[i] >= 0) {
      out.exponents[i] += a[i];
      continue;
    }
    LaurentMonomial M = lex_first(s.exchange[i]);
    const int m = -a[i];
    for (std::size_t j = 0; j < s.nslots(); ++j) out.exponents[j] += m * M.exponents[j];
    out.exponents[i] -= m;
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), M.coeff.get_mpz_t(), m);
    out.coeff *= c;
  }
  return out;
}

}  // namespace

LaurentMonomial leading_index_map(const LPSeed& s, const StandardIndex& a) {
  if (a.size() != s.rank()) throw DomainError("standard index has the wrong length");
  require(s, exchange_laurent(s), true);
  return leading_index_map_unchecked(s, a);
}

BasisCheckReport basis_check(const LPSeed& s, int radius) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  require(s, exchange_laurent(s), true);
  StandardBasis basis(s, false);
  BasisCheckReport out;
  std::map<Exponents, StandardIndex> seen;
  StandardIndex a(s.rank(), -radius);
  while (true) {
    ++out.indices;
    LaurentMonomial lead = leading_index_map_unchecked(s, a);
    if (!(lex_first(basis.value(a)) == lead)) out.mismatches.push_back(a);
    auto [it, fresh] = seen.emplace(lead.exponents, a);
    if (!fresh) out.collisions.emplace_back(it->second, a);
    std::size_t i = 0;
    while (i < a.size() && a[i] == radius) a[i++] = -radius;
    if (i == a.size()) break;
    ++a[i];
  }
  return out;
}

const char* to_string(LowerVerdict v) {
  switch (v) {
    case LowerVerdict::Member: return "member";
    case LowerVerdict::NonMember: return "non-member";
    case LowerVerdict::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

LowerCombination lower_member(const LPSeed& s, const LaurentPoly& y, const Budget& budget, bool upper_certificate) {
  if (y.nvars() != s.nslots()) throw DomainError("element does not live in the seed's ring");
  HatData h = exchange_laurent(s);
  require(s, h, true);
  LowerCombination out;
  if (upper_certificate) {
    UpperVerdict u = upper_member(s, h, y);
    if (!u.member) {
      out.verdict = LowerVerdict::NonMember;
      for (const auto& d : u.directions)
        if (d.failing_pole) {
          out.certificate = "outside the upper bound: the coefficient of " + s.active[d.j] + "^-" +
                            std::to_string(*d.failing_pole) + " is not divisible by hat F_" + s.active[d.j] + "^" +
                            std::to_string(*d.failing_pole);
          break;
        }
      return out;
    }
  }
  StandardBasis basis(s, false);
  out.verdict = eliminate(y, s.rank(), basis, budget.lower_steps, out.terms, out.steps, out.certificate, s.names());
  return out;
}

UpperVerdict upper_member(const LPSeed& s, const LaurentPoly& y) { return upper_member(s, exchange_laurent(s), y); }

UpperVerdict upper_member(const LPSeed& s, const HatData& h, const LaurentPoly& y) {
  if (y.nvars() != s.nslots()) throw DomainError("element does not live in the seed's ring");
  UpperVerdict out;
  for (std::size_t j = 0; j < s.rank(); ++j) {
    UpperDirection d;
    d.j = j;
    LaurentPoly power = LaurentPoly::constant(s.nslots(), 1);
    int have = 0;
    const auto coeffs = y.collect(j);
    // Poles in increasing order: m = 1, 2, ...
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      if (it->first >= 0) continue;
      const int m = -it->first;
      d.max_pole = std::max(d.max_pole, m);
      while (have < m) power = power * h.hat[j], ++have;
      if (!d.failing_pole && !laurent_div(it->second, power)) d.failing_pole = m;
    }
    out.member = out.member && !d.failing_pole;
    out.directions.push_back(d);
  }
  return out;
}

LaurentPoly leading_term(const LaurentPoly& y) {
  if (y.is_zero()) throw DomainError("leading term of zero");
  const int a = y.min_exponent(0);
  LaurentPoly out(y.nvars());
  for (const auto& [e, c] : y.terms())
    if (e[0] == a) out.add_term(e, c);
  return out;
}

VarNames primed_names(const LPSeed& s) {
  VarNames out = s.active;
  for (const auto& a : s.active) out.push_back(a + "'");
  out.insert(out.end(), s.frozen.begin(), s.frozen.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i] == out[j]) throw DomainError("primed variable name " + out[i] + " clashes with a seed variable");
  return out;
}

LaurentPoly phi(const LPSeed& s, const LaurentPoly& expr) {
  const std::size_t n = s.rank(), N = s.nslots();
  if (expr.nvars() != 2 * n + s.frozen.size()) throw DomainError("expression does not live in the primed ring");
  require(s, exchange_laurent(s), false);
  StandardBasis basis(s, false);
  LaurentPoly out(N);
  for (const auto& [e, c] : expr.terms()) {
    if (e[0] != 0 || e[n] != 0)
      throw DomainError(s.active[0] + " and " + s.active[0] + "' lie outside the domain of phi");
    Exponents plain(N, 0);
    LaurentPoly term = LaurentPoly::constant(N, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < 0 || e[n + i] < 0) throw DomainError("phi is defined on polynomials in the cluster variables");
      plain[i] = e[i];
      if (e[n + i] > 0) term = term * basis.prime(i).pow(e[n + i]);
    }
    for (std::size_t f = 0; f < s.frozen.size(); ++f) plain[n + f] = e[2 * n + f];
    out += term * LaurentPoly::monomial(plain);
  }
  return out.at_zero(0);
}

std::optional<std::vector<long>> im_phi_monomial_member(const LPSeed& s, const std::vector<int>& m) {
  const std::size_t n = s.rank();
  if (n < 1 || m.size() != n - 1) throw DomainError("exponent vector must cover x_2, ..., x_n");
  Condition12Report r = check_condition_1_2(s);
  if (!r.all()) throw DomainError("im_phi_monomial_member needs Condition 1.2");
  std::vector<long> l(n - 1, 0);
  for (std::size_t j = 1; j < n; ++j) {
    long val = -m[j - 1];
    for (std::size_t i = 1; i < j; ++i) val += static_cast<long>(r.v[i][j]) * l[i - 1];
    l[j - 1] = val;
  }
  for (long x : l)
    if (x < 0) return std::nullopt;
  for (std::size_t j : r.J)
    if (m[j - 1] < 0) return std::nullopt;
  return l;
}

ImPhiCombination im_phi_member(const LPSeed& s, const LaurentPoly& y, const Budget& budget) {
  const std::size_t n = s.rank(), N = s.nslots();
  if (y.nvars() != N) throw DomainError("element does not live in the seed's ring");
  if (y.depends_on(0)) throw DomainError("Im(phi) lies in the ring without " + s.active[0]);
  Condition12Report r = check_condition_1_2(s);
  if (!(r.holds[0] && r.holds[1] && r.holds[2])) throw DomainError("im_phi_member needs conditions (i)-(iii)");
  StandardBasis basis(s, true);
  ImPhiCombination out;
  std::map<StandardIndex, LaurentPoly> terms;
  out.verdict = eliminate(y, n, basis, budget.lower_steps, terms, out.steps, out.certificate, s.names());

  const std::size_t P = 2 * n + s.frozen.size();
  std::vector<int> target(N);
  for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<int>(i);
  for (std::size_t f = 0; f < s.frozen.size(); ++f) target[n + f] = static_cast<int>(2 * n + f);
  out.preimage = LaurentPoly(P);
  for (const auto& [a, c] : terms) {
    Exponents e(P, 0);
    for (std::size_t i = 0; i < n; ++i) (a[i] >= 0 ? e[i] : e[n + i]) = std::abs(a[i]);
    out.preimage += LaurentPoly::monomial(e) * c.remap(target, P);
  }
  return out;
}

CoprimeReport coprime_exchange_check(const LPSeed& s) {
  CoprimeReport out;
  const std::size_t n = s.rank();
  std::vector<bool> units(s.nslots(), false);
  for (std::size_t i = n; i < s.nslots(); ++i) units[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      LaurentPoly g = gcd(s.exchange[i], s.exchange[k]);
      bool unit = is_laurent_unit(g);
      if (unit)
        for (std::size_t j = 0; j < n; ++j) unit = unit && g.terms().begin()->first[j] == 0;
      const bool associate = unit_class(s.exchange[i], units) == unit_class(s.exchange[k], units);
      if (unit && !associate) continue;
      out.coprime = false;
      out.violations.push_back({i, k, g, associate});
    }
  }
  return out;
}

UpperInvarianceReport probe_upper_invariance(const LPSeed& s, std::size_t k, const std::vector<Sample>& samples) {
  if (k >= s.rank()) throw DomainError("mutation direction out of range");
  HatData h = exchange_laurent(s);
  require(s, h, false);
  UpperInvarianceReport out;
  out.k = k;
  LPSeed mu = mutate(s, h, k);
  HatData hmu = exchange_laurent(mu);
  std::string witness;
  if (!hat_is_exchange(mu, hmu, &witness)) {
    out.skipped = true;
    out.skip_reason = "condition (i) fails after mutation at " + s.active[k] + ": " + witness;
    return out;
  }
  Exponents down(s.nslots(), 0);
  down[k] = -1;
  const RationalFn old_in_new(h.hat[k] * LaurentPoly::monomial(down));
  for (const auto& sample : samples) {
    InvarianceEntry e;
    e.label = sample.label;
    e.in_s = upper_member(s, h, sample.value).member;
    RationalFn rewritten = substitute(sample.value, k, old_in_new);
    // Outside the Laurent ring of the mutated cluster means outside its upper
    // bound.
    auto y = rewritten.as_laurent();
    e.in_mutated = y && upper_member(mu, hmu, *y).member;
    ++out.compared;
    if (e.in_s != e.in_mutated)
      out.violations.push_back(sample.label + ": upper bound verdicts differ (" +
                               (e.in_s ? "member" : "non-member") + " before, " +
                               (e.in_mutated ? "member" : "non-member") + " after)");
    out.entries.push_back(std::move(e));
  }
  return out;
}

LowerUpperReport probe_lower_equals_upper(const LPSeed& s, const std::vector<Sample>& samples, const Budget& budget) {
  Condition12Report r = check_condition_1_2(s);
  if (!r.all()) throw DomainError("the lower and upper bounds are compared only under Condition 1.2");
  HatData h = exchange_laurent(s);
  LowerUpperReport out;
  for (const auto& sample : samples) {
    LowerUpperEntry e;
    e.label = sample.label;
    e.upper = upper_member(s, h, sample.value).member;
    // Members of U must be reached by elimination alone; for the rest the
    // inclusion L in U already certifies non-membership.
    LowerCombination lo = lower_member(s, sample.value, budget, !e.upper);
    e.lower = lo.verdict;
    e.steps = lo.steps;
    if (lo.verdict == LowerVerdict::BudgetExhausted) {
      ++out.exhausted;
    } else if ((lo.verdict == LowerVerdict::Member) == e.upper) {
      ++out.agree;
    } else {
      out.violations.push_back(sample.label + ": " + (e.upper ? "in the upper bound" : "outside the upper bound") +
                               " but lower_member says " + to_string(lo.verdict));
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

LPSeed reorder_active(const LPSeed& s, const std::vector<std::size_t>& order) {
  const std::size_t n = s.rank(), N = s.nslots();
  if (order.size() != n) throw DomainError("ordering has the wrong length");
  std::vector<int> target(N);
  std::iota(target.begin(), target.end(), 0);
  for (std::size_t i = 0; i < n; ++i) target[order[i]] = static_cast<int>(i);
  LPSeed out = s;
  for (std::size_t i = 0; i < n; ++i) {
    out.active[i] = s.active[order[i]];
    out.exchange[i] = s.exchange[order[i]].remap(target, N);
    out.expansion[i] = s.expansion[order[i]];
  }
  return out;
}

ClusterConditionReport cluster_condition_equivalence(const ClusterSeed& cs, const Budget& budget) {
  LPSeed lp = cluster_to_lp(cs, budget);
  ClusterConditionReport out;
  out.acyclic = is_acyclic(cs.B);
  out.coprime = coprime_exchange_check(lp).coprime;

  const std::size_t n = lp.rank();
  Condition12Report r;
  HatData h = exchange_laurent(lp);
  if (hat_is_exchange(lp, h, nullptr)) {
    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n <= 8) {
      do orders.push_back(order);
      while (std::next_permutation(order.begin(), order.end()));
    } else if (auto topo = acyclic_renumbering(cs.B)) {
      orders.emplace_back(topo->begin(), topo->end());
    }
    for (const auto& o : orders) {
      shape_conditions(reorder_active(lp, o), r);
      if (r.holds[1] && r.holds[2] && r.holds[3]) {
        out.condition = true;
        out.ordering = o;
        break;
      }
    }
  }
  return out;
}

}  // namespace lpalg
