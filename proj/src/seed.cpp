#include "lpalg/seed.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lpalg {

VarNames LPSeed::names() const {
  VarNames n = active;
  n.insert(n.end(), frozen.begin(), frozen.end());
  return n;
}

std::optional<std::size_t> LPSeed::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i] == name) return i;
  for (std::size_t i = 0; i < frozen.size(); ++i)
    if (frozen[i] == name) return active.size() + i;
  return std::nullopt;
}

LPSeed LPSeed::make(VarNames active, VarNames frozen, std::vector<LaurentPoly> exchange) {
  LPSeed s;
  s.active = std::move(active);
  s.frozen = std::move(frozen);
  s.exchange = std::move(exchange);
  return s.rerooted();
}

LPSeed LPSeed::rerooted() const {
  LPSeed s = *this;
  s.root_names = names();
  const std::size_t n = nslots();
  s.root_unit.assign(n, false);
  s.expansion.clear();
  for (std::size_t i = 0; i < n; ++i) {
    s.root_unit[i] = i >= rank();
    s.expansion.push_back(RationalFn::variable(n, i));
  }
  return s;
}

ValidationReport validate_seed(const LPSeed& s, bool strict, const Budget& budget) {
  ValidationReport r;
  r.strict = strict;
  const std::size_t n = s.rank(), N = s.nslots();
  std::set<std::string> seen;
  for (const auto& name : s.names()) {
    if (!is_valid_name(name)) r.errors.push_back("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) r.errors.push_back("duplicate variable name '" + name + "'");
  }
  if (n == 0) r.errors.push_back("seed has no active variables");
  if (s.exchange.size() != n) r.errors.push_back("need exactly one exchange polynomial per active variable");
  if (s.expansion.size() != N || s.root_unit.size() != s.root_names.size())
    r.errors.push_back("expansion data does not match the seed's slots");
  for (const auto& p : s.exchange)
    if (p.nvars() != N) r.errors.push_back("exchange polynomial over the wrong ring");
  if (!r.errors.empty()) return r;

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly& F = s.exchange[i];
    ExchangeCheck c;
    if (F.is_zero()) {
      c.unit = true;  // zero is reported with the units: it cannot be an exchange polynomial
    } else {
      c.self_dependent = F.depends_on(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (F.min_exponent(j) < 0) c.negative_active_exponent = true;
        if (F.min_exponent(j) > 0) c.divisible_by.push_back(j);
      }
      c.unit = is_laurent_unit(monomial_content(F, n, N).second);
    }
    ok = ok && !c.self_dependent && !c.negative_active_exponent && !c.unit && c.divisible_by.empty();
    if (strict && !F.is_zero() && !c.negative_active_exponent) {
      c.irreducibility = check_irreducible(F, n, budget.irreducibility);
      ok = ok && c.irreducibility->kind == Irreducibility::Irreducible;
    }
    r.exchange.push_back(std::move(c));
  }
  r.valid = ok;
  return r;
}

namespace {

void require_structurally_valid(const LPSeed& s) {
  ValidationReport r = validate_seed(s, false);
  if (!r.errors.empty()) throw InvalidSeed(r.errors.front());
  const VarNames names = s.names();
  for (std::size_t i = 0; i < r.exchange.size(); ++i) {
    const ExchangeCheck& c = r.exchange[i];
    const std::string who = "F_" + s.active[i];
    if (c.self_dependent) throw InvalidSeed(who + " depends on " + s.active[i]);
    if (c.negative_active_exponent) throw InvalidSeed(who + " has a negative exponent on an active variable");
    if (c.unit) throw InvalidSeed(who + " is a unit");
    if (!c.divisible_by.empty()) throw InvalidSeed(who + " is divisible by " + names[c.divisible_by.front()]);
  }
}

LaurentPoly strip_unit_monomials(const LaurentPoly& p, const std::vector<bool>& unit_slots) {
  if (p.is_zero()) return p;
  Exponents shift(p.nvars(), 0);
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (unit_slots[i]) shift[i] = -p.min_exponent(i);
  return p.shifted(shift);
}

// x_k <- F_k * x_k, where slot k now stands for (x'_k)^{-1}.
LaurentPoly substitute_scaled(const LaurentPoly& F, std::size_t k, const LaurentPoly& Fk) {
  const std::size_t N = F.nvars();
  LaurentPoly value = Fk * LaurentPoly::variable(N, k);
  LaurentPoly out(N);
  LaurentPoly power = LaurentPoly::constant(N, 1);
  int have = 0;
  for (auto& [e, c] : F.collect(k)) {
    while (have < e) {
      power = power * value;
      ++have;
    }
    out += c * power;
  }
  return out;
}

}  // namespace

HatData exchange_laurent(const LPSeed& s) {
  require_structurally_valid(s);
  const std::size_t n = s.rank();
  HatData h;
  h.denom = Eigen::MatrixXi::Zero(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly& Fj = s.exchange[j];
    Exponents shift(s.nslots(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      LaurentPoly S = Fj.depends_on(k) ? substitute_scaled(Fj, k, s.exchange[k]) : Fj;
      int a = divisibility_order(S, s.exchange[k]);
      h.denom(k, j) = a;
      shift[k] = -a;
    }
    h.hat.push_back(Fj.shifted(shift));
  }
  return h;
}

std::vector<LaurentPoly> hat_to_exchange(const HatData& h, std::size_t rank) {
  std::vector<LaurentPoly> out;
  for (const auto& p : h.hat) out.push_back(monomial_content(p, 0, rank).second);
  return out;
}

std::pair<LaurentPoly, LaurentPoly> unit_class(const RationalFn& f, const std::vector<bool>& unit_slots) {
  return {sign_normalized(strip_unit_monomials(f.num(), unit_slots)), strip_unit_monomials(f.den(), unit_slots)};
}

LaurentPoly unit_class(const LaurentPoly& f, const std::vector<bool>& unit_slots) {
  return sign_normalized(strip_unit_monomials(f, unit_slots));
}

namespace {

// r with a = r * b, if r is a unit of the coefficient ring.
std::optional<RationalFn> unit_ratio(const RationalFn& a, const RationalFn& b, const std::vector<bool>& unit_slots) {
  if (a.num().size() != b.num().size() || a.den().size() != b.den().size()) return std::nullopt;
  RationalFn r = a / b;
  if (!r.num().is_monomial() || !r.den().is_monomial()) return std::nullopt;
  const auto& [en, cn] = *r.num().terms().begin();
  const auto& [ed, cd] = *r.den().terms().begin();
  if (abs(cn) != 1 || cd != 1) return std::nullopt;
  for (std::size_t i = 0; i < en.size(); ++i)
    if ((en[i] != 0 || ed[i] != 0) && !unit_slots[i]) return std::nullopt;
  return r;
}

// Maps s2's root ring onto s1's by name; absent when they differ.
std::optional<std::vector<int>> root_map(const LPSeed& s1, const LPSeed& s2) {
  if (s1.root_names.size() != s2.root_names.size()) return std::nullopt;
  std::vector<int> m(s2.root_names.size(), -1);
  for (std::size_t i = 0; i < s2.root_names.size(); ++i) {
    auto it = std::find(s1.root_names.begin(), s1.root_names.end(), s2.root_names[i]);
    if (it == s1.root_names.end()) return std::nullopt;
    m[i] = static_cast<int>(it - s1.root_names.begin());
  }
  return m;
}

RationalFn remap(const RationalFn& f, const std::vector<int>& m) {
  return normalize_fraction(f.num().remap(m, m.size()), f.den().remap(m, m.size()));
}

}  // namespace

std::optional<Equivalence> seeds_equivalent(const LPSeed& s1, const LPSeed& s2, bool allow_permutation) {
  const std::size_t n = s1.rank();
  if (s2.rank() != n || s1.frozen.size() != s2.frozen.size()) return std::nullopt;
  auto rm = root_map(s1, s2);
  if (!rm) return std::nullopt;
  std::vector<bool> units = s1.root_unit;
  for (std::size_t i = 0; i < rm->size(); ++i)
    if (s2.root_unit[i]) units[(*rm)[i]] = true;

  // Seed-ring slot maps: s2 frozen slot -> s1 frozen slot, by name.
  const std::size_t N = s1.nslots();
  std::vector<int> slot(N, -1);
  for (std::size_t f = 0; f < s2.frozen.size(); ++f) {
    auto it = std::find(s1.frozen.begin(), s1.frozen.end(), s2.frozen[f]);
    if (it == s1.frozen.end()) return std::nullopt;
    slot[n + f] = static_cast<int>(n + (it - s1.frozen.begin()));
  }
  std::vector<bool> seed_units(N, false);
  for (std::size_t i = n; i < N; ++i) seed_units[i] = true;

  std::vector<RationalFn> x2;
  bool identity_root = true;
  for (std::size_t i = 0; i < rm->size(); ++i) identity_root = identity_root && (*rm)[i] == static_cast<int>(i);
  for (const auto& e : s2.expansion) x2.push_back(identity_root ? e : remap(e, *rm));
  for (std::size_t f = n; f < N; ++f) {
    if (!unit_ratio(x2[f], s1.expansion[slot[f]], units)) return std::nullopt;
  }

  // candidate[i]: s1 slots j whose cluster variable matches s2's slot i.
  std::vector<std::vector<std::pair<std::size_t, RationalFn>>> candidate(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!allow_permutation && i != j) continue;
      if (auto r = unit_ratio(x2[i], s1.expansion[j], units)) candidate[i].emplace_back(j, *r);
    }
    if (candidate[i].empty()) return std::nullopt;
  }

  Equivalence eq;
  eq.perm.assign(n, 0);
  eq.x_units.assign(n, RationalFn());
  eq.f_units.assign(n, LaurentPoly());
  std::vector<bool> used(n, false);
  std::vector<LaurentPoly> f1_class(n);
  for (std::size_t j = 0; j < n; ++j) f1_class[j] = unit_class(s1.exchange[j], seed_units);

  auto exchange_matches = [&](std::size_t i, std::size_t j, const std::vector<std::size_t>& perm) {
    std::vector<int> m = slot;
    for (std::size_t a = 0; a < n; ++a) m[a] = static_cast<int>(perm[a]);
    LaurentPoly f2 = s2.exchange[i].remap(m, N);
    if (unit_class(f2, seed_units) != f1_class[j]) return std::optional<LaurentPoly>();
    return laurent_div(f2, s1.exchange[j]);
  };

  // Cluster matching by backtracking; exchange polynomials need the full
  // permutation, so they are checked once a complete assignment exists.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a) {
        auto u = exchange_matches(a, eq.perm[a], eq.perm);
        if (!u) return false;
        eq.f_units[a] = *u;
      }
      return true;
    }
    for (const auto& [j, r] : candidate[i]) {
      if (used[j]) continue;
      used[j] = true;
      eq.perm[i] = j;
      eq.x_units[i] = r;
      if (search(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return eq;
}

LPSeed freeze(const LPSeed& s, std::size_t i) {
  if (i >= s.rank()) throw DomainError("freeze: variable is not active");
  HatData h = exchange_laurent(s);
  const std::size_t n = s.rank(), N = s.nslots();
  std::vector<int> slot(N);
  for (std::size_t t = 0; t < N; ++t) slot[t] = t < i ? t : static_cast<int>(t) - 1;
  slot[i] = static_cast<int>(N - 1);

  LPSeed out;
  for (std::size_t t = 0; t < n; ++t)
    if (t != i) out.active.push_back(s.active[t]);
  out.frozen = s.frozen;
  out.frozen.push_back(s.active[i]);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    Exponents e(N, 0);
    e[i] = -h.denom(i, j);
    out.exchange.push_back(s.exchange[j].shifted(e).remap(slot, N));
  }
  out.root_names = s.root_names;
  out.root_unit = s.root_unit;
  out.expansion.resize(N);
  for (std::size_t t = 0; t < N; ++t) out.expansion[slot[t]] = s.expansion[t];
  // The frozen variable becomes a unit; record it when it is a root variable.
  const RationalFn& x = s.expansion[i];
  if (x.den().is_one() && x.num().is_monomial() && is_laurent_unit(x.num())) {
    const Exponents& e = x.num().terms().begin()->first;
    int nonzero = 0;
    std::size_t at = 0;
    for (std::size_t r = 0; r < e.size(); ++r)
      if (e[r] != 0) ++nonzero, at = r;
    if (nonzero == 1 && e[at] == 1) out.root_unit[at] = true;
  }
  out.unchecked = s.unchecked;
  return out;
}

}  // namespace lpalg
