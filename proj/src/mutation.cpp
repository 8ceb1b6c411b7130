#include "lpalg/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lpalg {

namespace {

std::string fresh_name(const LPSeed& out, std::size_t k, const std::string& old) {
  const RationalFn& x = out.expansion[k];
  auto taken = [&](const std::string& name) {
    for (std::size_t i = 0; i < out.nslots(); ++i)
      if (i != k && (i < out.rank() ? out.active[i] : out.frozen[i - out.rank()]) == name) return true;
    return false;
  };
  if (x.den().is_one() && is_laurent_unit(x.num())) {
    const Exponents& e = x.num().terms().begin()->first;
    std::size_t nonzero = 0, at = 0;
    for (std::size_t r = 0; r < e.size(); ++r)
      if (e[r] != 0) ++nonzero, at = r;
    if (nonzero == 1 && e[at] == 1 && !taken(out.root_names[at])) return out.root_names[at];
  }
  std::string name = old + "'";
  while (taken(name)) name += "'";
  return name;
}

}  // namespace

LPSeed mutate(const LPSeed& s, std::size_t k) { return mutate(s, exchange_laurent(s), k); }

LPSeed mutate(const LPSeed& s, const HatData& h, std::size_t k) {
  const std::size_t n = s.rank(), N = s.nslots();
  if (k >= n) throw DomainError("mutation direction out of range");
  const LaurentPoly& hat_k = h.hat[k];
  Exponents down(N, 0);
  down[k] = -1;

  LPSeed out = s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || !s.exchange[i].depends_on(k)) continue;
    LaurentPoly D_full;
    try {
      D_full = hat_k.at_zero(i);
    } catch (const DomainError&) {
      throw InternalError("exchange Laurent polynomial has a negative power of a variable it must not contain");
    }
    if (D_full.is_zero()) throw InternalError("exchange Laurent polynomial vanishes at zero");
    const LaurentPoly N_k = D_full.shifted(down);  // slot k now holds x'_k

    LaurentPoly G(N);
    LaurentPoly power = LaurentPoly::constant(N, 1);
    int have = 0;
    for (auto& [e, c] : s.exchange[i].collect(k)) {
      while (have < e) {
        power = power * N_k;
        ++have;
      }
      G += c * power;
    }

    LaurentPoly D = monomial_content(D_full).second;
    LaurentPoly H = G;
    if (!D.is_constant()) {
      while (true) {
        LaurentPoly g = gcd(H, D);
        if (g.is_constant()) break;
        auto q = laurent_div(H, g);
        if (!q) throw InternalError("gcd does not divide its argument");
        H = std::move(*q);
      }
    }
    out.exchange[i] = monomial_content(H).second;
  }

  out.expansion[k] = evaluate(hat_k, s.expansion) / s.expansion[k];
  out.active[k] = fresh_name(out, k, s.active[k]);
  return out;
}

LPSeed mutate_word(const LPSeed& s, const MutationWord& w) {
  LPSeed cur = s;
  for (std::size_t k : w) cur = mutate(cur, k);
  return cur;
}

LPSeed canonicalize(const LPSeed& s) {
  LPSeed out = s;
  for (auto& F : out.exchange) F = sign_normalized(F);
  return out;
}

namespace {

std::vector<bool> seed_unit_slots(const LPSeed& s) {
  std::vector<bool> u(s.nslots(), false);
  for (std::size_t i = s.rank(); i < s.nslots(); ++i) u[i] = true;
  return u;
}

using ClassKey = std::pair<LaurentPoly, LaurentPoly>;

std::vector<ClassKey> cluster_classes(const LPSeed& s) {
  std::vector<ClassKey> out;
  for (std::size_t i = 0; i < s.rank(); ++i) out.push_back(unit_class(s.expansion[i], s.root_unit));
  return out;
}

struct IdKey {
  std::vector<ClassKey> cluster;
  std::vector<LaurentPoly> exchange;
  auto operator<=>(const IdKey&) const = default;
};

IdKey id_key(const LPSeed& s) {
  IdKey key{cluster_classes(s), {}};
  const auto units = seed_unit_slots(s);
  for (const auto& F : s.exchange) key.exchange.push_back(unit_class(F, units));
  return key;
}

std::vector<ClassKey> sorted_classes(const LPSeed& s) {
  auto c = cluster_classes(s);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

OrbitGraph orbit(const LPSeed& s, std::size_t depth, bool permutations, const Budget& budget) {
  OrbitGraph g;
  g.depth = depth;
  g.permutations = permutations;
  std::map<IdKey, std::size_t> by_key;
  std::map<std::vector<ClassKey>, std::vector<std::size_t>> buckets;

  auto find_or_insert = [&](const LPSeed& seed, std::size_t level, bool& inserted) -> std::size_t {
    inserted = false;
    if (permutations) {
      auto& bucket = buckets[sorted_classes(seed)];
      for (std::size_t idx : bucket)
        if (seeds_equivalent(g.nodes[idx], seed, true)) return idx;
      if (g.nodes.size() >= static_cast<std::size_t>(budget.orbit_nodes)) return SIZE_MAX;
      bucket.push_back(g.nodes.size());
    } else {
      IdKey key = id_key(seed);
      auto it = by_key.find(key);
      if (it != by_key.end()) return it->second;
      if (g.nodes.size() >= static_cast<std::size_t>(budget.orbit_nodes)) return SIZE_MAX;
      by_key.emplace(std::move(key), g.nodes.size());
    }
    g.nodes.push_back(canonicalize(seed));
    g.level.push_back(level);
    inserted = true;
    return g.nodes.size() - 1;
  };

  bool inserted = false;
  find_or_insert(s, 0, inserted);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t u = frontier.front();
    frontier.pop_front();
    if (g.level[u] >= depth) continue;
    HatData h = exchange_laurent(g.nodes[u]);
    for (std::size_t k = 0; k < g.nodes[u].rank(); ++k) {
      LPSeed next = mutate(g.nodes[u], h, k);
      std::size_t v = find_or_insert(next, g.level[u] + 1, inserted);
      if (v == SIZE_MAX) {
        g.truncated = true;
        continue;
      }
      g.edges.emplace_back(u, k, v);
      if (inserted) frontier.push_back(v);
    }
  }
  return g;
}

SeedProbeReport probe_cluster_determines_seed(const OrbitGraph& g) {
  SeedProbeReport r;
  const std::size_t m = g.nodes.size();
  if (m == 0) return r;
  const std::size_t n = g.nodes.front().rank();
  for (const auto& s : g.nodes)
    for (const auto& F : s.exchange) {
      bool free = true;
      for (std::size_t i = 0; i < s.rank(); ++i) free = free && !F.depends_on(i);
      r.adjacency_skipped = r.adjacency_skipped || free;
    }

  std::vector<std::vector<ClassKey>> classes;
  for (const auto& s : g.nodes) classes.push_back(cluster_classes(s));

  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      ++r.pairs;
      // Match v's variables against u's, up to units.
      std::vector<bool> used(n, false);
      std::size_t common = 0, unmatched_u = n;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!used[j] && classes[v][i] == classes[u][j]) {
            used[j] = true;
            ++common;
            break;
          }
        }
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) unmatched_u = j;

      if (common == n) {
        ++r.same_cluster;
        if (!seeds_equivalent(g.nodes[u], g.nodes[v], true))
          r.violations.push_back({"cluster-determines-seed", u, v,
                                  "same cluster up to units but the seeds are not equivalent"});
      } else if (common + 1 == n && !r.adjacency_skipped) {
        ++r.one_apart;
        LPSeed w = mutate(g.nodes[u], unmatched_u);
        if (!seeds_equivalent(w, g.nodes[v], true))
          r.violations.push_back({"n-1-common-variables", u, v,
                                  "n-1 common cluster variables but the seeds are not one mutation apart"});
      }
    }
  }
  return r;
}

}  // namespace lpalg
