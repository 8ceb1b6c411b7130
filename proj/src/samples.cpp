#include "lpalg/samples.hpp"

#include <set>

namespace lpalg {

namespace {

void monomials(const std::vector<std::size_t>& vars, std::size_t degree, std::size_t from,
               std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == degree) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    cur.push_back(vars[i]);
    monomials(vars, degree, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Sample> cluster_samples(const LPSeed& s, std::size_t depth, std::size_t max_degree) {
  const LPSeed root = s.rerooted();
  const std::size_t n = s.rank();
  std::vector<Sample> out;
  std::set<LaurentPoly> seen;
  auto add = [&](std::string label, const LaurentPoly& value) {
    if (seen.insert(value).second) out.push_back({std::move(label), value});
  };

  std::vector<std::pair<LPSeed, MutationWord>> seeds{{root, {}}};
  for (std::size_t at = 0; at < seeds.size(); ++at) {
    if (seeds[at].second.size() >= depth) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!seeds[at].second.empty() && seeds[at].second.back() == k) continue;
      MutationWord w = seeds[at].second;
      w.push_back(k);
      seeds.emplace_back(mutate(seeds[at].first, k), std::move(w));
    }
  }

  for (const auto& [seed, word] : seeds) {
    std::string prefix = "[";
    for (std::size_t k : word) prefix += (prefix.size() > 1 ? "," : "") + s.active[k];
    prefix += "] ";
    std::vector<LaurentPoly> vars;
    for (std::size_t i = 0; i < n; ++i) {
      auto x = seed.expansion[i].as_laurent();
      if (!x) throw InternalError("cluster variable is not a Laurent polynomial in the initial cluster");
      vars.push_back(*x);
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t degree = 1; degree <= max_degree; ++degree) {
      std::vector<std::vector<std::size_t>> ms;
      std::vector<std::size_t> cur;
      monomials(idx, degree, 0, cur, ms);
      for (const auto& m : ms) {
        LaurentPoly value = LaurentPoly::constant(s.nslots(), 1);
        std::string label;
        for (std::size_t i : m) {
          value = value * vars[i];
          label += (label.empty() ? "" : "*") + seed.active[i];
        }
        add(prefix + label, value);
      }
    }
  }
  return out;
}

std::vector<Sample> inverse_samples(const LPSeed& s) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < s.rank(); ++i)
    out.push_back({"1/" + s.active[i], LaurentPoly::variable(s.nslots(), i, -1)});
  return out;
}

}  // namespace lpalg
