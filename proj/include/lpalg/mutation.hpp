#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "lpalg/seed.hpp"

namespace lpalg {

using MutationWord = std::vector<std::size_t>;  // 0-based directions

LPSeed mutate(const LPSeed& s, std::size_t k);
// Reuses exchange data already computed for s.
LPSeed mutate(const LPSeed& s, const HatData& h, std::size_t k);
LPSeed mutate_word(const LPSeed& s, const MutationWord& w);
LPSeed canonicalize(const LPSeed& s);

struct OrbitGraph {
  std::vector<LPSeed> nodes;
  std::vector<std::size_t> level;  // BFS depth of each node
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // (u, k, v)
  std::size_t depth = 0;
  bool permutations = false;
  bool truncated = false;
};

OrbitGraph orbit(const LPSeed& s, std::size_t depth, bool permutations, const Budget& budget = Budget::from_env());

struct ProbeViolation {
  std::string claim;  // "cluster-determines-seed" or "n-1-common-variables"
  std::size_t u = 0, v = 0;
  std::string detail;
};

struct SeedProbeReport {
  std::size_t pairs = 0;
  std::size_t same_cluster = 0;
  std::size_t one_apart = 0;
  bool adjacency_skipped = false;  // some exchange polynomial is free of cluster variables
  std::vector<ProbeViolation> violations;
};

SeedProbeReport probe_cluster_determines_seed(const OrbitGraph& g);

}  // namespace lpalg
