#pragma once

#include <vector>

#include "lpalg/bounds.hpp"

namespace lpalg {

// Cluster variables of every seed reachable from s by at most `depth`
// mutations, and the cluster monomials of degree 2..max_degree of each such
// seed, all expanded in the cluster of s. Duplicates are dropped.
std::vector<Sample> cluster_samples(const LPSeed& s, std::size_t depth, std::size_t max_degree);

// x_i^{-1} for every active variable.
std::vector<Sample> inverse_samples(const LPSeed& s);

}  // namespace lpalg
