#pragma once

#include <vector>

#include "lpalg/mutation.hpp"

namespace lpalg {

struct ExpansionReport {
  MutationWord word;
  std::vector<RationalFn> expansion;  // every cluster variable, in the initial cluster
  std::vector<bool> laurent;          // denominator is a monomial
};

struct LaurentCheckReport {
  std::vector<ExpansionReport> words;
  bool truncated = false;
  bool all_laurent() const;
};

RationalFn expand_in_initial(const LPSeed& s0, const MutationWord& w, std::size_t i);

// All words of length <= max_len without immediate repeats, depth first.
LaurentCheckReport check_laurent_phenomenon(const LPSeed& s0, std::size_t max_len,
                                            const Budget& budget = Budget::from_env());

}  // namespace lpalg
