#pragma once

namespace lpalg {

// Work limits for the semi-decision procedures. The LP_BUDGET environment
// variable, when set to a positive integer, replaces every default.
struct Budget {
  long irreducibility = 20000;  // Kronecker candidate factors tried
  long lower_steps = 10000;     // greedy eliminations in lower_member
  long orbit_nodes = 20000;     // distinct seeds kept by orbit
  long words = 1000000;         // mutation words visited by laurent checks

  static Budget from_env();
};

}  // namespace lpalg
