#include "lpalg/budget.hpp"

#include <cstdlib>
#include <string>

namespace lpalg {

Budget Budget::from_env() {
  Budget b;
  const char* env = std::getenv("LP_BUDGET");
  if (!env) return b;
  try {
    long v = std::stol(env);
    if (v > 0) b.irreducibility = b.lower_steps = b.orbit_nodes = b.words = v;
  } catch (const std::exception&) {
    // Unparsable values leave the defaults in place.
  }
  return b;
}

}  // namespace lpalg
