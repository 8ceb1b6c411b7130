#pragma once

#include <optional>
#include <string>

#include "lpalg/poly.hpp"

namespace lpalg {

enum class Irreducibility { Irreducible, Reducible, Unit, Unknown };

struct IrreducibilityVerdict {
  Irreducibility kind = Irreducibility::Unknown;
  std::optional<LaurentPoly> witness;  // a proper factor when Reducible
  std::string reason;
};

const char* to_string(Irreducibility k);

// Heuristic irreducibility test in Z[frozen^{+-1}][active]. Slots at index
// >= nactive are frozen and their monomials count as units. `budget` bounds the
// number of candidate factors tried.
IrreducibilityVerdict check_irreducible(const LaurentPoly& p, std::size_t nactive, long budget);

}  // namespace lpalg
