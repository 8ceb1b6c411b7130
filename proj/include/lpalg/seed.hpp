#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lpalg/budget.hpp"
#include "lpalg/format.hpp"
#include "lpalg/irreducible.hpp"
#include "lpalg/rational.hpp"

namespace lpalg {

class InvalidSeed : public DomainError {
 public:
  using DomainError::DomainError;
};

// An LP seed. Ring slots are the active variables followed by the frozen ones;
// the slot order is the monomial order. Every slot also carries its expansion
// as a rational function in a fixed root ring, which is how cluster variables
// of different seeds are compared.
struct LPSeed {
  VarNames active;
  VarNames frozen;
  std::vector<LaurentPoly> exchange;  // one per active variable, over all slots

  VarNames root_names;
  std::vector<bool> root_unit;        // root slots that are invertible coefficients
  std::vector<RationalFn> expansion;  // one per slot, in the root ring
  bool unchecked = false;             // irreducibility not certified

  std::size_t rank() const { return active.size(); }
  std::size_t nslots() const { return active.size() + frozen.size(); }
  VarNames names() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  // A root seed: its expansions are its own variables.
  static LPSeed make(VarNames active, VarNames frozen, std::vector<LaurentPoly> exchange);
  LPSeed rerooted() const;
};

struct ExchangeCheck {
  bool self_dependent = false;
  bool negative_active_exponent = false;
  bool unit = false;
  std::vector<std::size_t> divisible_by;
  std::optional<IrreducibilityVerdict> irreducibility;  // strict mode only
};

struct ValidationReport {
  std::vector<std::string> errors;  // structural problems (names, sizes)
  std::vector<ExchangeCheck> exchange;
  bool strict = false;
  bool valid = false;
};

ValidationReport validate_seed(const LPSeed& s, bool strict, const Budget& budget = Budget::from_env());

struct HatData {
  std::vector<LaurentPoly> hat;
  Eigen::MatrixXi denom;  // denom(k, j) = a_{k,j}: hat_j = F_j / prod_k x_k^{a_{k,j}}
};

HatData exchange_laurent(const LPSeed& s);
std::vector<LaurentPoly> hat_to_exchange(const HatData& h, std::size_t rank);

// Unit-class representatives: an expansion (as numerator, denominator) or an
// exchange polynomial with its unit factor (sign and monomial in the unit
// slots) removed. Equal keys iff equal up to a unit.
std::pair<LaurentPoly, LaurentPoly> unit_class(const RationalFn& f, const std::vector<bool>& unit_slots);
LaurentPoly unit_class(const LaurentPoly& f, const std::vector<bool>& unit_slots);

struct Equivalence {
  std::vector<std::size_t> perm;  // active slot i of s2 corresponds to slot perm[i] of s1
  std::vector<RationalFn> x_units;  // x_{i;2} = x_units[i] * x_{perm(i);1}
  std::vector<LaurentPoly> f_units;  // F_{i;2} = f_units[i] * F_{perm(i);1}
};

std::optional<Equivalence> seeds_equivalent(const LPSeed& s1, const LPSeed& s2, bool allow_permutation);

LPSeed freeze(const LPSeed& s, std::size_t i);

}  // namespace lpalg
