#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpalg/cluster.hpp"
#include "lpalg/mutation.hpp"

namespace lpalg {

// Slots [0, n) of a seed are active; the leading part of p is the sum of the
// terms whose active exponents are lexicographically first, with its active
// monomial split off. The coefficient lives in R = Z[frozen^{+-1}].
struct LeadingPart {
  Exponents active;     // length n
  LaurentPoly coeff;    // active exponents all zero
  LaurentPoly terms() const;  // active monomial times coeff
};
LeadingPart leading_part(const LaurentPoly& p, std::size_t n);

struct ConditionWitness {
  std::size_t k = 0;
  std::string detail;
};

// Conditions (i)-(iv), indexed 0-3.
struct Condition12Report {
  std::array<bool, 4> holds{};
  std::array<std::vector<ConditionWitness>, 4> witnesses;
  std::vector<LaurentPoly> M;  // leading part of each F_k
  std::vector<LaurentPoly> f;  // F_k - M_k
  std::vector<Exponents> v;    // active exponents of M_k
  std::vector<std::size_t> J;  // k >= 1 with x_1 absent from F_k
  std::vector<std::optional<std::size_t>> tail_index;  // index i used for (iv)
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

Condition12Report check_condition_1_2(const LPSeed& s);

using StandardIndex = std::vector<int>;

// x^(a) expanded in the cluster; needs (i).
LaurentPoly standard_monomial_value(const LPSeed& s, const StandardIndex& a);
// The first monomial of x^(a), computed without expanding; needs (i) and (ii).
LaurentMonomial leading_index_map(const LPSeed& s, const StandardIndex& a);

struct BasisCheckReport {
  std::size_t indices = 0;
  std::vector<std::pair<StandardIndex, StandardIndex>> collisions;  // same leading monomial
  std::vector<StandardIndex> mismatches;  // map disagrees with the expansion
  bool ok() const { return collisions.empty() && mismatches.empty(); }
};

// Every a with |a_i| <= radius: leading_index_map is injective and equals the
// first monomial of the full expansion.
BasisCheckReport basis_check(const LPSeed& s, int radius);

enum class LowerVerdict { Member, NonMember, BudgetExhausted };
const char* to_string(LowerVerdict v);

struct LowerCombination {
  LowerVerdict verdict = LowerVerdict::BudgetExhausted;
  std::map<StandardIndex, LaurentPoly> terms;  // coefficients in R
  long steps = 0;
  std::string certificate;  // why a non-member was rejected
};

// Greedy leading-term elimination against the standard monomial basis. With
// `upper_certificate`, an element outside the upper bound is rejected up
// front, since the lower bound is contained in it.
LowerCombination lower_member(const LPSeed& s, const LaurentPoly& y, const Budget& budget = Budget::from_env(),
                              bool upper_certificate = true);

struct UpperDirection {
  std::size_t j = 0;
  int max_pole = 0;                // largest m with c_{-m} != 0
  std::optional<int> failing_pole;  // first m with hat F_j^m not dividing c_{-m}
};

struct UpperVerdict {
  bool member = true;
  std::vector<UpperDirection> directions;
};

UpperVerdict upper_member(const LPSeed& s, const LaurentPoly& y);
UpperVerdict upper_member(const LPSeed& s, const HatData& h, const LaurentPoly& y);

// Terms of y with the least power of x_1.
LaurentPoly leading_term(const LaurentPoly& y);

// Ring for phi's domain: active slots, then one primed slot per active
// variable, then the frozen slots.
VarNames primed_names(const LPSeed& s);
LaurentPoly phi(const LPSeed& s, const LaurentPoly& expr);

// l over slots 1..n-1 with prod W_j^{l_j} = x^m, where W_j = M_j / x_j; m is
// indexed like l. Absent when x^m lies outside the monoid W.
std::optional<std::vector<long>> im_phi_monomial_member(const LPSeed& s, const std::vector<int>& m);

struct ImPhiCombination {
  LowerVerdict verdict = LowerVerdict::BudgetExhausted;
  LaurentPoly preimage;  // over primed_names(s), standard in x_2, x'_2, ...
  long steps = 0;
  std::string certificate;
};

// Semi-decision for y in Im(phi) by leading-term elimination with the phi
// images of standard monomials; needs (i)-(iii).
ImPhiCombination im_phi_member(const LPSeed& s, const LaurentPoly& y, const Budget& budget = Budget::from_env());

struct CoprimeReport {
  bool coprime = true;
  struct Pair {
    std::size_t i = 0, k = 0;
    LaurentPoly gcd;
    bool associate = false;  // F_i = unit * F_k
  };
  std::vector<Pair> violations;
};

CoprimeReport coprime_exchange_check(const LPSeed& s);

struct Sample {
  std::string label;
  LaurentPoly value;  // in the cluster of the seed the samples were built for
};

struct InvarianceEntry {
  std::string label;
  bool in_s = false, in_mutated = false;
};

struct UpperInvarianceReport {
  std::size_t k = 0;
  bool skipped = false;  // mutated seed loses condition (i)
  std::string skip_reason;
  std::vector<InvarianceEntry> entries;
  std::size_t compared = 0;
  std::vector<std::string> violations;
};

UpperInvarianceReport probe_upper_invariance(const LPSeed& s, std::size_t k, const std::vector<Sample>& samples);

struct LowerUpperEntry {
  std::string label;
  bool upper = false;
  LowerVerdict lower = LowerVerdict::BudgetExhausted;
  long steps = 0;
};

struct LowerUpperReport {
  std::vector<LowerUpperEntry> entries;
  std::size_t agree = 0, exhausted = 0;
  std::vector<std::string> violations;
};

LowerUpperReport probe_lower_equals_upper(const LPSeed& s, const std::vector<Sample>& samples,
                                          const Budget& budget = Budget::from_env());

struct ClusterConditionReport {
  bool condition = false;  // Condition 1.2 under some ordering of the cluster
  std::optional<std::vector<std::size_t>> ordering;
  bool acyclic = false;
  bool coprime = false;
  bool equivalent() const { return condition == (acyclic && coprime); }
};

ClusterConditionReport cluster_condition_equivalence(const ClusterSeed& cs, const Budget& budget = Budget::from_env());

// The seed with active slot i holding old active slot order[i].
LPSeed reorder_active(const LPSeed& s, const std::vector<std::size_t>& order);

}  // namespace lpalg
