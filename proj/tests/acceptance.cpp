// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "lpalg/bounds.hpp"
#include "lpalg/laurent.hpp"
#include "lpalg/samples.hpp"
#include "test_util.hpp"

namespace lpalg {
namespace {

using testing::equal_up_to_sign;
using testing::fixture_seed;
using testing::P;
using testing::Q;
using testing::upper_oracle;

// Collects failed checks; a criterion passes when none failed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  std::size_t count() const { return count_; }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (failures_.empty()) return std::to_string(count_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(count_) + " failed: " + failures_[0];
    if (failures_.size() > 1) out += " (+" + std::to_string(failures_.size() - 1) + " more)";
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

int cli_code(std::vector<std::string> args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

void ex2_6_exactness(Checks& c) {
  const LPSeed s = fixture_seed("ex2_6");
  const VarNames n = s.names();
  HatData h = exchange_laurent(s);
  c.expect(h.hat[0] == P("(b + 1)/c", n), "hat F_a");
  c.expect(h.hat[1] == P("a + c", n), "hat F_b");
  c.expect(h.hat[2] == P("(b + 1)/a", n), "hat F_c");
  LPSeed m = mutate(s, 0);
  const VarNames mn = m.names();
  c.expect(m.expansion[0] == Q("(b + 1)/(a*c)", s.root_names), "a' = (b + 1)/(ac)");
  c.expect(equal_up_to_sign(m.exchange[0], P("b + 1", mn)), "F'_a'");
  c.expect(equal_up_to_sign(m.exchange[1], P("a'*c^2 + 1", mn)), "F'_b");
  c.expect(equal_up_to_sign(m.exchange[2], P("b + 1", mn)), "F'_c");
}

void ex2_16_freezing(Checks& c) {
  LPSeed f = freeze(fixture_seed("ex2_6"), 2);
  const VarNames n = f.names();
  c.expect(f.active == VarNames{"a", "b"} && f.frozen == VarNames{"c"}, "variables");
  c.expect(f.exchange.size() == 2 && f.exchange[0] == P("(b + 1)/c", n), "F_a = (b + 1)/c");
  c.expect(f.exchange.size() == 2 && f.exchange[1] == P("a + c", n), "F_b = a + c");
  c.expect(seeds_equivalent(f, fixture_seed("ex2_16"), false).has_value(), "matches the ex2_16 fixture");
}

void ex2_24_rejection(Checks& c) {
  const auto doc = find_fixture("ex2_24")->seed();
  ClusterSeed s = cluster_from_json(doc);
  auto F = exchange_binomials(s);
  c.expect(F[0] == P("x2^3 + 1", s.initial) && F[1] == P("x1^3 + 1", s.initial), "binomials");
  for (std::size_t j = 0; j < 2; ++j) {
    IrreducibilityVerdict v = check_irreducible(F[j], 2, Budget::from_env().irreducibility);
    c.expect(v.kind == Irreducibility::Reducible, "binomial " + std::to_string(j + 1) + " reducible");
    const LaurentPoly want = P(j == 0 ? "x2 + 1" : "x1 + 1", s.initial);
    c.expect(v.witness && equal_up_to_sign(*v.witness, want), "witness of binomial " + std::to_string(j + 1));
  }
  bool rejected = false;
  try {
    cluster_to_lp(s);
  } catch (const ClusterRejected& e) {
    rejected = e.witness && equal_up_to_sign(*e.witness, P("x2 + 1", s.initial));
  }
  c.expect(rejected, "cluster_to_lp rejects with witness x2 + 1");
  c.expect(cli_code({"cluster", "to-lp", "--seed", "ex2_24"}) == 1, "cluster to-lp exits 1");
}

void ex4_11_mutation(Checks& c) {
  LPSeed m = mutate(fixture_seed("ex4_11"), 1);
  const VarNames n = m.names();
  c.expect(m.expansion[1] == Q("(a + c)/b", m.root_names), "d = (a + c)/b");
  c.expect(equal_up_to_sign(m.exchange[0], P("1 + b'", n)), "F_a = 1 + d");
  c.expect(equal_up_to_sign(m.exchange[1], P("a + c", n)), "F_d = a + c");
  c.expect(equal_up_to_sign(m.exchange[2], P("a + b' + 1", n)), "F_c = a + d + 1");
  Condition12Report r = check_condition_1_2(m);
  c.expect(!r.holds[0], "(i) fails");
  c.expect(r.witnesses[0].size() == 1 && r.witnesses[0][0].k == 2, "witness at c");
  c.expect(exchange_laurent(m).hat[2] == P("(a + b' + 1)/a", n), "hat F'_c = F'_c/a");
}

void ex4_24_condition(Checks& c) {
  const LPSeed s = fixture_seed("ex4_24");
  const VarNames n = s.names();
  Condition12Report r = check_condition_1_2(s);
  for (int i = 0; i < 4; ++i) c.expect(r.holds[i], "condition " + std::to_string(i + 1));
  c.expect(r.J == std::vector<std::size_t>{2}, "J = {c}");
  const VarNames pn = primed_names(s);
  c.expect(phi(s, P("b'", pn)) == P("c*d/b", n), "phi(b')");
  c.expect(phi(s, P("c'", pn)) == P("(b*d + 1)/c", n), "phi(c')");
  c.expect(phi(s, P("d'", pn)) == P("1/d", n), "phi(d')");
  c.expect(phi(s, P("b'*c'*d' - d", pn)) == P("1/b", n), "phi(b'c'd' - d)");
  auto d = im_phi_monomial_member(s, {0, 0, -1});
  c.expect(d && *d == std::vector<long>{0, 0, 1}, "1/d has l = (0,0,1)");
  auto b = im_phi_monomial_member(s, {-1, 0, 0});
  c.expect(b && *b == std::vector<long>{1, 1, 1}, "1/b has l = (1,1,1)");
}

void involutions(Checks& c) {
  std::vector<std::pair<std::string, LPSeed>> seeds;
  for (const char* name : {"ex2_6", "ex2_16", "ex4_11", "ex4_24"}) seeds.emplace_back(name, fixture_seed(name));
  // The trivial-coefficient binomials do not form an LP seed; the principal
  // coefficient version of the same matrix does.
  auto doc = find_fixture("ex2_24")->seed();
  doc["coeffs"] = "principal";
  seeds.emplace_back("ex2_24 (principal)", cluster_to_lp(cluster_from_json(doc)));
  for (const auto& [name, s] : seeds) {
    for (std::size_t k = 0; k < s.rank(); ++k) {
      LPSeed back = mutate(mutate(s, k), k);
      c.expect(seeds_equivalent(s, back, false).has_value(), name + " mu_" + s.active[k] + " twice");
      c.expect(back.expansion == s.expansion, name + " cluster after mu_" + s.active[k] + " twice");
    }
  }
  c.expect(c.count() >= 15, "at least 15 assertions");
}

void laurent_suite(Checks& c) {
  for (const char* name : {"ex2_6", "ex4_24"}) {
    LaurentCheckReport r = check_laurent_phenomenon(fixture_seed(name), 4);
    c.expect(!r.truncated, std::string(name) + " not truncated");
    c.expect(r.all_laurent(), std::string(name) + " all Laurent");
    c.expect(cli_code({"laurent-check", "--seed", name, "--max-len", "4"}) == 0, std::string(name) + " cli exit 0");
  }
}

void orbit_probes(Checks& c) {
  for (auto [name, depth] : {std::pair{"ex2_6", 3}, std::pair{"ex4_24", 2}}) {
    OrbitGraph g = orbit(fixture_seed(name), depth, true);
    c.expect(!g.truncated, std::string(name) + " orbit complete");
    SeedProbeReport r = probe_cluster_determines_seed(g);
    c.expect(r.pairs == g.nodes.size() * (g.nodes.size() - 1) / 2, std::string(name) + " all pairs scanned");
    c.expect(!r.adjacency_skipped, std::string(name) + " adjacency claim checked");
    c.expect(r.violations.empty(), std::string(name) + " no violations");
  }
}

void basis_suite(Checks& c) {
  BasisCheckReport r = basis_check(fixture_seed("ex4_24"), 2);
  c.expect(r.indices == 625, "625 indices");
  c.expect(r.collisions.empty(), "injective");
  c.expect(r.mismatches.empty(), "agrees with the expansions");
}

void membership_duality(Checks& c) {
  const LPSeed s = fixture_seed("ex4_24");
  std::vector<Sample> samples = cluster_samples(s, 2, 3);
  LowerUpperReport r = probe_lower_equals_upper(s, samples);
  c.expect(!samples.empty(), "samples built");
  c.expect(r.exhausted == 0, "no budget exhaustion");
  c.expect(r.agree == samples.size(), std::to_string(r.agree) + "/" + std::to_string(samples.size()) + " agree");
  c.expect(r.violations.empty(), r.violations.empty() ? "" : r.violations[0]);
}

void upper_invariance(Checks& c) {
  const LPSeed s = fixture_seed("ex4_24");
  std::vector<Sample> samples = cluster_samples(s, 2, 3);
  for (auto& x : inverse_samples(s)) samples.push_back(x);
  std::size_t ran = 0, skipped = 0;
  for (std::size_t k = 0; k < s.rank(); ++k) {
    UpperInvarianceReport r = probe_upper_invariance(s, k, samples);
    const bool loses = !check_condition_1_2(mutate(s, k)).holds[0];
    c.expect(r.skipped == loses, "direction " + s.active[k] + " skipped iff (i) is lost");
    if (r.skipped) {
      ++skipped;
      continue;
    }
    ++ran;
    c.expect(r.compared == samples.size(), "direction " + s.active[k] + " compared every sample");
    c.expect(r.violations.empty(), "direction " + s.active[k] + (r.violations.empty() ? "" : ": " + r.violations[0]));
  }
  c.expect(ran > 0, "some direction ran");
}

// Random rank 2 seeds F_1 = p(x2), F_2 = q(x1) that validate strictly and
// have hat F = F.
std::vector<LPSeed> random_rank_two(std::mt19937& rng, std::size_t count) {
  const VarNames n{"x1", "x2"};
  std::uniform_int_distribution<int> deg(1, 3), co(-2, 2);
  std::vector<LPSeed> out;
  auto univariate = [&](std::size_t var) {
    LaurentPoly p = LaurentPoly::constant(2, co(rng) >= 0 ? 1 : -1);
    const int d = deg(rng);
    for (int e = 1; e <= d; ++e) {
      int c = co(rng);
      if (e == d && c == 0) c = 1;
      p += LaurentPoly::variable(2, var, e) * Integer(c);
    }
    return p;
  };
  while (out.size() < count) {
    LPSeed s = LPSeed::make(n, {}, {univariate(1), univariate(0)});
    if (!validate_seed(s, true).valid) continue;
    if (exchange_laurent(s).hat != s.exchange) continue;
    out.push_back(std::move(s));
  }
  return out;
}

void oracle_equivalence(Checks& c) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ex(-2, 2), co(-2, 2);
  std::size_t members = 0, nonmembers = 0;
  for (const LPSeed& s : random_rank_two(rng, 20)) {
    std::vector<Sample> pool = cluster_samples(s, 2, 2);
    std::vector<LaurentPoly> samples;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    while (samples.size() < 30) {
      switch (samples.size() % 3) {
        case 0:
          samples.push_back(pool[pick(rng)].value);
          break;
        case 1: {
          // a member times a random Laurent monomial
          Exponents e{ex(rng), ex(rng)};
          samples.push_back(pool[pick(rng)].value * LaurentPoly::monomial(e));
          break;
        }
        default: {
          LaurentPoly y = testing::random_poly(rng, 2, 3, -2, 2);
          if (y.is_zero()) continue;
          samples.push_back(y + pool[pick(rng)].value * Integer(co(rng)));
        }
      }
      if (samples.back().is_zero()) samples.pop_back();
    }
    for (const auto& y : samples) {
      const bool got = upper_member(s, y).member, want = upper_oracle(s, y);
      (want ? members : nonmembers) += 1;
      c.expect(got == want, to_string(y, s.names()) + " in seed " + to_string(s.exchange[0], s.names()) + ", " +
                                to_string(s.exchange[1], s.names()));
    }
  }
  c.expect(members > 0 && nonmembers > 0, "both verdicts occur");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Checks&)> run;
};

}  // namespace
}  // namespace lpalg

int main() {
  using namespace lpalg;
  const std::vector<Criterion> criteria{
      {1, "ex2_6 hat and mutation", 1, ex2_6_exactness},
      {2, "ex2_16 freezing", 1, ex2_16_freezing},
      {3, "ex2_24 reducible binomials rejected", 1, ex2_24_rejection},
      {4, "ex4_11 mutation loses hat F = F", 1, ex4_11_mutation},
      {5, "ex4_24 leading-term conditions, phi and Im(phi)", 1, ex4_24_condition},
      {6, "mutation involution on all fixtures", 5, involutions},
      {7, "Laurent phenomenon to length 4", 60, laurent_suite},
      {8, "orbit probes: cluster determines seed", 120, orbit_probes},
      {9, "standard monomial leading terms, radius 2", 30, basis_suite},
      {10, "lower bound equals upper bound on samples", 120, membership_duality},
      {11, "upper bound invariant under mutation", 120, upper_invariance},
      {12, "upper_member against the intersection oracle", 60, oracle_equivalence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Checks checks;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = error.empty() && checks.ok() && in_time;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  ["
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
              << " s]  " << (error.empty() ? checks.summary() : "exception: " + error)
              << (in_time ? "" : "  (over time limit)") << "\n";
  }
  return failed == 0 ? 0 : 1;
}
