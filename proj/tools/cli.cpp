#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "lpalg/bounds.hpp"
#include "lpalg/fixtures.hpp"
#include "lpalg/laurent.hpp"
#include "lpalg/samples.hpp"
#include "lpalg/seed_io.hpp"

namespace lpalg::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seed;
  std::string k;
  std::string word;
  std::string expr;
  std::string which = "upper";
  std::string kind;
  std::string show;
  std::size_t depth = 2;
  std::size_t max_len = 4;
  std::size_t degree = 3;
  int radius = 2;
  bool strict = false;
  bool permutations = false;
  bool probe = false;
  bool json = false;
  std::optional<std::string> fixtures_dir;
};

struct Reply {
  Json report;
  int code = 0;
};

// Text form of a report: one "key: value" line per scalar, nested blocks
// indented by two spaces.
bool is_flat(const Json& v) {
  if (v.is_array()) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  }
  return !v.is_object() || v.empty();
}

std::string flat(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + flat(v[i]);
    return out + "]";
  }
  return v.dump();
}

void render(const Json& j, std::ostream& out, const std::string& pad) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (is_flat(v)) {
        out << pad << key << ": " << flat(v) << "\n";
      } else {
        out << pad << key << ":\n";
        render(v, out, pad + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        out << pad << "- " << flat(v) << "\n";
      } else {
        out << pad << "-\n";
        render(v, out, pad + "  ");
      }
    }
  } else {
    out << pad << flat(j) << "\n";
  }
}

std::size_t resolve_index(const VarNames& vars, const std::string& k) {
  if (k.empty()) throw UsageError("missing direction (-k)");
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == k) return i;
  if (std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::size_t idx = std::stoul(k);
    if (idx >= 1 && idx <= vars.size()) return idx - 1;
  }
  throw UsageError("unknown active variable '" + k + "'");
}

MutationWord parse_word(const VarNames& vars, const std::string& text) {
  MutationWord w;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty()) w.push_back(resolve_index(vars, token));
  }
  return w;
}

std::string word_string(const VarNames& vars, const MutationWord& w) {
  std::string out;
  for (std::size_t k : w) out += (out.empty() ? "" : ",") + vars[k];
  return out;
}

nlohmann::json seed_document(const Options& o) {
  if (o.seed.empty()) throw UsageError("missing --seed");
  return resolve_seed_document(o.seed, o.fixtures_dir);
}

LPSeed load_lp(const Options& o) {
  nlohmann::json doc = seed_document(o);
  if (doc.is_object() && doc.contains("B")) throw UsageError("'" + o.seed + "' is a cluster seed; use the cluster verbs");
  return seed_from_json(doc);
}

ClusterSeed load_cluster(const Options& o) {
  nlohmann::json doc = seed_document(o);
  if (!doc.is_object() || !doc.contains("B")) throw UsageError("'" + o.seed + "' is not a cluster seed");
  return cluster_from_json(doc);
}

Json expansion_json(const LPSeed& s) {
  Json out = Json::object();
  for (std::size_t i = 0; i < s.rank(); ++i) out[s.active[i]] = to_string(s.expansion[i], s.root_names);
  return out;
}

Json string_list(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

// ---- LP verbs ---------------------------------------------------------------

Reply cmd_validate(const Options& o) {
  LPSeed s = load_lp(o);
  ValidationReport r = validate_seed(s, o.strict);
  const VarNames names = s.names();
  Reply out;
  out.report["valid"] = r.valid;
  out.report["strict"] = r.strict;
  out.report["errors"] = string_list(r.errors);
  Json ex = Json::object();
  for (std::size_t i = 0; i < r.exchange.size(); ++i) {
    const ExchangeCheck& c = r.exchange[i];
    Json e;
    e["polynomial"] = to_string(s.exchange[i], names);
    e["depends_on_own_variable"] = c.self_dependent;
    e["negative_active_exponent"] = c.negative_active_exponent;
    e["unit"] = c.unit;
    Json div = Json::array();
    for (std::size_t j : c.divisible_by) div.push_back(names[j]);
    e["divisible_by"] = div;
    if (c.irreducibility) {
      e["irreducibility"] = to_string(c.irreducibility->kind);
      if (c.irreducibility->witness) e["witness"] = to_string(*c.irreducibility->witness, names);
      if (!c.irreducibility->reason.empty()) e["reason"] = c.irreducibility->reason;
    }
    ex[s.active[i]] = e;
  }
  out.report["exchange"] = ex;
  out.code = r.valid ? 0 : 1;
  return out;
}

Reply cmd_hat(const Options& o) {
  LPSeed s = load_lp(o);
  HatData h = exchange_laurent(s);
  const VarNames names = s.names();
  Reply out;
  Json hat = Json::object(), den = Json::object();
  for (std::size_t j = 0; j < s.rank(); ++j) {
    hat[s.active[j]] = to_string(h.hat[j], names);
    Exponents e(s.nslots(), 0);
    for (std::size_t k = 0; k < s.rank(); ++k) e[k] = h.denom(k, j);
    den[s.active[j]] = to_string(LaurentPoly::monomial(e), names);
  }
  out.report["hat"] = hat;
  out.report["divided_by"] = den;
  return out;
}

Reply cmd_mutate(const Options& o) {
  LPSeed s = load_lp(o);
  const std::size_t k = resolve_index(s.active, o.k);
  LPSeed m = mutate(s, k);
  Reply out;
  out.report["direction"] = s.active[k];
  out.report["seed"] = seed_to_json(m);
  out.report["new_variable"] = {{m.active[k], to_string(m.expansion[k], m.root_names)}};
  return out;
}

Reply cmd_mutate_word(const Options& o) {
  LPSeed s = load_lp(o);
  MutationWord w = parse_word(s.active, o.word);
  LPSeed m = mutate_word(s, w);
  Reply out;
  out.report["word"] = word_string(s.active, w);
  out.report["seed"] = seed_to_json(m);
  out.report["expansions"] = expansion_json(m);
  return out;
}

Reply cmd_freeze(const Options& o) {
  LPSeed s = load_lp(o);
  const std::size_t k = resolve_index(s.active, o.k);
  Reply out;
  out.report["frozen_variable"] = s.active[k];
  out.report["seed"] = seed_to_json(freeze(s, k));
  return out;
}

Reply cmd_orbit(const Options& o) {
  LPSeed s = load_lp(o);
  OrbitGraph g = orbit(s, o.depth, o.permutations);
  Reply out;
  out.report["depth"] = o.depth;
  out.report["permutations"] = o.permutations;
  out.report["nodes"] = g.nodes.size();
  out.report["edges"] = g.edges.size();
  out.report["truncated"] = g.truncated;
  Json nodes = Json::array();
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    Json n;
    n["level"] = g.level[u];
    n["cluster"] = expansion_json(g.nodes[u]);
    nodes.push_back(n);
  }
  out.report["seeds"] = nodes;
  if (g.truncated) out.code = 1;
  if (o.probe) {
    SeedProbeReport p = probe_cluster_determines_seed(g);
    Json pr;
    pr["pairs"] = p.pairs;
    pr["same_cluster"] = p.same_cluster;
    pr["one_apart"] = p.one_apart;
    pr["adjacency_skipped"] = p.adjacency_skipped;
    Json v = Json::array();
    for (const auto& x : p.violations)
      v.push_back({{"claim", x.claim}, {"u", x.u}, {"v", x.v}, {"detail", x.detail}});
    pr["violations"] = v;
    out.report["probe"] = pr;
    if (!p.violations.empty()) out.code = 1;
  }
  return out;
}

Reply cmd_laurent_check(const Options& o) {
  LPSeed s = load_lp(o);
  LaurentCheckReport r = check_laurent_phenomenon(s, o.max_len);
  Reply out;
  out.report["max_len"] = o.max_len;
  out.report["words"] = r.words.size();
  out.report["truncated"] = r.truncated;
  out.report["all_laurent"] = r.all_laurent();
  Json failures = Json::array();
  for (const auto& w : r.words) {
    for (std::size_t i = 0; i < w.laurent.size(); ++i) {
      if (w.laurent[i]) continue;
      failures.push_back({{"word", word_string(s.active, w.word)},
                          {"variable", i + 1},
                          {"expansion", to_string(w.expansion[i], s.names())}});
    }
  }
  out.report["failures"] = failures;
  out.code = r.all_laurent() && !r.truncated ? 0 : 1;
  return out;
}

Json condition_json(const LPSeed& s, const Condition12Report& r) {
  static const char* labels[] = {"i", "ii", "iii", "iv"};
  const VarNames names = s.names();
  Json j;
  Json holds = Json::object();
  for (int c = 0; c < 4; ++c) holds[labels[c]] = r.holds[c];
  j["holds"] = holds;
  Json witnesses = Json::object();
  for (int c = 0; c < 4; ++c) {
    if (r.witnesses[c].empty()) continue;
    Json w = Json::array();
    for (const auto& x : r.witnesses[c]) w.push_back({{"variable", s.active[x.k]}, {"detail", x.detail}});
    witnesses[labels[c]] = w;
  }
  j["witnesses"] = witnesses;
  Json M = Json::object(), f = Json::object(), tail = Json::object();
  for (std::size_t k = 0; k < s.rank(); ++k) {
    M[s.active[k]] = to_string(r.M[k], names);
    f[s.active[k]] = to_string(r.f[k], names);
    if (r.tail_index[k]) tail[s.active[k]] = s.active[*r.tail_index[k]];
  }
  j["M"] = M;
  j["f"] = f;
  Json J = Json::array();
  for (std::size_t k : r.J) J.push_back(s.active[k]);
  j["J"] = J;
  j["tail_variable"] = tail;
  return j;
}

Reply cmd_condition12(const Options& o) {
  LPSeed s = load_lp(o);
  Reply out;
  out.report = condition_json(s, check_condition_1_2(s));
  return out;
}

Json combination_json(const std::map<StandardIndex, LaurentPoly>& terms, const VarNames& names) {
  Json out = Json::array();
  for (const auto& [a, c] : terms) out.push_back({{"index", a}, {"coefficient", to_string(c, names)}});
  return out;
}

Reply cmd_member(const Options& o) {
  LPSeed s = load_lp(o);
  const VarNames names = s.names();
  Reply out;
  out.report["which"] = o.which;
  if (o.expr.empty()) throw UsageError("missing --expr");

  if (o.which == "phi") {
    const VarNames primed = primed_names(s);
    LaurentPoly e = parse_laurent(o.expr, primed);
    out.report["expression"] = to_string(e, primed);
    out.report["image"] = to_string(phi(s, e), names);
    return out;
  }

  RationalFn f = parse_rational(o.expr, names);
  out.report["expression"] = to_string(f, names);
  auto y = f.as_laurent();
  if (!y) {
    out.report["member"] = false;
    out.report["reason"] = "not a Laurent polynomial in the cluster";
    out.code = 1;
    return out;
  }

  bool member = false;
  if (o.which == "upper") {
    UpperVerdict u = upper_member(s, *y);
    member = u.member;
    Json dirs = Json::array();
    for (const auto& d : u.directions) {
      Json x;
      x["variable"] = s.active[d.j];
      x["max_pole"] = d.max_pole;
      x["divisible"] = !d.failing_pole;
      if (d.failing_pole) x["failing_pole"] = *d.failing_pole;
      dirs.push_back(x);
    }
    out.report["member"] = member;
    out.report["directions"] = dirs;
  } else if (o.which == "lower") {
    LowerCombination lo = lower_member(s, *y);
    member = lo.verdict == LowerVerdict::Member;
    out.report["verdict"] = to_string(lo.verdict);
    out.report["member"] = member;
    out.report["steps"] = lo.steps;
    if (member) out.report["combination"] = combination_json(lo.terms, names);
    if (!lo.certificate.empty()) out.report["certificate"] = lo.certificate;
  } else if (o.which == "imphi") {
    if (y->is_monomial() && s.rank() >= 1) {
      const Exponents& e = y->terms().begin()->first;
      std::vector<int> m(e.begin() + 1, e.begin() + s.rank());
      if (e[0] == 0) {
        auto l = im_phi_monomial_member(s, m);
        out.report["monoid_certificate"] = l ? Json(*l) : Json(nullptr);
      }
    }
    ImPhiCombination c = im_phi_member(s, *y);
    member = c.verdict == LowerVerdict::Member;
    out.report["verdict"] = to_string(c.verdict);
    out.report["member"] = member;
    out.report["steps"] = c.steps;
    if (member) out.report["preimage"] = to_string(c.preimage, primed_names(s));
    if (!c.certificate.empty()) out.report["certificate"] = c.certificate;
  } else {
    throw UsageError("--which must be upper, lower, imphi or phi");
  }
  out.code = member ? 0 : 1;
  return out;
}

Reply cmd_basis_check(const Options& o) {
  LPSeed s = load_lp(o);
  BasisCheckReport r = basis_check(s, o.radius);
  Reply out;
  out.report["radius"] = o.radius;
  out.report["indices"] = r.indices;
  out.report["injective"] = r.collisions.empty();
  out.report["agrees_with_expansion"] = r.mismatches.empty();
  Json col = Json::array();
  for (const auto& [a, b] : r.collisions) col.push_back({a, b});
  out.report["collisions"] = col;
  out.report["mismatches"] = r.mismatches;
  out.code = r.ok() ? 0 : 1;
  return out;
}

Reply cmd_probe(const Options& o) {
  LPSeed s = load_lp(o);
  Reply out;
  out.report["kind"] = o.kind;
  if (o.kind == "cluster-determines-seed") {
    Options q = o;
    q.probe = true;
    q.permutations = true;
    Reply r = cmd_orbit(q);
    out.report["nodes"] = r.report["nodes"];
    out.report["probe"] = r.report["probe"];
    out.code = r.code;
    return out;
  }

  std::vector<Sample> samples = cluster_samples(s, o.depth, o.degree);
  for (auto& x : inverse_samples(s)) samples.push_back(std::move(x));
  out.report["samples"] = samples.size();

  if (o.kind == "upper-invariance") {
    std::vector<std::size_t> dirs;
    if (o.k.empty())
      for (std::size_t k = 0; k < s.rank(); ++k) dirs.push_back(k);
    else
      dirs.push_back(resolve_index(s.active, o.k));
    Json list = Json::array();
    for (std::size_t k : dirs) {
      UpperInvarianceReport r = probe_upper_invariance(s, k, samples);
      Json d;
      d["direction"] = s.active[k];
      if (r.skipped) {
        d["status"] = "skip";
        d["reason"] = r.skip_reason;
      } else {
        d["status"] = r.violations.empty() ? "pass" : "fail";
        d["compared"] = r.compared;
        d["violations"] = string_list(r.violations);
        if (!r.violations.empty()) out.code = 1;
      }
      list.push_back(d);
    }
    out.report["directions"] = list;
  } else if (o.kind == "lower-equals-upper") {
    LowerUpperReport r = probe_lower_equals_upper(s, samples);
    out.report["agree"] = r.agree;
    out.report["budget_exhausted"] = r.exhausted;
    out.report["violations"] = string_list(r.violations);
    if (!r.violations.empty() || r.exhausted) out.code = 1;
  } else {
    throw UsageError("--kind must be upper-invariance, lower-equals-upper or cluster-determines-seed");
  }
  return out;
}

// ---- cluster verbs ----------------------------------------------------------

Json matrix_json(const ExchangeMatrix& B) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    std::vector<int> row(B.cols());
    for (Eigen::Index c = 0; c < B.cols(); ++c) row[c] = B(i, c);
    rows.push_back(row);
  }
  return rows;
}

Reply cmd_cluster_mutate(const Options& o) {
  ClusterSeed s = load_cluster(o);
  const std::size_t k = resolve_index(s.vars, o.k);
  Reply out;
  out.report["direction"] = s.vars[k];
  out.report["seed"] = cluster_to_json(cluster_mutate(s, k));
  return out;
}

Reply cmd_cluster_to_lp(const Options& o) {
  ClusterSeed s = load_cluster(o);
  Reply out;
  try {
    out.report["seed"] = seed_to_json(cluster_to_lp(s));
  } catch (const ClusterRejected& e) {
    out.report["rejected"] = true;
    out.report["variable"] = s.vars[e.index];
    out.report["reason"] = e.what();
    if (e.witness) out.report["witness"] = to_string(*e.witness, s.initial);
    out.code = 1;
  }
  return out;
}

Reply cmd_cluster_check(const Options& o) {
  ClusterSeed s = load_cluster(o);
  Reply out;
  out.report["B"] = matrix_json(s.B);
  out.report["sign_skew_symmetric"] = is_sign_skew_symmetric(s.B);
  auto D = skew_symmetrizer(s.B);
  out.report["skew_symmetrizer"] = D ? Json(std::vector<int>(D->data(), D->data() + D->size())) : Json(nullptr);
  SignSkewVerdict t = is_totally_sss(s.B, o.depth);
  static const char* kinds[] = {"yes", "no-counterexample-to-depth", "counterexample"};
  out.report["totally_sign_skew_symmetric"] = kinds[static_cast<int>(t.kind)];
  if (t.kind == SignSkewVerdict::Kind::Counterexample) out.report["counterexample_word"] = word_string(s.vars, t.word);
  out.report["acyclic"] = is_acyclic(s.B);
  if (auto r = acyclic_renumbering(s.B)) {
    VarNames order;
    for (auto i : *r) order.push_back(s.vars[i]);
    out.report["renumbering"] = order;
  }
  Json bin = Json::object();
  auto F = exchange_binomials(s);
  for (std::size_t j = 0; j < s.rank(); ++j) bin[s.vars[j]] = to_string(F[j], s.initial);
  out.report["binomials"] = bin;

  try {
    ClusterConditionReport c = cluster_condition_equivalence(s);
    Json cc;
    cc["condition"] = c.condition;
    if (c.ordering) {
      VarNames order;
      for (auto i : *c.ordering) order.push_back(s.vars[i]);
      cc["ordering"] = order;
    }
    cc["acyclic"] = c.acyclic;
    cc["coprime"] = c.coprime;
    cc["equivalent"] = c.equivalent();
    out.report["condition_equivalence"] = cc;
    if (!c.equivalent()) out.code = 1;
  } catch (const ClusterRejected& e) {
    Json rej;
    rej["variable"] = s.vars[e.index];
    rej["reason"] = e.what();
    if (e.witness) rej["witness"] = to_string(*e.witness, s.initial);
    out.report["lp_rejected"] = rej;
  }

  ClusterOrbitScan scan = scan_cluster_orbit(s, o.depth);
  Json sc;
  sc["depth"] = o.depth;
  sc["seeds"] = scan.seeds;
  sc["matched_pairs"] = scan.matched_pairs;
  sc["swapped_pairs"] = scan.swapped_pairs;
  sc["violations"] = string_list(scan.violations);
  out.report["same_cluster_probe"] = sc;
  if (!scan.violations.empty()) out.code = 1;
  return out;
}

Reply cmd_fixtures(const Options& o) {
  Reply out;
  auto all = list_fixtures(o.fixtures_dir);
  if (!o.show.empty()) {
    for (const auto& f : all)
      if (f.name == o.show) {
        out.report = Json::parse(f.data.dump());
        return out;
      }
    throw UsageError("no fixture named '" + o.show + "'");
  }
  Json list = Json::array();
  for (const auto& f : all)
    list.push_back({{"name", f.name}, {"kind", f.kind}, {"provenance", f.provenance}, {"origin", f.origin}});
  out.report["fixtures"] = list;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laurent phenomenon seeds: mutation, Laurent checks, upper and lower bounds", "lpalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string fixtures_dir;
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--fixtures-dir", fixtures_dir, "Directory with extra fixture files");

  std::function<Reply(const Options&)> handler;
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Reply(const Options&)> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Seed file or fixture name")->required(); };
  auto dir_opt = [&](CLI::App* sub) {
    sub->add_option("-k,--direction", o.k, "Variable name or 1-based index")->required();
  };

  auto* validate = verb(&app, "validate", "Check the seed axioms", cmd_validate);
  seed_opt(validate);
  validate->add_flag("--strict", o.strict, "Also certify irreducibility");

  seed_opt(verb(&app, "hat", "Exchange Laurent polynomials", cmd_hat));

  auto* mut = verb(&app, "mutate", "Mutate in one direction", cmd_mutate);
  seed_opt(mut);
  dir_opt(mut);

  auto* mw = verb(&app, "mutate-word", "Mutate along a word", cmd_mutate_word);
  seed_opt(mw);
  mw->add_option("--word", o.word, "Comma-separated directions")->required();

  auto* fr = verb(&app, "freeze", "Freeze an active variable", cmd_freeze);
  seed_opt(fr);
  dir_opt(fr);

  auto* orb = verb(&app, "orbit", "Enumerate the mutation orbit", cmd_orbit);
  seed_opt(orb);
  orb->add_option("--depth", o.depth, "Mutation depth");
  orb->add_flag("--permutations", o.permutations, "Identify seeds up to permutation");
  orb->add_flag("--probe", o.probe, "Check that clusters determine seeds");

  auto* lc = verb(&app, "laurent-check", "Check the Laurent phenomenon along all words", cmd_laurent_check);
  seed_opt(lc);
  lc->add_option("--max-len", o.max_len, "Longest word");

  seed_opt(verb(&app, "condition12", "Check the four leading-term conditions", cmd_condition12));

  auto* mem = verb(&app, "member", "Membership in the upper bound, lower bound or Im(phi)", cmd_member);
  seed_opt(mem);
  mem->add_option("--expr", o.expr, "Element, in the seed's variables")->required();
  mem->add_option("--which", o.which, "upper, lower, imphi, or phi to print an image")
      ->check(CLI::IsMember({"upper", "lower", "imphi", "phi"}));

  auto* bc = verb(&app, "basis-check", "Leading monomials of standard monomials", cmd_basis_check);
  seed_opt(bc);
  bc->add_option("--radius", o.radius, "Largest |a_i|");

  auto* pr = verb(&app, "probe", "Sample-based checks of the bound theorems", cmd_probe);
  seed_opt(pr);
  pr->add_option("--kind", o.kind, "upper-invariance, lower-equals-upper or cluster-determines-seed")
      ->required()
      ->check(CLI::IsMember({"upper-invariance", "lower-equals-upper", "cluster-determines-seed"}));
  pr->add_option("-k,--direction", o.k, "Direction for upper-invariance (default: all)");
  pr->add_option("--depth", o.depth, "Mutation depth for samples or orbit");
  pr->add_option("--degree", o.degree, "Largest cluster monomial degree in samples");

  auto* cl = app.add_subcommand("cluster", "Cluster seeds (x, y, B)");
  cl->require_subcommand(1);
  auto* cm = verb(cl, "mutate", "Mutate a cluster seed", cmd_cluster_mutate);
  seed_opt(cm);
  dir_opt(cm);
  seed_opt(verb(cl, "to-lp", "Convert to an LP seed", cmd_cluster_to_lp));
  auto* cc = verb(cl, "check", "Matrix properties, binomials and probes", cmd_cluster_check);
  seed_opt(cc);
  cc->add_option("--depth", o.depth, "Depth for the sign-skew search and the orbit probe");

  auto* fx = verb(&app, "fixtures", "List bundled and user fixtures", cmd_fixtures);
  fx->add_option("--show", o.show, "Print one fixture");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "lpalg: " << e.what() << "\n";
    return 2;
  }
  if (!fixtures_dir.empty()) o.fixtures_dir = fixtures_dir;

  try {
    Reply r = handler(o);
    if (o.json)
      out << r.report.dump(2) << "\n";
    else
      render(r.report, out, "");
    return r.code;
  } catch (const UsageError& e) {
    err << "lpalg: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "lpalg: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "lpalg: rejected: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "lpalg: internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace lpalg::cli
