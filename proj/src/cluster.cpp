#include "lpalg/cluster.hpp"

#include <map>
#include <sstream>

namespace lpalg {

namespace {

std::string word_string(const std::vector<std::size_t>& w, const VarNames& names) {
  std::string out;
  for (std::size_t k : w) out += (out.empty() ? "" : ",") + names[k];
  return out.empty() ? "()" : out;
}

}  // namespace

ClusterSeed ClusterSeed::make(VarNames vars, ExchangeMatrix B, Coefficients coeffs) {
  const std::size_t n = vars.size();
  if (B.rows() != static_cast<Eigen::Index>(n) || B.cols() != static_cast<Eigen::Index>(n))
    throw DomainError("exchange matrix size does not match the number of variables");
  if (!is_sign_skew_symmetric(B)) throw DomainError("exchange matrix is not sign-skew-symmetric");
  for (const auto& v : vars)
    if (!is_valid_name(v)) throw DomainError("invalid variable name '" + v + "'");

  ClusterSeed s;
  s.vars = std::move(vars);
  s.B = std::move(B);
  s.coeffs = coeffs;
  const std::size_t m = coeffs == Coefficients::Principal ? n : 0;
  s.Y = TropicalMatrix::Identity(m, n);
  if (m == 0) s.Y.resize(0, n);
  for (std::size_t i = 0; i < m; ++i) {
    std::string prefix = "y";
    auto clash = [&](const std::string& name) {
      return std::find(s.vars.begin(), s.vars.end(), name) != s.vars.end();
    };
    while (clash(prefix + std::to_string(i + 1))) prefix += "_";
    s.generators.push_back(prefix + std::to_string(i + 1));
  }
  s.initial = s.vars;
  s.initial.insert(s.initial.end(), s.generators.begin(), s.generators.end());
  for (std::size_t i = 0; i < n; ++i) s.expansion.push_back(RationalFn::variable(n + m, i));
  return s;
}

std::vector<LaurentPoly> exchange_binomials(const ClusterSeed& s) {
  const std::size_t n = s.rank(), m = s.generators.size(), N = n + m;
  std::vector<LaurentPoly> out;
  for (std::size_t j = 0; j < n; ++j) {
    Exponents plus(N, 0), minus(N, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const int b = s.B(i, j);
      if (b > 0) plus[i] = b;
      if (b < 0) minus[i] = -b;
    }
    for (std::size_t g = 0; g < m; ++g) {
      const int y = s.Y(g, j);
      if (y > 0) plus[n + g] = y;
      if (y < 0) minus[n + g] = -y;
    }
    out.push_back(LaurentPoly::monomial(plus) + LaurentPoly::monomial(minus));
  }
  return out;
}

ClusterSeed cluster_mutate(const ClusterSeed& s, std::size_t k) {
  const std::size_t n = s.rank(), m = s.generators.size();
  if (k >= n) throw DomainError("mutation direction out of range");
  ClusterSeed out = s;
  out.B = matrix_mutate(s.B, k);
  if (m > 0) out.Y = coeff_mutate(s.Y, s.B, k);

  std::vector<RationalFn> values = s.expansion;
  for (std::size_t g = 0; g < m; ++g) values.push_back(RationalFn::variable(n + m, n + g));
  out.expansion[k] = evaluate(exchange_binomials(s)[k], values) / s.expansion[k];

  // Name the new variable after an initial variable it coincides with.
  const RationalFn& x = out.expansion[k];
  std::string name = s.vars[k] + "'";
  for (std::size_t i = 0; i < n; ++i)
    if (x == RationalFn::variable(n + m, i)) name = s.initial[i];
  auto taken = [&](const std::string& v) {
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && out.vars[i] == v) return true;
    return std::find(s.generators.begin(), s.generators.end(), v) != s.generators.end();
  };
  while (taken(name)) name += "'";
  out.vars[k] = name;
  return out;
}

LPSeed cluster_to_lp(const ClusterSeed& s, const Budget& budget) {
  const std::size_t n = s.rank(), m = s.generators.size();
  auto binomials = exchange_binomials(s);
  for (std::size_t j = 0; j < n; ++j) {
    auto v = check_irreducible(binomials[j], n, budget.irreducibility);
    if (v.kind == Irreducibility::Irreducible) continue;
    std::string what = "exchange binomial " + s.vars[j] + " is " + to_string(v.kind);
    throw ClusterRejected(what, j, v.witness);
  }
  LPSeed lp = LPSeed::make(s.vars, s.generators, binomials);
  lp.root_names = s.initial;
  lp.root_unit.assign(n + m, false);
  for (std::size_t g = 0; g < m; ++g) lp.root_unit[n + g] = true;
  lp.expansion = s.expansion;
  for (std::size_t g = 0; g < m; ++g) lp.expansion.push_back(RationalFn::variable(n + m, n + g));
  return lp;
}

ClusterPairReport probe_cluster_same_cluster(const ClusterSeed& s1, const ClusterSeed& s2,
                                             const std::vector<std::size_t>& sigma) {
  ClusterPairReport r;
  const std::size_t n = s1.rank();
  if (s2.rank() != n || sigma.size() != n) throw DomainError("seeds of different rank");
  r.precondition = true;
  for (std::size_t i = 0; i < n; ++i) r.precondition = r.precondition && s2.expansion[i] == s1.expansion[sigma[i]];
  if (!r.precondition) {
    r.violations.push_back("clusters do not coincide under the given permutation");
    return r;
  }

  Eigen::MatrixXi P = Eigen::MatrixXi::Zero(n, n);  // (P M P^T)_{ik} = M_{sigma(i) sigma(k)}
  for (std::size_t i = 0; i < n; ++i) P(i, sigma[i]) = 1;
  const Eigen::MatrixXi B1 = P * s1.B * P.transpose();
  const Eigen::MatrixXi Y1 = s1.Y * P.transpose();

  for (std::size_t k = 0; k < n; ++k) {
    const bool first = s2.Y.col(k) == Y1.col(k) && s2.B.col(k) == B1.col(k);
    const bool second = s2.Y.col(k) == -Y1.col(k) && s2.B.col(k) == -B1.col(k);
    r.branch.push_back(first ? 1 : (second ? 2 : 0));
    if (!first && !second) r.violations.push_back("column " + std::to_string(k + 1) + " satisfies neither alternative");
  }

  // Exchange binomials agree after relabelling x_i -> x_sigma(i).
  const auto F1 = exchange_binomials(s1), F2 = exchange_binomials(s2);
  std::vector<int> target(n + s1.generators.size());
  std::iota(target.begin(), target.end(), 0);
  for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<int>(sigma[i]);
  for (std::size_t k = 0; k < n; ++k)
    if (F2[k].remap(target, target.size()) != F1[sigma[k]])
      r.violations.push_back("exchange binomial " + std::to_string(k + 1) + " differs after relabelling");

  auto D = skew_symmetrizer(s1.B);
  r.skew_symmetrizable = D.has_value();
  if (D) {
    const Eigen::VectorXi Dsigma = P * *D;
    r.rescaling_identity = B1 * D->asDiagonal() == s2.B * Dsigma.asDiagonal();
    if (!r.rescaling_identity) r.violations.push_back("rescaled exchange matrices are not permutation-conjugate");
    for (std::size_t k = 0; k < n; ++k) {
      const bool ok = r.branch[k] == 1 && (*D)(k) == Dsigma(k);
      r.corollary = r.corollary && ok;
      if (!ok) r.violations.push_back("column " + std::to_string(k + 1) + " breaks the skew-symmetrizable equalities");
    }
  }
  return r;
}

ClusterOrbitScan scan_cluster_orbit(const ClusterSeed& s, std::size_t depth) {
  ClusterOrbitScan scan;
  std::vector<std::pair<ClusterSeed, std::vector<std::size_t>>> seeds{{s, {}}};
  for (std::size_t at = 0; at < seeds.size(); ++at) {
    if (seeds[at].second.size() == depth) continue;
    for (std::size_t k = 0; k < s.rank(); ++k) {
      if (!seeds[at].second.empty() && seeds[at].second.back() == k) continue;
      auto w = seeds[at].second;
      w.push_back(k);
      seeds.emplace_back(cluster_mutate(seeds[at].first, k), std::move(w));
    }
  }
  scan.seeds = seeds.size();
  const std::size_t n = s.rank();
  for (std::size_t u = 0; u < seeds.size(); ++u) {
    for (std::size_t v = u + 1; v < seeds.size(); ++v) {
      const auto& a = seeds[u].first;
      const auto& b = seeds[v].first;
      std::vector<std::size_t> sigma(n);
      bool found = true;
      for (std::size_t i = 0; i < n && found; ++i) {
        found = false;
        for (std::size_t j = 0; j < n; ++j)
          if (b.expansion[i] == a.expansion[j]) sigma[i] = j, found = true;
      }
      if (!found) continue;
      ++scan.matched_pairs;
      bool identity = true;
      for (std::size_t i = 0; i < n; ++i) identity = identity && sigma[i] == i;
      if (!identity) ++scan.swapped_pairs;
      auto r = probe_cluster_same_cluster(a, b, sigma);
      for (const auto& msg : r.violations)
        scan.violations.push_back(word_string(seeds[u].second, s.vars) + " vs " + word_string(seeds[v].second, s.vars) +
                                  ": " + msg);
    }
  }
  return scan;
}

ClusterSeed cluster_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("B"))
    throw ParseError("cluster seed needs \"vars\" and \"B\"");
  VarNames vars = j.at("vars").get<VarNames>();
  const auto& rows = j.at("B");
  const std::size_t n = vars.size();
  if (!rows.is_array() || rows.size() != n) throw ParseError("\"B\" must have one row per variable");
  ExchangeMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("\"B\" must be square");
    for (std::size_t c = 0; c < n; ++c) B(i, c) = rows[i][c].get<int>();
  }
  std::string coeffs = j.value("coeffs", std::string("trivial"));
  if (coeffs != "trivial" && coeffs != "principal") throw ParseError("\"coeffs\" must be \"trivial\" or \"principal\"");
  ClusterSeed s;
  try {
    s = ClusterSeed::make(vars, B, coeffs == "principal" ? Coefficients::Principal : Coefficients::Trivial);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("Y")) {
    const auto& y = j.at("Y");
    const std::size_t m = s.generators.size();
    if (!y.is_array() || y.size() != n) throw ParseError("\"Y\" must have one column per variable");
    for (std::size_t c = 0; c < n; ++c) {
      if (!y[c].is_array() || y[c].size() != m) throw ParseError("\"Y\" columns must have one entry per generator");
      for (std::size_t g = 0; g < m; ++g) s.Y(g, c) = y[c][g].get<int>();
    }
  }
  if (j.contains("initial")) {
    VarNames initial = j.at("initial").get<VarNames>();
    if (initial.size() != n) throw ParseError("\"initial\" must name one variable per slot");
    s.initial = initial;
    for (const auto& g : s.generators) s.initial.push_back(g);
  }
  if (j.contains("expansions")) {
    const auto& e = j.at("expansions");
    if (!e.is_array() || e.size() != n) throw ParseError("\"expansions\" must have one entry per variable");
    for (std::size_t i = 0; i < n; ++i) s.expansion[i] = parse_rational(e[i].get<std::string>(), s.initial);
  }
  return s;
}

nlohmann::ordered_json cluster_to_json(const ClusterSeed& s) {
  nlohmann::ordered_json j;
  j["vars"] = s.vars;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < s.B.rows(); ++i) {
    std::vector<int> row(s.B.cols());
    for (Eigen::Index c = 0; c < s.B.cols(); ++c) row[c] = s.B(i, c);
    rows.push_back(row);
  }
  j["B"] = rows;
  j["coeffs"] = s.coeffs == Coefficients::Principal ? "principal" : "trivial";
  if (!s.generators.empty()) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < s.Y.cols(); ++c) {
      std::vector<int> col(s.Y.rows());
      for (Eigen::Index g = 0; g < s.Y.rows(); ++g) col[g] = s.Y(g, c);
      cols.push_back(col);
    }
    j["Y"] = cols;
  }
  bool identity = true;
  for (std::size_t i = 0; i < s.rank(); ++i)
    identity = identity && s.expansion[i] == RationalFn::variable(s.initial.size(), i) && s.vars[i] == s.initial[i];
  if (!identity) {
    j["initial"] = VarNames(s.initial.begin(), s.initial.begin() + s.rank());
    std::vector<std::string> e;
    for (const auto& x : s.expansion) e.push_back(to_string(x, s.initial));
    j["expansions"] = e;
  }
  return j;
}

}  // namespace lpalg
