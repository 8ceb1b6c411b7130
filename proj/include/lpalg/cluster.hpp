#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "lpalg/seed.hpp"

namespace lpalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExchangeMatrix = DenseMatrix<int>;
// Column j holds the exponent vector of y_j over the tropical generators.
using TropicalMatrix = DenseMatrix<int>;

template <typename Derived>
bool is_sign_skew_symmetric(const Eigen::MatrixBase<Derived>& B) {
  if (B.rows() != B.cols()) return false;
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    if (B(i, i) != 0) return false;
    for (Eigen::Index j = i + 1; j < B.cols(); ++j) {
      const bool both_zero = B(i, j) == 0 && B(j, i) == 0;
      if (!both_zero && !(B(i, j) * B(j, i) < 0)) return false;
    }
  }
  return true;
}

template <typename Derived>
typename Derived::PlainObject matrix_mutate(const Eigen::MatrixBase<Derived>& B, Eigen::Index k) {
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject out = B;
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -B(i, j);
      } else {
        const Scalar sgn = B(i, k) > 0 ? Scalar(1) : (B(i, k) < 0 ? Scalar(-1) : Scalar(0));
        out(i, j) = B(i, j) + sgn * std::max<Scalar>(B(i, k) * B(k, j), Scalar(0));
      }
    }
  }
  return out;
}

// Tropical evaluation: product adds exponents, 1 (+) y takes min(0, y) entrywise.
template <typename DerivedY, typename DerivedB>
typename DerivedY::PlainObject coeff_mutate(const Eigen::MatrixBase<DerivedY>& Y, const Eigen::MatrixBase<DerivedB>& B,
                                            Eigen::Index k) {
  using Scalar = typename DerivedY::Scalar;
  typename DerivedY::PlainObject out = Y;
  const auto yk = Y.col(k);
  const auto one_plus_yk = yk.cwiseMin(Scalar(0));
  for (Eigen::Index i = 0; i < Y.cols(); ++i) {
    if (i == k) {
      out.col(i) = -yk;
    } else {
      const Scalar b = static_cast<Scalar>(B(k, i));
      out.col(i) = Y.col(i) + std::max<Scalar>(b, Scalar(0)) * yk - b * one_plus_yk;
    }
  }
  return out;
}

// Diagram i -> j iff b_ij > 0.
template <typename Derived>
std::optional<std::vector<Eigen::Index>> topological_order(const Eigen::MatrixBase<Derived>& B) {
  const Eigen::Index n = B.rows();
  std::vector<int> indegree(n, 0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (B(i, j) > 0) ++indegree[j];
  std::deque<Eigen::Index> ready;
  for (Eigen::Index j = 0; j < n; ++j)
    if (indegree[j] == 0) ready.push_back(j);
  std::vector<Eigen::Index> order;
  while (!ready.empty()) {
    Eigen::Index i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (Eigen::Index j = 0; j < n; ++j)
      if (B(i, j) > 0 && --indegree[j] == 0) ready.push_back(j);
  }
  if (static_cast<Eigen::Index>(order.size()) != n) return std::nullopt;
  return order;
}

template <typename Derived>
bool is_acyclic(const Eigen::MatrixBase<Derived>& B) {
  return topological_order(B).has_value();
}

// sigma with b_{sigma(i), sigma(j)} >= 0 whenever i > j: a reversed
// topological order of the diagram.
template <typename Derived>
std::optional<std::vector<Eigen::Index>> acyclic_renumbering(const Eigen::MatrixBase<Derived>& B) {
  auto order = topological_order(B);
  if (!order) return std::nullopt;
  std::reverse(order->begin(), order->end());
  return order;
}

// Minimal positive integer D with d_i b_ij = -d_j b_ji.
template <typename Derived>
std::optional<DenseVector<typename Derived::Scalar>> skew_symmetrizer(const Eigen::MatrixBase<Derived>& B) {
  using Scalar = typename Derived::Scalar;
  if (!is_sign_skew_symmetric(B)) return std::nullopt;
  const Eigen::Index n = B.rows();
  std::vector<Rational> d(n, Rational(0));
  std::vector<Eigen::Index> component(n, -1);
  for (Eigen::Index start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    component[start] = start;
    d[start] = 1;
    std::vector<Eigen::Index> members{start}, stack{start};
    while (!stack.empty()) {
      Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (B(i, j) == 0) continue;
        Rational dj = d[i] * Rational(static_cast<long>(B(i, j))) / Rational(-static_cast<long>(B(j, i)));
        if (component[j] < 0) {
          component[j] = start;
          d[j] = dj;
          members.push_back(j);
          stack.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Integer l = 1, g = 0;
    for (auto m : members) {
      d[m].canonicalize();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[m].get_den_mpz_t());
    }
    for (auto m : members) {
      d[m] *= Rational(l);
      d[m].canonicalize();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[m].get_num_mpz_t());
    }
    for (auto m : members) d[m] /= Rational(g);
  }
  DenseVector<Scalar> out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d[i].canonicalize();
    out(i) = static_cast<Scalar>(d[i].get_num().get_si());
  }
  return out;
}

struct SignSkewVerdict {
  enum class Kind { Yes, NoCounterexampleToDepth, Counterexample } kind = Kind::Yes;
  std::vector<std::size_t> word;  // mutation word reaching a counterexample
};

template <typename Derived>
SignSkewVerdict is_totally_sss(const Eigen::MatrixBase<Derived>& B, std::size_t depth) {
  using Plain = typename Derived::PlainObject;
  if (!is_sign_skew_symmetric(B)) return {SignSkewVerdict::Kind::Counterexample, {}};
  if (skew_symmetrizer(B)) return {SignSkewVerdict::Kind::Yes, {}};
  std::deque<std::pair<Plain, std::vector<std::size_t>>> queue;
  queue.emplace_back(B, std::vector<std::size_t>{});
  while (!queue.empty()) {
    auto [M, word] = queue.front();
    queue.pop_front();
    if (word.size() == depth) continue;
    for (Eigen::Index k = 0; k < M.rows(); ++k) {
      if (!word.empty() && word.back() == static_cast<std::size_t>(k)) continue;
      Plain next = matrix_mutate(M, k);
      std::vector<std::size_t> w = word;
      w.push_back(k);
      if (!is_sign_skew_symmetric(next)) return {SignSkewVerdict::Kind::Counterexample, w};
      queue.emplace_back(std::move(next), std::move(w));
    }
  }
  return {SignSkewVerdict::Kind::NoCounterexampleToDepth, {}};
}

enum class Coefficients { Trivial, Principal };

struct ClusterSeed {
  VarNames vars;
  ExchangeMatrix B;
  TropicalMatrix Y;  // generators x n; zero rows for trivial coefficients
  Coefficients coeffs = Coefficients::Trivial;
  VarNames generators;               // names of the tropical generators
  VarNames initial;                  // initial cluster followed by the generators
  std::vector<RationalFn> expansion;  // cluster variables over `initial`

  std::size_t rank() const { return vars.size(); }
  static ClusterSeed make(VarNames vars, ExchangeMatrix B, Coefficients coeffs);
};

ClusterSeed cluster_mutate(const ClusterSeed& s, std::size_t k);
// Over the ring (vars, generators), generators treated as frozen.
std::vector<LaurentPoly> exchange_binomials(const ClusterSeed& s);

class ClusterRejected : public DomainError {
 public:
  ClusterRejected(const std::string& what, std::size_t index, std::optional<LaurentPoly> witness)
      : DomainError(what), index(index), witness(std::move(witness)) {}
  std::size_t index;
  std::optional<LaurentPoly> witness;
};

// Generators become frozen variables; a binomial that is not certified
// irreducible raises ClusterRejected.
LPSeed cluster_to_lp(const ClusterSeed& s, const Budget& budget = Budget::from_env());

struct ClusterPairReport {
  bool precondition = false;  // x_{i;2} = x_{sigma(i);1}
  std::vector<int> branch;    // per k: 1, 2, or 0 when neither alternative holds
  bool skew_symmetrizable = false;
  bool rescaling_identity = true;  // P (B1 D^-1) P^T = B2 D^-1
  bool corollary = true;       // first branch with d_k = d_sigma(k)
  std::vector<std::string> violations;
};

// sigma maps slots of s2 to slots of s1.
ClusterPairReport probe_cluster_same_cluster(const ClusterSeed& s1, const ClusterSeed& s2,
                                             const std::vector<std::size_t>& sigma);

struct ClusterOrbitScan {
  std::size_t seeds = 0;
  std::size_t matched_pairs = 0;
  std::size_t swapped_pairs = 0;  // matched under a non-identity permutation
  std::vector<std::string> violations;
};

// Mutates along every word up to `depth` and probes every pair of seeds whose
// clusters coincide up to a permutation.
ClusterOrbitScan scan_cluster_orbit(const ClusterSeed& s, std::size_t depth);

ClusterSeed cluster_from_json(const nlohmann::json& j);
nlohmann::ordered_json cluster_to_json(const ClusterSeed& s);

}  // namespace lpalg
