#include <gtest/gtest.h>

#include <random>

#include "lpalg/bounds.hpp"
#include "lpalg/cluster.hpp"
#include "test_util.hpp"

namespace lpalg {
namespace {

using testing::equal_up_to_sign;
using testing::P;

ExchangeMatrix M(std::initializer_list<std::initializer_list<int>> rows) {
  ExchangeMatrix B(rows.size(), rows.size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) B(i, j++) = v;
    ++i;
  }
  return B;
}

ExchangeMatrix random_sss(std::mt19937& rng, int n, double density = 0.6) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> mag(1, 3);
  ExchangeMatrix B = ExchangeMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (u(rng) > density) continue;
      const int s = u(rng) < 0.5 ? 1 : -1;
      B(i, j) = s * mag(rng);
      B(j, i) = -s * mag(rng);
    }
  return B;
}

// Exhaustive oracle: some relabelling sigma has b_{sigma(i), sigma(j)} >= 0
// whenever i > j.
bool acyclic_by_search(const ExchangeMatrix& B) {
  std::vector<int> p(B.rows());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < B.rows() && ok; ++a)
      for (int b = 0; b < a && ok; ++b) ok = B(p[a], p[b]) >= 0;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

TEST(MatrixMutate, RankTwoSignFlip) { EXPECT_EQ(matrix_mutate(M({{0, 3}, {-3, 0}}), 0), M({{0, -3}, {3, 0}})); }

TEST(MatrixMutate, AcyclicRankThreeByHand) {
  // b'_13 = b_13 + sgn(b_12) max(b_12 b_23, 0) = 1 + 1; the row and column of
  // index 1 change sign.
  EXPECT_EQ(matrix_mutate(M({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}), 1), M({{0, -1, 2}, {1, 0, -1}, {-2, 1, 0}}));
}

TEST(MatrixMutate, Involution) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    ExchangeMatrix B = random_sss(rng, 2 + trial % 4);
    for (int k = 0; k < B.rows(); ++k) EXPECT_EQ(matrix_mutate(matrix_mutate(B, k), k), B);
  }
}

TEST(CoeffMutate, PrincipalRankTwoAgainstMinOracle) {
  const ExchangeMatrix B = M({{0, 1}, {-1, 0}});
  const TropicalMatrix Y = TropicalMatrix::Identity(2, 2);
  TropicalMatrix Y1 = coeff_mutate(Y, B, 0);
  // y'_1 = y_1^{-1}; y'_2 = y_2 y_1^{max(b_12, 0)} (1 (+) y_1)^{-b_12}, where
  // 1 (+) y_1 is the entrywise min of 0 and y_1.
  Eigen::Vector2i y1 = Y.col(0), y2 = Y.col(1);
  Eigen::Vector2i plus = y1.cwiseMin(Eigen::Vector2i::Zero());
  Eigen::Vector2i want2 = y2 + std::max(B(0, 1), 0) * y1 - B(0, 1) * plus;
  EXPECT_EQ(Eigen::Vector2i(Y1.col(0)), Eigen::Vector2i(-y1));
  EXPECT_EQ(Eigen::Vector2i(Y1.col(1)), want2);
}

TEST(CoeffMutate, InvolutionAndIsolatedDirection) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    ExchangeMatrix B = random_sss(rng, n);
    TropicalMatrix Y(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Y(i, j) = e(rng);
    for (int k = 0; k < n; ++k) EXPECT_EQ(coeff_mutate(coeff_mutate(Y, B, k), matrix_mutate(B, k), k), Y);
  }
  ExchangeMatrix B = M({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
  TropicalMatrix Y = TropicalMatrix::Identity(3, 3);
  TropicalMatrix Y1 = coeff_mutate(Y, B, 1);
  EXPECT_EQ(Y1.col(0), Y.col(0));
  EXPECT_EQ(Y1.col(1), -Y.col(1));
  EXPECT_EQ(Y1.col(2), Y.col(2));
}

TEST(ExchangeBinomials, TrivialCoefficients) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 3}, {-3, 0}}), Coefficients::Trivial);
  auto F = exchange_binomials(s);
  EXPECT_EQ(F[0], P("x2^3 + 1", s.initial));
  EXPECT_EQ(F[1], P("x1^3 + 1", s.initial));
}

TEST(ExchangeBinomials, ZeroColumn) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 0}, {0, 0}}), Coefficients::Trivial);
  EXPECT_EQ(exchange_binomials(s)[0], P("2", s.initial));
  ClusterSeed p = ClusterSeed::make({"x1", "x2"}, M({{0, 0}, {0, 0}}), Coefficients::Principal);
  EXPECT_EQ(exchange_binomials(p)[1], P("y2 + 1", p.initial));
}

TEST(ExchangeBinomials, PrincipalRankTwo) {
  // Column j contributes y_j to the monomial of the positive entries.
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 1}, {-1, 0}}), Coefficients::Principal);
  auto F = exchange_binomials(s);
  EXPECT_EQ(F[0], P("y1 + x2", s.initial));
  EXPECT_EQ(F[1], P("x1*y2 + 1", s.initial));
}

TEST(Acyclic, Examples) {
  EXPECT_TRUE(is_acyclic(M({{0, 3}, {-3, 0}})));
  EXPECT_FALSE(is_acyclic(M({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})));
  EXPECT_TRUE(is_acyclic(M({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}})));
}

TEST(Acyclic, AgreesWithExhaustiveRenumbering) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    ExchangeMatrix B = random_sss(rng, 2 + trial % 5);
    const bool want = acyclic_by_search(B);
    EXPECT_EQ(is_acyclic(B), want);
    auto r = acyclic_renumbering(B);
    ASSERT_EQ(r.has_value(), want);
    if (!r) continue;
    for (std::size_t a = 0; a < r->size(); ++a)
      for (std::size_t b = 0; b < a; ++b) EXPECT_GE(B((*r)[a], (*r)[b]), 0);
  }
}

TEST(SkewSymmetrizer, Examples) {
  auto D = skew_symmetrizer(M({{0, 1}, {-1, 0}}));
  ASSERT_TRUE(D);
  EXPECT_EQ(*D, Eigen::Vector2i(1, 1));
  D = skew_symmetrizer(M({{0, 2}, {-1, 0}}));
  ASSERT_TRUE(D);
  EXPECT_EQ(*D, Eigen::Vector2i(1, 2));
  EXPECT_FALSE(skew_symmetrizer(M({{0, 1}, {1, 0}})));
}

TEST(SkewSymmetrizer, ProductIsSkewSymmetric) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(1, 3), u(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    // B = S D^{-1} with S skew-symmetric and entries divisible as needed
    Eigen::VectorXi dv(n);
    for (auto& x : dv) x = d(rng);
    ExchangeMatrix B = ExchangeMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!u(rng)) continue;
        const int s = (u(rng) ? 1 : -1) * dv(i) * dv(j);
        B(i, j) = s / dv(i);
        B(j, i) = -s / dv(j);
      }
    auto D = skew_symmetrizer(B);
    ASSERT_TRUE(D);
    ExchangeMatrix DB = D->asDiagonal() * B;
    EXPECT_EQ(DB, ExchangeMatrix(-DB.transpose()));
  }
}

TEST(TotallySss, Verdicts) {
  EXPECT_EQ(is_totally_sss(M({{0, 2}, {-1, 0}}), 3).kind, SignSkewVerdict::Kind::Yes);
  // acyclic and sign-skew-symmetric but not skew-symmetrizable
  ExchangeMatrix B = M({{0, 1, 1}, {-2, 0, 1}, {-1, -3, 0}});
  EXPECT_FALSE(skew_symmetrizer(B));
  EXPECT_EQ(is_totally_sss(B, 4).kind, SignSkewVerdict::Kind::NoCounterexampleToDepth);
  SignSkewVerdict bad = is_totally_sss(M({{0, 1}, {1, 0}}), 3);
  EXPECT_EQ(bad.kind, SignSkewVerdict::Kind::Counterexample);
  EXPECT_TRUE(bad.word.empty());
}

TEST(ClusterToLp, PrincipalRankTwoIsValid) {
  LPSeed lp = cluster_to_lp(ClusterSeed::make({"x1", "x2"}, M({{0, 1}, {-1, 0}}), Coefficients::Principal));
  EXPECT_EQ(lp.frozen, (VarNames{"y1", "y2"}));
  EXPECT_TRUE(validate_seed(lp, true).valid);
}

TEST(ClusterToLp, ReducibleBinomialRejected) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 3}, {-3, 0}}), Coefficients::Trivial);
  try {
    cluster_to_lp(s);
    FAIL() << "expected rejection";
  } catch (const ClusterRejected& e) {
    EXPECT_EQ(e.index, 0u);
    ASSERT_TRUE(e.witness);
    EXPECT_TRUE(equal_up_to_sign(*e.witness, P("x2 + 1", s.initial)));
  }
  ClusterSeed p = ClusterSeed::make({"x1", "x2"}, M({{0, 3}, {-3, 0}}), Coefficients::Principal);
  EXPECT_TRUE(validate_seed(cluster_to_lp(p), true).valid);
}

TEST(ClusterToLp, MutationCommutesWithConversion) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 1}, {-1, 0}}), Coefficients::Principal);
  for (std::size_t k = 0; k < 2; ++k) {
    LPSeed a = cluster_to_lp(cluster_mutate(s, k));
    LPSeed b = mutate(cluster_to_lp(s), k);
    EXPECT_TRUE(seeds_equivalent(a, b, false)) << k;
  }
}

TEST(ClusterToLp, RandomMutationsCommuteWithConversion) {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    ClusterSeed s = ClusterSeed::make(n == 2 ? VarNames{"x1", "x2"} : VarNames{"x1", "x2", "x3"},
                                      random_sss(rng, n, 0.9), Coefficients::Principal);
    if (!skew_symmetrizer(s.B)) continue;
    for (int k = 0; k < n; ++k) {
      try {
        LPSeed a = cluster_to_lp(cluster_mutate(s, k));
        LPSeed b = mutate(cluster_to_lp(s), k);
        EXPECT_TRUE(seeds_equivalent(a, b, false)) << trial << " " << k;
        ++checked;
      } catch (const ClusterRejected&) {
      }
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(SameCluster, IdentityPair) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2"}, M({{0, 2}, {-1, 0}}), Coefficients::Principal);
  ClusterPairReport r = probe_cluster_same_cluster(s, s, {0, 1});
  EXPECT_TRUE(r.precondition);
  EXPECT_EQ(r.branch, (std::vector<int>{1, 1}));
  EXPECT_TRUE(r.violations.empty());
}

TEST(SameCluster, RankTwoOrbitWithSwaps) {
  for (auto B : {M({{0, 1}, {-1, 0}}), M({{0, 1}, {-2, 0}})}) {
    ClusterOrbitScan scan =
        scan_cluster_orbit(ClusterSeed::make({"x1", "x2"}, B, Coefficients::Principal), 6);
    EXPECT_GT(scan.matched_pairs, 0u);
    EXPECT_TRUE(scan.violations.empty());
  }
  ClusterOrbitScan a2 =
      scan_cluster_orbit(ClusterSeed::make({"x1", "x2"}, M({{0, 1}, {-1, 0}}), Coefficients::Principal), 6);
  EXPECT_GT(a2.swapped_pairs, 0u);
}

TEST(SameCluster, RankThreeTrivialCoefficients) {
  ClusterOrbitScan scan = scan_cluster_orbit(
      ClusterSeed::make({"x1", "x2", "x3"}, M({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}), Coefficients::Trivial), 5);
  EXPECT_GT(scan.swapped_pairs, 0u);
  EXPECT_TRUE(scan.violations.empty());
}

TEST(ConditionEquivalence, AcyclicRankThree) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2", "x3"}, M({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}), Coefficients::Trivial);
  ClusterConditionReport r = cluster_condition_equivalence(s);
  EXPECT_TRUE(r.condition);
  EXPECT_TRUE(r.acyclic);
  EXPECT_TRUE(r.coprime);
}

TEST(ConditionEquivalence, ThreeCycle) {
  ClusterSeed s = ClusterSeed::make({"x1", "x2", "x3"}, M({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}), Coefficients::Trivial);
  ClusterConditionReport r = cluster_condition_equivalence(s);
  EXPECT_FALSE(r.condition);
  EXPECT_FALSE(r.acyclic);
  EXPECT_TRUE(r.equivalent());
}

TEST(ConditionEquivalence, RankTwoAndRandomSkewSymmetric) {
  ClusterConditionReport r2 =
      cluster_condition_equivalence(ClusterSeed::make({"x1", "x2"}, M({{0, 2}, {-1, 0}}), Coefficients::Principal));
  EXPECT_TRUE(r2.acyclic);
  EXPECT_TRUE(r2.equivalent());

  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 2;
    VarNames vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    ExchangeMatrix B = random_sss(rng, n, 0.8);
    B = (B - ExchangeMatrix(B.transpose())) / 2;  // skew-symmetric part keeps the sign pattern
    try {
      ClusterConditionReport r = cluster_condition_equivalence(ClusterSeed::make(vars, B, Coefficients::Trivial));
      EXPECT_TRUE(r.equivalent()) << trial;
      ++checked;
    } catch (const ClusterRejected&) {
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(ClusterJson, RoundTrip) {
  ClusterSeed s = cluster_mutate(ClusterSeed::make({"x1", "x2"}, M({{0, 2}, {-1, 0}}), Coefficients::Principal), 0);
  ClusterSeed t = cluster_from_json(nlohmann::json::parse(cluster_to_json(s).dump()));
  EXPECT_EQ(t.B, s.B);
  EXPECT_EQ(t.Y, s.Y);
  EXPECT_EQ(t.expansion, s.expansion);
}

}  // namespace
}  // namespace lpalg
