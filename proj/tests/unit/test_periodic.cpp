#include <gtest/gtest.h>

#include <random>

#include "dahalab/affine_symmetric.hpp"
#include "dahalab/periodic.hpp"

using namespace dahalab;

using Rows = std::vector<std::vector<int>>;

TEST(Periodic, PerFixtures) {
  const SkewTableau T(SkewShape{Weight(Flavor::GL, {1, 0}), 2}, {{1, 2}, {3, 4}});
  const PeriodicTableau P = per(T);
  // Columns 1..2: row 1 holds the entry left of 1 (= 2 - 4) and 1.
  EXPECT_EQ(P.window(), (Rows{{-2, 1}, {3, 4}}));
  EXPECT_EQ(P.weight_exponents(), (std::vector<Rational>{2, 4, -2, 0}));
  EXPECT_EQ(per_inverse(P), T);

  const SkewTableau T3(SkewShape{Weight(Flavor::GL, {2, 1}), 2}, {{1, 2}, {3, 4}});
  EXPECT_NE(per(T3), P);
  EXPECT_EQ(per(T3).weight_exponents(), (std::vector<Rational>{4, 6, 0, 2}));
  const SkewTableau T2(SkewShape{Weight(Flavor::GL, {0, -1}), 2}, {{1, 2}, {3, 4}});
  EXPECT_EQ(per(T2).weight_exponents(), (std::vector<Rational>{0, 2, -4, -2}));
}

TEST(Periodic, AnchoredRectangle) {
  const PeriodicTableau P(2, 2, {{1, 3}, {2, 4}});
  ASSERT_TRUE(P.is_valid());
  const SkewTableau T = per_inverse(P);
  EXPECT_EQ(T.shape().lambda, Weight(Flavor::GL, {0, 0}));
  EXPECT_EQ(per(T), P);
}

TEST(Periodic, SeamViolationRejected) {
  const PeriodicTableau P(3, 2, {{1, 8}, {3, 10}, {5, 12}});
  EXPECT_FALSE(P.is_valid());
  EXPECT_THROW((void)per_inverse(P), std::exception);
}

TEST(Periodic, RoundTripOnBalls) {
  for (auto [N, k] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    for (const auto& u : enumerate_ball(Flavor::GL, N, k, 2)) {
      const SkewTableau T = tab(u);
      const PeriodicTableau P = per(T);
      ASSERT_TRUE(P.is_valid()) << P.to_string();
      EXPECT_EQ(per_inverse(P), T);
      EXPECT_EQ(P.weight_exponents(), T.weight_exponents());
    }
    for (const auto& u : enumerate_ball(Flavor::SL, N, k, 2)) {
      const PeriodicClass C = sper(tab(u));
      EXPECT_EQ(tab_inverse(C.tableau), u);
      EXPECT_EQ(sl_weight_exponents(C), tab(u).weight_exponents());
    }
  }
}

TEST(Periodic, SlOrbitFixtures) {
  const PeriodicClass C = sper(tab({Weight::fundamental(3, 1), {1, 2, 3}}));
  EXPECT_EQ(sl_weight_exponents(C), (std::vector<Rational>{frac(4, 3), frac(-8, 3), frac(-14, 3)}));
  EXPECT_EQ(sl_window(C, frac(2, 3)), (Rows{{1}, {5}, {6}}));
  EXPECT_EQ(filling_sum(sl_window(C, frac(2, 3))), 12);

  const PeriodicClass C1 = pi_shift_class(C);
  EXPECT_EQ(C1.lambda(), Weight(Flavor::SL, {2, 1, 0}));
  EXPECT_EQ(sl_weight_exponents(C1), (std::vector<Rational>{-6, 2, -2}));
  EXPECT_EQ(sl_window(C1, Rational(1)), (Rows{{2}, {6}, {7}}));
  EXPECT_EQ(filling_sum(sl_window(C1, Rational(1))), 15);
  EXPECT_EQ(sl_diag(C1, 2), Rational(1));

  const PeriodicClass C2 = pi_shift_class(C1);
  EXPECT_EQ(C2.lambda(), Weight(Flavor::SL, {2, 0, 0}));
  EXPECT_EQ(sl_weight_exponents(C2), (std::vector<Rational>{frac(-10, 3), frac(-16, 3), frac(8, 3)}));
  EXPECT_EQ(pi_shift_class(C2), C);
}

TEST(Periodic, SlPiShiftRules) {
  for (auto [N, k] : {std::pair{2, 2}, {3, 1}, {2, 3}}) {
    const PeriodicClass R0 = r0_class(N, k);
    PeriodicClass C = R0;
    for (int s = 0; s < N; ++s) C = pi_shift_class(C);
    EXPECT_EQ(C, R0) << N << "," << k;
    for (const auto& u : enumerate_ball(Flavor::SL, N, k, 2)) {
      const PeriodicClass D = sper(tab(u));
      const PeriodicClass pD = pi_shift_class(D);
      for (int i = 1; i <= D.n(); ++i) EXPECT_EQ(sl_diag(pD, i + 1), sl_diag(D, i) + frac(1, N));
      PeriodicClass E = D;
      for (int s = 0; s < D.n(); ++s) E = pi_shift_class(E);
      EXPECT_EQ(E, D);
    }
  }
  EXPECT_EQ(r0_class(2, 2).tableau.diag_vector(), (std::vector<Rational>{0, -1, 1, 0}));
}

TEST(Periodic, DiagPeriodicity) {
  std::mt19937 rng(3);
  const auto ws = enumerate_ball(Flavor::SL, 3, 2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  std::uniform_int_distribution<int> idx(-10, 10);
  for (int it = 0; it < 100; ++it) {
    const PeriodicClass C = sper(tab(ws[pick(rng)]));
    const int i = idx(rng);
    EXPECT_EQ(sl_diag(C, i + C.n()) - sl_diag(C, i), Rational(C.k()));
  }
}

// Weight intertwining: wt(sigma R) = sigma wt(R) for the generators.
TEST(Periodic, WeightIntertwining) {
  const int N = 2, k = 2, n = 4;
  for (const auto& u : enumerate_ball(Flavor::GL, N, k, 2)) {
    const PeriodicTableau P = per(tab(u));
    const WeightExponents w{Flavor::GL, N, k, P.weight_exponents()};
    std::vector<AffinePerm> gens{AffinePerm::pi(n), AffinePerm::pi_inverse(n)};
    for (int i = 0; i < n; ++i) gens.push_back(AffinePerm::s(n, i));
    for (const auto& g : gens) {
      const PeriodicTableau Q = P.act(g);
      if (!Q.is_valid()) continue;
      EXPECT_EQ(Q.weight_exponents(), act(g, w).e) << g.to_string() << " " << P.to_string();
      for (int i = 1; i <= n; ++i) EXPECT_EQ(Q.diag(g(i)), P.diag(i));
    }
  }
}
