#include <gtest/gtest.h>

#include <algorithm>

#include "dahalab/parallel.hpp"
#include "dahalab/walks.hpp"

using namespace dahalab;

namespace {

// Independent oracle: every step word of length kN with each row used k
// times whose partial sums stay nonincreasing.
std::vector<std::vector<int>> brute_force_walks(const std::vector<int>& lambda, int k) {
  const int N = static_cast<int>(lambda.size()), n = N * k;
  std::vector<std::vector<int>> out;
  std::vector<int> steps(static_cast<std::size_t>(n), 1);
  for (;;) {
    std::vector<int> cnt(static_cast<std::size_t>(N), 0);
    for (int s : steps) ++cnt[static_cast<std::size_t>(s - 1)];
    if (std::all_of(cnt.begin(), cnt.end(), [k](int c) { return c == k; })) {
      std::vector<int> m = lambda;
      bool ok = true;
      for (int s : steps) {
        ++m[static_cast<std::size_t>(s - 1)];
        if (!std::is_sorted(m.rbegin(), m.rend())) ok = false;
      }
      if (ok) out.push_back(steps);
    }
    int i = n - 1;
    while (i >= 0 && steps[static_cast<std::size_t>(i)] == N) steps[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++steps[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<std::vector<int>> steps_of(const std::vector<LoopedWalk>& ws) {
  std::vector<std::vector<int>> out;
  for (const auto& w : ws) out.push_back(w.steps);
  return out;
}

}  // namespace

TEST(Weight, SlNormalization) {
  const Weight w(Flavor::SL, {3, 2, 2});
  EXPECT_EQ(w.coords(), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(w, Weight::fundamental(3, 1));
  EXPECT_EQ(Weight(Flavor::GL, {3, 2, 2}).coords(), (std::vector<int>{3, 2, 2}));
}

TEST(Weight, FormAndRho) {
  const Weight a(Flavor::SL, {1, 0}), b(Flavor::SL, {1, 0});
  EXPECT_EQ(form(a, b), frac(1, 2));
  EXPECT_EQ(form(Weight(Flavor::GL, {2, 1}), Weight(Flavor::GL, {1, 3})), Rational(5));
  EXPECT_EQ(two_rho(Flavor::GL, 3).coords(), (std::vector<int>{2, 0, -2}));
}

TEST(Weight, YoungDiagramAndDual) {
  const YoungDiagram y = young_diagram(Weight(Flavor::GL, {3, 1, -1}));
  EXPECT_EQ(y.rows, (std::vector<int>{4, 2, 0}));
  EXPECT_EQ(y.principal_label, Rational(-1));
  EXPECT_EQ(young_diagram(Weight(Flavor::SL, {2, 1, 0})).principal_label, Rational(-1));
  EXPECT_EQ(dual_weight(Weight(Flavor::GL, {3, 1, -1})).coords(), (std::vector<int>{1, -1, -3}));
}

TEST(Weight, DominantBallMatchesBruteForce) {
  for (int N : {2, 3}) {
    for (int r : {0, 1, 2, 3}) {
      std::size_t gl = 0, sl = 0;
      std::vector<int> m(static_cast<std::size_t>(N), -r);
      for (;;) {
        if (std::is_sorted(m.rbegin(), m.rend())) {
          ++gl;
          if (m.back() == 0 && m.front() <= r) ++sl;
        }
        int i = N - 1;
        while (i >= 0 && m[static_cast<std::size_t>(i)] == r) m[static_cast<std::size_t>(i--)] = -r;
        if (i < 0) break;
        ++m[static_cast<std::size_t>(i)];
      }
      const auto ball = dominant_ball(Flavor::GL, N, r);
      EXPECT_EQ(ball.size(), gl) << "N=" << N << " r=" << r;
      EXPECT_TRUE(std::is_sorted(ball.begin(), ball.end()));
      EXPECT_EQ(dominant_ball(Flavor::SL, N, r).size(), sl) << "N=" << N << " r=" << r;
    }
  }
}

TEST(Walks, CheckWalkDiagnostics) {
  const WalkCheck bad = check_walk(Weight(Flavor::SL, {1, 0}), {2, 2, 1, 1}, 2);
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.failing_index, 2);
  EXPECT_TRUE(check_walk(Weight(Flavor::SL, {2, 0}), {2, 2, 1, 1}, 2).valid);
  EXPECT_TRUE(check_walk(Weight::fundamental(3, 1), {1, 2, 3}, 1).valid);
  EXPECT_FALSE(check_walk(Weight(Flavor::GL, {0, 0}), {1, 1, 1, 2}, 2).valid);  // wrong endpoint
  EXPECT_FALSE(check_walk(Weight(Flavor::GL, {0, 0}), {1, 2, 1}, 2).valid);     // wrong length
}

TEST(Walks, Sl2CountsByM) {
  EXPECT_EQ(enumerate_walks(2, Weight(Flavor::SL, {0, 0})).size(), 2u);
  EXPECT_EQ(enumerate_walks(2, Weight(Flavor::SL, {1, 0})).size(), 5u);
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(enumerate_walks(2, Weight(Flavor::SL, {m, 0})).size(), 6u) << m;
  EXPECT_EQ(enumerate_walks(1, Weight::fundamental(3, 1)).size(), 3u);
}

TEST(Walks, EnumerationMatchesBruteForce) {
  for (int N : {2, 3}) {
    for (int k : {1, 2}) {
      if (N == 3 && k == 2) continue;  // 3^6 words are fine, but keep the unit run fast
      for (Flavor f : {Flavor::GL, Flavor::SL}) {
        for (const auto& lambda : dominant_ball(f, N, 2)) {
          const auto got = enumerate_walks(k, lambda);
          EXPECT_EQ(steps_of(got), brute_force_walks(lambda.coords(), k)) << lambda.to_string();
          for (const auto& u : got) EXPECT_TRUE(check_walk(u.base, u.steps, k).valid);
        }
      }
    }
  }
  const Weight l(Flavor::GL, {2, 1, 0});
  EXPECT_EQ(steps_of(enumerate_walks(2, l)), brute_force_walks(l.coords(), 2));
}

TEST(Walks, LexicographicAndThreadIndependent) {
  set_thread_count(1);
  const auto serial = enumerate_ball(Flavor::GL, 3, 2, 2);
  set_thread_count(4);
  const auto threaded = enumerate_ball(Flavor::GL, 3, 2, 2);
  set_thread_count(0);
  EXPECT_EQ(serial, threaded);
  for (std::size_t i = 1; i < serial.size(); ++i)
    if (serial[i].base == serial[i - 1].base) EXPECT_LT(serial[i - 1].steps, serial[i].steps);
}

TEST(Walks, RotationPeriodicity) {
  for (const auto& u : enumerate_ball(Flavor::SL, 3, 1, 3)) {
    LoopedWalk w = u;
    for (int i = 0; i < u.n(); ++i) {
      w = rotate_walk(w);
      ASSERT_TRUE(check_walk(w.base, w.steps, 1).valid) << w.to_string();
    }
    EXPECT_EQ(w, u);
    EXPECT_EQ(unrotate_walk(rotate_walk(u)), u);
  }
  for (const auto& u : enumerate_ball(Flavor::GL, 2, 2, 2)) {
    LoopedWalk w = u;
    for (int i = 0; i < u.n(); ++i) w = rotate_walk(w);
    EXPECT_EQ(w.steps, u.steps);
    EXPECT_EQ(w.base, u.base - Weight::det(2) - Weight::det(2));
  }
}

TEST(Walks, RotateExample) {
  const LoopedWalk u{Weight::fundamental(3, 1), {1, 2, 3}};
  const LoopedWalk r = rotate_walk(u);
  EXPECT_EQ(r.steps, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(r.base, Weight(Flavor::SL, {2, 1, 0}));  // (1,0,0) - e_3
}

TEST(Walks, SwapKinds) {
  // Steps 1,1 are in the same row; 1,2 at lambda = 0 with k = 1 are stacked.
  const LoopedWalk a{Weight(Flavor::GL, {0, 0}), {1, 1, 2, 2}};
  EXPECT_EQ(swap_step(a, 1).kind, SwapKind::SameRow);
  const LoopedWalk b{Weight(Flavor::GL, {0, 0}), {1, 2}};
  EXPECT_EQ(swap_step(b, 1).kind, SwapKind::SameColumn);
  const LoopedWalk c{Weight(Flavor::GL, {0, 0}), {1, 2, 1, 2}};
  const SwapResult s = swap_step(c, 2);
  ASSERT_EQ(s.kind, SwapKind::Swapped);
  EXPECT_EQ(s.walk->steps, (std::vector<int>{1, 1, 2, 2}));
}

TEST(Walks, DiagonalsAreColumnMinusRow) {
  const LoopedWalk u{Weight(Flavor::GL, {1, 0}), {1, 1, 2, 2}};
  EXPECT_EQ(walk_diagonals(u), (std::vector<Rational>{1, 2, -1, 0}));
  const LoopedWalk s{Weight::fundamental(3, 1), {1, 2, 3}};
  EXPECT_EQ(walk_diagonals(s), (std::vector<Rational>{frac(2, 3), frac(-4, 3), frac(-7, 3)}));
  EXPECT_EQ(column_reading_walk(Flavor::GL, 2, 2).steps, (std::vector<int>{1, 2, 1, 2}));
}
