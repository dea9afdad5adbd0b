#include <gtest/gtest.h>

#include "dahalab/periodic.hpp"
#include "dahalab/schur_weyl.hpp"

using namespace dahalab;

namespace {

// Plain rational matrices for an evaluation-point oracle of the R-matrix.
using Mat = std::vector<std::vector<Rational>>;

Mat zeros(int d) { return Mat(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0))); }

Mat mul(const Mat& a, const Mat& b) {
  const int d = static_cast<int>(a.size());
  Mat c = zeros(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// sigma = flip o R on V (x) V evaluated at v, embedded at factors (a, a+1) of V^{(x)3}.
Mat braid_generator(const RMatrix& R, const Rational& v, int a) {
  const int N = R.N(), d = N * N * N;
  Mat m = zeros(d);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = 0; z < N; ++z) {
        const int idx[3] = {x, y, z};
        const int col = (x * N + y) * N + z;
        const int i = idx[a], j = idx[a + 1];
        for (int k = 0; k < N; ++k)
          for (int l = 0; l < N; ++l) {
            const Rational c = R.at(i + 1, j + 1, k + 1, l + 1).eval(v);
            if (c == 0) continue;
            int out[3] = {x, y, z};
            out[a] = l;  // flip after R
            out[a + 1] = k;
            m[static_cast<std::size_t>((out[0] * N + out[1]) * N + out[2])][static_cast<std::size_t>(col)] += c;
          }
      }
  return m;
}

}  // namespace

TEST(SchurWeyl, Gl2RectangleWeightsAcrossDet) {
  for (auto [lambda, expected] : {std::pair{std::vector<int>{1, 0}, std::vector<Rational>{2, 4, -2, 0}},
                                  {std::vector<int>{0, -1}, std::vector<Rational>{0, 2, -4, -2}},
                                  {std::vector<int>{2, 1}, std::vector<Rational>{4, 6, 0, 2}}}) {
    const SkewTableau T(SkewShape{Weight(Flavor::GL, lambda), 2}, {{1, 2}, {3, 4}});
    const MainTheoremRow row = main_theorem_row(tab_inverse(T));
    EXPECT_TRUE(row.match);
    EXPECT_EQ(row.y_side, expected);
    EXPECT_EQ(row.t_exponents, expected);
  }
}

TEST(SchurWeyl, Sl3PiOrbitWeights) {
  PeriodicClass C = sper(tab({Weight::fundamental(3, 1), {1, 2, 3}}));
  const std::vector<std::vector<Rational>> expected{
      {frac(4, 3), frac(-8, 3), frac(-14, 3)}, {-6, 2, -2}, {frac(-10, 3), frac(-16, 3), frac(8, 3)}};
  for (const auto& e : expected) {
    const MainTheoremRow row = main_theorem_row(tab_inverse(C.tableau));
    EXPECT_TRUE(row.match);
    EXPECT_EQ(row.t_exponents, e);
    C = pi_shift_class(C);
  }
}

TEST(SchurWeyl, YExponentIsTwiceDiagonal) {
  for (const auto& u : enumerate_ball(Flavor::GL, 2, 2, 2)) {
    const auto d = walk_diagonals(u);
    for (int i = 1; i <= u.n(); ++i) EXPECT_EQ(y_exponent(u, i), 2 * d[static_cast<std::size_t>(i - 1)]);
  }
  // SL: the Z normalization by s^{2(i-1)} recovers 2 diag.
  for (const auto& u : enumerate_ball(Flavor::SL, 3, 1, 2)) {
    const auto d = walk_diagonals(u);
    for (int i = 1; i <= u.n(); ++i) EXPECT_EQ(y_exponent(u, i) + frac(2 * (i - 1), 3), 2 * d[static_cast<std::size_t>(i - 1)]);
  }
}

TEST(SchurWeyl, MainTheoremSmallBalls) {
  for (Flavor f : {Flavor::GL, Flavor::SL}) {
    const MainTheoremReport rep = main_theorem_check(f, 2, 2, 2);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_FALSE(rep.rows.empty());
  }
}

TEST(SchurWeyl, Ribbon) {
  EXPECT_EQ(ribbon_inverse_on_V(Flavor::SL, 2), frac(1, 2) - 2);
  EXPECT_EQ(ribbon_inverse_on_V(Flavor::SL, 3), frac(1, 3) - 3);
  EXPECT_EQ(ribbon_exponent(Weight(Flavor::GL, {1, 0})), Rational(2));
}

TEST(SchurWeyl, BlockDimension) {
  for (int m = 2; m <= 5; ++m) EXPECT_EQ(block_dimension(Flavor::SL, 2, 4, Weight(Flavor::SL, {m, 0})), 6);
  EXPECT_EQ(block_dimension(Flavor::SL, 3, 3, Weight::fundamental(3, 1)), 3);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(block_dimension(Flavor::GL, 2, 5, Weight(Flavor::GL, {m, 0})), 0);
}

TEST(RMatrix, SanityReport) {
  for (int N : {2, 3}) {
    const CheckReport rep = rmatrix_sanity(N);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
  }
}

// Braid and Hecke relations checked with hand-rolled rational matrices at v = 3/2.
TEST(RMatrix, EvaluationOracle) {
  const Rational v = frac(3, 2);
  for (int N : {2, 3}) {
    const RMatrix R(N);
    const Mat s1 = braid_generator(R, v, 0), s2 = braid_generator(R, v, 1);
    EXPECT_EQ(mul(mul(s1, s2), s1), mul(mul(s2, s1), s2)) << "N=" << N;
    Rational qq = 1;
    for (int i = 0; i < N; ++i) qq *= v;
    Mat a = s1, b = s1;
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= qq, b[i][i] += 1 / qq;
    const Mat h = mul(a, b);
    for (const auto& row : h)
      for (const auto& x : row) EXPECT_EQ(x, 0) << "N=" << N;
  }
}
