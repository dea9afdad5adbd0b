#include "dahalab/schur_weyl.hpp"

#include <sstream>

#include "dahalab/periodic.hpp"
#include "dahalab/tableaux.hpp"

namespace dahalab {

Rational ribbon_exponent(const Weight& lambda) {
  return form(lambda + two_rho(lambda.flavor(), lambda.rank()), lambda);
}

Rational ribbon_inverse_on_V(Flavor flavor, int N) {
  return -ribbon_exponent(Weight::unit(flavor, N, 1));
}

Rational y_exponent(const LoopedWalk& u, int i) {
  // Representatives are not renormalized so that eps_1 is a literal unit vector.
  const Flavor f = u.flavor();
  const int N = u.N();
  std::vector<int> m = u.base.coords();
  for (int j = 0; j < i - 1; ++j) ++m[static_cast<std::size_t>(u.steps[static_cast<std::size_t>(j)] - 1)];
  const Weight prev(Flavor::GL, m);
  ++m[static_cast<std::size_t>(u.steps[static_cast<std::size_t>(i - 1)] - 1)];
  const Weight cur(Flavor::GL, m);
  const Weight rho2(Flavor::GL, two_rho(Flavor::GL, N).coords());
  const Weight e1(Flavor::GL, Weight::unit(Flavor::GL, N, 1).coords());
  auto pair = [&](const Weight& a, const Weight& b) {
    Rational s = 0;
    for (int j = 1; j <= N; ++j) s += a[j] * b[j];
    if (f == Flavor::SL) s -= frac(static_cast<long>(a.total()) * b.total(), N);
    return s;
  };
  return pair(cur + rho2, cur) - pair(prev + rho2, prev) - pair(e1 + rho2, e1);
}

MainTheoremRow main_theorem_row(const LoopedWalk& u) {
  MainTheoremRow row{u, {}, {}, {}, true};
  const int n = u.n(), N = u.N();
  const SkewTableau T = tab(u);
  std::vector<Rational> diag;
  if (u.flavor() == Flavor::GL) {
    const PeriodicTableau P = per(T);
    for (int i = 1; i <= n; ++i) diag.push_back(P.diag(i));
  } else {
    const PeriodicClass C = sper(T);
    for (int i = 1; i <= n; ++i) diag.push_back(sl_diag(C, i));
  }
  for (int i = 1; i <= n; ++i) {
    const Rational y = y_exponent(u, i);
    row.y_side.push_back(y);
    const Rational& d = diag[static_cast<std::size_t>(i - 1)];
    if (u.flavor() == Flavor::GL) {
      row.tableau_side.push_back(2 * d);
      row.t_exponents.push_back(y);  // qq = t
    } else {
      row.tableau_side.push_back(frac(2 * (1 - i), N) + 2 * d);
      // s^{2(i-1)} qq^{y} with s = v, qq = v^N, reported in powers of t.
      row.t_exponents.push_back((Rational(2 * (i - 1)) + N * y) / N);
    }
    if (row.y_side.back() != row.tableau_side.back()) row.match = false;
    if (row.t_exponents.back() != 2 * d) row.match = false;
  }
  return row;
}

MainTheoremReport main_theorem_check(Flavor flavor, int N, int k, int radius) {
  MainTheoremReport rep{flavor, N, k, radius, {}, {}};
  for (const auto& u : enumerate_ball(flavor, N, k, radius)) {
    MainTheoremRow row = main_theorem_row(u);
    if (!row.match) rep.failures.push_back(u.to_string() + ": exponents disagree");

    // Telescoping: the sum collapses to the endpoints.
    Rational sum = 0;
    for (const auto& y : row.y_side) sum += y;
    std::vector<int> m0 = u.base.coords(), mn = m0;
    for (auto& x : mn) x += k;
    const Weight w0(flavor, m0), wn(flavor, mn);
    const Weight e1 = Weight::unit(flavor, N, 1);
    const Weight r2 = two_rho(flavor, N);
    const Rational tele = form(wn + r2, wn) - form(w0 + r2, w0) - u.n() * form(e1 + r2, e1);
    if (sum != tele) rep.failures.push_back(u.to_string() + ": telescoping identity fails");
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

long block_dimension(Flavor flavor, int N, int n, const Weight& lambda) {
  if (lambda.rank() != N || lambda.flavor() != flavor) throw std::invalid_argument("weight does not match flavor and N");
  if (n % N != 0) return 0;
  if (n == 0) return 1;
  return static_cast<long>(enumerate_walks(n / N, lambda).size());
}

}  // namespace dahalab
