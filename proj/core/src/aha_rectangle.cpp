#include <sstream>

#include "dahalab/verify.hpp"

namespace dahalab {

namespace {

using Vec = AffineHeckeRectangle::Vector;

std::string fmt(const Vec& v) {
  return v.to_string([](const SkewTableau& T) { return T.to_string(); });
}

SkewTableau swap_entries(const SkewTableau& T, int i) {
  auto rows = T.rows();
  for (auto& row : rows)
    for (auto& e : row) {
      if (e == i)
        e = i + 1;
      else if (e == i + 1)
        e = i;
    }
  return SkewTableau(T.shape(), std::move(rows));
}

}  // namespace

AffineHeckeRectangle::AffineHeckeRectangle(int N, int k) : params_(N, k), basis_(enumerate_rect_syt(N, k)) {}

Vec AffineHeckeRectangle::apply_T(int i, const Vec& x) const {
  const FieldElement t = params_.t(), one(1);
  Vec out;
  for (const auto& [T, c] : x) {
    const Box p = T.position(i), q = T.position(i + 1);
    if (p.row == q.row) {
      out.add(T, c * t);
      continue;
    }
    if (p.col == q.col) {
      out.add(T, -c / t);
      continue;
    }
    const int delta = static_cast<int>(Rational(T.diag(i) - T.diag(i + 1)).get_num().get_si());
    const FieldElement u = t.pow(2 * delta);
    const FieldElement a = (t - one / t) / (one - u);
    const FieldElement b = delta < 0 ? one : (one - u * t * t) * (one - u / (t * t)) / ((one - u) * (one - u));
    out.add(T, c * a);
    out.add(swap_entries(T, i), c * b);
  }
  return out;
}

Vec AffineHeckeRectangle::apply_Y(int i, const Vec& x) const {
  Vec out;
  for (const auto& [T, c] : x) out.add(T, c * params_.t_pow(2 * T.diag(i)));
  return out;
}

CheckReport aha_rectangle_check(int N, int k) {
  CheckReport rep{"aha-rectangle", 0, {}};
  AffineHeckeRectangle aha(N, k);
  RectangularModule m(Flavor::GL, N, k);
  const int n = N * k;
  const FieldElement t = m.params().t();

  auto to_tab = [](const WalkVector& w) {
    Vec out;
    for (const auto& [u, c] : w) out.add(tab(u), c);
    return out;
  };
  auto fail = [&](const SkewTableau& T, const std::string& what, const Vec& l, const Vec& r) {
    rep.failures.push_back(T.to_string() + ": " + what + ": " + fmt(l) + " != " + fmt(r));
  };

  for (const auto& u : enumerate_walks(k, Weight::zero(Flavor::GL, N))) {
    const SkewTableau T = tab(u);
    const Vec v = Vec::basis(T);
    const WalkVector w = WalkVector::basis(u);
    for (int i = 1; i < n; ++i) {
      ++rep.checked;
      Vec lhs = to_tab(m.apply(Gen{GenKind::T, i}, w)), rhs = aha.apply_T(i, v);
      if (!(lhs == rhs)) fail(T, "T" + std::to_string(i) + " differs from the walk module", lhs, rhs);

      Vec tt = aha.apply_T(i, aha.apply_T(i, v));
      Vec quad = aha.apply_T(i, v).scaled(t - t.inverse());
      quad.add(T, FieldElement(1));
      if (!(tt == quad)) fail(T, "quadratic T" + std::to_string(i), tt, quad);

      Vec tyt = aha.apply_T(i, aha.apply_Y(i, aha.apply_T(i, v)));
      Vec y = aha.apply_Y(i + 1, v);
      if (!(tyt == y)) fail(T, "T Y T = Y at " + std::to_string(i), tyt, y);

      if (i + 1 < n) {
        Vec l = aha.apply_T(i, aha.apply_T(i + 1, aha.apply_T(i, v)));
        Vec r = aha.apply_T(i + 1, aha.apply_T(i, aha.apply_T(i + 1, v)));
        if (!(l == r)) fail(T, "braid at " + std::to_string(i), l, r);
      }
    }
    for (int i = 1; i <= n; ++i) {
      ++rep.checked;
      Vec lhs = to_tab(m.apply(Gen{GenKind::Y, i}, w)), rhs = aha.apply_Y(i, v);
      if (!(lhs == rhs)) fail(T, "Y" + std::to_string(i) + " differs from the walk module", lhs, rhs);
    }
    ++rep.checked;
    if (!(aha.apply_Y(1, v) == v)) fail(T, "Y1 is not the identity", aha.apply_Y(1, v), v);
    Vec prod = v;
    for (int i = 1; i <= n; ++i) prod = aha.apply_Y(i, prod);
    Vec expect = v.scaled(t.pow(n * (k - N)));
    if (!(prod == expect)) fail(T, "Y1...Yn is not t^{n(k-N)}", prod, expect);
  }
  return rep;
}

}  // namespace dahalab
