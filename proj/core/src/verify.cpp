#include "dahalab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dahalab/periodic.hpp"

namespace dahalab {

namespace {

using Exps = std::vector<Rational>;

std::string fmt(const Exps& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i].get_str();
  os << ')';
  return os.str();
}

bool interior(const Weight& w, int radius) {
  if (w.flavor() == Flavor::GL) {
    for (int x : w.coords())
      if (std::abs(x) > radius - 1) return false;
    return true;
  }
  return w[1] <= radius - 2;
}

bool ratio_is_t_pm2(const Rational& diff) {
  return diff == 2 || diff == -2;
}

}  // namespace

CheckReport distinct_weights_check(Flavor flavor, int N, int k, int radius) {
  RectangularModule m(flavor, N, k);
  CheckReport rep{"distinct-weights", 0, {}};
  std::map<Exps, LoopedWalk> seen;
  for (const auto& u : enumerate_ball(flavor, N, k, radius)) {
    ++rep.checked;
    auto [it, inserted] = seen.emplace(m.weight(u), u);
    if (!inserted)
      rep.failures.push_back("weight " + fmt(it->first) + " shared by " + it->second.to_string() + " and " + u.to_string());
  }
  return rep;
}

CheckReport support_rule_check(Flavor flavor, int N, int k, int radius) {
  RectangularModule m(flavor, N, k);
  const int n = m.n();
  CheckReport rep{"support-rules", 0, {}};
  std::map<Exps, LoopedWalk> support;
  const auto walks = enumerate_ball(flavor, N, k, radius);
  for (const auto& u : walks) support.emplace(m.weight(u), u);

  auto fail = [&](const LoopedWalk& u, const std::string& what) { rep.failures.push_back(u.to_string() + ": " + what); };

  for (const auto& u : walks) {
    if (!interior(u.base, radius)) continue;
    WeightExponents z{flavor, N, k, m.weight(u)};

    for (int i = 1; i < n; ++i) {
      ++rep.checked;
      const SwapResult s = swap_step(u, i);
      const bool blocked = s.kind != SwapKind::Swapped;
      const bool crit = ratio_is_t_pm2(z.e[static_cast<std::size_t>(i - 1)] - z.e[static_cast<std::size_t>(i)]);
      const Exps sz = act(AffinePerm::s(n, i), z).e;
      const bool present = support.count(sz) > 0;
      if (blocked != crit) fail(u, "s" + std::to_string(i) + " blockedness disagrees with the ratio criterion");
      if (present == blocked) fail(u, "s" + std::to_string(i) + " reflected weight presence disagrees with blockedness");
      if (!blocked && m.weight(*s.walk) != sz) fail(u, "s" + std::to_string(i) + " swapped walk has the wrong weight");
    }

    {
      ++rep.checked;
      const LoopedWalk pre = unrotate_walk(u);
      const SwapResult s = swap_step(pre, n - 1);
      const bool blocked = s.kind != SwapKind::Swapped;
      const Rational diff = z.e.back() - 2 * k - z.e.front();
      const bool crit = ratio_is_t_pm2(diff);
      const Exps sz = act(AffinePerm::s(n, 0), z).e;
      const bool present = support.count(sz) > 0;
      if (blocked != crit) fail(u, "s0 blockedness disagrees with the ratio criterion");
      if (present == blocked) fail(u, "s0 reflected weight presence disagrees with blockedness");
      if (!blocked && m.weight(rotate_walk(*s.walk)) != sz) fail(u, "s0 image has the wrong weight");
    }

    {
      ++rep.checked;
      const Exps pz = act(AffinePerm::pi(n), z).e;
      const LoopedWalk pu = rotate_walk(u);
      if (m.weight(pu) != pz) fail(u, "pi image has weight " + fmt(m.weight(pu)) + ", expected " + fmt(pz));
      auto it = support.find(pz);
      if (it == support.end())
        fail(u, "pi . z missing from the support");
      else if (!(it->second == pu))
        fail(u, "pi . z is carried by a different walk");
    }
  }
  return rep;
}

ContentBoundReport content_bound_check(int N, int k, int bound) {
  ContentBoundReport rep;
  rep.N = N;
  rep.k = k;
  const int n = N * k;
  // Nondecreasing gamma in [-bound, bound]^n.
  std::vector<std::vector<int>> gammas;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (static_cast<int>(cur.size()) == n) {
      gammas.push_back(cur);
      return;
    }
    for (int x = lo; x <= bound; ++x) {
      cur.push_back(x);
      self(self, x);
      cur.pop_back();
    }
  };
  rec(rec, -bound);
  rep.gammas_per_tableau = gammas.size();

  for (const auto& R : enumerate_rect_syt(N, k)) {
    ++rep.tableaux;
    std::vector<int> a;
    for (const auto& d : R.diag_vector()) a.push_back(static_cast<int>(d.get_num().get_si()));
    if (a.front() != 0) rep.bound_violations.push_back(R.to_string() + ": a_1 = " + std::to_string(a.front()));
    if (a.back() != k - N) rep.bound_violations.push_back(R.to_string() + ": a_n = " + std::to_string(a.back()));
    for (int x : a)
      if (x < 1 - N || x > k - 1) rep.bound_violations.push_back(R.to_string() + ": entry " + std::to_string(x) + " out of bounds");
    std::vector<int> sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());
    for (const auto& g : gammas) {
      if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; })) continue;
      std::vector<int> b;
      for (int i = 0; i < n; ++i) b.push_back(a[static_cast<std::size_t>(i)] - k * g[static_cast<std::size_t>(i)]);
      std::sort(b.begin(), b.end());
      if (b == sorted_a) rep.nontrivial.push_back({R, g});
    }
  }
  return rep;
}

std::string TwistScalar::to_string() const {
  return "zeta_" + std::to_string(order) + "^" + std::to_string(zeta_exp) + " * " + c.to_string();
}

TwistScalar twist_eigenvalue(int N, int k, int r) {
  RectangularModule m(Flavor::SL, N, k);
  const int n = m.n();
  const LoopedWalk r0 = column_reading_walk(Flavor::SL, N, k);
  const WalkVector v = WalkVector::basis(r0);
  const WalkVector img = m.apply(Word(static_cast<std::size_t>(N), Gen{GenKind::Pi, 0}), v);
  if (img.size() != 1 || img.begin()->first != r0)
    throw std::logic_error("v_R0 is not an eigenvector of pi^N: " + to_string(img));
  const int e = ((r % n) + n) % n * N % n;
  return TwistScalar{e, n, img.begin()->second};
}

bool twist_classify(int r1, int r2, int N, int k) {
  return twist_eigenvalue(N, k, r1) == twist_eigenvalue(N, k, r2);
}

TwistReport twist_report(int N, int k) {
  TwistReport rep;
  rep.N = N;
  rep.k = k;
  const int n = N * k;
  rep.untwisted = twist_eigenvalue(N, k, 0);
  for (int r = 0; r < n; ++r) rep.eigenvalues.push_back(twist_eigenvalue(N, k, r));
  for (int r = 0; r < n; ++r) {
    bool placed = false;
    for (auto& cls : rep.classes)
      if (rep.eigenvalues[static_cast<std::size_t>(cls.front())] == rep.eigenvalues[static_cast<std::size_t>(r)]) {
        cls.push_back(r);
        placed = true;
        break;
      }
    if (!placed) rep.classes.push_back({r});
  }
  return rep;
}

}  // namespace dahalab
