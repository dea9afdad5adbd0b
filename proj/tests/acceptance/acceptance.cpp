// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dahalab/daha.hpp"
#include "dahalab/periodic.hpp"
#include "dahalab/schur_weyl.hpp"
#include "dahalab/tableaux.hpp"
#include "dahalab/verify.hpp"

using namespace dahalab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Config {
  Flavor flavor;
  int N;
  int k;
};

const std::vector<Config> kSuites = {{Flavor::GL, 2, 1}, {Flavor::SL, 2, 1}, {Flavor::GL, 2, 2},
                                     {Flavor::SL, 2, 2}, {Flavor::GL, 3, 1}, {Flavor::SL, 3, 1}};

std::string name(const Config& c) {
  return to_string(c.flavor) + std::to_string(c.N) + " k=" + std::to_string(c.k);
}

// Step words with each row used k times and nonincreasing partial sums.
long brute_force_walk_count(std::vector<int> lambda, int k) {
  const int N = static_cast<int>(lambda.size());
  std::function<long(std::vector<int>&, std::vector<int>&)> rec = [&](std::vector<int>& m, std::vector<int>& left) -> long {
    if (std::all_of(left.begin(), left.end(), [](int c) { return c == 0; })) return 1;
    long total = 0;
    for (int r = 0; r < N; ++r) {
      if (left[static_cast<std::size_t>(r)] == 0) continue;
      if (r > 0 && m[static_cast<std::size_t>(r)] + 1 > m[static_cast<std::size_t>(r - 1)]) continue;
      ++m[static_cast<std::size_t>(r)], --left[static_cast<std::size_t>(r)];
      total += rec(m, left);
      --m[static_cast<std::size_t>(r)], ++left[static_cast<std::size_t>(r)];
    }
    return total;
  };
  std::vector<int> left(static_cast<std::size_t>(N), k);
  return rec(lambda, left);
}

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) o.require(false, "runtime limit exceeded");
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  %s (%.2fs%s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), s,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + "s").c_str() : "",
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome walk_counts() {
  Outcome o;
  const auto count = [](int m) { return enumerate_walks(2, Weight(Flavor::SL, {m, 0})).size(); };
  for (int m = 2; m <= 8; ++m) o.require(count(m) == 6, "SL2 k=2 m=" + std::to_string(m) + " is not 6");
  o.require(count(1) == 5, "SL2 k=2 m=1 is not 5");
  o.require(count(0) == 2, "SL2 k=2 m=0 is not 2");
  o.require(brute_force_walk_count({0, 0}, 2) == 2 && brute_force_walk_count({1, 0}, 2) == 5,
            "brute-force oracle disagrees");
  o.require(!check_walk(Weight(Flavor::SL, {1, 0}), {2, 2, 1, 1}, 2).valid, "excluded walk accepted at m=1");
  o.require(enumerate_walks(1, Weight::fundamental(3, 1)).size() == 3, "SL3 k=1 omega_1 is not 3");
  return o;
}

Outcome tableau_fixtures() {
  Outcome o;
  const std::set<std::vector<Rational>> expected{
      {0, -2, -4, 2, 0, -2}, {0, -2, 2, -4, 0, -2}, {0, 2, -2, -4, 0, -2}, {0, -2, 2, 0, -4, -2}, {0, 2, -2, 0, -4, -2}};
  const auto syt = enumerate_rect_syt(3, 2);
  std::set<std::vector<Rational>> got;
  for (const auto& T : syt) got.insert(T.weight_exponents());
  o.require(syt.size() == 5, "|SYT(2^3)| = " + std::to_string(syt.size()));
  o.require(got == expected, "weight exponent set differs");
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::size_t checked = 0;
  for (auto [N, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    for (Flavor f : {Flavor::GL, Flavor::SL}) {
      for (const auto& lambda : dominant_ball(f, N, 3)) {
        const auto walks = enumerate_walks(k, lambda);
        o.require(count_skew_syt(SkewShape{lambda, k}) == static_cast<long>(walks.size()),
                  "determinant oracle differs at " + lambda.to_string());
        for (const auto& u : walks) {
          const SkewTableau T = tab(u);
          o.require(tab_inverse(T) == u && tab(tab_inverse(T)) == T, "Tab round trip at " + u.to_string());
          if (f == Flavor::GL) {
            const PeriodicTableau P = per(T);
            o.require(P.is_valid() && per_inverse(P) == T && per(per_inverse(P)) == P, "Per round trip at " + u.to_string());
          } else {
            const PeriodicClass C = sper(T);
            o.require(C.tableau == T && sl_weight_exponents(C) == T.weight_exponents(), "SPer round trip at " + u.to_string());
          }
          ++checked;
        }
      }
    }
  }
  o.detail = o.ok ? std::to_string(checked) + " basis elements" : o.detail;
  return o;
}

Outcome relation_suites() {
  Outcome o;
  std::size_t checks = 0;
  std::mt19937_64 rng(0);
  for (const auto& c : kSuites) {
    const RectangularModule m(c.flavor, c.N, c.k);
    const auto sample = enumerate_ball(c.flavor, c.N, c.k, 3);
    const auto table = relation_table(c.flavor, m.params());
    std::set<std::string> ids;
    for (const auto& r : table) ids.insert(r.id);
    if (c.flavor == Flavor::GL) o.require(ids.count("T0YnT0") == 1, "missing T0YnT0 row");
    else o.require(ids.count("Z-product") == 1 && ids.count("pi^n") == 1, "missing SL rows");
    const RelationReport rep = verify_relations(m, table, sample);
    o.require(rep.ok(), name(c) + ": " + (rep.failures.empty() ? "" : rep.failures[0].relation_id));
    checks += rep.checks;

    // X checks on ten random vectors; small suites widen the ball to get ten.
    std::vector<LoopedWalk> xs = sample;
    for (int r = 4; xs.size() < 10; ++r) xs = enumerate_ball(c.flavor, c.N, c.k, r);
    std::shuffle(xs.begin(), xs.end(), rng);
    xs.resize(std::min<std::size_t>(xs.size(), 10));
    o.require(xs.size() >= 10, name(c) + ": fewer than 10 vectors for the X checks");
    const RelationReport x = verify_relations(m, derived_relations(m), xs);
    o.require(x.ok(), name(c) + " X: " + (x.failures.empty() ? "" : x.failures[0].relation_id));
    checks += x.checks;
  }
  const RectangularModule bad(Flavor::GL, 2, 2, Sabotage::BCoeff);
  const RelationReport neg = verify_relations(bad, relation_table(Flavor::GL, bad.params()), enumerate_ball(Flavor::GL, 2, 2, 3));
  o.require(!neg.ok(), "sabotaged module passed the suite");
  if (o.ok) o.detail = std::to_string(checks) + " exact checks, sabotage caught (" + std::to_string(neg.failures.size()) + " failures)";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& c : kSuites) {
    const MainTheoremReport rep = main_theorem_check(c.flavor, c.N, c.k, 3);
    o.require(rep.ok(), name(c) + ": " + (rep.failures.empty() ? "" : rep.failures[0]));
    rows += rep.rows.size();
  }
  PeriodicClass C = sper(tab({Weight::fundamental(3, 1), {1, 2, 3}}));
  const std::vector<std::vector<Rational>> sl3_orbit{
      {frac(4, 3), frac(-8, 3), frac(-14, 3)}, {-6, 2, -2}, {frac(-10, 3), frac(-16, 3), frac(8, 3)}};
  for (const auto& e : sl3_orbit) {
    const MainTheoremRow row = main_theorem_row(tab_inverse(C.tableau));
    o.require(row.match && row.t_exponents == e, "SL3 orbit weight mismatch");
    C = pi_shift_class(C);
  }
  const std::vector<std::pair<std::vector<int>, std::vector<Rational>>> gl2_shifts{
      {{1, 0}, {2, 4, -2, 0}}, {{0, -1}, {0, 2, -4, -2}}, {{2, 1}, {4, 6, 0, 2}}};
  for (const auto& [lambda, e] : gl2_shifts) {
    const SkewTableau T(SkewShape{Weight(Flavor::GL, lambda), 2}, {{1, 2}, {3, 4}});
    const MainTheoremRow row = main_theorem_row(tab_inverse(T));
    o.require(row.match && row.t_exponents == e && row.y_side == e, "GL2 weight mismatch");
  }
  if (o.ok) o.detail = std::to_string(rows) + " walks";
  return o;
}

Outcome support_rules() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : kSuites) {
    const CheckReport s = support_rule_check(c.flavor, c.N, c.k, 3);
    const CheckReport d = distinct_weights_check(c.flavor, c.N, c.k, 3);
    o.require(s.ok(), name(c) + ": " + (s.failures.empty() ? "" : s.failures[0]));
    o.require(d.ok(), name(c) + ": " + (d.failures.empty() ? "" : d.failures[0]));
    checked += s.checked + d.checked;
    // pi is invertible on the basis: rotation and its inverse undo each other.
    for (const auto& u : enumerate_ball(c.flavor, c.N, c.k, 3)) {
      const LoopedWalk r = rotate_walk(u);
      o.require(check_walk(r.base, r.steps, c.k).valid && unrotate_walk(r) == u && rotate_walk(unrotate_walk(u)) == u,
                name(c) + ": rotation is not a bijection at " + u.to_string());
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " checks";
  return o;
}

Outcome twists() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 2}, {3, 1}, {2, 3}}) {
    const TwistReport rep = twist_report(N, k);
    const std::string at = "(" + std::to_string(N) + "," + std::to_string(k) + ")";
    o.require(rep.untwisted.zeta_exp == 0 && rep.untwisted.c.is_one(), at + ": untwisted eigenvalue is not 1");
    o.require(static_cast<int>(rep.classes.size()) == k, at + ": " + std::to_string(rep.classes.size()) + " classes");
    for (int r1 = 0; r1 < N * k; ++r1)
      for (int r2 = 0; r2 < N * k; ++r2)
        o.require(twist_classify(r1, r2, N, k) == ((r1 - r2) % k == 0), at + ": classes not separated by a^N");
  }
  return o;
}

Outcome content_bounds() {
  Outcome o;
  for (auto [N, k] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const ContentBoundReport r = content_bound_check(N, k, 2);
    o.require(r.ok(), "(" + std::to_string(N) + "," + std::to_string(k) + ") has a nontrivial stabilizing gamma");
    o.require(r.tableaux == static_cast<std::size_t>(count_rect_syt_hook(N, k).get_si()), "tableau count");
  }
  return o;
}

Outcome rmatrix() {
  Outcome o;
  for (int N : {2, 3}) {
    const CheckReport r = rmatrix_sanity(N);
    o.require(r.ok(), "N=" + std::to_string(N) + ": " + (r.failures.empty() ? "" : r.failures[0]));
    o.require(ribbon_inverse_on_V(Flavor::SL, N) == frac(1, N) - N, "nu^-1 exponent on V");
  }
  return o;
}

}  // namespace

int main() {
  run(1, "walk counts", 1, walk_counts);
  run(2, "SYT(2^3) weight fixtures", 0, tableau_fixtures);
  run(3, "Tab and Per round trips, radius 3", 30, round_trips);
  run(4, "symbolic relation suites, radius 3", 300, relation_suites);
  run(5, "main-theorem comparator, radius 3", 0, main_theorem);
  run(6, "support rules and multiplicity one, radius 3", 0, support_rules);
  run(7, "SL twist classification", 0, twists);
  run(8, "content bounds", 0, content_bounds);
  run(9, "R-matrix sanity", 10, rmatrix);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
