#include "dahalab/walks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dahalab/parallel.hpp"

namespace dahalab {

std::vector<Weight> LoopedWalk::partial_sums() const {
  std::vector<Weight> out{base};
  for (int d : steps) out.push_back(out.back().plus_unit(d));
  return out;
}

std::string LoopedWalk::to_string() const {
  std::ostringstream os;
  os << base.to_string() << ';';
  for (std::size_t i = 0; i < steps.size(); ++i) os << (i ? "," : "") << steps[i];
  return os.str();
}

WalkCheck check_walk(const Weight& base, const std::vector<int>& steps, int k) {
  const int N = base.rank();
  WalkCheck res;
  if (static_cast<int>(steps.size()) != k * N) {
    res.valid = false;
    res.reason = "walk length " + std::to_string(steps.size()) + " differs from n = " + std::to_string(k * N);
    return res;
  }
  if (!base.dominant()) {
    res.valid = false;
    res.reason = "base " + base.to_string() + " is not dominant";
    return res;
  }
  std::vector<int> used(static_cast<std::size_t>(N), 0);
  for (int d : steps) {
    if (d < 1 || d > N) {
      res.valid = false;
      res.reason = "step " + std::to_string(d) + " outside 1.." + std::to_string(N);
      return res;
    }
    ++used[static_cast<std::size_t>(d - 1)];
  }
  // Dominance is checked on the unnormalized lift; it is invariant under det shifts.
  std::vector<int> m = base.coords();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const int d = steps[i];
    m[static_cast<std::size_t>(d - 1)] += 1;
    if (d > 1 && m[static_cast<std::size_t>(d - 1)] > m[static_cast<std::size_t>(d - 2)]) {
      res.valid = false;
      res.failing_index = static_cast<int>(i) + 1;
      res.reason = "partial sum u_" + std::to_string(i + 1) + " leaves the dominant chamber";
      return res;
    }
  }
  for (int j = 0; j < N; ++j)
    if (used[static_cast<std::size_t>(j)] != k) {
      res.valid = false;
      res.reason = "row " + std::to_string(j + 1) + " used " + std::to_string(used[static_cast<std::size_t>(j)]) +
                   " times, expected " + std::to_string(k);
      return res;
    }
  return res;
}

namespace {

struct WalkDfs {
  int N, k, n;
  std::vector<int> m;
  std::vector<int> used;
  std::vector<int> steps;
  const Weight* base;
  std::vector<LoopedWalk>* out;

  void run() {
    if (static_cast<int>(steps.size()) == n) {
      out->push_back(LoopedWalk{*base, steps});
      return;
    }
    for (int d = 1; d <= N; ++d) {
      auto di = static_cast<std::size_t>(d - 1);
      if (used[di] == k) continue;
      if (d > 1 && m[di] + 1 > m[di - 1]) continue;
      ++m[di];
      ++used[di];
      steps.push_back(d);
      run();
      steps.pop_back();
      --used[di];
      --m[di];
    }
  }
};

}  // namespace

std::vector<LoopedWalk> enumerate_walks(int k, const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("weight " + lambda.to_string() + " is not dominant");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int N = lambda.rank();
  // Fan out over the first step; each branch is already lexicographic.
  auto branches = parallel_map(static_cast<std::size_t>(N), [&](std::size_t first) {
    std::vector<LoopedWalk> out;
    const int d = static_cast<int>(first) + 1;
    WalkDfs dfs{N, k, k * N, lambda.coords(), std::vector<int>(static_cast<std::size_t>(N), 0), {}, &lambda, &out};
    if (d > 1 && dfs.m[first] + 1 > dfs.m[first - 1]) return out;
    ++dfs.m[first];
    ++dfs.used[first];
    dfs.steps.push_back(d);
    dfs.run();
    return out;
  });
  std::vector<LoopedWalk> all;
  for (auto& b : branches) all.insert(all.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return all;
}

std::vector<LoopedWalk> enumerate_ball(Flavor flavor, int N, int k, int radius) {
  std::vector<LoopedWalk> all;
  for (const auto& lambda : dominant_ball(flavor, N, radius)) {
    auto w = enumerate_walks(k, lambda);
    all.insert(all.end(), w.begin(), w.end());
  }
  return all;
}

LoopedWalk rotate_walk(const LoopedWalk& u) {
  if (u.steps.empty()) return u;
  LoopedWalk r;
  const int last = u.steps.back();
  r.base = u.base.minus_unit(last);
  r.steps.reserve(u.steps.size());
  r.steps.push_back(last);
  r.steps.insert(r.steps.end(), u.steps.begin(), u.steps.end() - 1);
  if (!r.base.dominant())
    throw std::logic_error("rotate_walk: base " + r.base.to_string() + " is not dominant for " + u.to_string());
  return r;
}

LoopedWalk unrotate_walk(const LoopedWalk& u) {
  if (u.steps.empty()) return u;
  LoopedWalk r;
  const int first = u.steps.front();
  r.base = u.base.plus_unit(first);
  r.steps.assign(u.steps.begin() + 1, u.steps.end());
  r.steps.push_back(first);
  if (!r.base.dominant())
    throw std::logic_error("unrotate_walk: base " + r.base.to_string() + " is not dominant for " + u.to_string());
  return r;
}

SwapResult swap_step(const LoopedWalk& u, int i) {
  if (i < 1 || i >= u.n()) throw std::out_of_range("swap_step index out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  if (u.steps[a] == u.steps[a + 1]) return {SwapKind::SameRow, std::nullopt, -1};
  // u_{i-1} + eps_{delta_{i+1}} must stay dominant.
  std::vector<int> m = u.base.coords();
  for (std::size_t j = 0; j < a; ++j) m[static_cast<std::size_t>(u.steps[j] - 1)] += 1;
  const int d = u.steps[a + 1];
  if (d > 1 && m[static_cast<std::size_t>(d - 1)] + 1 > m[static_cast<std::size_t>(d - 2)])
    return {SwapKind::SameColumn, std::nullopt, 1};
  LoopedWalk w = u;
  std::swap(w.steps[a], w.steps[a + 1]);
  return {SwapKind::Swapped, std::move(w), 0};
}

std::vector<int> walk_diagonals_int(const LoopedWalk& u) {
  std::vector<int> m = u.base.coords();
  std::vector<int> out;
  out.reserve(u.steps.size());
  for (int d : u.steps) {
    auto di = static_cast<std::size_t>(d - 1);
    out.push_back(m[di] + 1 - d);
    ++m[di];
  }
  return out;
}

std::vector<Rational> walk_diagonals(const LoopedWalk& u) {
  std::vector<Rational> out;
  const Rational shift = u.flavor() == Flavor::SL ? frac(u.base.total(), u.N()) : Rational(0);
  for (int d : walk_diagonals_int(u)) out.push_back(Rational(d) - shift);
  return out;
}

LoopedWalk column_reading_walk(Flavor flavor, int N, int k) {
  LoopedWalk w{Weight::zero(flavor, N), {}};
  for (int r = 0; r < k; ++r)
    for (int j = 1; j <= N; ++j) w.steps.push_back(j);
  return w;
}

}  // namespace dahalab
