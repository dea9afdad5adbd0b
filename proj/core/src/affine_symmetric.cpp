#include "dahalab/affine_symmetric.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dahalab {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

int floor_div(int a, int n) {
  return (a - mod(a, n)) / n;
}

}  // namespace

AffinePerm::AffinePerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  if (n == 0) throw std::invalid_argument("affine permutation needs n >= 1");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int x : window_) {
    auto r = static_cast<std::size_t>(mod(x, n));
    if (hit[r]) throw std::invalid_argument("window entries are not distinct mod n");
    hit[r] = true;
  }
}

AffinePerm AffinePerm::identity(int n) {
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) w.push_back(i);
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::s(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("s_i index out of range");
  std::vector<int> w;
  for (int j = 1; j <= n; ++j) w.push_back(j);
  if (i == 0) {
    w.front() = 0;
    w.back() = n + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::pi(int n) {
  std::vector<int> w;
  for (int j = 1; j <= n; ++j) w.push_back(j + 1);
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::pi_inverse(int n) {
  std::vector<int> w;
  for (int j = 1; j <= n; ++j) w.push_back(j - 1);
  return AffinePerm(std::move(w));
}

int AffinePerm::operator()(int x) const {
  const int n = this->n();
  const int r = mod(x - 1, n);
  return window_[static_cast<std::size_t>(r)] + (x - 1 - r);
}

AffinePerm AffinePerm::operator*(const AffinePerm& b) const {
  if (b.n() != n()) throw std::invalid_argument("composing permutations of different periods");
  std::vector<int> w;
  for (int i = 1; i <= n(); ++i) w.push_back((*this)(b(i)));
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::inverse() const {
  const int n = this->n();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int y = window_[static_cast<std::size_t>(i - 1)];
    const int r = mod(y - 1, n);  // y = (r + 1) + shift
    w[static_cast<std::size_t>(r)] = i - (y - 1 - r);
  }
  return AffinePerm(std::move(w));
}

int AffinePerm::degree() const {
  int s = 0;
  for (int i = 1; i <= n(); ++i) s += window_[static_cast<std::size_t>(i - 1)] - i;
  return s / n();
}

std::string AffinePerm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ']';
  return os.str();
}

WeightExponents act(const AffinePerm& sigma, const WeightExponents& w) {
  const int n = static_cast<int>(w.e.size());
  if (sigma.n() != n) throw std::invalid_argument("permutation period differs from weight length");
  const AffinePerm inv = sigma.inverse();
  WeightExponents out = w;
  const Rational shift = w.flavor == Flavor::SL ? frac(2 * sigma.degree(), w.N) : Rational(0);
  for (int j = 1; j <= n; ++j) {
    const int src = inv(j);
    const int r = mod(src - 1, n);
    const int wraps = floor_div(src - 1, n);
    out.e[static_cast<std::size_t>(j - 1)] = w.e[static_cast<std::size_t>(r)] + 2 * w.k * wraps + shift;
  }
  return out;
}

WeightExponents act_gl_pi(const WeightExponents& w) {
  WeightExponents out = w;
  const std::size_t n = w.e.size();
  out.e[0] = w.e[n - 1] - 2 * w.k;
  for (std::size_t j = 1; j < n; ++j) out.e[j] = w.e[j - 1];
  return out;
}

WeightExponents act_gl_s0(const WeightExponents& w) {
  WeightExponents out = w;
  const std::size_t n = w.e.size();
  out.e[0] = w.e[n - 1] - 2 * w.k;
  out.e[n - 1] = w.e[0] + 2 * w.k;
  return out;
}

WeightExponents act_sl_pi(const WeightExponents& w) {
  WeightExponents out = w;
  const std::size_t n = w.e.size();
  const int nn = static_cast<int>(n);
  out.e[0] = w.e[n - 1] - frac(2 * nn - 2, w.N);
  for (std::size_t j = 1; j < n; ++j) out.e[j] = w.e[j - 1] + frac(2, w.N);
  return out;
}

WeightExponents act_sl_s0(const WeightExponents& w) {
  WeightExponents out = w;
  const std::size_t n = w.e.size();
  const int nn = static_cast<int>(n);
  out.e[0] = w.e[n - 1] - frac(2 * nn, w.N);
  out.e[n - 1] = w.e[0] + frac(2 * nn, w.N);
  return out;
}

OrbitStabilizer orbit_stabilizer(const WeightExponents& w, int max_length) {
  const int n = static_cast<int>(w.e.size());
  std::vector<AffinePerm> gens;
  for (int i = 0; i < n; ++i) gens.push_back(AffinePerm::s(n, i));
  gens.push_back(AffinePerm::pi(n));
  gens.push_back(AffinePerm::pi_inverse(n));

  const AffinePerm id = AffinePerm::identity(n);
  std::set<AffinePerm> seen{id};
  std::set<WeightExponents> orbit{w};
  std::set<AffinePerm> stab;
  std::deque<std::pair<AffinePerm, int>> queue{{id, 0}};
  while (!queue.empty()) {
    auto [sigma, len] = queue.front();
    queue.pop_front();
    if (len == max_length) continue;
    for (const auto& g : gens) {
      AffinePerm next = g * sigma;
      if (!seen.insert(next).second) continue;
      WeightExponents img = act(next, w);
      if (img == w) stab.insert(next);
      orbit.insert(std::move(img));
      queue.emplace_back(std::move(next), len + 1);
    }
  }
  OrbitStabilizer res;
  res.orbit.assign(orbit.begin(), orbit.end());
  res.stabilizer.assign(stab.begin(), stab.end());
  res.elements_visited = seen.size();
  return res;
}

}  // namespace dahalab
