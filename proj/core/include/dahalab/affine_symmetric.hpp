#pragma once

#include <string>
#include <vector>

#include "dahalab/weight.hpp"

namespace dahalab {

/// n-periodic bijection of Z, sigma(i + n) = sigma(i) + n, stored by its
/// window (sigma(1), ..., sigma(n)).
class AffinePerm {
 public:
  AffinePerm() = default;
  explicit AffinePerm(std::vector<int> window);

  static AffinePerm identity(int n);
  /// s_i for 0 <= i < n; s_0 exchanges 0 and 1 (equivalently n and n+1).
  static AffinePerm s(int n, int i);
  /// pi(i) = i + 1.
  static AffinePerm pi(int n);
  static AffinePerm pi_inverse(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int x) const;

  /// Composition: (a * b)(x) = a(b(x)).
  AffinePerm operator*(const AffinePerm& b) const;
  AffinePerm inverse() const;
  /// sum_i (sigma(i) - i) / n; 1 for pi, 0 for every s_i.
  int degree() const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;

  std::string to_string() const;

 private:
  std::vector<int> window_;
};

/// A weight (t^{e_1}, ..., t^{e_n}) stored by its exponents.
struct WeightExponents {
  Flavor flavor = Flavor::GL;
  int N = 1;
  int k = 1;
  std::vector<Rational> e;

  friend bool operator==(const WeightExponents&, const WeightExponents&) = default;
  friend auto operator<=>(const WeightExponents& a, const WeightExponents& b) { return a.e <=> b.e; }
};

/// (sigma . e)_j = e_{sigma^{-1}(j)} with e_{i+n} = e_i + 2k. The SL action
/// additionally adds (2/N) deg(sigma) to every coordinate.
WeightExponents act(const AffinePerm& sigma, const WeightExponents& w);

/// The named generator formulas, used to cross-check act().
WeightExponents act_gl_pi(const WeightExponents& w);
WeightExponents act_gl_s0(const WeightExponents& w);
WeightExponents act_sl_pi(const WeightExponents& w);
WeightExponents act_sl_s0(const WeightExponents& w);

struct OrbitStabilizer {
  std::vector<WeightExponents> orbit;   // distinct weights reached, sorted
  std::vector<AffinePerm> stabilizer;   // non-identity elements fixing w, sorted
  std::size_t elements_visited = 0;
};

/// Breadth-first search over words in s_0..s_{n-1}, pi, pi^{-1} of length
/// at most max_length.
OrbitStabilizer orbit_stabilizer(const WeightExponents& w, int max_length);

}  // namespace dahalab
