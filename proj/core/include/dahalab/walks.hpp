#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dahalab/weight.hpp"

namespace dahalab {

/// A looped walk: base weight lambda = u_0 and steps delta_1..delta_n in
/// {1..N}. For GL the walk ends at lambda + k*det, for SL it returns to lambda.
struct LoopedWalk {
  Weight base;
  std::vector<int> steps;  // 1-based row indices

  Flavor flavor() const { return base.flavor(); }
  int N() const { return base.rank(); }
  int n() const { return static_cast<int>(steps.size()); }

  /// u_0, ..., u_n (SL weights normalized).
  std::vector<Weight> partial_sums() const;

  friend bool operator==(const LoopedWalk&, const LoopedWalk&) = default;
  friend auto operator<=>(const LoopedWalk&, const LoopedWalk&) = default;

  std::string to_string() const;
};

struct WalkCheck {
  bool valid = true;
  int failing_index = 0;  // first i with u_i not dominant, 0 for other failures
  std::string reason;
};

/// Validates a candidate walk of length k*N.
WalkCheck check_walk(const Weight& base, const std::vector<int>& steps, int k);

/// All looped walks at lambda, lexicographic in the step sequence.
std::vector<LoopedWalk> enumerate_walks(int k, const Weight& lambda);

/// All looped walks whose base lies in the dominant ball of the given radius.
std::vector<LoopedWalk> enumerate_ball(Flavor flavor, int N, int k, int radius);

/// The rotation: steps shift right by one, base becomes lambda - eps_{delta_n}.
LoopedWalk rotate_walk(const LoopedWalk& u);
/// Inverse rotation: steps shift left, base becomes lambda + eps_{delta_1}.
LoopedWalk unrotate_walk(const LoopedWalk& u);

enum class SwapKind { Swapped, SameRow, SameColumn };

struct SwapResult {
  SwapKind kind;
  std::optional<LoopedWalk> walk;  // set when kind == Swapped
  int sign = 0;                    // sign of diag(i) - diag(i+1) when blocked
};

/// Exchange delta_i and delta_{i+1} (1 <= i < n).
SwapResult swap_step(const LoopedWalk& u, int i);

/// Diagonal label of the box added at each step (index 0 holds step 1).
std::vector<Rational> walk_diagonals(const LoopedWalk& u);

/// Integer part of each diagonal label: for SL all labels share the same
/// fractional offset, so differences can be read from these.
std::vector<int> walk_diagonals_int(const LoopedWalk& u);

/// The walk at lambda = 0 with steps 1..N repeated k times.
LoopedWalk column_reading_walk(Flavor flavor, int N, int k);

}  // namespace dahalab
