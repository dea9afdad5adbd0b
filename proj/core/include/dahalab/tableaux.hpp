#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dahalab/walks.hpp"

namespace dahalab {

/// D^lambda = (YD(lambda) + (k^N)) / YD(lambda). Row j occupies absolute
/// columns lambda_j + 1 .. lambda_j + k (SL: the gamma_N = 0 representative).
struct SkewShape {
  Weight lambda;
  int k = 1;

  int N() const { return lambda.rank(); }
  int n() const { return N() * k; }
  int first_column(int row) const { return lambda[row] + 1; }
  /// Added to (column - row) to get the diagonal label: 0 (GL), -|lambda|/N (SL).
  Rational label_offset() const;
  Rational principal_label() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;
};

struct Box {
  int row;
  int col;  // absolute column

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

class SkewTableau {
 public:
  SkewTableau() = default;
  /// rows[j][c] is the entry in row j+1 at column first_column(j+1) + c.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return shape_.n(); }

  /// Empty string when standard, otherwise the first violation found.
  std::string standard_violation() const;
  bool is_standard() const { return standard_violation().empty(); }

  Box position(int entry) const;
  Rational diag(int entry) const;
  std::vector<Rational> diag_vector() const;
  /// 2 * diag(i): the Y eigenvalue of v_T is t^{these}.
  std::vector<Rational> weight_exponents() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

  std::string to_string() const;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Box> where_;  // where_[e-1], filled for in-range entries
};

struct NotStandard : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Entry i goes to the leftmost vacant box in row delta_i.
SkewTableau tab(const LoopedWalk& u);
/// Reads delta_i = row of entry i. Throws NotStandard for non-standard input.
LoopedWalk tab_inverse(const SkewTableau& T);

/// Number of standard fillings by the Aitken determinant.
Integer count_skew_syt(const SkewShape& shape);
/// f^{(k^N)} by the hook length formula.
Integer count_rect_syt_hook(int N, int k);

/// Standard Young tableaux of the N x k rectangle (lambda = 0), in the
/// lexicographic order of their reading walks.
std::vector<SkewTableau> enumerate_rect_syt(int N, int k, Flavor flavor = Flavor::GL);

}  // namespace dahalab
