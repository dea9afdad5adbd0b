#pragma once

#include <string>
#include <vector>

#include "dahalab/field_element.hpp"
#include "dahalab/verify.hpp"
#include "dahalab/walks.hpp"

namespace dahalab {

/// <lambda + 2rho, lambda>: the ribbon element acts on X[lambda] by qq^{this}.
Rational ribbon_exponent(const Weight& lambda);
/// Exponent of nu^{-1} on V = X[eps_1]: -N (GL), 1/N - N (SL).
Rational ribbon_inverse_on_V(Flavor flavor, int N);

/// qq-exponent of the Y_i scalar on L_u:
/// <u_i + 2rho, u_i> - <u_{i-1} + 2rho, u_{i-1}> - <eps_1 + 2rho, eps_1>.
Rational y_exponent(const LoopedWalk& u, int i);

struct MainTheoremRow {
  LoopedWalk walk;
  std::vector<Rational> y_side;        // y_exponent(u, i)
  std::vector<Rational> tableau_side;  // 2 diag (GL), 2(1-i)/N + 2 diag (SL)
  std::vector<Rational> t_exponents;   // the resulting Y (Z) eigenvalue as t-powers
  bool match = true;
};

struct MainTheoremReport {
  Flavor flavor;
  int N = 0;
  int k = 0;
  int radius = 0;
  std::vector<MainTheoremRow> rows;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For every walk in the ball compares the Schur-Weyl exponents with the
/// periodic tableau diagonals, the exponent telescoping identity and (SL) the
/// Z normalization s^{2(i-1)}.
MainTheoremReport main_theorem_check(Flavor flavor, int N, int k, int radius);
MainTheoremRow main_theorem_row(const LoopedWalk& u);

/// dim of the lambda block of the degree-n invariants: the number of looped
/// walks, 0 when N does not divide n.
long block_dimension(Flavor flavor, int N, int n, const Weight& lambda);

/// The braiding coefficients R^{kl}_{ij}: R(v_i (x) v_j) = sum R^{kl}_{ij} v_k (x) v_l,
/// with qq = v^N.
class RMatrix {
 public:
  RMatrix(int N, bool inverse = false);

  int N() const { return N_; }
  const FieldElement& at(int i, int j, int k, int l) const;  // R^{kl}_{ij}, 1-based

 private:
  int N_;
  std::vector<FieldElement> c_;
};

/// Dense operator on V^{(x) m}, basis ordered lexicographically.
class TensorOp {
 public:
  TensorOp(int N, int factors);
  static TensorOp identity(int N, int factors);
  /// R acting on tensor factors a < b (1-based) of V^{(x) factors}.
  static TensorOp embed(const RMatrix& R, int factors, int a, int b);
  /// The flip of factors a and a+1.
  static TensorOp flip(int N, int factors, int a);

  int dim() const { return dim_; }
  FieldElement& at(int r, int c) { return m_[static_cast<std::size_t>(r * dim_ + c)]; }
  const FieldElement& at(int r, int c) const { return m_[static_cast<std::size_t>(r * dim_ + c)]; }

  TensorOp operator*(const TensorOp& b) const;
  TensorOp operator+(const TensorOp& b) const;
  TensorOp scaled(const FieldElement& c) const;
  bool is_zero() const;
  friend bool operator==(const TensorOp&, const TensorOp&) = default;

 private:
  int N_;
  int factors_;
  int dim_;
  std::vector<FieldElement> m_;
};

/// Coefficient table pattern, Hecke relation of tau o R (and of the SL
/// rescaling qq^{-1/N} tau o R), Yang-Baxter on V^{(x)3}, R R^{-1} = Id.
CheckReport rmatrix_sanity(int N);

}  // namespace dahalab
