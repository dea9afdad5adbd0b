#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dahalab/affine_symmetric.hpp"
#include "dahalab/tableaux.hpp"

namespace dahalab {

/// n-periodic standard tableau of shape (k^N) on the N x infinity strip,
/// stored by the filling of columns 1..k. Box (j, c + r k) holds
/// window(j, c) + r n; the diagonal label of box (j, c) is c - j.
class PeriodicTableau {
 public:
  PeriodicTableau() = default;
  PeriodicTableau(int N, int k, std::vector<std::vector<int>> window);

  int N() const { return N_; }
  int k() const { return k_; }
  int n() const { return N_ * k_; }
  const std::vector<std::vector<int>>& window() const { return window_; }

  /// Entry in row j (1-based) at any integer column.
  int entry(int row, int col) const;
  /// Box holding the given integer entry.
  Box locate(int entry) const;
  Rational diag(int entry) const;
  std::vector<Rational> weight_exponents() const;  // 2 diag(1..n)

  /// Empty when valid; checks residues and monotonicity on columns -k+1..2k.
  std::string validity_violation() const;
  bool is_valid() const { return validity_violation().empty(); }

  /// Box-wise sigma applied to entries.
  PeriodicTableau act(const AffinePerm& sigma) const;

  friend bool operator==(const PeriodicTableau&, const PeriodicTableau&) = default;
  friend auto operator<=>(const PeriodicTableau&, const PeriodicTableau&) = default;

  std::string to_string() const;

 private:
  int N_ = 1;
  int k_ = 1;
  std::vector<std::vector<int>> window_;
};

/// Per: place T at its absolute columns and periodize. Requires a GL shape.
PeriodicTableau per(const SkewTableau& T);
/// Recovers (lambda, T) from the boxes holding 1..n. Throws on invalid input.
SkewTableau per_inverse(const PeriodicTableau& P);

/// SL periodic class, recorded by its preimage (lambda, T) with gamma_N = 0.
struct PeriodicClass {
  SkewTableau tableau;

  const Weight& lambda() const { return tableau.shape().lambda; }
  int N() const { return tableau.shape().N(); }
  int k() const { return tableau.shape().k; }
  int n() const { return tableau.n(); }

  friend bool operator==(const PeriodicClass&, const PeriodicClass&) = default;
  friend auto operator<=>(const PeriodicClass&, const PeriodicClass&) = default;
};

PeriodicClass sper(const SkewTableau& T);
/// Filling-sum diagonal label of any integer entry; diag(i + n) = diag(i) + k.
Rational sl_diag(const PeriodicClass& C, int i);
std::vector<Rational> sl_weight_exponents(const PeriodicClass& C);
/// The class of pi . C.
PeriodicClass pi_shift_class(const PeriodicClass& C);
/// The N x k window whose north-west box carries the given label.
std::vector<std::vector<int>> sl_window(const PeriodicClass& C, const Rational& nw_label);
long filling_sum(const std::vector<std::vector<int>>& window);
/// R0 bar: the column reading of the rectangle at lambda = 0.
PeriodicClass r0_class(int N, int k);

}  // namespace dahalab
