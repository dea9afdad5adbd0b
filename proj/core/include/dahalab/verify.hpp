#pragma once

#include <string>
#include <vector>

#include "dahalab/affine_symmetric.hpp"
#include "dahalab/daha.hpp"
#include "dahalab/tableaux.hpp"

namespace dahalab {

/// Generic outcome of a finite check: how many items were examined and a
/// witness line for every mismatch.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Weight space audit and the support rules for generators s_0..s_{n-1}
/// and pi, on the walks in the ball of the given radius. Rules are only
/// evaluated at interior bases (GL max|m_i| <= radius-1, SL m_1 <= radius-2)
/// so that every neighbour is enumerated.
CheckReport support_rule_check(Flavor flavor, int N, int k, int radius);

/// All weights of the walks in the ball are pairwise distinct.
CheckReport distinct_weights_check(Flavor flavor, int N, int k, int radius);

struct ContentBoundWitness {
  SkewTableau tableau;
  std::vector<int> gamma;
};

struct ContentBoundReport {
  int N = 0;
  int k = 0;
  std::size_t tableaux = 0;
  std::size_t gammas_per_tableau = 0;
  std::vector<std::string> bound_violations;         // a_1 = 0, 1-N <= a_i <= k-1, a_n = k-N
  std::vector<ContentBoundWitness> nontrivial;       // gamma != 0 with {a_i - k gamma_i} = {a_i}
  bool ok() const { return bound_violations.empty() && nontrivial.empty(); }
};

/// For each R in SYT(k^N) and every gamma_1 <= ... <= gamma_n with
/// |gamma_i| <= bound, tests whether {a_i - k gamma_i} is a rearrangement of
/// {a_i}, a_i = diag_R(i).
ContentBoundReport content_bound_check(int N, int k, int bound = 2);

/// zeta_order^zeta_exp * c.
struct TwistScalar {
  int zeta_exp = 0;
  int order = 1;
  FieldElement c;

  friend bool operator==(const TwistScalar&, const TwistScalar&) = default;
  std::string to_string() const;
};

/// Eigenvalue of pi^N on v_{R0} in the SL module twisted by pi -> zeta_n^r pi.
TwistScalar twist_eigenvalue(int N, int k, int r);
/// Twists r1, r2 give isomorphic modules iff their pi^N eigenvalues agree.
bool twist_classify(int r1, int r2, int N, int k);

struct TwistReport {
  int N = 0;
  int k = 0;
  TwistScalar untwisted;
  std::vector<TwistScalar> eigenvalues;    // r = 0..n-1
  std::vector<std::vector<int>> classes;   // twists grouped by eigenvalue
};

TwistReport twist_report(int N, int k);

/// The affine Hecke algebra module on SYT(k^N), built from tableaux alone.
class AffineHeckeRectangle {
 public:
  using Vector = FormalVector<SkewTableau>;

  AffineHeckeRectangle(int N, int k);

  const std::vector<SkewTableau>& basis() const { return basis_; }
  Vector apply_T(int i, const Vector& x) const;
  Vector apply_Y(int i, const Vector& x) const;

 private:
  ParamTable params_;
  std::vector<SkewTableau> basis_;
};

/// Compares the lambda = 0 block of the GL walk module with the tableau
/// module: T_1..T_{n-1} and Y_i must agree under Tab; the AHA relations
/// hold; Y_1 acts by 1 and Y_1...Y_n by t^{n(k-N)}.
CheckReport aha_rectangle_check(int N, int k);

}  // namespace dahalab
