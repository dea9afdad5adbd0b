#pragma once

#include <string>
#include <vector>

#include "dahalab/laurent_poly.hpp"

namespace dahalab {

enum class Flavor { GL, SL };

std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

/// Integral weight of GL_N (coordinates in the eps basis) or SL_N.
///
/// SL weights are classes modulo the determinant weight; they are always
/// stored by the representative whose last coordinate is 0.
class Weight {
 public:
  Weight() = default;
  Weight(Flavor flavor, std::vector<int> coords);

  static Weight zero(Flavor flavor, int N);
  static Weight unit(Flavor flavor, int N, int i);  // eps_i / e_i, i is 1-based
  static Weight det(int N);                         // (1,...,1), GL only
  static Weight fundamental(int N, int i);          // SL omega_i = e_1 + ... + e_i

  Flavor flavor() const { return flavor_; }
  int rank() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& coords() const { return m_; }
  int operator[](int i) const { return m_[static_cast<std::size_t>(i - 1)]; }  // 1-based

  bool dominant() const;
  /// Number of boxes of YD: sum of (m_i - m_N).
  int size() const;
  /// Sum of the stored coordinates.
  int total() const;

  Weight plus_unit(int i) const;
  Weight minus_unit(int i) const;
  Weight operator+(const Weight& b) const;
  Weight operator-(const Weight& b) const;

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  Flavor flavor_ = Flavor::GL;
  std::vector<int> m_;
};

/// The invariant form: sum a_i b_i (GL), sum a_i b_i - (sum a)(sum b)/N (SL).
Rational form(const Weight& a, const Weight& b);

/// 2 rho = (N-1, N-3, ..., 1-N).
Weight two_rho(Flavor flavor, int N);

struct YoungDiagram {
  std::vector<int> rows;    // m_i - m_N
  Rational principal_label;  // m_N (GL) or -|lambda|/N (SL)
};

YoungDiagram young_diagram(const Weight& lambda);

/// lambda* = sum -m_i eps_{N+1-i}.
Weight dual_weight(const Weight& lambda);

/// Dominant weights in a ball: GL max|m_i| <= r, SL (m_N = 0) m_1 <= r.
/// Sorted ascending.
std::vector<Weight> dominant_ball(Flavor flavor, int N, int r);

/// Diagonal label of the box added in row i of YD(lambda): GL
/// m_i + 1 - i, SL the same minus (sum m)/N.
Rational added_box_label(const Weight& lambda, int i);

}  // namespace dahalab
