#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dahalab {

using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms (mpq_class(a, b) alone does not reduce).
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" text for a rational ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Laurent polynomial in one formal variable v with exact rational
/// coefficients. Stored densely between the lowest and highest nonzero
/// exponent; the zero polynomial has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
  static LaurentPoly constant(const Rational& c) { return monomial(0, c); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  // Lowest / highest exponent with a nonzero coefficient. Undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(int exponent) const;
  const Rational& lowest_coeff() const { return coeffs_.front(); }
  const Rational& leading_coeff() const { return coeffs_.back(); }

  // (exponent, coefficient) for every nonzero term, ascending by exponent.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentPoly shifted(int by) const;
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly operator-() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Value at v = c. Requires c != 0 when the polynomial has negative exponents.
  Rational eval(const Rational& c) const;

  /// Terms "c*v^e" joined by " + ", ascending by exponent; "0" for zero.
  std::string to_string() const;

  // Polynomial algorithms on the exponent-shifted representation
  // (treat the polynomial as ordinary after factoring out v^low()).
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace dahalab
