#pragma once

#include <stdexcept>
#include <string>

#include "dahalab/laurent_poly.hpp"

namespace dahalab {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(v)") {}
};

struct PoleError : std::domain_error {
  explicit PoleError(const std::string& at) : std::domain_error("denominator vanishes at v = " + at) {}
};

/// Element of the rational function field Q(v).
///
/// Always kept in canonical form: numerator and denominator coprime, the
/// denominator's lowest exponent is 0 and its lowest coefficient is 1. Two
/// elements are equal iff their canonical forms are identical.
class FieldElement {
 public:
  FieldElement() = default;  // zero
  FieldElement(long c) : num_(LaurentPoly::constant(c)) {}  // NOLINT(implicit)
  explicit FieldElement(const Rational& c) : num_(LaurentPoly::constant(c)) {}
  explicit FieldElement(const LaurentPoly& p) : num_(p) { canonicalize(); }
  FieldElement(const LaurentPoly& num, const LaurentPoly& den);

  static FieldElement monomial(int exponent, const Rational& coeff = 1);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(int e) const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact value at v = c. Throws PoleError if the denominator vanishes there.
  Rational eval(const Rational& c) const;

  /// "num/den" with terms "c*v^e"; parenthesized when a side has several terms.
  std::string to_string() const;

  /// Re-run canonicalization (a no-op on any constructed value).
  FieldElement canonical() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly::constant(1);
};

}  // namespace dahalab
