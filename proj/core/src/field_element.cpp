#include "dahalab/field_element.hpp"

#include <utility>

namespace dahalab {

FieldElement::FieldElement(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  canonicalize();
}

FieldElement FieldElement::monomial(int exponent, const Rational& coeff) {
  FieldElement f;
  f.num_ = LaurentPoly::monomial(exponent, coeff);
  return f;
}

void FieldElement::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const int shift = -den_.low();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  if (!den_.is_monomial()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (g.high() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational c = den_.lowest_coeff();
  if (c != 1) {
    const Rational inv = Rational(1) / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool FieldElement::is_one() const {
  return den_.is_monomial() && num_ == den_;
}

FieldElement FieldElement::operator-() const {
  FieldElement f = *this;
  f.num_ = -f.num_;
  return f;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    num_ += b.num_;
  } else {
    num_ = num_ * b.den_ + b.num_ * den_;
    den_ = den_ * b.den_;
  }
  canonicalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  return *this += -b;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = FieldElement();
  // A canonical monomial has denominator 1, and c*v^e is coprime to any
  // canonical denominator, so no gcd is needed.
  if (b.is_monomial()) {
    num_ = num_ * b.num_;
    return *this;
  }
  if (is_monomial()) {
    num_ = num_ * b.num_;
    den_ = b.den_;
    return *this;
  }
  num_ = num_ * b.num_;
  den_ = den_ * b.den_;
  canonicalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  return *this *= b.inverse();
}

Rational FieldElement::eval(const Rational& c) const {
  Rational d;
  try {
    d = den_.eval(c);
  } catch (const std::domain_error&) {
    throw PoleError(c.get_str());
  }
  if (d == 0) throw PoleError(c.get_str());
  try {
    return num_.eval(c) / d;
  } catch (const std::domain_error&) {
    throw PoleError(c.get_str());
  }
}

std::string FieldElement::to_string() const {
  auto side = [](const LaurentPoly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return side(num_) + "/" + side(den_);
}

FieldElement FieldElement::canonical() const {
  FieldElement f;
  f.num_ = num_;
  f.den_ = den_;
  f.canonicalize();
  return f;
}

}  // namespace dahalab
