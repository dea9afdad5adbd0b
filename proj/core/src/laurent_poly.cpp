#include "dahalab/laurent_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dahalab {

std::string to_string(const Rational& r) {
  return r.get_str();
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

Rational LaurentPoly::eval(const Rational& c) const {
  if (is_zero()) return 0;
  if (c == 0) {
    if (low_ < 0) throw std::domain_error("negative power evaluated at v = 0");
    return coeff(0);
  }
  // Horner on the dense coefficients, then scale by c^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
  Rational scale = 1;
  Rational base = low_ >= 0 ? c : Rational(1) / c;
  for (int e = std::abs(low_); e > 0; --e) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*v^" << e;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  // Work on v^{-low} * a and v^{-low} * b as ordinary polynomials.
  LaurentPoly r = a.shifted(a.is_zero() ? 0 : -a.low_);
  const LaurentPoly d = b.shifted(-b.low_);
  LaurentPoly q;
  const int dd = d.high();
  while (!r.is_zero() && r.high() >= dd) {
    const int shift = r.high() - dd;
    const Rational c = r.leading_coeff() / d.leading_coeff();
    LaurentPoly term = LaurentPoly::monomial(shift, c);
    q += term;
    r -= term * d;
  }
  return {q, r};
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) std::swap(a, b);
  if (a.is_zero()) return {};
  a = a.shifted(-a.low_);
  if (!b.is_zero()) b = b.shifted(-b.low_);
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.shifted(-r.low_);
  }
  return a.scaled(Rational(1) / a.leading_coeff());
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (is_zero()) return {};
  auto [q, r] = divmod(*this, divisor);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q.shifted(low_ - divisor.low_);
}

}  // namespace dahalab
