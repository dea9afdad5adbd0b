#include "dahalab/params.hpp"

namespace dahalab {

ParamTable::ParamTable(int N_, int k_) : N(N_), k(k_), n(N_ * k_) {
  if (N < 1 || k < 1) throw std::invalid_argument("N and k must be positive");
}

FieldElement ParamTable::t_pow(const Rational& e) const {
  Rational ve = e * N;
  if (ve.get_den() != 1) throw std::invalid_argument("t-exponent " + e.get_str() + " is not in (1/N)Z");
  return FieldElement::monomial(static_cast<int>(ve.get_num().get_si()));
}

}  // namespace dahalab
