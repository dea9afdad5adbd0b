#pragma once

#include <stdexcept>

#include "dahalab/field_element.hpp"

namespace dahalab {

/// Rectangle size and the specialized parameters as powers of the formal
/// variable v (t = v^N). Every named parameter is a monomial.
struct ParamTable {
  int N;
  int k;
  int n;  // N * k

  ParamTable(int N_, int k_);

  // Exponents of v.
  int t_exp() const { return N; }
  int q_exp() const { return -2 * k * N; }
  int sdot_exp() const { return 1; }
  int upsilon_exp() const { return 1 - N * N; }
  int qq_exp() const { return N; }  // the quantum-group parameter, equal to t

  FieldElement t() const { return FieldElement::monomial(t_exp()); }
  FieldElement q() const { return FieldElement::monomial(q_exp()); }
  FieldElement sdot() const { return FieldElement::monomial(sdot_exp()); }
  FieldElement upsilon() const { return FieldElement::monomial(upsilon_exp()); }
  FieldElement qq() const { return FieldElement::monomial(qq_exp()); }

  /// t^e for e in (1/N)Z, as v^{N e}. Throws if N e is not an integer.
  FieldElement t_pow(const Rational& e) const;
};

}  // namespace dahalab
