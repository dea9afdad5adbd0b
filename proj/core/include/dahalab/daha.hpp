#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dahalab/field_element.hpp"
#include "dahalab/params.hpp"
#include "dahalab/walks.hpp"

namespace dahalab {

/// Finitely supported linear combination of basis indices with
/// coefficients in Q(v). Zero coefficients are never stored.
template <class Index>
class FormalVector {
 public:
  using Map = std::map<Index, FieldElement>;

  FormalVector() = default;
  static FormalVector basis(const Index& i, const FieldElement& c = FieldElement(1)) {
    FormalVector v;
    v.add(i, c);
    return v;
  }

  void add(const Index& i, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalVector& operator+=(const FormalVector& b) {
    for (const auto& [i, c] : b.terms_) add(i, c);
    return *this;
  }
  FormalVector& operator-=(const FormalVector& b) {
    for (const auto& [i, c] : b.terms_) add(i, -c);
    return *this;
  }
  FormalVector scaled(const FieldElement& c) const {
    FormalVector v;
    if (c.is_zero()) return v;
    for (const auto& [i, x] : terms_) v.terms_.emplace(i, x * c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FieldElement coeff(const Index& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? FieldElement() : it->second;
  }

  friend bool operator==(const FormalVector&, const FormalVector&) = default;

  template <class Fmt>
  std::string to_string(Fmt&& fmt) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : terms_) {
      os << (first ? "" : " + ") << '[' << c.to_string() << "]*v_" << fmt(i);
      first = false;
    }
    return os.str();
  }

 private:
  Map terms_;
};

using WalkVector = FormalVector<LoopedWalk>;

std::string to_string(const WalkVector& v);

enum class GenKind { T, TInv, Pi, PiInv, Y, YInv, X };

/// A generator. T/TInv use indices 0..n-1, Y/YInv/X use 1..n.
struct Gen {
  GenKind kind;
  int index = 0;
};

/// Operator word; the rightmost generator acts first.
using Word = std::vector<Gen>;

struct Term {
  FieldElement coeff;
  Word word;
};

/// Linear combination of words.
using Expr = std::vector<Term>;

struct Relation {
  std::string id;
  Expr lhs;
  Expr rhs;
};

std::string to_string(const Gen& g, Flavor flavor);
std::string to_string(const Word& w, Flavor flavor);

enum class Sabotage { None, BCoeff };

/// The rectangular representation on looped walks. T_i (1 <= i < n) acts by
/// the seminormal formulas, pi by rotation with coefficient 1, Y_i (Z_i for
/// SL) diagonally by t^{2 diag(i)}. T_0 and X_i are words in these.
class RectangularModule {
 public:
  RectangularModule(Flavor flavor, int N, int k, Sabotage sabotage = Sabotage::None);

  Flavor flavor() const { return flavor_; }
  const ParamTable& params() const { return params_; }
  int n() const { return params_.n; }
  Sabotage sabotage() const { return sabotage_; }

  WalkVector apply(const Gen& g, const WalkVector& x) const;
  WalkVector apply(const Word& w, const WalkVector& x) const;
  WalkVector apply(const Expr& e, const WalkVector& x) const;

  /// v-exponent of the Y_i (Z_i) eigenvalue on v_u, i.e. 2 N diag(i).
  int y_vexp(const LoopedWalk& u, int i) const;
  /// t-exponents 2 diag(1..n).
  std::vector<Rational> weight(const LoopedWalk& u) const;

  /// Off-diagonal data for a swappable pair with diag difference delta = d - d'.
  FieldElement a_coeff(int delta) const;
  FieldElement b_coeff(int delta) const;

  /// X_i as a word in T, TInv and Pi.
  Word x_word(int i) const;

 private:
  WalkVector apply_basis(const Gen& g, const LoopedWalk& u) const;
  WalkVector apply_T(int i, const LoopedWalk& u) const;
  FieldElement compute_a(int delta) const;
  FieldElement compute_b(int delta) const;

  Flavor flavor_;
  ParamTable params_;
  Sabotage sabotage_;
  int cache_radius_;
  std::vector<FieldElement> a_cache_, b_cache_;  // index delta + cache_radius_
};

/// The defining relations of the GL (Y) or SL (Z) presentation for period n.
std::vector<Relation> relation_table(Flavor flavor, const ParamTable& p);
/// X_1 ... X_n = pi^n and X_i X_j = X_j X_i.
std::vector<Relation> derived_relations(const RectangularModule& m);

struct RelationFailure {
  std::string relation_id;
  LoopedWalk basis;
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  Flavor flavor;
  int N = 0;
  int k = 0;
  std::size_t relations = 0;
  std::size_t vectors = 0;
  std::size_t checks = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Applies both sides of every relation to every sample vector and compares
/// the canonical results. Runs on the worker pool; output order is fixed.
RelationReport verify_relations(const RectangularModule& m, const std::vector<Relation>& relations,
                                const std::vector<LoopedWalk>& sample);

}  // namespace dahalab
