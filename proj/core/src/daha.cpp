#include "dahalab/daha.hpp"

#include <stdexcept>

namespace dahalab {

std::string to_string(const WalkVector& v) {
  return v.to_string([](const LoopedWalk& u) { return u.to_string(); });
}

std::string to_string(const Gen& g, Flavor flavor) {
  const std::string y = flavor == Flavor::GL ? "Y" : "Z";
  switch (g.kind) {
    case GenKind::T: return "T" + std::to_string(g.index);
    case GenKind::TInv: return "T" + std::to_string(g.index) + "^-1";
    case GenKind::Pi: return "pi";
    case GenKind::PiInv: return "pi^-1";
    case GenKind::Y: return y + std::to_string(g.index);
    case GenKind::YInv: return y + std::to_string(g.index) + "^-1";
    case GenKind::X: return "X" + std::to_string(g.index);
  }
  return "?";
}

std::string to_string(const Word& w, Flavor flavor) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += (s.empty() ? "" : " ") + to_string(g, flavor);
  return s;
}

RectangularModule::RectangularModule(Flavor flavor, int N, int k, Sabotage sabotage)
    : flavor_(flavor), params_(N, k), sabotage_(sabotage), cache_radius_(4 * params_.n + 8) {
  if (N < 2) throw std::invalid_argument("the rectangular module needs N >= 2");
  for (int d = -cache_radius_; d <= cache_radius_; ++d) {
    a_cache_.push_back(d == 0 ? FieldElement() : compute_a(d));
    b_cache_.push_back(d == 0 ? FieldElement() : compute_b(d));
  }
}

FieldElement RectangularModule::compute_a(int delta) const {
  const FieldElement t = params_.t();
  const FieldElement u = params_.t().pow(2 * delta);
  return (t - t.inverse()) / (FieldElement(1) - u);
}

FieldElement RectangularModule::compute_b(int delta) const {
  if (delta < 0 || sabotage_ == Sabotage::BCoeff) return FieldElement(1);
  const FieldElement u = params_.t().pow(2 * delta);
  const FieldElement t2 = params_.t().pow(2);
  const FieldElement one(1);
  const FieldElement den = (one - u) * (one - u);
  return (one - u * t2) * (one - u / t2) / den;
}

FieldElement RectangularModule::a_coeff(int delta) const {
  if (delta == 0) throw std::logic_error("adjacent entries on the same diagonal");
  if (delta >= -cache_radius_ && delta <= cache_radius_) return a_cache_[static_cast<std::size_t>(delta + cache_radius_)];
  return compute_a(delta);
}

FieldElement RectangularModule::b_coeff(int delta) const {
  if (delta == 0) throw std::logic_error("adjacent entries on the same diagonal");
  if (delta >= -cache_radius_ && delta <= cache_radius_) return b_cache_[static_cast<std::size_t>(delta + cache_radius_)];
  return compute_b(delta);
}

int RectangularModule::y_vexp(const LoopedWalk& u, int i) const {
  // Diagonal of step i on the unnormalized lift.
  std::vector<int> m = u.base.coords();
  for (int j = 0; j < i - 1; ++j) ++m[static_cast<std::size_t>(u.steps[static_cast<std::size_t>(j)] - 1)];
  const int d = u.steps[static_cast<std::size_t>(i - 1)];
  const int diag = m[static_cast<std::size_t>(d - 1)] + 1 - d;
  const int N = params_.N;
  if (flavor_ == Flavor::GL) return 2 * N * diag;
  return 2 * N * diag - 2 * u.base.total();
}

std::vector<Rational> RectangularModule::weight(const LoopedWalk& u) const {
  std::vector<Rational> out;
  for (int i = 1; i <= n(); ++i) out.push_back(frac(y_vexp(u, i), params_.N));
  return out;
}

WalkVector RectangularModule::apply_T(int i, const LoopedWalk& u) const {
  const SwapResult s = swap_step(u, i);
  switch (s.kind) {
    case SwapKind::SameRow: return WalkVector::basis(u, params_.t());
    case SwapKind::SameColumn: return WalkVector::basis(u, -params_.t().inverse());
    case SwapKind::Swapped: break;
  }
  const auto diags = walk_diagonals_int(u);
  const int delta = diags[static_cast<std::size_t>(i - 1)] - diags[static_cast<std::size_t>(i)];
  WalkVector out = WalkVector::basis(u, a_coeff(delta));
  out.add(*s.walk, b_coeff(delta));
  return out;
}

Word RectangularModule::x_word(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("X index out of range");
  if (i == 1) {
    Word w{{GenKind::Pi, 0}};
    for (int j = n() - 1; j >= 1; --j) w.push_back({GenKind::TInv, j});
    return w;
  }
  Word inner = x_word(i - 1);
  Word w{{GenKind::T, i - 1}};
  w.insert(w.end(), inner.begin(), inner.end());
  w.push_back({GenKind::T, i - 1});
  return w;
}

WalkVector RectangularModule::apply_basis(const Gen& g, const LoopedWalk& u) const {
  const int n = this->n();
  switch (g.kind) {
    case GenKind::T:
      if (g.index == 0) return apply(Word{{GenKind::Pi, 0}, {GenKind::T, n - 1}, {GenKind::PiInv, 0}}, WalkVector::basis(u));
      if (g.index < 0 || g.index >= n) throw std::out_of_range("T index out of range");
      return apply_T(g.index, u);
    case GenKind::TInv: {
      // T^{-1} = T - (t - t^{-1}).
      WalkVector out = apply(Gen{GenKind::T, g.index}, WalkVector::basis(u));
      out.add(u, params_.t().inverse() - params_.t());
      return out;
    }
    case GenKind::Pi: return WalkVector::basis(rotate_walk(u));
    case GenKind::PiInv: return WalkVector::basis(unrotate_walk(u));
    case GenKind::Y:
      if (g.index < 1 || g.index > n) throw std::out_of_range("Y index out of range");
      return WalkVector::basis(u, FieldElement::monomial(y_vexp(u, g.index)));
    case GenKind::YInv:
      if (g.index < 1 || g.index > n) throw std::out_of_range("Y index out of range");
      return WalkVector::basis(u, FieldElement::monomial(-y_vexp(u, g.index)));
    case GenKind::X: return apply(x_word(g.index), WalkVector::basis(u));
  }
  throw std::logic_error("unknown generator");
}

WalkVector RectangularModule::apply(const Gen& g, const WalkVector& x) const {
  WalkVector out;
  for (const auto& [u, c] : x) out += apply_basis(g, u).scaled(c);
  return out;
}

WalkVector RectangularModule::apply(const Word& w, const WalkVector& x) const {
  WalkVector cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

WalkVector RectangularModule::apply(const Expr& e, const WalkVector& x) const {
  WalkVector out;
  for (const auto& term : e) out += apply(term.word, x).scaled(term.coeff);
  return out;
}

}  // namespace dahalab
