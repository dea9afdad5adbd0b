#include <stdexcept>

#include "dahalab/schur_weyl.hpp"

namespace dahalab {

RMatrix::RMatrix(int N, bool inverse) : N_(N), c_(static_cast<std::size_t>(N * N * N * N)) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  const FieldElement qq = FieldElement::monomial(inverse ? -N : N);
  const FieldElement off = qq - qq.inverse();
  auto idx = [N](int i, int j, int k, int l) {
    return static_cast<std::size_t>((((i - 1) * N + (j - 1)) * N + (k - 1)) * N + (l - 1));
  };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) {
        c_[idx(i, i, i, i)] = qq;
        continue;
      }
      c_[idx(i, j, i, j)] = FieldElement(1);
      if (i < j) c_[idx(i, j, j, i)] = off;
    }
}

const FieldElement& RMatrix::at(int i, int j, int k, int l) const {
  return c_[static_cast<std::size_t>((((i - 1) * N_ + (j - 1)) * N_ + (k - 1)) * N_ + (l - 1))];
}

TensorOp::TensorOp(int N, int factors) : N_(N), factors_(factors), dim_(1) {
  for (int f = 0; f < factors; ++f) dim_ *= N;
  m_.assign(static_cast<std::size_t>(dim_ * dim_), FieldElement());
}

TensorOp TensorOp::identity(int N, int factors) {
  TensorOp op(N, factors);
  for (int r = 0; r < op.dim_; ++r) op.at(r, r) = FieldElement(1);
  return op;
}

namespace {

std::vector<int> digits(int x, int N, int factors) {
  std::vector<int> d(static_cast<std::size_t>(factors));
  for (int f = factors - 1; f >= 0; --f) {
    d[static_cast<std::size_t>(f)] = x % N;
    x /= N;
  }
  return d;
}

int number(const std::vector<int>& d, int N) {
  int x = 0;
  for (int v : d) x = x * N + v;
  return x;
}

}  // namespace

TensorOp TensorOp::embed(const RMatrix& R, int factors, int a, int b) {
  const int N = R.N();
  TensorOp op(N, factors);
  for (int c = 0; c < op.dim_; ++c) {
    const auto d = digits(c, N, factors);
    const int i = d[static_cast<std::size_t>(a - 1)] + 1, j = d[static_cast<std::size_t>(b - 1)] + 1;
    for (int k = 1; k <= N; ++k)
      for (int l = 1; l <= N; ++l) {
        const FieldElement& x = R.at(i, j, k, l);
        if (x.is_zero()) continue;
        auto e = d;
        e[static_cast<std::size_t>(a - 1)] = k - 1;
        e[static_cast<std::size_t>(b - 1)] = l - 1;
        op.at(number(e, N), c) += x;
      }
  }
  return op;
}

TensorOp TensorOp::flip(int N, int factors, int a) {
  TensorOp op(N, factors);
  for (int c = 0; c < op.dim_; ++c) {
    auto d = digits(c, N, factors);
    std::swap(d[static_cast<std::size_t>(a - 1)], d[static_cast<std::size_t>(a)]);
    op.at(number(d, N), c) = FieldElement(1);
  }
  return op;
}

TensorOp TensorOp::operator*(const TensorOp& b) const {
  TensorOp out(N_, factors_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const FieldElement& x = at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) {
        const FieldElement& y = b.at(k, c);
        if (!y.is_zero()) out.at(r, c) += x * y;
      }
    }
  return out;
}

TensorOp TensorOp::operator+(const TensorOp& b) const {
  TensorOp out = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] += b.m_[i];
  return out;
}

TensorOp TensorOp::scaled(const FieldElement& c) const {
  TensorOp out = *this;
  for (auto& x : out.m_) x *= c;
  return out;
}

bool TensorOp::is_zero() const {
  for (const auto& x : m_)
    if (!x.is_zero()) return false;
  return true;
}

CheckReport rmatrix_sanity(int N) {
  CheckReport rep{"rmatrix", 0, {}};
  const RMatrix R(N), Rinv(N, true);
  const FieldElement qq = FieldElement::monomial(N), one(1);

  // Coefficient pattern.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          ++rep.checked;
          FieldElement expect;
          if (i == j && j == k && k == l)
            expect = qq;
          else if (i == k && j == l && i != j)
            expect = one;
          else if (i == l && j == k && i < j)
            expect = qq - qq.inverse();
          if (!(R.at(i, j, k, l) == expect))
            rep.failures.push_back("R^{" + std::to_string(k) + std::to_string(l) + "}_{" + std::to_string(i) +
                                   std::to_string(j) + "} = " + R.at(i, j, k, l).to_string());
        }

  const TensorOp id2 = TensorOp::identity(N, 2);
  const TensorOp r = TensorOp::embed(R, 2, 1, 2), rinv = TensorOp::embed(Rinv, 2, 1, 2);
  const TensorOp sigma = TensorOp::flip(N, 2, 1) * r;

  ++rep.checked;
  if (!(r * rinv == id2)) rep.failures.push_back("R R^{-1} != Id");
  ++rep.checked;
  if (!(rinv * r == id2)) rep.failures.push_back("R^{-1} R != Id");

  ++rep.checked;
  const TensorOp hecke = (sigma + id2.scaled(-qq)) * (sigma + id2.scaled(qq.inverse()));
  if (!hecke.is_zero()) rep.failures.push_back("(sigma - qq)(sigma + qq^{-1}) != 0");

  // SL rescaling by qq^{-1/N} = v^{-1}.
  ++rep.checked;
  const FieldElement s = FieldElement::monomial(-1);
  const TensorOp sigma_sl = sigma.scaled(s);
  const TensorOp hecke_sl =
      (sigma_sl + id2.scaled(-(qq * s))) * (sigma_sl + id2.scaled(qq.inverse() * s));
  if (!hecke_sl.is_zero()) rep.failures.push_back("shifted Hecke relation fails");

  ++rep.checked;
  const TensorOp r12 = TensorOp::embed(R, 3, 1, 2), r13 = TensorOp::embed(R, 3, 1, 3), r23 = TensorOp::embed(R, 3, 2, 3);
  if (!(r12 * r13 * r23 == r23 * r13 * r12)) rep.failures.push_back("Yang-Baxter R12 R13 R23 = R23 R13 R12 fails");

  ++rep.checked;
  const TensorOp s1 = TensorOp::flip(N, 3, 1) * r12, s2 = TensorOp::flip(N, 3, 2) * r23;
  if (!(s1 * s2 * s1 == s2 * s1 * s2)) rep.failures.push_back("braid relation for sigma fails");

  ++rep.checked;
  const Rational nu_gl = ribbon_inverse_on_V(Flavor::GL, N), nu_sl = ribbon_inverse_on_V(Flavor::SL, N);
  if (nu_gl != -N) rep.failures.push_back("GL nu^{-1}|_V exponent " + nu_gl.get_str());
  if (nu_sl != frac(1, N) - N) rep.failures.push_back("SL nu^{-1}|_V exponent " + nu_sl.get_str());
  return rep;
}

}  // namespace dahalab
