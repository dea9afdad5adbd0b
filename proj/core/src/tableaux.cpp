#include "dahalab/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace dahalab {

Rational SkewShape::label_offset() const {
  if (lambda.flavor() == Flavor::GL) return 0;
  return frac(-lambda.size(), N());
}

Rational SkewShape::principal_label() const {
  return young_diagram(lambda).principal_label;
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.N()) throw std::invalid_argument("tableau has the wrong number of rows");
  const int n = shape_.n();
  where_.assign(static_cast<std::size_t>(n), Box{0, 0});
  for (int j = 1; j <= shape_.N(); ++j) {
    const auto& row = rows_[static_cast<std::size_t>(j - 1)];
    if (static_cast<int>(row.size()) != shape_.k)
      throw std::invalid_argument("row " + std::to_string(j) + " must have " + std::to_string(shape_.k) + " boxes");
    for (int c = 0; c < shape_.k; ++c) {
      const int e = row[static_cast<std::size_t>(c)];
      if (e >= 1 && e <= n) where_[static_cast<std::size_t>(e - 1)] = Box{j, shape_.first_column(j) + c};
    }
  }
}

std::string SkewTableau::standard_violation() const {
  const int n = shape_.n();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& row : rows_)
    for (int e : row) {
      if (e < 1 || e > n) return "entry " + std::to_string(e) + " outside 1.." + std::to_string(n);
      if (seen[static_cast<std::size_t>(e - 1)]++) return "entry " + std::to_string(e) + " repeated";
    }
  for (int j = 1; j <= shape_.N(); ++j) {
    const auto& row = rows_[static_cast<std::size_t>(j - 1)];
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c - 1] >= row[c]) return "row " + std::to_string(j) + " not increasing";
    if (j == shape_.N()) continue;
    const auto& below = rows_[static_cast<std::size_t>(j)];
    const int off = shape_.first_column(j + 1) - shape_.first_column(j);
    // Column c of row j sits above position c - off of row j+1.
    for (int c = 0; c < shape_.k; ++c) {
      const int cb = c - off;
      if (cb < 0 || cb >= shape_.k) continue;
      if (row[static_cast<std::size_t>(c)] >= below[static_cast<std::size_t>(cb)])
        return "column " + std::to_string(shape_.first_column(j) + c) + " not increasing at row " + std::to_string(j);
    }
  }
  return {};
}

Box SkewTableau::position(int entry) const {
  if (entry < 1 || entry > n()) throw std::out_of_range("entry outside 1..n");
  return where_[static_cast<std::size_t>(entry - 1)];
}

Rational SkewTableau::diag(int entry) const {
  const Box b = position(entry);
  return Rational(b.col - b.row) + shape_.label_offset();
}

std::vector<Rational> SkewTableau::diag_vector() const {
  std::vector<Rational> out;
  for (int i = 1; i <= n(); ++i) out.push_back(diag(i));
  return out;
}

std::vector<Rational> SkewTableau::weight_exponents() const {
  auto d = diag_vector();
  for (auto& x : d) x *= 2;
  return d;
}

std::string SkewTableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    os << (j ? "," : "") << '[';
    for (std::size_t c = 0; c < rows_[j].size(); ++c) os << (c ? "," : "") << rows_[j][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

SkewTableau tab(const LoopedWalk& u) {
  const int N = u.N();
  if (u.n() % N != 0) throw std::invalid_argument("walk length is not a multiple of N");
  const int k = u.n() / N;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(N));
  for (int i = 0; i < u.n(); ++i) rows[static_cast<std::size_t>(u.steps[static_cast<std::size_t>(i)] - 1)].push_back(i + 1);
  return SkewTableau(SkewShape{u.base, k}, std::move(rows));
}

LoopedWalk tab_inverse(const SkewTableau& T) {
  if (auto why = T.standard_violation(); !why.empty()) throw NotStandard("tableau " + T.to_string() + " is not standard: " + why);
  LoopedWalk u{T.shape().lambda, {}};
  for (int i = 1; i <= T.n(); ++i) u.steps.push_back(T.position(i).row);
  return u;
}

namespace {

Integer factorial(long m) {
  Integer f = 1;
  for (long i = 2; i <= m; ++i) f *= i;
  return f;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace

Integer count_skew_syt(const SkewShape& shape) {
  const int N = shape.N();
  const int base = shape.lambda[N];
  std::vector<long> mu, nu;
  for (int i = 1; i <= N; ++i) {
    nu.push_back(shape.lambda[i] - base);
    mu.push_back(shape.lambda[i] - base + shape.k);
  }
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const long arg = mu[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(j)] - i + j;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          arg < 0 ? Rational(0) : Rational(Integer(1), factorial(arg));
    }
  Rational c = determinant(std::move(m)) * Rational(factorial(shape.n()));
  if (c.get_den() != 1) throw std::logic_error("Aitken determinant is not an integer");
  return c.get_num();
}

Integer count_rect_syt_hook(int N, int k) {
  Integer hooks = 1;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < k; ++c) hooks *= (k - c) + (N - r) - 1;
  return factorial(static_cast<long>(N) * k) / hooks;
}

std::vector<SkewTableau> enumerate_rect_syt(int N, int k, Flavor flavor) {
  std::vector<SkewTableau> out;
  for (const auto& u : enumerate_walks(k, Weight::zero(flavor, N))) out.push_back(tab(u));
  return out;
}

}  // namespace dahalab
