#include "dahalab/periodic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace dahalab {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

int floor_div(int a, int n) {
  return (a - mod(a, n)) / n;
}

}  // namespace

PeriodicTableau::PeriodicTableau(int N, int k, std::vector<std::vector<int>> window)
    : N_(N), k_(k), window_(std::move(window)) {
  if (N < 1 || k < 1) throw std::invalid_argument("N and k must be positive");
  if (static_cast<int>(window_.size()) != N) throw std::invalid_argument("window needs N rows");
  for (const auto& row : window_)
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("window rows need k entries");
}

int PeriodicTableau::entry(int row, int col) const {
  const int c0 = mod(col - 1, k_);
  const int r = floor_div(col - 1, k_);
  return window_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(c0)] + r * n();
}

Box PeriodicTableau::locate(int e) const {
  for (int j = 1; j <= N_; ++j)
    for (int c = 1; c <= k_; ++c) {
      const int w = window_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(c - 1)];
      if (mod(e - w, n()) == 0) return Box{j, c + (e - w) / n() * k_};
    }
  throw std::invalid_argument("entry " + std::to_string(e) + " does not occur");
}

Rational PeriodicTableau::diag(int e) const {
  const Box b = locate(e);
  return b.col - b.row;
}

std::vector<Rational> PeriodicTableau::weight_exponents() const {
  std::vector<Rational> out;
  for (int i = 1; i <= n(); ++i) out.push_back(2 * diag(i));
  return out;
}

std::string PeriodicTableau::validity_violation() const {
  std::vector<bool> hit(static_cast<std::size_t>(n()), false);
  for (const auto& row : window_)
    for (int e : row) {
      auto r = static_cast<std::size_t>(mod(e, n()));
      if (hit[r]) return "entries not distinct mod n (" + std::to_string(e) + ")";
      hit[r] = true;
    }
  for (int j = 1; j <= N_; ++j)
    for (int c = -k_ + 1; c <= 2 * k_; ++c) {
      if (c < 2 * k_ && entry(j, c) >= entry(j, c + 1))
        return "row " + std::to_string(j) + " decreases at column " + std::to_string(c);
      if (j < N_ && entry(j, c) >= entry(j + 1, c))
        return "column " + std::to_string(c) + " decreases at row " + std::to_string(j);
    }
  return {};
}

PeriodicTableau PeriodicTableau::act(const AffinePerm& sigma) const {
  if (sigma.n() != n()) throw std::invalid_argument("permutation period differs from n");
  auto w = window_;
  for (auto& row : w)
    for (auto& e : row) e = sigma(e);
  return PeriodicTableau(N_, k_, std::move(w));
}

std::string PeriodicTableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < window_.size(); ++j) {
    os << (j ? "," : "") << '[';
    for (std::size_t c = 0; c < window_[j].size(); ++c) os << (c ? "," : "") << window_[j][c];
    os << ']';
  }
  os << ']';
  return os.str();
}

PeriodicTableau per(const SkewTableau& T) {
  const SkewShape& sh = T.shape();
  if (sh.lambda.flavor() != Flavor::GL) throw std::invalid_argument("per expects a GL tableau; use sper for SL");
  const int N = sh.N(), k = sh.k, n = sh.n();
  std::vector<std::vector<int>> w(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(k)));
  for (int j = 1; j <= N; ++j)
    for (int c = 0; c < k; ++c) {
      const int col = sh.first_column(j) + c;
      const int c0 = mod(col - 1, k);
      const int r = floor_div(col - 1, k);
      w[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(c0)] = T.rows()[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(c)] - r * n;
    }
  return PeriodicTableau(N, k, std::move(w));
}

SkewTableau per_inverse(const PeriodicTableau& P) {
  if (auto why = P.validity_violation(); !why.empty()) throw NotStandard("periodic tableau " + P.to_string() + " is not standard: " + why);
  const int N = P.N(), k = P.k(), n = P.n();
  std::vector<int> first(static_cast<std::size_t>(N), INT_MAX);
  std::vector<std::vector<std::pair<int, int>>> cells(static_cast<std::size_t>(N));
  for (int e = 1; e <= n; ++e) {
    const Box b = P.locate(e);
    cells[static_cast<std::size_t>(b.row - 1)].emplace_back(b.col, e);
    first[static_cast<std::size_t>(b.row - 1)] = std::min(first[static_cast<std::size_t>(b.row - 1)], b.col);
  }
  std::vector<int> lambda;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    auto& cs = cells[static_cast<std::size_t>(j)];
    if (static_cast<int>(cs.size()) != k) throw NotStandard("row " + std::to_string(j + 1) + " does not hold k of the entries 1..n");
    std::sort(cs.begin(), cs.end());
    for (int c = 0; c < k; ++c) {
      if (cs[static_cast<std::size_t>(c)].first != first[static_cast<std::size_t>(j)] + c)
        throw NotStandard("entries 1..n in row " + std::to_string(j + 1) + " are not contiguous");
      rows[static_cast<std::size_t>(j)].push_back(cs[static_cast<std::size_t>(c)].second);
    }
    lambda.push_back(first[static_cast<std::size_t>(j)] - 1);
  }
  Weight lam(Flavor::GL, lambda);
  if (!lam.dominant()) throw NotStandard("recovered weight " + lam.to_string() + " is not dominant");
  SkewTableau T(SkewShape{lam, k}, std::move(rows));
  if (auto why = T.standard_violation(); !why.empty()) throw NotStandard(why);
  return T;
}

PeriodicClass sper(const SkewTableau& T) {
  if (T.shape().lambda.flavor() != Flavor::SL) throw std::invalid_argument("sper expects an SL tableau");
  if (auto why = T.standard_violation(); !why.empty()) throw NotStandard(why);
  return PeriodicClass{T};
}

Rational sl_diag(const PeriodicClass& C, int i) {
  const int n = C.n();
  const int r = floor_div(i - 1, n);
  const int i0 = i - r * n;
  return C.tableau.diag(i0) + r * C.k();
}

std::vector<Rational> sl_weight_exponents(const PeriodicClass& C) {
  std::vector<Rational> out;
  for (int i = 1; i <= C.n(); ++i) out.push_back(2 * sl_diag(C, i));
  return out;
}

PeriodicClass pi_shift_class(const PeriodicClass& C) {
  return PeriodicClass{tab(rotate_walk(tab_inverse(C.tableau)))};
}

std::vector<std::vector<int>> sl_window(const PeriodicClass& C, const Rational& nw_label) {
  const int N = C.N(), k = C.k(), n = C.n();
  std::vector<std::vector<int>> w(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(k)));
  for (int j = 1; j <= N; ++j)
    for (int c = 1; c <= k; ++c) {
      const Rational label = nw_label + (c - 1) - (j - 1);
      bool found = false;
      for (int i = 1; i <= n && !found; ++i) {
        if (C.tableau.position(i).row != j) continue;
        const Rational diff = label - C.tableau.diag(i);
        if (diff.get_den() != 1 || diff.get_num() % k != 0) continue;
        const long s = diff.get_num().get_si() / k;
        w[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(c - 1)] = i + static_cast<int>(s) * n;
        found = true;
      }
      if (!found) throw std::invalid_argument("label " + nw_label.get_str() + " is not a diagonal of this class");
    }
  return w;
}

long filling_sum(const std::vector<std::vector<int>>& window) {
  long s = 0;
  for (const auto& row : window)
    for (int e : row) s += e;
  return s;
}

PeriodicClass r0_class(int N, int k) {
  return PeriodicClass{tab(column_reading_walk(Flavor::SL, N, k))};
}

}  // namespace dahalab
