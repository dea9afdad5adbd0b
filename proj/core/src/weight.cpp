#include "dahalab/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dahalab {

std::string to_string(Flavor f) {
  return f == Flavor::GL ? "gl" : "sl";
}

Flavor parse_flavor(const std::string& s) {
  if (s == "gl" || s == "GL") return Flavor::GL;
  if (s == "sl" || s == "SL") return Flavor::SL;
  throw std::invalid_argument("unknown flavor '" + s + "' (expected gl or sl)");
}

Weight::Weight(Flavor flavor, std::vector<int> coords) : flavor_(flavor), m_(std::move(coords)) {
  if (m_.empty()) throw std::invalid_argument("weight needs at least one coordinate");
  normalize();
}

void Weight::normalize() {
  if (flavor_ != Flavor::SL) return;
  const int last = m_.back();
  if (last != 0)
    for (auto& x : m_) x -= last;
}

Weight Weight::zero(Flavor flavor, int N) {
  return Weight(flavor, std::vector<int>(static_cast<std::size_t>(N), 0));
}

Weight Weight::unit(Flavor flavor, int N, int i) {
  if (i < 1 || i > N) throw std::out_of_range("unit weight index out of range");
  std::vector<int> m(static_cast<std::size_t>(N), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  return Weight(flavor, std::move(m));
}

Weight Weight::det(int N) {
  return Weight(Flavor::GL, std::vector<int>(static_cast<std::size_t>(N), 1));
}

Weight Weight::fundamental(int N, int i) {
  std::vector<int> m(static_cast<std::size_t>(N), 0);
  for (int j = 0; j < i; ++j) m[static_cast<std::size_t>(j)] = 1;
  return Weight(Flavor::SL, std::move(m));
}

bool Weight::dominant() const {
  return std::is_sorted(m_.rbegin(), m_.rend());
}

int Weight::size() const {
  int s = 0;
  for (int x : m_) s += x - m_.back();
  return s;
}

int Weight::total() const {
  int s = 0;
  for (int x : m_) s += x;
  return s;
}

Weight Weight::plus_unit(int i) const {
  Weight w = *this;
  w.m_.at(static_cast<std::size_t>(i - 1)) += 1;
  w.normalize();
  return w;
}

Weight Weight::minus_unit(int i) const {
  Weight w = *this;
  w.m_.at(static_cast<std::size_t>(i - 1)) -= 1;
  w.normalize();
  return w;
}

Weight Weight::operator+(const Weight& b) const {
  if (b.rank() != rank()) throw std::invalid_argument("rank mismatch");
  Weight w = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) w.m_[i] += b.m_[i];
  w.normalize();
  return w;
}

Weight Weight::operator-(const Weight& b) const {
  if (b.rank() != rank()) throw std::invalid_argument("rank mismatch");
  Weight w = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) w.m_[i] -= b.m_[i];
  w.normalize();
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
  os << ')';
  return os.str();
}

Rational form(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  Rational s = 0;
  for (int i = 1; i <= a.rank(); ++i) s += a[i] * b[i];
  if (a.flavor() == Flavor::SL || b.flavor() == Flavor::SL)
    s -= frac(static_cast<long>(a.total()) * b.total(), a.rank());
  return s;
}

Weight two_rho(Flavor flavor, int N) {
  std::vector<int> m;
  for (int i = 1; i <= N; ++i) m.push_back(N + 1 - 2 * i);
  // Built unnormalized: the SL class of 2rho has sum zero representative.
  Weight w(Flavor::GL, m);
  if (flavor == Flavor::GL) return w;
  return Weight(Flavor::SL, m);
}

YoungDiagram young_diagram(const Weight& lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("young_diagram: weight " + lambda.to_string() + " is not dominant");
  YoungDiagram yd;
  const int N = lambda.rank();
  for (int i = 1; i <= N; ++i) yd.rows.push_back(lambda[i] - lambda[N]);
  if (lambda.flavor() == Flavor::GL)
    yd.principal_label = lambda[N];
  else
    yd.principal_label = frac(-lambda.size(), N);
  return yd;
}

Weight dual_weight(const Weight& lambda) {
  std::vector<int> m(lambda.coords().rbegin(), lambda.coords().rend());
  for (auto& x : m) x = -x;
  return Weight(lambda.flavor(), std::move(m));
}

namespace {

void ball_rec(std::vector<int>& cur, int lo, int hi, int N, Flavor flavor, std::vector<Weight>& out) {
  if (static_cast<int>(cur.size()) == N) {
    out.emplace_back(flavor, cur);
    return;
  }
  // Coordinates chosen from the last one upward so that each new one is >= the previous.
  const int floor = cur.empty() ? lo : cur.back();
  for (int x = floor; x <= hi; ++x) {
    cur.push_back(x);
    ball_rec(cur, lo, hi, N, flavor, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Weight> dominant_ball(Flavor flavor, int N, int r) {
  if (r < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<Weight> raw;
  std::vector<int> cur;
  if (flavor == Flavor::GL) {
    ball_rec(cur, -r, r, N, Flavor::GL, raw);
  } else {
    cur.push_back(0);
    ball_rec(cur, 0, r, N, Flavor::SL, raw);
  }
  std::vector<Weight> out;
  for (const auto& w : raw) {
    std::vector<int> m(w.coords().rbegin(), w.coords().rend());
    out.emplace_back(flavor, std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational added_box_label(const Weight& lambda, int i) {
  Rational d = lambda[i] + 1 - i;
  if (lambda.flavor() == Flavor::SL) d -= frac(lambda.total(), lambda.rank());
  return d;
}

}  // namespace dahalab
