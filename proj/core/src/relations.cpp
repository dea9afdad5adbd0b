#include "dahalab/daha.hpp"

#include "dahalab/parallel.hpp"

namespace dahalab {

namespace {

Gen T(int i) { return {GenKind::T, i}; }
Gen Ti(int i) { return {GenKind::TInv, i}; }
Gen Y(int i) { return {GenKind::Y, i}; }
Gen Yi(int i) { return {GenKind::YInv, i}; }
Gen X(int i) { return {GenKind::X, i}; }
const Gen P{GenKind::Pi, 0};
const Gen Pi{GenKind::PiInv, 0};

Expr word(Word w, FieldElement c = FieldElement(1)) {
  return {Term{std::move(c), std::move(w)}};
}

std::string idx(int a) { return std::to_string(a); }
std::string idx(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

std::vector<Relation> relation_table(Flavor flavor, const ParamTable& p) {
  const int n = p.n;
  const FieldElement t = p.t();
  const auto next = [n](int i) { return (i + 1) % n; };
  std::vector<Relation> rel;

  // Finite and affine Hecke rows over T_0..T_{n-1}.
  for (int i = 0; i < n; ++i) {
    rel.push_back({"quadratic[T" + idx(i) + "]", word({T(i), T(i)}),
                   Expr{Term{t - t.inverse(), {T(i)}}, Term{FieldElement(1), {}}}});
    rel.push_back({"inverse[T" + idx(i) + "]", word({T(i), Ti(i)}), word({})});
    rel.push_back({"pi-conj[T" + idx(i) + "]", word({P, T(i), Pi}), word({T(next(i))})});
  }
  if (n >= 3) {
    for (int i = 0; i < n; ++i) {
      const int j = next(i);
      rel.push_back({"braid[T" + idx(i, j) + "]", word({T(i), T(j), T(i)}), word({T(j), T(i), T(j)})});
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // adjacent mod n
        rel.push_back({"commute[T" + idx(i, j) + "]", word({T(i), T(j)}), word({T(j), T(i)})});
      }
  }
  rel.push_back({"inverse[pi]", word({P, Pi}), word({})});

  // Y (Z) rows.
  const bool gl = flavor == Flavor::GL;
  const std::string y = gl ? "Y" : "Z";
  // T_0 Y_n T_0 = c0 Y_1; pi Y_i pi^-1 = c1 Y_{i+1}; pi Y_n pi^-1 = c2 Y_1.
  const FieldElement c0 = gl ? p.q().inverse() : p.sdot().pow(2 * n);
  const FieldElement c1 = gl ? FieldElement(1) : p.sdot().pow(-2);
  const FieldElement c2 = gl ? p.q().inverse() : p.sdot().pow(2 * n - 2);

  for (int i = 1; i < n; ++i)
    rel.push_back({"TYT[" + idx(i) + "]", word({T(i), Y(i), T(i)}), word({Y(i + 1)})});
  rel.push_back({"T0" + y + "nT0", word({T(0), Y(n), T(0)}), word({Y(1)}, c0)});
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool touches = i == 0 ? (j == 1 || j == n) : (j == i || j == i + 1);
      if (touches) continue;
      rel.push_back({"commute[T" + idx(i) + "," + y + idx(j) + "]", word({T(i), Y(j)}), word({Y(j), T(i)})});
    }
  for (int i = 1; i < n; ++i)
    rel.push_back({"pi-conj[" + y + idx(i) + "]", word({P, Y(i), Pi}), word({Y(i + 1)}, c1)});
  rel.push_back({"pi-conj[" + y + "n]", word({P, Y(n), Pi}), word({Y(1)}, c2)});
  for (int i = 1; i <= n; ++i) {
    rel.push_back({"inverse[" + y + idx(i) + "]", word({Y(i), Yi(i)}), word({})});
    for (int j = i + 1; j <= n; ++j)
      rel.push_back({"commute[" + y + idx(i, j) + "]", word({Y(i), Y(j)}), word({Y(j), Y(i)})});
  }

  if (!gl) {
    Word prod;
    for (int i = 1; i <= n; ++i) prod.push_back(Y(i));
    rel.push_back({"Z-product", word(prod), word({}, p.sdot().pow(n * (n - 1)) * p.upsilon().pow(n))});
    rel.push_back({"pi^n", word(Word(static_cast<std::size_t>(n), P)), word({})});
  }
  return rel;
}

std::vector<Relation> derived_relations(const RectangularModule& m) {
  const int n = m.n();
  std::vector<Relation> rel;
  Word prod;
  for (int i = 1; i <= n; ++i) prod.push_back(X(i));
  rel.push_back({"X-product", word(prod), word(Word(static_cast<std::size_t>(n), P))});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      rel.push_back({"commute[X" + idx(i, j) + "]", word({X(i), X(j)}), word({X(j), X(i)})});
  return rel;
}

RelationReport verify_relations(const RectangularModule& m, const std::vector<Relation>& relations,
                                const std::vector<LoopedWalk>& sample) {
  RelationReport rep;
  rep.flavor = m.flavor();
  rep.N = m.params().N;
  rep.k = m.params().k;
  rep.relations = relations.size();
  rep.vectors = sample.size();
  rep.checks = relations.size() * sample.size();

  // One task per basis vector; each returns its failures in relation order.
  auto per_vector = parallel_map(sample.size(), [&](std::size_t s) {
    std::vector<RelationFailure> out;
    const WalkVector v = WalkVector::basis(sample[s]);
    for (const auto& r : relations) {
      WalkVector lhs = m.apply(r.lhs, v);
      WalkVector rhs = m.apply(r.rhs, v);
      if (!(lhs == rhs)) out.push_back({r.id, sample[s], to_string(lhs), to_string(rhs)});
    }
    return out;
  });
  for (auto& f : per_vector) rep.failures.insert(rep.failures.end(), f.begin(), f.end());
  return rep;
}

}  // namespace dahalab
