#include "daha_lab/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

namespace dahalab::cli {

namespace {

io::Json config_json(const RunConfig& cfg) {
  io::Json j;
  j["flavor"] = to_string(cfg.flavor);
  j["N"] = cfg.N;
  j["k"] = cfg.k;
  j["n"] = cfg.N * cfg.k;
  if (cfg.lambda) j["lambda"] = *cfg.lambda;
  if (cfg.radius) j["radius"] = *cfg.radius;
  j["seed"] = cfg.seed;
  return j;
}

void validate(const RunConfig& cfg) {
  if (cfg.N < 2) throw UsageError("-N must be at least 2");
  if (cfg.k < 1) throw UsageError("-k must be at least 1");
  if (cfg.radius && *cfg.radius < 0) throw UsageError("--radius must be non-negative");
}

/// Walks selected by --lambda / --radius (default: lambda = 0).
std::vector<LoopedWalk> selected_walks(const RunConfig& cfg, std::ostream& err) {
  if (cfg.lambda || !cfg.radius) return enumerate_walks(cfg.k, resolve_lambda(cfg, err));
  return enumerate_ball(cfg.flavor, cfg.N, cfg.k, *cfg.radius);
}

io::Json tableau_with_checks(const SkewTableau& T) {
  io::Json r = io::tableau_record(T);
  r["weights"] = io::rationals(T.weight_exponents());
  bool round_trip = false;
  try {
    round_trip = tab(tab_inverse(T)) == T;
  } catch (const NotStandard&) {
  }
  r["round_trip"] = round_trip;
  return r;
}

/// Row-1 window of an SL class: anchored at the smallest positive entry
/// lying in the first row.
Rational anchor_label(const PeriodicClass& C) {
  for (int i = 1;; ++i)
    if (C.tableau.position((i - 1) % C.n() + 1).row == 1) return sl_diag(C, i);
}

io::Json sl_class_record(const PeriodicClass& C, const LoopedWalk& u) {
  io::Json r = io::periodic_record(C);
  const Rational nw = anchor_label(C);
  const auto w = sl_window(C, nw);
  r["window"] = w;
  r["window_label"] = io::rational(nw);
  r["filling_sum"] = filling_sum(w);
  r["round_trip"] = tab_inverse(C.tableau) == u;
  return r;
}

io::Json gl_periodic_record(const LoopedWalk& u) {
  const SkewTableau T = tab(u);
  const PeriodicTableau P = per(T);
  io::Json r = io::periodic_record(P);
  r["lambda"] = io::weight(u.base);
  bool round_trip = false;
  try {
    round_trip = per_inverse(P) == T;
  } catch (const NotStandard&) {
  }
  r["round_trip"] = round_trip;
  return r;
}

int finish(io::Emitter& em, std::ostream& out, bool ok) {
  em.summary("status", ok ? "pass" : "fail");
  em.write(out);
  return ok ? kPass : kVerifyFailed;
}

}  // namespace

Weight resolve_lambda(const RunConfig& cfg, std::ostream& err) {
  const int N = cfg.N;
  std::vector<int> m = cfg.lambda.value_or(std::vector<int>(static_cast<std::size_t>(N), 0));
  if (cfg.flavor == Flavor::SL && static_cast<int>(m.size()) == N - 1) m.push_back(0);
  if (static_cast<int>(m.size()) != N)
    throw UsageError("--lambda needs " + std::to_string(N) + (cfg.flavor == Flavor::SL ? " or " + std::to_string(N - 1) : std::string()) +
                     " entries, got " + std::to_string(m.size()));
  Weight w(cfg.flavor, m);
  if (cfg.flavor == Flavor::SL && m.back() != 0) err << "warning: SL weight renormalized to " << w.to_string() << '\n';
  if (!w.dominant()) {
    for (int i = 1; i < N; ++i)
      if (w[i] < w[i + 1])
        throw UsageError("lambda " + w.to_string() + " is not dominant: m_" + std::to_string(i) + " < m_" + std::to_string(i + 1));
  }
  return w;
}

int cmd_walks(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  io::Emitter em(cfg.output, "walks", config_json(cfg));
  for (const auto& u : selected_walks(cfg, err)) {
    io::Json r = io::walk_record(u);
    r["tableau"] = tab(u).rows();
    em.record(std::move(r));
  }
  em.summary("count", em.size());
  em.write(out);
  return kPass;
}

int cmd_tableaux(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  io::Emitter em(cfg.output, "tableaux", config_json(cfg));
  bool ok = true;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot open " + cfg.input);
    io::Json doc;
    try {
      doc = io::Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed tableau file: " + std::string(e.what()));
    }
    if (!doc.is_array()) doc = io::Json::array({doc});
    for (const auto& rec : doc) {
      SkewTableau T;
      try {
        T = io::tableau_from_json(rec, cfg.flavor, cfg.k);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (auto why = T.standard_violation(); !why.empty()) throw UsageError("tableau " + T.to_string() + " is not standard: " + why);
      em.record(tableau_with_checks(T));
    }
  } else if (cfg.rect) {
    for (const auto& T : enumerate_rect_syt(cfg.N, cfg.k, cfg.flavor)) em.record(tableau_with_checks(T));
    const Integer hook = count_rect_syt_hook(cfg.N, cfg.k);
    em.summary("hook_length_count", hook.get_str());
    ok = hook == static_cast<long>(em.size());
  } else {
    for (const auto& u : selected_walks(cfg, err)) em.record(tableau_with_checks(tab(u)));
  }
  em.summary("count", em.size());
  return finish(em, out, ok);
}

int cmd_periodic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  io::Emitter em(cfg.output, "periodic", config_json(cfg));
  bool ok = true;
  if (cfg.orbit) {
    RunConfig seed_cfg = cfg;
    if (!seed_cfg.lambda && cfg.flavor == Flavor::SL) seed_cfg.lambda = Weight::fundamental(cfg.N, 1).coords();
    const Weight lambda = resolve_lambda(seed_cfg, err);
    const auto walks = enumerate_walks(cfg.k, lambda);
    if (walks.empty()) throw UsageError("no looped walks at " + lambda.to_string());
    LoopedWalk u = walks.front();
    if (cfg.flavor == Flavor::SL) {
      const PeriodicClass start = sper(tab(u));
      PeriodicClass C = start;
      int length = 0;
      do {
        em.record(sl_class_record(C, tab_inverse(C.tableau)));
        C = pi_shift_class(C);
        ++length;
      } while (!(C == start) && length <= cfg.N * cfg.k);
      em.summary("orbit_length", length);
      ok = C == start;
    } else {
      // GL orbits are infinite: pi^n shifts lambda by -k det. Show n + 1 steps.
      for (int s = 0; s <= cfg.N * cfg.k; ++s) {
        em.record(gl_periodic_record(u));
        u = rotate_walk(u);
      }
    }
  } else {
    for (const auto& u : selected_walks(cfg, err)) {
      io::Json r = cfg.flavor == Flavor::GL ? gl_periodic_record(u) : sl_class_record(sper(tab(u)), u);
      ok = ok && r["round_trip"].get<bool>();
      em.record(std::move(r));
    }
  }
  em.summary("count", em.size());
  return finish(em, out, ok);
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const int radius = cfg.radius.value_or(3);
  io::Json conf = config_json(cfg);
  conf["suite"] = suite;
  conf["radius"] = radius;
  if (cfg.sabotage) conf["sabotage"] = "b-coeff";
  io::Emitter em(cfg.output, "verify", conf);
  (void)err;

  if (suite == "relations") {
    RectangularModule m(cfg.flavor, cfg.N, cfg.k, cfg.sabotage ? Sabotage::BCoeff : Sabotage::None);
    const auto sample = enumerate_ball(cfg.flavor, cfg.N, cfg.k, radius);
    const RelationReport rep = verify_relations(m, relation_table(cfg.flavor, m.params()), sample);

    // X relations on a seeded sample of ten vectors, widening the ball when
    // it holds fewer. Skipped on a sabotaged
    // module: the X words stop being sparse there and coefficients explode.
    std::vector<LoopedWalk> xs;
    if (!cfg.sabotage) {
      xs = sample;
      for (int r = radius + 1; xs.size() < 10 && r <= radius + 8; ++r) xs = enumerate_ball(cfg.flavor, cfg.N, cfg.k, r);
      std::mt19937_64 rng(cfg.seed);
      std::shuffle(xs.begin(), xs.end(), rng);
      xs.resize(std::min<std::size_t>(xs.size(), 10));
      std::sort(xs.begin(), xs.end());
    }
    const RelationReport xrep = verify_relations(m, derived_relations(m), xs);

    for (const auto* r : {&rep, &xrep})
      for (const auto& f : r->failures) em.record(io::relation_failure_record(*r, f));
    em.summary("relations", rep.relations);
    em.summary("basis_vectors", rep.vectors);
    em.summary("checks", rep.checks);
    em.summary("failures", rep.failures.size());
    if (cfg.sabotage) em.summary("derived", "skipped");
    em.summary("derived_checks", xrep.checks);
    em.summary("derived_failures", xrep.failures.size());
    bool ok = rep.ok() && xrep.ok();
    if (cfg.flavor == Flavor::GL && !cfg.sabotage) {
      const CheckReport aha = aha_rectangle_check(cfg.N, cfg.k);
      em.summary("aha_rectangle", io::check_report(aha));
      ok = ok && aha.ok();
    }
    return finish(em, out, ok);
  }
  if (suite == "support") {
    const CheckReport s = support_rule_check(cfg.flavor, cfg.N, cfg.k, radius);
    const CheckReport d = distinct_weights_check(cfg.flavor, cfg.N, cfg.k, radius);
    for (const auto* r : {&s, &d})
      for (const auto& f : r->failures) em.record(io::Json{{"check", r->name}, {"status", "fail"}, {"witness", f}});
    em.summary("support_rules", io::check_report(s));
    em.summary("distinct_weights", io::check_report(d));
    return finish(em, out, s.ok() && d.ok());
  }
  if (suite == "main-theorem") {
    const MainTheoremReport rep = main_theorem_check(cfg.flavor, cfg.N, cfg.k, radius);
    std::size_t id = 0;
    for (const auto& row : rep.rows) {
      io::Json r;
      r["walk_id"] = id++;
      r["lambda"] = io::weight(row.walk.base);
      r["steps"] = row.walk.steps;
      r["y_exponents"] = io::rationals(row.y_side);
      r["tableau_exponents"] = io::rationals(row.tableau_side);
      r["t_exponents"] = io::rationals(row.t_exponents);
      r["match"] = row.match;
      em.record(std::move(r));
    }
    em.summary("walks", rep.rows.size());
    em.summary("failures", rep.failures.size());
    return finish(em, out, rep.ok());
  }
  if (suite == "twists") {
    if (cfg.flavor != Flavor::SL) throw UsageError("the twists suite needs --flavor sl");
    const TwistReport rep = twist_report(cfg.N, cfg.k);
    for (std::size_t c = 0; c < rep.classes.size(); ++c)
      for (int r : rep.classes[c])
        em.record(io::Json{{"r", r}, {"eigenvalue", rep.eigenvalues[static_cast<std::size_t>(r)].to_string()}, {"class", c}});
    const bool untwisted_one = rep.untwisted.zeta_exp == 0 && rep.untwisted.c.is_one();
    bool by_power = true;  // same class <=> same a^N = zeta_k^r
    for (int r1 = 0; r1 < cfg.N * cfg.k; ++r1)
      for (int r2 = 0; r2 < cfg.N * cfg.k; ++r2)
        if (twist_classify(r1, r2, cfg.N, cfg.k) != ((r1 - r2) % cfg.k == 0)) by_power = false;
    em.summary("untwisted_eigenvalue", rep.untwisted.to_string());
    em.summary("classes", rep.classes.size());
    em.summary("expected_classes", cfg.k);
    return finish(em, out, untwisted_one && by_power && static_cast<int>(rep.classes.size()) == cfg.k);
  }
  if (suite == "content-bounds") {
    const ContentBoundReport rep = content_bound_check(cfg.N, cfg.k);
    for (const auto& w : rep.nontrivial) em.record(io::Json{{"tableau", w.tableau.rows()}, {"gamma", w.gamma}, {"status", "fail"}});
    for (const auto& v : rep.bound_violations) em.record(io::Json{{"bound_violation", v}, {"status", "fail"}});
    em.summary("tableaux", rep.tableaux);
    em.summary("gammas_per_tableau", rep.gammas_per_tableau);
    return finish(em, out, rep.ok());
  }
  if (suite == "rmatrix") {
    if (cfg.N > 4) throw UsageError("rmatrix suite supports N <= 4");
    const CheckReport rep = rmatrix_sanity(cfg.N);
    for (const auto& f : rep.failures) em.record(io::Json{{"status", "fail"}, {"witness", f}});
    em.summary("rmatrix", io::check_report(rep));
    em.summary("nu_inverse_on_V", io::rational(ribbon_inverse_on_V(cfg.flavor, cfg.N)));
    return finish(em, out, rep.ok());
  }
  throw UsageError("unknown verify suite '" + suite + "'");
}

}  // namespace dahalab::cli
