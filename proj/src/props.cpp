// SPDX-License-Identifier: Apache-2.0
#include "qpvar/props.hpp"

#include <algorithm>

#include "qpvar/order.hpp"
#include "qpvar/sequences.hpp"
#include "qpvar/variational.hpp"

namespace qpvar {

namespace {

#define REQUIRE_LAW(cond, name) \
  do {                          \
    if (!(cond)) return CheckResult{false, name}; \
  } while (0)

std::vector<PointSet> sample_subsets(const FiniteQPSpace& s, InstanceGenerator& gen) {
  std::vector<PointSet> subsets{{}, s.all_points()};
  for (int x = 0; x < s.size(); ++x) subsets.push_back({x});
  for (int i = 0; i < 5; ++i) subsets.push_back(gen.random_subset(s.size()));
  return subsets;
}

// ball-based closure membership: every open ball around x meets A; on a
// finite space the smallest positive distance out of x decides it
bool closure_member_by_balls(const FiniteQPSpace& s, const PointSet& a, int x) {
  if (a.empty()) return false;
  Rational r(1);
  bool found = false;
  for (int y = 0; y < s.size(); ++y)
    if (s.d(x, y) > 0 && (!found || s.d(x, y) < r)) {
      r = s.d(x, y);
      found = true;
    }
  PointSet b = ball(s, x, r, BallKind::Open);
  return std::any_of(a.begin(), a.end(), [&](int p) { return b.contains(p); });
}

}  // namespace

CheckResult check_axioms_topology(const FiniteQPSpace& s, InstanceGenerator& gen) {
  REQUIRE_LAW(s.report().ok(), "QM1/QM2 after repair");

  FiniteQPSpace conj = conjugate(s);
  REQUIRE_LAW(conjugate(conj).matrix() == s.matrix(), "conjugate involution");
  FiniteQPSpace sym = symmetrize(s);
  REQUIRE_LAW(sym.is_t1() == s.is_quasi_metric(),
              "d^s is a metric iff d is a quasi-metric");

  for (int trial = 0; trial < 4; ++trial) {
    int x = gen.random_point(s.size());
    Rational r(gen.below(4) + 1, gen.below(3) + 1);
    PointSet open_ball = ball(s, x, r, BallKind::Open);
    PointSet closed_ball = ball(s, x, r, BallKind::Closed);
    REQUIRE_LAW(is_subset(open_ball, closed_ball), "open ball inside closed ball");
    REQUIRE_LAW(is_open(s, open_ball), "B_d(x,r) open in tau_d");
    REQUIRE_LAW(is_closed(conj, closed_ball), "B_d[x,r] closed in tau_conj");
  }

  auto subsets = sample_subsets(s, gen);
  for (const auto& a : subsets) {
    PointSet cl = closure(s, a);
    REQUIRE_LAW(is_subset(a, cl), "closure extensive");
    REQUIRE_LAW(closure(s, cl) == cl, "closure idempotent");
    for (int x = 0; x < s.size(); ++x)
      REQUIRE_LAW(cl.contains(x) == closure_member_by_balls(s, a, x),
                  "closure matches ball-based definition");
    for (const auto& b : subsets) {
      if (is_subset(a, b))
        REQUIRE_LAW(is_subset(cl, closure(s, b)), "closure monotone");
      REQUIRE_LAW(closure(s, set_union(a, b)) == set_union(cl, closure(s, b)),
                  "closure distributes over union");
    }
    REQUIRE_LAW(is_subset(a, up_set(s, a)) && is_subset(a, down_set(s, a)),
                "up/down sets extensive");
    REQUIRE_LAW(up_set(s, up_set(s, a)) == up_set(s, a), "up_set idempotent");
    REQUIRE_LAW(down_set(s, down_set(s, a)) == down_set(s, a), "down_set idempotent");
    REQUIRE_LAW(saturation(s, a) == up_set(s, a), "saturation equals up_set");
  }
  REQUIRE_LAW(closure(s, {}).empty(), "closure of empty set");
  for (int x = 0; x < s.size(); ++x)
    REQUIRE_LAW(down_set(s, {x}) == closure(s, {x}), "down-set of x equals closure of x");
  return {};
}

CheckResult check_order(const FiniteQPSpace& s, InstanceGenerator& gen) {
  OrderClass cls = order_class(s);
  REQUIRE_LAW((cls == OrderClass::Equality) == s.is_t1(), "equality iff T1");
  REQUIRE_LAW((cls != OrderClass::Preorder) == s.is_quasi_metric(),
              "at least partial order iff quasi-metric");

  for (int x = 0; x < s.size(); ++x) {
    REQUIRE_LAW(spec_leq(s, x, x), "spec_leq reflexive");
    for (int y = 0; y < s.size(); ++y)
      for (int z = 0; z < s.size(); ++z)
        if (spec_leq(s, x, y) && spec_leq(s, y, z))
          REQUIRE_LAW(spec_leq(s, x, z), "spec_leq transitive");
  }

  for (const auto& a : sample_subsets(s, gen)) {
    if (is_open(s, a)) REQUIRE_LAW(up_set(s, a) == a, "open implies upward closed");
    if (is_closed(s, a)) REQUIRE_LAW(down_set(s, a) == a, "closed implies downward closed");
    if (s.size() <= 12)
      REQUIRE_LAW(saturation_by_enumeration(s, a) == saturation(s, a),
                  "enumeration and order saturation paths agree");
  }
  return {};
}

CheckResult check_semicontinuity(const FiniteQPSpace& s, const Objective& phi) {
  auto mono = is_d_monotone(s, phi);
  bool lsc = is_lsc(s, phi);
  REQUIRE_LAW(is_nearly_lsc(s, phi).ok, "nearly lsc vacuous on finite spaces");
  REQUIRE_LAW(lsc == (is_nearly_lsc(s, phi).ok && mono.ok),
              "lsc iff nearly lsc and d-monotone");
  if (s.is_t1()) REQUIRE_LAW(lsc, "every objective lsc on a T1 space");

  FiniteQPSpace conj = conjugate(s);
  bool seq_lsc = true;
  std::vector<EPSequence> seqs;
  for (int u = 0; u < s.size(); ++u) {
    seqs.push_back({{}, {u}});
    for (int v = 0; v < s.size(); ++v) seqs.push_back({{}, {u, v}});
  }
  for (const auto& seq : seqs) {
    PointSet limits = limit_set(s, seq);
    for (int x = 0; x < s.size(); ++x) {
      bool definitional = std::all_of(seq.cycle.begin(), seq.cycle.end(),
                                      [&](int v) { return s.d(x, v) == 0; });
      REQUIRE_LAW(limits.contains(x) == definitional, "limit_set definitional");
    }
    if (is_right_k_cauchy(s, seq))
      for (int v : seq.cycle)
        REQUIRE_LAW(limits.contains(v), "right K-Cauchy cycle converges to its values");
    REQUIRE_LAW(is_left_k_cauchy(conj, seq) == is_right_k_cauchy(s, seq),
                "left K-Cauchy iff right K-Cauchy in the conjugate");
    for (int x : limits)
      if (!(phi.at(x) <= liminf_phi(s, seq, phi))) seq_lsc = false;
  }
  REQUIRE_LAW(seq_lsc == lsc, "sequence-level lsc agrees with d-monotone criterion");
  REQUIRE_LAW(right_k_complete_check(s).pass, "finite space right K-complete");
  return {};
}

CheckResult check_sset_picard(const FiniteQPSpace& s, const Objective& phi,
                              InstanceGenerator& gen, int starts) {
  bool lsc = is_lsc(s, phi);
  for (int x = 0; x < s.size(); ++x) {
    SSetRecord rec = s_set(s, phi, x);
    if (phi.at(x).is_infinite()) {
      REQUIRE_LAW(rec.base_infinite && rec.members == s.all_points(),
                  "S(x) = X when phi(x) = inf");
      continue;
    }
    PointSet cl_x = closure(s, {x});
    REQUIRE_LAW(rec.members.contains(x), "x in S(x)");
    REQUIRE_LAW(rec.j_value <= phi.at(x), "J(x) <= phi(x)");
    bool escapes = false;
    for (int y : rec.members) {
      REQUIRE_LAW(phi.at(y) <= phi.at(x), "phi(y) <= phi(x) on S(x)");
      REQUIRE_LAW(phi.at(y).is_finite(), "S(x) inside dom phi");
      REQUIRE_LAW(is_subset(s_set(s, phi, y).members, rec.members),
                  "S(y) inside S(x) for y in S(x)");
      if (!cl_x.contains(y)) {
        escapes = true;
        REQUIRE_LAW(phi.at(y) < phi.at(x), "strict decrease off closure{x}");
      }
      // preorder view: y in S(x) iff x ⪯ y, transitive on dom phi
      for (int z : s_set(s, phi, y).members)
        REQUIRE_LAW(phi.at(z) + s.d(z, x) <= phi.at(x), "S-preorder transitive");
    }
    if (escapes) REQUIRE_LAW(rec.j_value < phi.at(x), "phi(x) > J(x) when S escapes closure");
    if (lsc) REQUIRE_LAW(is_closed(s, rec.members), "S(x) closed when phi lsc");
  }

  std::vector<int> dom;
  for (int x = 0; x < s.size(); ++x)
    if (phi.at(x).is_finite()) dom.push_back(x);
  for (int t = 0; t < starts && !dom.empty(); ++t) {
    int x0 = dom[static_cast<size_t>(gen.below(dom.size()))];
    PicardTrace trace = picard_run(s, phi, x0);
    const auto& it = trace.iterates;
    REQUIRE_LAW(trace.termination == Termination::ReachedJ, "Picard reaches J");
    REQUIRE_LAW(static_cast<int>(it.size()) <= s.size() + 1,
                "Picard terminates within |X| steps");
    int z = it.back();
    SSetRecord z_rec = s_set(s, phi, z);
    REQUIRE_LAW(phi.at(z) == z_rec.j_value, "phi(z) = J(z) at termination");
    for (size_t a = 0; a + 1 < it.size(); ++a) {
      REQUIRE_LAW(trace.phi_values[a + 1] < trace.phi_values[a],
                  "strict phi decrease along trace");
      REQUIRE_LAW(is_subset(s_set(s, phi, it[a + 1]).members,
                            s_set(s, phi, it[a]).members),
                  "S-sets nested along trace");
    }
    for (size_t a = 0; a < it.size(); ++a) {
      REQUIRE_LAW(s_set(s, phi, it[a]).members.contains(z), "z in S(x_n) for all n");
      for (size_t b = a; b < it.size(); ++b)
        REQUIRE_LAW(s.d(it[b], it[a]) <= trace.phi_values[a] - trace.phi_values[b],
                    "right K-Cauchy bound d(x_{n+k},x_n) <= phi(x_n)-phi(x_{n+k})");
    }
    for (int y : z_rec.members) {
      REQUIRE_LAW(phi.at(y) == phi.at(z), "phi constant on S(z)");
      REQUIRE_LAW(is_subset(s_set(s, phi, y).members, closure(s, {y})),
                  "S(y) inside closure{y} for y in S(z)");
    }
  }
  return {};
}

CheckResult check_principles(const FiniteQPSpace& s, const Objective& phi,
                             InstanceGenerator& gen, int rounds) {
  PrincipleCertificate weak = weak_ekeland(s, phi);
  Json weak_json{{"principle", weak.principle}, {"z", s.label(weak.z)},
                 {"evidence", weak.evidence}};
  REQUIRE_LAW(verify_certificate(s, phi, weak_json).ok, "weak Ekeland certificate verifies");
  // brute-force scan for constancy candidates
  PointSet brute;
  for (int z = 0; z < s.size(); ++z) {
    if (phi.at(z).is_infinite()) continue;
    SSetRecord rec = s_set(s, phi, z);
    if (std::all_of(rec.members.begin(), rec.members.end(),
                    [&](int y) { return phi.at(y) == phi.at(z); }))
      brute.insert(z);
  }
  REQUIRE_LAW(brute.contains(weak.z), "solver z confirmed by brute-force scan");

  for (int t = 0; t < rounds; ++t) {
    if (is_lsc(s, phi)) {
      FullEkelandParams params = gen.random_full_params(s, phi);
      PrincipleCertificate full = full_ekeland(s, phi, params);
      Json full_json{{"principle", full.principle}, {"z", s.label(full.z)},
                     {"evidence", full.evidence}};
      REQUIRE_LAW(verify_certificate(s, phi, full_json).ok,
                  "full Ekeland certificate verifies");
    }
    CaristiMap map = gen.random_caristi_map(s, phi);
    PrincipleCertificate car = caristi(s, phi, map);
    Json car_json{{"principle", car.principle}, {"z", s.label(car.z)},
                  {"evidence", car.evidence}};
    REQUIRE_LAW(verify_certificate(s, phi, car_json).ok, "Caristi certificate verifies");
    if (s.is_t1())
      REQUIRE_LAW(car.evidence["fixed_point"].get<bool>(), "Caristi fixed point on T1");
  }

  auto taka = takahashi(s, phi);
  ExtReal inf = inf_phi(phi);
  if (std::holds_alternative<PrincipleCertificate>(taka)) {
    const auto& cert = std::get<PrincipleCertificate>(taka);
    REQUIRE_LAW(argmin_set(phi).contains(cert.z), "Takahashi z is a true minimizer");
    Json taka_json{{"principle", cert.principle}, {"z", s.label(cert.z)},
                   {"evidence", cert.evidence}};
    REQUIRE_LAW(verify_certificate(s, phi, taka_json).ok,
                "Takahashi certificate verifies");
  } else {
    int x = std::get<TakahashiWitness>(taka).x;
    SSetRecord rec = s_set(s, phi, x);
    REQUIRE_LAW(phi.at(x) > inf && rec.j_value == phi.at(x),
                "Takahashi witness genuinely violates the hypothesis");
  }
  return {};
}

CheckResult check_equivalence(const FiniteQPSpace& s, const Objective& phi) {
  // on a finite space all three principles must hold and agree
  PrincipleCertificate eq = equivalence_witness(s, phi);
  REQUIRE_LAW(eq.principle == "equivalence", "equivalence takes the weak-Ekeland branch");
  REQUIRE_LAW(!refuting_selection(s, phi).has_value(),
              "no total strictly-descending selection exists");

  bool not_tak_config = true;  // forall x exists y in S(x) with phi(y) < phi(x)
  for (int x = 0; x < s.size() && not_tak_config; ++x) {
    SSetRecord rec = s_set(s, phi, x);
    not_tak_config = phi.at(x).is_infinite() ? is_proper(phi) : rec.j_value < phi.at(x);
  }
  REQUIRE_LAW(!not_tak_config, "the negated-Takahashi configuration never holds");

  bool symmetric = true;
  for (int i = 0; i < s.size() && symmetric; ++i)
    for (int j = 0; j < s.size(); ++j)
      if (s.d(i, j) != s.d(j, i)) symmetric = false;
  if (symmetric && s.is_quasi_metric()) {
    // classical metric case: S(z) = {z} and the strict inequality off z
    int z = eq.z;
    REQUIRE_LAW(s_set(s, phi, z).members == PointSet{z}, "metric case: S(z) = {z}");
    for (int x = 0; x < s.size(); ++x)
      if (x != z)
        REQUIRE_LAW(phi.at(z) < phi.at(x) + s.d(x, z),
                    "metric case: strict inequality off z");
  }
  return {};
}

CheckResult check_all(const FiniteQPSpace& s, const Objective& phi,
                      InstanceGenerator& gen) {
  if (auto r = check_axioms_topology(s, gen); !r.ok) return r;
  if (auto r = check_order(s, gen); !r.ok) return r;
  if (auto r = check_semicontinuity(s, phi); !r.ok) return r;
  if (auto r = check_sset_picard(s, phi, gen, 3); !r.ok) return r;
  if (auto r = check_principles(s, phi, gen, 3); !r.ok) return r;
  if (auto r = check_equivalence(s, phi); !r.ok) return r;
  return {};
}

}  // namespace qpvar
