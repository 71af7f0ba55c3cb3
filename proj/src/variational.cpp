// SPDX-License-Identifier: Apache-2.0
#include "qpvar/variational.hpp"

#include <algorithm>

#include "qpvar/order.hpp"

namespace qpvar {

namespace {

Json labels_of(const FiniteQPSpace& s, const PointSet& pts) {
  Json arr = Json::array();
  for (int p : pts) arr.push_back(s.label(p));
  return arr;
}

Json s_set_listing(const FiniteQPSpace& s, const Objective& phi, const SSetRecord& rec) {
  Json arr = Json::array();
  for (int y : rec.members)
    arr.push_back(Json{{"point", s.label(y)}, {"phi", phi.at(y).str()}});
  return arr;
}

void require_proper(const Objective& phi) {
  if (!is_proper(phi)) throw PreconditionError("objective is improper (phi == inf everywhere)");
}

}  // namespace

SSetRecord s_set(const FiniteQPSpace& s, const Objective& phi, int x) {
  if (x < 0 || x >= s.size()) throw PreconditionError("s_set: point out of range");
  SSetRecord rec;
  rec.base = x;
  if (phi.at(x).is_infinite()) {
    rec.base_infinite = true;
    rec.members = s.all_points();
  } else {
    for (int y = 0; y < s.size(); ++y)
      if (phi.at(y) + s.d(y, x) <= phi.at(x)) rec.members.insert(y);
  }
  rec.j_value = ExtReal::infinity();
  for (int y : rec.members)
    if (phi.at(y) < rec.j_value) rec.j_value = phi.at(y);
  return rec;
}

SelectionRule argmin_selection() {
  return [](const FiniteQPSpace&, const Objective& phi, const SSetRecord& rec) {
    int best = -1;
    for (int y : rec.members)
      if (best < 0 || phi.at(y) < phi.at(best)) best = y;
    return best;
  };
}

PicardTrace picard_run(const FiniteQPSpace& s, const Objective& phi, int x0,
                       const SelectionRule& rule) {
  require_proper(phi);
  if (x0 < 0 || x0 >= s.size()) throw PreconditionError("picard_run: point out of range");
  if (phi.at(x0).is_infinite())
    throw PreconditionError("picard_run: start point outside dom phi");

  PicardTrace trace;
  int x = x0;
  for (int step = 0;; ++step) {
    if (step > s.size())
      throw std::logic_error("picard_run: no termination within |X| steps");
    SSetRecord rec = s_set(s, phi, x);
    trace.iterates.push_back(x);
    trace.phi_values.push_back(phi.at(x));
    trace.j_values.push_back(rec.j_value);
    if (phi.at(x) == rec.j_value) {
      trace.termination = Termination::ReachedJ;
      break;
    }
    int y = rule(s, phi, rec);
    if (y < 0) {
      trace.termination = Termination::SelectionExhausted;
      break;
    }
    if (!rec.members.contains(y))
      throw std::logic_error("selection rule returned a point outside S(x)");
    // strict half-gap; phi(x) and J(x) are both finite here
    Rational half_gap = (phi.at(x).value() + rec.j_value.value()) / 2;
    if (!(phi.at(y).is_finite() && phi.at(y).value() < half_gap))
      throw std::logic_error("selection rule violated the strict half-gap descent");
    x = y;
  }
  trace.alpha = trace.phi_values.back();
  return trace;
}

namespace {

// Consequences of phi-constancy on S(z), checked for every y in S(z):
// S(y) inside closure{y} and the strict inequality off S(y).
bool weak_consequences_hold(const FiniteQPSpace& s, const Objective& phi,
                            const SSetRecord& z_rec, Json* out) {
  bool all_ok = true;
  Json per_y = Json::array();
  for (int y : z_rec.members) {
    SSetRecord y_rec = s_set(s, phi, y);
    PointSet cl_y = closure(s, {y});
    bool in_closure = is_subset(y_rec.members, cl_y);
    bool strict_outside = true;
    for (int x = 0; x < s.size(); ++x)
      if (!y_rec.members.contains(x) && !(phi.at(y) < phi.at(x) + s.d(x, y)))
        strict_outside = false;
    all_ok = all_ok && in_closure && strict_outside;
    per_y.push_back(Json{{"y", s.label(y)},
                         {"s_y_in_closure_y", in_closure},
                         {"strict_outside_s_y", strict_outside}});
  }
  if (out) *out = per_y;
  return all_ok;
}

// Split form of the constancy conclusion around z:
//   equality on S(z), strict on closure{z} \ S(z), strict plus distance
//   off closure{z}.
bool weak_split_form_holds(const FiniteQPSpace& s, const Objective& phi,
                           const SSetRecord& z_rec, Json* out) {
  int z = z_rec.base;
  PointSet cl_z = closure(s, {z});
  bool eq_on_s = true, strict_on_cl = true, strict_off_cl = true;
  for (int x = 0; x < s.size(); ++x) {
    if (z_rec.members.contains(x)) {
      eq_on_s = eq_on_s && phi.at(x) == phi.at(z);
    } else if (cl_z.contains(x)) {
      strict_on_cl = strict_on_cl && phi.at(z) < phi.at(x);
    } else {
      strict_off_cl = strict_off_cl && phi.at(z) < phi.at(x) + s.d(x, z);
    }
  }
  if (out)
    *out = Json{{"equal_on_s_z", eq_on_s},
                {"strict_on_closure_minus_s_z", strict_on_cl},
                {"strict_with_distance_off_closure", strict_off_cl}};
  return eq_on_s && strict_on_cl && strict_off_cl;
}

}  // namespace

PrincipleCertificate weak_ekeland(const FiniteQPSpace& s, const Objective& phi) {
  require_proper(phi);
  // candidates in Picard order from every point of dom phi; the first
  // run already yields a valid z on a finite space
  for (int x0 = 0; x0 < s.size(); ++x0) {
    if (phi.at(x0).is_infinite()) continue;
    PicardTrace trace = picard_run(s, phi, x0);
    int z = trace.iterates.back();
    SSetRecord rec = s_set(s, phi, z);
    bool constant = true;
    for (int y : rec.members) constant = constant && phi.at(y) == phi.at(z);
    if (!constant) continue;

    Json consequences, split;
    if (!weak_consequences_hold(s, phi, rec, &consequences) ||
        !weak_split_form_holds(s, phi, rec, &split))
      throw std::logic_error("weak_ekeland: consequences failed for a constant-phi z");
    PrincipleCertificate cert;
    cert.principle = "weak-ekeland";
    cert.z = z;
    Json trace_json = Json::array();
    for (int it : trace.iterates) trace_json.push_back(s.label(it));
    cert.evidence = Json{{"s_z", s_set_listing(s, phi, rec)},
                         {"phi_z", phi.at(z).str()},
                         {"picard_trace", trace_json},
                         {"consequences", consequences},
                         {"split_form", split}};
    return cert;
  }
  throw std::logic_error("weak_ekeland: no valid z on a finite space");
}

namespace {

FiniteQPSpace scale_space(const FiniteQPSpace& s, const Rational& gamma) {
  RationalMatrix m(s.size());
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) m(i, j) = gamma * s.d(i, j);
  return FiniteQPSpace(s.labels(), std::move(m));
}

}  // namespace

PrincipleCertificate full_ekeland(const FiniteQPSpace& s, const Objective& phi,
                                  const FullEkelandParams& params) {
  require_proper(phi);
  if (params.epsilon <= 0) throw PreconditionError("epsilon must be positive");
  if (params.lambda <= 0) throw PreconditionError("lambda must be positive");
  if (params.x0 < 0 || params.x0 >= s.size())
    throw PreconditionError("x0 out of range");
  if (auto mono = is_d_monotone(s, phi); !mono.ok) {
    auto [mx, my] = *mono.witness;
    throw PreconditionError("phi is not lsc: d(" + s.label(mx) + "," + s.label(my) +
                            ")=0 but phi(" + s.label(mx) + ") > phi(" + s.label(my) + ")");
  }
  ExtReal budget = inf_phi(phi) + params.epsilon;
  if (!(phi.at(params.x0) <= budget)) {
    Rational gap = phi.at(params.x0).is_finite()
                       ? phi.at(params.x0).value() - budget.value()
                       : Rational(0);
    throw PreconditionError(
        "phi(x0) exceeds epsilon + inf phi" +
        (phi.at(params.x0).is_finite() ? " by " + format_rational(gap)
                                       : " (phi(x0) = inf)"));
  }

  const Rational gamma = params.gamma();
  FiniteQPSpace scaled = scale_space(s, gamma);

  PointSet x0_set;
  for (int x = 0; x < s.size(); ++x)
    if (phi.at(x) <= phi.at(params.x0) + scaled.d(params.x0, x)) x0_set.insert(x);

  // Claim I: X0 is closed (in the scaled space) and contains x0.
  if (!is_closed(scaled, x0_set) || !x0_set.contains(params.x0))
    throw std::logic_error("full_ekeland: X0 not closed or missing x0");
  // Claim II: scaled S-sets of X0 points never leave X0.
  for (int y : x0_set)
    if (!is_subset(s_set(scaled, phi, y).members, x0_set))
      throw std::logic_error("full_ekeland: scaled S(y) escapes X0");

  // Picard inside (X0, gamma d).
  std::vector<int> sub_points(x0_set.begin(), x0_set.end());
  std::vector<std::string> sub_labels;
  RationalMatrix sub_m(static_cast<int>(sub_points.size()));
  std::vector<ExtReal> sub_phi;
  for (size_t i = 0; i < sub_points.size(); ++i) {
    sub_labels.push_back(s.label(sub_points[i]));
    sub_phi.push_back(phi.at(sub_points[i]));
    for (size_t j = 0; j < sub_points.size(); ++j)
      sub_m(static_cast<int>(i), static_cast<int>(j)) =
          scaled.d(sub_points[i], sub_points[j]);
  }
  FiniteQPSpace sub_space(sub_labels, std::move(sub_m));
  Objective sub_objective(std::move(sub_phi));
  int sub_x0 = sub_space.require_point(s.label(params.x0));
  PicardTrace trace = picard_run(sub_space, sub_objective, sub_x0);
  int z = sub_points[static_cast<size_t>(trace.iterates.back())];

  // Conclusions (i)-(iv), re-verified with exact arithmetic.
  SSetRecord scaled_rec = s_set(scaled, phi, z);
  bool c1 = phi.at(z) + gamma * s.d(z, params.x0) <= phi.at(params.x0);
  bool c2 = s.d(z, params.x0) <= params.lambda;
  bool c3 = true;
  for (int y : scaled_rec.members) c3 = c3 && phi.at(y) == phi.at(z);
  bool c4 = true;
  for (int x = 0; x < s.size(); ++x)
    if (!scaled_rec.members.contains(x))
      c4 = c4 && phi.at(z) < phi.at(x) + gamma * s.d(x, z);
  if (!(c1 && c2 && c3 && c4))
    throw std::logic_error("full_ekeland: a conclusion failed verification");

  PrincipleCertificate cert;
  cert.principle = "full-ekeland";
  cert.z = z;
  cert.evidence = Json{{"epsilon", format_rational(params.epsilon)},
                       {"lambda", format_rational(params.lambda)},
                       {"gamma", format_rational(gamma)},
                       {"x0", s.label(params.x0)},
                       {"x0_set", labels_of(s, x0_set)},
                       {"scaled_s_z", s_set_listing(s, phi, scaled_rec)},
                       {"conclusions",
                        Json{{"descent", c1}, {"localization", c2},
                             {"constancy", c3}, {"strict_outside", c4}}}};
  return cert;
}

std::variant<PrincipleCertificate, TakahashiWitness> takahashi(
    const FiniteQPSpace& s, const Objective& phi) {
  require_proper(phi);
  ExtReal inf = inf_phi(phi);
  Json hypothesis = Json::array();
  for (int x = 0; x < s.size(); ++x) {
    if (!(phi.at(x) > inf)) continue;
    SSetRecord rec = s_set(s, phi, x);
    if (!(rec.j_value < phi.at(x))) return TakahashiWitness{x};

    // corollary form: S(x) \ closure{x} nonempty; by the S-set laws every
    // such y has phi(y) < phi(x), so it implies the main hypothesis
    PointSet cl_x = closure(s, {x});
    bool corollary = false, implication = true;
    for (int y : rec.members)
      if (!cl_x.contains(y)) {
        corollary = true;
        implication = implication && phi.at(y) < phi.at(x);
      }
    hypothesis.push_back(Json{{"x", s.label(x)},
                              {"corollary_hypothesis", corollary},
                              {"corollary_implies_main", implication}});
  }

  int start = -1;
  for (int x = 0; x < s.size() && start < 0; ++x)
    if (phi.at(x).is_finite()) start = x;
  PicardTrace trace = picard_run(s, phi, start);
  int z = trace.iterates.back();
  if (phi.at(z) != inf || !argmin_set(phi).contains(z))
    throw std::logic_error("takahashi: Picard endpoint is not a minimizer");

  PrincipleCertificate cert;
  cert.principle = "takahashi";
  cert.z = z;
  cert.evidence = Json{{"inf_phi", inf.str()},
                       {"phi_z", phi.at(z).str()},
                       {"hypothesis_points", hypothesis},
                       {"argmin_cross_check", true}};
  return cert;
}

namespace {

void validate_caristi_map(const FiniteQPSpace& s, const Objective& phi,
                          const CaristiMap& map) {
  if (map.single.has_value() == map.multi.has_value())
    throw PreconditionError("Caristi map must be exactly one of single/set-valued");
  if (map.single) {
    if (static_cast<int>(map.single->size()) != s.size())
      throw PreconditionError("Caristi map must be total");
    for (int x = 0; x < s.size(); ++x) {
      int tx = (*map.single)[static_cast<size_t>(x)];
      if (tx < 0 || tx >= s.size())
        throw PreconditionError("Caristi map image out of range at " + s.label(x));
      if (!s_set(s, phi, x).members.contains(tx))
        throw PreconditionError("Caristi premise fails at " + s.label(x) +
                                ": T(x) is not in S(x)");
    }
  } else {
    if (static_cast<int>(map.multi->size()) != s.size())
      throw PreconditionError("Caristi map must be total");
    for (int x = 0; x < s.size(); ++x) {
      const PointSet& tx = (*map.multi)[static_cast<size_t>(x)];
      if (tx.empty())
        throw PreconditionError("Caristi map value empty at " + s.label(x));
      SSetRecord rec = s_set(s, phi, x);
      bool meets = std::any_of(tx.begin(), tx.end(),
                               [&](int y) { return rec.members.contains(y); });
      if (!meets)
        throw PreconditionError("Caristi premise fails at " + s.label(x) +
                                ": S(x) does not meet T(x)");
    }
  }
}

}  // namespace

PrincipleCertificate caristi(const FiniteQPSpace& s, const Objective& phi,
                             const CaristiMap& map) {
  require_proper(phi);
  validate_caristi_map(s, phi, map);

  PrincipleCertificate weak = weak_ekeland(s, phi);
  int z = weak.z;
  SSetRecord z_rec = s_set(s, phi, z);

  PrincipleCertificate cert;
  cert.principle = "caristi";
  cert.z = z;
  Json map_json;
  bool fixed_point = false;
  if (map.single) {
    int tz = (*map.single)[static_cast<size_t>(z)];
    if (phi.at(tz) != phi.at(z))
      throw std::logic_error("caristi: phi(Tz) != phi(z) despite Tz in S(z)");
    fixed_point = tz == z;
    map_json = Json::object();
    for (int x = 0; x < s.size(); ++x)
      map_json[s.label(x)] = s.label((*map.single)[static_cast<size_t>(x)]);
    cert.evidence = Json{{"kind", "single"},
                         {"map", map_json},
                         {"t_z", s.label(tz)},
                         {"phi_z", phi.at(z).str()},
                         {"phi_t_z", phi.at(tz).str()}};
  } else {
    const PointSet& tz = (*map.multi)[static_cast<size_t>(z)];
    int y = -1;
    for (int cand : tz)
      if (z_rec.members.contains(cand)) {
        y = cand;
        break;
      }
    if (y < 0 || phi.at(y) != phi.at(z))
      throw std::logic_error("caristi: phi(z) not attained in phi(Tz)");
    fixed_point = tz.contains(z);
    map_json = Json::object();
    for (int x = 0; x < s.size(); ++x)
      map_json[s.label(x)] = labels_of(s, (*map.multi)[static_cast<size_t>(x)]);
    cert.evidence = Json{{"kind", "multi"},
                         {"map", map_json},
                         {"t_z", labels_of(s, tz)},
                         {"witness_y", s.label(y)},
                         {"phi_z", phi.at(z).str()}};
  }
  if (s.is_t1() && !fixed_point)
    throw std::logic_error("caristi: T1 space must yield a genuine fixed point");
  cert.evidence["fixed_point"] = fixed_point;
  cert.evidence["t1"] = s.is_t1();
  return cert;
}

std::optional<std::vector<int>> refuting_selection(const FiniteQPSpace& s,
                                                   const Objective& phi) {
  std::vector<int> selection(static_cast<size_t>(s.size()), -1);
  for (int x = 0; x < s.size(); ++x) {
    SSetRecord rec = s_set(s, phi, x);
    for (int y : rec.members)
      if (phi.at(y) < phi.at(x)) {
        selection[static_cast<size_t>(x)] = y;
        break;
      }
    if (selection[static_cast<size_t>(x)] < 0) return std::nullopt;
  }
  return selection;
}

PrincipleCertificate equivalence_witness(const FiniteQPSpace& s, const Objective& phi) {
  require_proper(phi);
  if (refuting_selection(s, phi).has_value())
    throw std::logic_error(
        "equivalence_witness: refuting selection exists on a finite space");
  PrincipleCertificate cert = weak_ekeland(s, phi);
  cert.principle = "equivalence";
  cert.evidence["refuting_selection_exists"] = false;
  return cert;
}

VerifyResult verify_certificate(const FiniteQPSpace& s, const Objective& phi,
                                const Json& certificate) {
  auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
  if (!certificate.contains("principle") || !certificate.contains("z"))
    return fail("certificate missing principle/z");
  const std::string principle = certificate["principle"];
  const int z = s.index_of(certificate["z"]);
  if (z < 0) return fail("certificate z is not a point of the space");

  if (principle == "weak-ekeland" || principle == "equivalence") {
    SSetRecord rec = s_set(s, phi, z);
    for (int y : rec.members)
      if (phi.at(y) != phi.at(z)) return fail("phi not constant on S(z)");
    if (!weak_consequences_hold(s, phi, rec, nullptr))
      return fail("weak Ekeland consequences fail");
    if (!weak_split_form_holds(s, phi, rec, nullptr))
      return fail("weak Ekeland split form fails");
    return {};
  }
  if (principle == "full-ekeland") {
    const Json& ev = certificate["evidence"];
    FullEkelandParams params{parse_rational(ev["epsilon"]),
                             parse_rational(ev["lambda"]),
                             s.require_point(ev["x0"])};
    const Rational gamma = params.gamma();
    FiniteQPSpace scaled = scale_space(s, gamma);
    SSetRecord rec = s_set(scaled, phi, z);
    if (!(phi.at(z) + gamma * s.d(z, params.x0) <= phi.at(params.x0)))
      return fail("full Ekeland descent inequality fails");
    if (!(s.d(z, params.x0) <= params.lambda)) return fail("localization fails");
    for (int y : rec.members)
      if (phi.at(y) != phi.at(z)) return fail("constancy on scaled S(z) fails");
    for (int x = 0; x < s.size(); ++x)
      if (!rec.members.contains(x) &&
          !(phi.at(z) < phi.at(x) + gamma * s.d(x, z)))
        return fail("strict inequality outside scaled S(z) fails");
    return {};
  }
  if (principle == "takahashi") {
    if (phi.at(z) != inf_phi(phi)) return fail("z is not a minimizer");
    return {};
  }
  if (principle == "caristi") {
    const Json& ev = certificate["evidence"];
    CaristiMap map;
    if (ev["kind"] == "single") {
      std::vector<int> t(static_cast<size_t>(s.size()));
      for (int x = 0; x < s.size(); ++x)
        t[static_cast<size_t>(x)] = s.require_point(ev["map"][s.label(x)]);
      map.single = std::move(t);
    } else {
      std::vector<PointSet> t(static_cast<size_t>(s.size()));
      for (int x = 0; x < s.size(); ++x)
        for (const auto& l : ev["map"][s.label(x)])
          t[static_cast<size_t>(x)].insert(s.require_point(l));
      map.multi = std::move(t);
    }
    try {
      validate_caristi_map(s, phi, map);
    } catch (const PreconditionError& e) {
      return fail(e.what());
    }
    if (map.single) {
      int tz = (*map.single)[static_cast<size_t>(z)];
      if (phi.at(tz) != phi.at(z)) return fail("phi(Tz) != phi(z)");
      if (s.is_t1() && tz != z) return fail("T1 space but Tz != z");
    } else {
      const PointSet& tz = (*map.multi)[static_cast<size_t>(z)];
      bool attained = std::any_of(tz.begin(), tz.end(),
                                  [&](int y) { return phi.at(y) == phi.at(z); });
      if (!attained) return fail("phi(z) not attained in phi(Tz)");
      if (s.is_t1() && !tz.contains(z)) return fail("T1 space but z not in Tz");
    }
    return {};
  }
  return fail("unknown principle: " + principle);
}

}  // namespace qpvar
