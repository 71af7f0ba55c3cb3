// SPDX-License-Identifier: Apache-2.0
#include "qpvar/incompleteness.hpp"

namespace qpvar {

namespace {

Rational pow2(int e) {
  // 2^e for possibly negative e
  boost::multiprecision::cpp_int p = 1;
  p <<= (e < 0 ? -e : e);
  return e < 0 ? Rational(1, p) : Rational(p, 1);
}

}  // namespace

Rational demo_point_value(int k) {
  if (k < 1) throw PreconditionError("demo point index must be >= 1");
  return Rational(1, k);
}

Rational demo_distance(int j, int k) {
  Rational diff = demo_point_value(j) - demo_point_value(k);
  return diff > 0 ? diff : Rational(0);
}

FiniteQPSpace demo_space(int n) {
  if (n < 2) throw PreconditionError("demo space needs N >= 2");
  std::vector<std::string> labels;
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) m(i, j) = demo_distance(i + 1, j + 1);
  }
  return FiniteQPSpace(std::move(labels), std::move(m));
}

Objective counterexample_phi(const FiniteQPSpace& truncation) {
  std::vector<ExtReal> values;
  for (int i = 0; i < truncation.size(); ++i) values.emplace_back(pow2(-i));  // 2^(1-k), k=i+1
  return Objective(std::move(values));
}

CauchyReport verify_cauchy_not_convergent(int n) {
  FiniteQPSpace space = demo_space(n);
  CauchyReport report;
  report.n = n;

  report.right_k_cauchy = true;
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < m; ++l)  // pair (x_{m+1}, x_{l+1}) with m > l
      if (space.d(m, l) != 0) report.right_k_cauchy = false;

  // left K-Cauchy: d(x_l, x_m) = 1/l - 1/m < 1/l < eps once l >= ceil(1/eps);
  // on the truncation every pair with l >= ceil(1/eps) is checked exactly
  report.left_k_cauchy = true;
  for (int l = 0; l < n && report.left_k_cauchy; ++l)
    for (int m = l + 1; m < n; ++m)
      if (!(space.d(l, m) < Rational(1, l + 1))) report.left_k_cauchy = false;

  for (int k = 1; k <= n; ++k) {
    NonConvergenceWitness w;
    w.k = k;
    w.eps = Rational(1, 2 * k);
    w.cutoff = 2 * k;
    // d(x_k, x_n) = 1/k - 1/n is nondecreasing in n, so the value at the
    // cutoff bounds the whole tail from below
    w.tail_at_cutoff = demo_distance(k, w.cutoff);
    w.verified = w.tail_at_cutoff >= w.eps &&
                 demo_distance(k, w.cutoff + 1) >= w.tail_at_cutoff;
    report.witnesses.push_back(w);
  }

  report.pass = report.right_k_cauchy && report.left_k_cauchy;
  for (const auto& w : report.witnesses) report.pass = report.pass && w.verified;
  return report;
}

RefutationReport refute_weak_ekeland(int n) {
  FiniteQPSpace space = demo_space(n);
  Objective phi = counterexample_phi(space);
  RefutationReport report;
  report.n = n;

  report.no_weak_ekeland_point_below_n = true;
  for (int k = 1; k < n; ++k) {
    RefutationStep step;
    step.k = k;
    step.lhs = pow2(-k) + space.d(k, k - 1);  // phi(x_{k+1}) + d(x_{k+1}, x_k)
    step.mid = Rational(3) * pow2(-(k + 1));
    step.phi_k = pow2(1 - k);
    step.ok = step.lhs <= step.mid && step.mid < step.phi_k;
    report.no_weak_ekeland_point_below_n =
        report.no_weak_ekeland_point_below_n && step.ok;
    report.chain.push_back(step);
  }

  // T(x_k) = x_{k+1}; the boundary point x_N has nowhere to go and is
  // excluded from the refutation claim
  for (int k = 0; k < n - 1; ++k) report.caristi_refuting_map.push_back(k + 1);
  report.caristi_refuting_map.push_back(n - 1);

  PrincipleCertificate weak = weak_ekeland(space, phi);
  report.reconciliation_z = weak.z;
  report.reconciliation_ok = weak.z == n - 1;

  report.pass = report.no_weak_ekeland_point_below_n && report.reconciliation_ok;
  return report;
}

Json to_json(const CauchyReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(Json{{"candidate", "x" + std::to_string(w.k)},
                             {"eps", format_rational(w.eps)},
                             {"tail_cutoff", w.cutoff},
                             {"tail_bound", format_rational(w.tail_at_cutoff)},
                             {"verified", w.verified}});
  return Json{{"n", report.n},
              {"right_k_cauchy", report.right_k_cauchy},
              {"left_k_cauchy", report.left_k_cauchy},
              {"non_convergence_witnesses", witnesses},
              {"pass", report.pass}};
}

Json to_json(const RefutationReport& report, const FiniteQPSpace& truncation) {
  Objective phi = counterexample_phi(truncation);
  Json phi_json = Json::object();
  for (int i = 0; i < truncation.size(); ++i)
    phi_json[truncation.label(i)] = phi.at(i).str();
  Json chain = Json::array();
  for (const auto& step : report.chain)
    chain.push_back(Json{{"k", step.k},
                         {"lhs", format_rational(step.lhs)},
                         {"bound", format_rational(step.mid)},
                         {"phi_k", format_rational(step.phi_k)},
                         {"ok", step.ok}});
  Json t_map = Json::object();
  for (int k = 0; k < truncation.size(); ++k)
    t_map[truncation.label(k)] =
        truncation.label(report.caristi_refuting_map[static_cast<size_t>(k)]);
  return Json{{"n", report.n},
              {"phi", phi_json},
              {"chain", chain},
              {"caristi_refuting_map", t_map},
              {"boundary_note",
               "x" + std::to_string(report.n) +
                   " is excluded from the refutation claim (truncation boundary)"},
              {"reconciliation_z", truncation.label(report.reconciliation_z)},
              {"reconciliation_ok", report.reconciliation_ok},
              {"pass", report.pass}};
}

}  // namespace qpvar
