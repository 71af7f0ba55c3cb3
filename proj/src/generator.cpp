// SPDX-License-Identifier: Apache-2.0
#include "qpvar/generator.hpp"

#include <algorithm>

namespace qpvar {

void min_plus_closure(RationalMatrix& m) {
  const int n = m.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational via = m(i, k) + m(k, j);
        if (via < m(i, j)) m(i, j) = via;
      }
}

Rational InstanceGenerator::random_distance() {
  if (below(100) < static_cast<std::uint64_t>(options_.zero_percent)) return 0;
  auto num = below(6) + 1;
  auto den = below(4) + 1;
  return Rational(num, den);
}

Objective InstanceGenerator::random_objective(int n) {
  std::vector<ExtReal> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (below(100) < static_cast<std::uint64_t>(options_.inf_percent)) {
      values.push_back(ExtReal::infinity());
    } else {
      long num = static_cast<long>(below(10)) - 3;  // -3..6
      auto den = below(4) + 1;
      values.push_back(ExtReal(Rational(num, static_cast<long>(den))));
    }
  }
  // keep phi proper
  bool proper = std::any_of(values.begin(), values.end(),
                            [](const ExtReal& v) { return v.is_finite(); });
  if (!proper) values[0] = ExtReal(Rational(0));
  return Objective(std::move(values));
}

std::pair<FiniteQPSpace, Objective> InstanceGenerator::next_instance() {
  int n = static_cast<int>(below(static_cast<std::uint64_t>(options_.max_n))) + 1;
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i, j) = random_distance();
  min_plus_closure(m);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return {FiniteQPSpace(std::move(labels), std::move(m)), random_objective(n)};
}

std::pair<FiniteQPSpace, Objective> InstanceGenerator::next_metric_instance() {
  int n = static_cast<int>(below(static_cast<std::uint64_t>(options_.max_n))) + 1;
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational d(below(6) + 1, below(4) + 1);  // strictly positive
      m(i, j) = d;
      m(j, i) = d;
    }
  min_plus_closure(m);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return {FiniteQPSpace(std::move(labels), std::move(m)), random_objective(n)};
}

CaristiMap InstanceGenerator::random_caristi_map(const FiniteQPSpace& s,
                                                 const Objective& phi) {
  CaristiMap map;
  const bool single = below(2) == 0;
  if (single) {
    std::vector<int> t;
    for (int x = 0; x < s.size(); ++x) {
      PointSet members = s_set(s, phi, x).members;
      std::vector<int> choices(members.begin(), members.end());
      t.push_back(choices[static_cast<size_t>(below(choices.size()))]);
    }
    map.single = std::move(t);
  } else {
    std::vector<PointSet> t;
    for (int x = 0; x < s.size(); ++x) {
      PointSet members = s_set(s, phi, x).members;
      std::vector<int> choices(members.begin(), members.end());
      PointSet tx{choices[static_cast<size_t>(below(choices.size()))]};
      // pad with arbitrary extra points
      for (int extra = 0; extra < s.size(); ++extra)
        if (below(4) == 0) tx.insert(random_point(s.size()));
      t.push_back(std::move(tx));
    }
    map.multi = std::move(t);
  }
  return map;
}

FullEkelandParams InstanceGenerator::random_full_params(const FiniteQPSpace& s,
                                                        const Objective& phi) {
  std::vector<int> dom;
  for (int x = 0; x < s.size(); ++x)
    if (phi.at(x).is_finite()) dom.push_back(x);
  FullEkelandParams params;
  params.x0 = dom[static_cast<size_t>(below(dom.size()))];
  Rational slack(below(4) + 1, below(3) + 1);
  params.epsilon = phi.at(params.x0) - inf_phi(phi) + slack;
  params.lambda = Rational(below(5) + 1, below(3) + 1);
  return params;
}

PointSet InstanceGenerator::random_subset(int n) {
  PointSet out;
  for (int i = 0; i < n; ++i)
    if (below(2) == 0) out.insert(i);
  return out;
}

}  // namespace qpvar
