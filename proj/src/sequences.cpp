// SPDX-License-Identifier: Apache-2.0
#include "qpvar/sequences.hpp"

#include <sstream>

namespace qpvar {

namespace {

std::vector<int> parse_label_list(const FiniteQPSpace& s, const std::string& body) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(body);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(s.require_point(item));
  }
  return out;
}

std::string bracket_body(const std::string& part, const std::string& key) {
  auto eq = part.find('=');
  if (eq == std::string::npos || part.substr(0, eq) != key)
    throw PreconditionError("sequence syntax: expected \"" + key + "=[...]\"");
  std::string v = part.substr(eq + 1);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw PreconditionError("sequence syntax: expected \"" + key + "=[...]\"");
  return v.substr(1, v.size() - 2);
}

}  // namespace

EPSequence parse_ep_sequence(const FiniteQPSpace& s, const std::string& text) {
  EPSequence seq;
  auto semi = text.find(';');
  if (semi == std::string::npos) {
    seq.cycle = parse_label_list(s, bracket_body(text, "cycle"));
  } else {
    seq.preperiod = parse_label_list(s, bracket_body(text.substr(0, semi), "pre"));
    seq.cycle = parse_label_list(s, bracket_body(text.substr(semi + 1), "cycle"));
  }
  if (seq.cycle.empty()) throw PreconditionError("sequence cycle must be nonempty");
  return seq;
}

bool converges_to(const FiniteQPSpace& s, const EPSequence& seq, int x) {
  for (int v : seq.cycle)
    if (s.d(x, v) != 0) return false;
  return true;
}

PointSet limit_set(const FiniteQPSpace& s, const EPSequence& seq) {
  PointSet out;
  for (int x = 0; x < s.size(); ++x)
    if (converges_to(s, seq, x)) out.insert(x);
  return out;
}

namespace {

bool cycle_all_pairs_zero(const FiniteQPSpace& s, const std::vector<int>& cycle) {
  for (int u : cycle)
    for (int v : cycle)
      if (s.d(u, v) != 0) return false;
  return true;
}

}  // namespace

bool is_right_k_cauchy(const FiniteQPSpace& s, const EPSequence& seq) {
  return cycle_all_pairs_zero(s, seq.cycle);
}

bool is_left_k_cauchy(const FiniteQPSpace& s, const EPSequence& seq) {
  return cycle_all_pairs_zero(s, seq.cycle);
}

CompletenessCertificate right_k_complete_check(const FiniteQPSpace& s) {
  const int n = s.size();
  if (n > 16) throw PreconditionError("right_k_complete_check limited to n <= 16");
  CompletenessCertificate cert;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> cycle;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) cycle.push_back(i);
    if (!cycle_all_pairs_zero(s, cycle)) continue;
    EPSequence seq{{}, cycle};
    PointSet limits = limit_set(s, seq);
    // any cycle value is a limit: d(u,v) = 0 for all pairs
    if (limits.empty() || !limits.contains(cycle.front()))
      throw std::logic_error("right_k_complete_check: Cauchy cycle without limit");
    cert.cycles.push_back({PointSet(cycle.begin(), cycle.end()), cycle.front()});
  }
  cert.pass = true;
  return cert;
}

ExtReal liminf_phi(const FiniteQPSpace&, const EPSequence& seq, const Objective& phi) {
  ExtReal best = ExtReal::infinity();
  for (int v : seq.cycle)
    if (phi.at(v) < best) best = phi.at(v);
  return best;
}

}  // namespace qpvar
