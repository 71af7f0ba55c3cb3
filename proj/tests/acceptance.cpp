// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Criteria 1-6 run the per-suite invariant checkers over the same 1000
// seeded random instances (n <= 8) plus 1000 symmetric (metric, T1)
// companions; criterion 7 reproduces the incompleteness counterexample for
// every truncation size up to 64; criterion 8 checks that three injected
// mutants are each caught by at least one suite.

#include <chrono>
#include <iostream>
#include <vector>

#include "qpvar/incompleteness.hpp"
#include "qpvar/props.hpp"
#include "qpvar/variational.hpp"

using namespace qpvar;

namespace {

constexpr int kInstances = 1000;
constexpr std::uint64_t kSeed = 2024;

struct Corpus {
  std::vector<std::pair<FiniteQPSpace, Objective>> general;
  std::vector<std::pair<FiniteQPSpace, Objective>> metric;
};

Corpus build_corpus() {
  InstanceGenerator gen(kSeed);
  Corpus corpus;
  for (int i = 0; i < kInstances; ++i) {
    corpus.general.push_back(gen.next_instance());
    corpus.metric.push_back(gen.next_metric_instance());
  }
  return corpus;
}

bool report(int criterion, bool pass, const std::string& what) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
            << " - " << what << "\n";
  return pass;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `suite` over the corpus; on failure the law name and instance index
// land in `detail`.
template <typename Suite>
bool sweep(const std::vector<std::pair<FiniteQPSpace, Objective>>& instances,
           Suite&& suite, std::string& detail) {
  for (size_t i = 0; i < instances.size(); ++i) {
    CheckResult r = suite(instances[i].first, instances[i].second);
    if (!r.ok) {
      detail = "instance " + std::to_string(i) + ": " + r.detail;
      return false;
    }
  }
  return true;
}

// --- criterion 8 mutants -------------------------------------------------

// Mutant A: S-set membership with strict < instead of <=. Since d(x,x)=0
// the boundary is tight and the law "x in S(x)" must break.
PointSet mutant_strict_s_set(const FiniteQPSpace& s, const Objective& phi, int x) {
  PointSet members;
  if (phi.at(x).is_infinite()) return s.all_points();
  for (int y = 0; y < s.size(); ++y)
    if (phi.at(y) + s.d(y, x) < phi.at(x)) members.insert(y);
  return members;
}

bool mutant_strict_membership_caught(const Corpus& corpus) {
  for (const auto& [s, phi] : corpus.general)
    for (int x = 0; x < s.size(); ++x)
      if (phi.at(x).is_finite() && !mutant_strict_s_set(s, phi, x).contains(x))
        return true;  // suite law "x in S(x)" fails on the mutant
  return false;
}

// Mutant B: Picard engine with the half-gap contract check dropped. A
// stalling selection (stay at the current point) then loops; the trace-law
// checker must flag the missing strict decrease / non-termination.
bool mutant_dropped_half_gap_caught(const Corpus& corpus) {
  for (const auto& [s, phi] : corpus.general) {
    for (int x0 = 0; x0 < s.size(); ++x0) {
      if (phi.at(x0).is_infinite()) continue;
      std::vector<int> iterates;
      int x = x0;
      bool non_terminating = false;
      for (int step = 0;; ++step) {
        if (step > s.size()) {
          non_terminating = true;  // the half-gap guard would have fired
          break;
        }
        SSetRecord rec = s_set(s, phi, x);
        iterates.push_back(x);
        if (phi.at(x) == rec.j_value) break;
        x = rec.base;  // stalling rule: legal member, no descent
      }
      bool strict_decrease = true;
      for (size_t i = 1; i < iterates.size(); ++i)
        strict_decrease =
            strict_decrease && phi.at(iterates[i]) < phi.at(iterates[i - 1]);
      if (non_terminating || !strict_decrease) return true;
    }
  }
  return false;
}

// Mutant C: double-precision distance backend. The crafted instance
// phi(a) = 1/10, d(a,b) = 1/5, phi(b) = 3/10 has a on the boundary of
// S(b); in doubles 0.1 + 0.2 > 0.3 and the membership flips.
bool mutant_double_backend_caught() {
  RationalMatrix m(2);
  m(0, 1) = Rational(1, 5);
  m(1, 0) = Rational(1, 5);
  FiniteQPSpace s({"a", "b"}, std::move(m));
  Objective phi({ExtReal(Rational(1, 10)), ExtReal(Rational(3, 10))});

  PointSet exact = s_set(s, phi, 1).members;
  PointSet doubled;
  auto as_double = [](const Rational& r) {
    return static_cast<double>(r.convert_to<double>());
  };
  for (int y = 0; y < s.size(); ++y)
    if (as_double(phi.at(y).value()) + as_double(s.d(y, 1)) <=
        as_double(phi.at(1).value()))
      doubled.insert(y);
  return doubled != exact;
}

}  // namespace

int main() {
  bool all_pass = true;
  Corpus corpus = build_corpus();
  std::string detail;

  {
    auto start = Clock::now();
    InstanceGenerator aux(kSeed + 1);
    bool ok = true;
    for (size_t i = 0; i < corpus.general.size() && ok; ++i) {
      const auto& [s, phi] = corpus.general[i];
      ok = s.report().qm1_ok && s.report().qm2_ok;
      if (ok) {
        CheckResult r = check_axioms_topology(s, aux);
        ok = r.ok;
        if (!r.ok) detail = r.detail;
      }
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 10.0;
    all_pass &= report(1, ok,
                       "axioms/topology on 1000 instances in " +
                           std::to_string(elapsed) + " s" +
                           (detail.empty() ? "" : " (" + detail + ")"));
  }
  {
    InstanceGenerator aux(kSeed + 2);
    auto suite = [&](const FiniteQPSpace& s, const Objective&) {
      return check_order(s, aux);
    };
    bool ok = sweep(corpus.general, suite, detail) && sweep(corpus.metric, suite, detail);
    all_pass &= report(2, ok, "order class vs. separation flags" +
                                  (ok ? "" : ": " + detail));
  }
  {
    auto suite = [](const FiniteQPSpace& s, const Objective& phi) {
      return check_semicontinuity(s, phi);
    };
    bool ok = sweep(corpus.general, suite, detail) && sweep(corpus.metric, suite, detail);
    all_pass &= report(3, ok, "lsc = nearly-lsc + d-monotone, sequence cross-check" +
                                  (ok ? "" : ": " + detail));
  }
  {
    InstanceGenerator aux(kSeed + 3);
    auto suite = [&](const FiniteQPSpace& s, const Objective& phi) {
      return check_sset_picard(s, phi, aux, 3);
    };
    bool ok = sweep(corpus.general, suite, detail);
    all_pass &= report(4, ok, "S-set laws and Picard traces, 3 starts each" +
                                  (ok ? "" : ": " + detail));
  }
  {
    InstanceGenerator aux(kSeed + 4);
    auto suite = [&](const FiniteQPSpace& s, const Objective& phi) {
      return check_principles(s, phi, aux, 3);
    };
    bool ok = sweep(corpus.general, suite, detail) && sweep(corpus.metric, suite, detail);
    all_pass &= report(5, ok, "four principles with certificate re-verification" +
                                  (ok ? "" : ": " + detail));
  }
  {
    auto suite = [](const FiniteQPSpace& s, const Objective& phi) {
      return check_equivalence(s, phi);
    };
    bool ok = sweep(corpus.general, suite, detail) && sweep(corpus.metric, suite, detail);
    all_pass &= report(6, ok, "three-way equivalence, metric case S(z)={z}" +
                                  (ok ? "" : ": " + detail));
  }
  {
    auto start = Clock::now();
    bool ok = true;
    for (int n = 2; n <= 64 && ok; ++n)
      ok = verify_cauchy_not_convergent(n).pass && refute_weak_ekeland(n).pass;
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    all_pass &= report(7, ok,
                       "incompleteness reproduction, N = 2..64 in " +
                           std::to_string(elapsed) + " s");
  }
  {
    bool a = mutant_strict_membership_caught(corpus);
    bool b = mutant_dropped_half_gap_caught(corpus);
    bool c = mutant_double_backend_caught();
    all_pass &= report(8, a && b && c,
                       std::string("mutants caught: strict-membership=") +
                           (a ? "yes" : "no") + ", dropped-half-gap=" +
                           (b ? "yes" : "no") + ", double-backend=" +
                           (c ? "yes" : "no"));
  }
  return all_pass ? 0 : 1;
}
