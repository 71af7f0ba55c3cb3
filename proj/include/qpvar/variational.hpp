// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <variant>

#include <json.hpp>

#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"

namespace qpvar {

using Json = nlohmann::ordered_json;

/// S(x) = {y : phi(y) + d(y,x) <= phi(x)} with J(x) = min phi over S(x).
/// When phi(x) = +inf the set is all of X (flagged via base_infinite) and
/// such points are never used as Picard iterates.
struct SSetRecord {
  int base = -1;
  PointSet members;
  ExtReal j_value;
  bool base_infinite = false;
};

SSetRecord s_set(const FiniteQPSpace& s, const Objective& phi, int x);

/// Picks the next Picard iterate out of S(x); must return a member
/// satisfying the strict half-gap phi(y) < (phi(x) + J(x)) / 2 whenever
/// phi(x) > J(x), or -1 to give up (SelectionExhausted). A violating
/// choice is a contract breach and faults the run.
using SelectionRule =
    std::function<int(const FiniteQPSpace&, const Objective&, const SSetRecord&)>;

/// Default rule: argmin of phi over S(x), ties broken by lowest index.
/// On a finite space the argmin attains J(x), so the half-gap holds
/// whenever phi(x) > J(x).
SelectionRule argmin_selection();

enum class Termination { ReachedJ, SelectionExhausted };

/// Iterates with strictly decreasing phi and nested S-sets; ReachedJ means
/// the final iterate z satisfies phi(z) = J(z). On a finite space this is
/// reached in at most |X| steps.
struct PicardTrace {
  std::vector<int> iterates;
  std::vector<ExtReal> phi_values;
  std::vector<ExtReal> j_values;
  ExtReal alpha;
  Termination termination = Termination::ReachedJ;
};

/// Requires phi proper and phi(x0) finite. Throws std::logic_error if the
/// selection rule breaches its contract.
PicardTrace picard_run(const FiniteQPSpace& s, const Objective& phi, int x0,
                       const SelectionRule& rule = argmin_selection());

/// Machine-checkable result of a principle solver. The evidence is
/// re-verifiable by verify_certificate, an independent recomputation pass.
struct PrincipleCertificate {
  std::string principle;
  int z = -1;
  Json evidence;
};

/// Weak Ekeland point: z with phi constant on S(z). The certificate also
/// records, for every y in S(z): S(y) inside closure{y}, the strict
/// inequality phi(y) < phi(x) + d(x,y) off S(y), and the split form
/// (equality on S(z), strict on closure{z} minus S(z), strict-plus-distance
/// elsewhere). Rejects improper phi.
PrincipleCertificate weak_ekeland(const FiniteQPSpace& s, const Objective& phi);

struct FullEkelandParams {
  Rational epsilon;  // > 0
  Rational lambda;   // > 0
  int x0 = -1;
  Rational gamma() const { return epsilon / lambda; }
};

/// Full Ekeland principle. Requires phi proper and lsc, and
/// phi(x0) <= epsilon + inf phi (violations rejected with the exact gap).
/// Follows the scaled-space construction: restricts to
/// X0 = {x : phi(x) <= phi(x0) + gamma d(x0,x)}, asserts X0 closed and
/// the scaled S-sets of X0-points contained in X0, then runs the Picard
/// engine inside X0. Conclusions (i)-(iv) are re-verified exactly.
PrincipleCertificate full_ekeland(const FiniteQPSpace& s, const Objective& phi,
                                  const FullEkelandParams& params);

struct TakahashiWitness {
  int x = -1;  // point where the hypothesis fails
};

/// If every x with phi(x) > inf phi admits y in S(x) with phi(y) < phi(x),
/// returns a certified minimizer reached through the Picard engine and
/// cross-checked against argmin_set; otherwise returns the failing x.
/// Also evaluates the stronger hypothesis S(x) \ closure{x} nonempty and
/// records that it implies the main one.
std::variant<PrincipleCertificate, TakahashiWitness> takahashi(
    const FiniteQPSpace& s, const Objective& phi);

/// Single-valued: T(x) in S(x) for all x. Set-valued: S(x) meets T(x).
struct CaristiMap {
  std::optional<std::vector<int>> single;
  std::optional<std::vector<PointSet>> multi;
};

/// Validates the map premise exhaustively (violations rejected naming the
/// offending point), then produces z with phi(Tz) = phi(z) (single) or
/// phi(z) attained in phi(Tz) (multi); on a T1 space z is a genuine fixed
/// point.
PrincipleCertificate caristi(const FiniteQPSpace& s, const Objective& phi,
                             const CaristiMap& map);

/// The greedy construction from the equivalence proof: a total selection
/// T with Tx in S(x) and phi(Tx) < phi(x) for all x, when one exists.
/// Such a selection refutes the Caristi conclusion and exists iff weak
/// Ekeland fails.
std::optional<std::vector<int>> refuting_selection(const FiniteQPSpace& s,
                                                   const Objective& phi);

/// Returns the weak-Ekeland certificate when it succeeds; a finite space
/// is sequentially right K-complete, so this branch always triggers and
/// the operation asserts it (a refuting selection on a finite space would
/// be an implementation bug).
PrincipleCertificate equivalence_witness(const FiniteQPSpace& s, const Objective& phi);

/// Independent verifier pass: recomputes every claim in a certificate
/// directly from the space and objective. Returns diagnostics for the
/// first failing claim.
struct VerifyResult {
  bool ok = true;
  std::string detail;
};
VerifyResult verify_certificate(const FiniteQPSpace& s, const Objective& phi,
                                const Json& certificate);

}  // namespace qpvar
