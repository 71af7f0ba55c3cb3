// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "qpvar/objective.hpp"
#include "qpvar/space.hpp"
#include "qpvar/variational.hpp"

namespace qpvar {

// File formats:
//   space:     { "points": [labels], "d": [[rational strings]] }
//   objective: { "phi": { label: rational-string | "inf" } }
//   map:       { label: label } or { label: [labels] }
// "inf" is reserved for objectives, never distances.

FiniteQPSpace space_from_json(const Json& j);
Json space_to_json(const FiniteQPSpace& s);

Objective objective_from_json(const Json& j, const FiniteQPSpace& s);
Json objective_to_json(const Objective& phi, const FiniteQPSpace& s);

CaristiMap caristi_map_from_json(const Json& j, const FiniteQPSpace& s);

Json certificate_to_json(const PrincipleCertificate& cert, const FiniteQPSpace& s);

FiniteQPSpace load_space(const std::string& path);
Objective load_objective(const std::string& path, const FiniteQPSpace& s);
CaristiMap load_caristi_map(const std::string& path, const FiniteQPSpace& s);
Json load_json(const std::string& path);

}  // namespace qpvar
