// SPDX-License-Identifier: Apache-2.0
#include "qpvar/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace qpvar {

FiniteQPSpace space_from_json(const Json& j) {
  if (!j.contains("points") || !j.contains("d"))
    throw PreconditionError("space file needs \"points\" and \"d\"");
  std::vector<std::string> labels = j["points"].get<std::vector<std::string>>();
  const Json& rows = j["d"];
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(rows.size()) != n)
    throw PreconditionError("distance matrix is not square against the point list");
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw PreconditionError("distance matrix row " + std::to_string(i) +
                              " has wrong length");
    for (int k = 0; k < n; ++k) {
      const std::string cell = rows[i][k].get<std::string>();
      if (cell == "inf")
        throw PreconditionError("\"inf\" is not a valid distance");
      m(i, k) = parse_rational(cell);
    }
  }
  return FiniteQPSpace(std::move(labels), std::move(m));
}

Json space_to_json(const FiniteQPSpace& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(format_rational(s.d(i, j)));
    rows.push_back(row);
  }
  return Json{{"points", s.labels()}, {"d", rows}};
}

Objective objective_from_json(const Json& j, const FiniteQPSpace& s) {
  if (!j.contains("phi")) throw PreconditionError("objective file needs \"phi\"");
  const Json& table = j["phi"];
  std::vector<ExtReal> values(static_cast<size_t>(s.size()), ExtReal::infinity());
  std::vector<bool> seen(static_cast<size_t>(s.size()), false);
  for (auto it = table.begin(); it != table.end(); ++it) {
    int p = s.require_point(it.key());
    values[static_cast<size_t>(p)] = parse_ext_real(it.value().get<std::string>());
    seen[static_cast<size_t>(p)] = true;
  }
  for (int p = 0; p < s.size(); ++p)
    if (!seen[static_cast<size_t>(p)])
      throw PreconditionError("objective is not total: missing value for \"" +
                              s.label(p) + "\"");
  return Objective(std::move(values));
}

Json objective_to_json(const Objective& phi, const FiniteQPSpace& s) {
  Json table = Json::object();
  for (int p = 0; p < s.size(); ++p) table[s.label(p)] = phi.at(p).str();
  return Json{{"phi", table}};
}

CaristiMap caristi_map_from_json(const Json& j, const FiniteQPSpace& s) {
  if (!j.is_object() || j.empty())
    throw PreconditionError("map file must be a nonempty object");
  const bool multi = j.begin().value().is_array();
  CaristiMap map;
  if (multi) {
    std::vector<PointSet> t(static_cast<size_t>(s.size()));
    for (auto it = j.begin(); it != j.end(); ++it) {
      int x = s.require_point(it.key());
      if (!it.value().is_array())
        throw PreconditionError("map file mixes single and set-valued entries");
      for (const auto& l : it.value())
        t[static_cast<size_t>(x)].insert(s.require_point(l.get<std::string>()));
    }
    map.multi = std::move(t);
  } else {
    std::vector<int> t(static_cast<size_t>(s.size()), -1);
    for (auto it = j.begin(); it != j.end(); ++it) {
      int x = s.require_point(it.key());
      if (!it.value().is_string())
        throw PreconditionError("map file mixes single and set-valued entries");
      t[static_cast<size_t>(x)] = s.require_point(it.value().get<std::string>());
    }
    if (std::find(t.begin(), t.end(), -1) != t.end())
      throw PreconditionError("map file must be total over the space's points");
    map.single = std::move(t);
  }
  return map;
}

Json certificate_to_json(const PrincipleCertificate& cert, const FiniteQPSpace& s) {
  return Json{{"principle", cert.principle},
              {"z", s.label(cert.z)},
              {"evidence", cert.evidence}};
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

FiniteQPSpace load_space(const std::string& path) {
  return space_from_json(load_json(path));
}

Objective load_objective(const std::string& path, const FiniteQPSpace& s) {
  return objective_from_json(load_json(path), s);
}

CaristiMap load_caristi_map(const std::string& path, const FiniteQPSpace& s) {
  return caristi_map_from_json(load_json(path), s);
}

}  // namespace qpvar
