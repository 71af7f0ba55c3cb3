// SPDX-License-Identifier: Apache-2.0
#include "qpvar/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qpvar/generator.hpp"
#include "qpvar/incompleteness.hpp"
#include "qpvar/json_io.hpp"
#include "qpvar/order.hpp"
#include "qpvar/props.hpp"
#include "qpvar/variational.hpp"

namespace qpvar {

namespace {

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw PreconditionError("cannot write to " + out_path);
    f << j.dump(2) << "\n";
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QPVAR_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

Json validate_command(const std::string& space_path) {
  Json j = load_json(space_path);
  if (!j.contains("points") || !j.contains("d"))
    throw PreconditionError("space file needs \"points\" and \"d\"");
  const int n = static_cast<int>(j["points"].size());
  const Json& rows = j["d"];
  if (static_cast<int>(rows.size()) != n)
    throw PreconditionError("distance matrix is not square against the point list");
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw PreconditionError("matrix is not square: row " + std::to_string(i));
    for (int k = 0; k < n; ++k) {
      m(i, k) = parse_rational(rows[i][k].get<std::string>());
      if (m(i, k) < 0)
        throw PreconditionError("negative distance at entry (" + std::to_string(i) +
                                "," + std::to_string(k) + ")");
    }
  }
  ValidationReport rep = validate_matrix(m);
  Json out{{"qm1", rep.qm1_ok}, {"qm2", rep.qm2_ok},
           {"qm3", rep.qm3_ok}, {"t1", rep.t1_ok}};
  auto point = [&](int i) { return j["points"][i].get<std::string>(); };
  if (rep.qm1_witness)
    out["qm1_witness"] = Json::array({point(rep.qm1_witness->first),
                                      point(rep.qm1_witness->second)});
  if (rep.qm2_witness)
    out["qm2_witness"] = Json::array({point((*rep.qm2_witness)[0]),
                                      point((*rep.qm2_witness)[1]),
                                      point((*rep.qm2_witness)[2])});
  return out;
}

Json report_command(const FiniteQPSpace& s) {
  Json hasse = Json::array();
  for (auto [x, y] : hasse_edges(s))
    hasse.push_back(Json::array({s.label(x), s.label(y)}));
  return Json{{"order_class", to_string(order_class(s))},
              {"t0", s.is_quasi_metric()},
              {"t1", s.is_t1()},
              {"hasse", hasse}};
}

Json prop_test_command(std::uint64_t seed, int count, int max_n, std::ostream& err) {
  if (count == 0) err << "warning: count=0, vacuous pass\n";
  InstanceGenerator gen(seed, {.max_n = max_n});
  int failures = 0;
  Json failure_detail;
  for (int i = 0; i < count; ++i) {
    auto [space, phi] = gen.next_instance();
    CheckResult r = check_all(space, phi, gen);
    if (r.ok) {
      auto [msp, mphi] = gen.next_metric_instance();
      r = check_all(msp, mphi, gen);
      if (!r.ok) {
        failure_detail = Json{{"instance", i}, {"law", r.detail},
                              {"space", space_to_json(msp)},
                              {"phi", objective_to_json(mphi, msp)}};
      }
    } else {
      failure_detail = Json{{"instance", i}, {"law", r.detail},
                            {"space", space_to_json(space)},
                            {"phi", objective_to_json(phi, space)}};
    }
    if (!r.ok) {
      ++failures;
      break;  // full instance recorded for replay
    }
  }
  Json out{{"seed", seed}, {"count", count}, {"max_n", max_n},
           {"failures", failures}, {"pass", failures == 0}};
  if (failures > 0) out["failure"] = failure_detail;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quasi-pseudometric variational principles"};
  app.require_subcommand(1);
  std::string space_path, phi_path, map_path, cert_path, out_path;
  std::string eps_str, lambda_str, x0_label;
  int n = 10;
  std::uint64_t seed = default_seed();
  int count = 1000, max_n = 8;

  auto add_space_phi = [&](CLI::App* cmd) {
    cmd->add_option("space", space_path, "space JSON file")->required();
    cmd->add_option("phi", phi_path, "objective JSON file")->required();
  };

  auto* validate = app.add_subcommand("validate", "check QM1-QM3 and T1 for a matrix");
  validate->add_option("space", space_path)->required();
  auto* report = app.add_subcommand("report", "order class, Hasse reduction, T0/T1");
  report->add_option("space", space_path)->required();
  auto* weak = app.add_subcommand("ekeland-weak", "weak Ekeland principle");
  add_space_phi(weak);
  auto* full = app.add_subcommand("ekeland-full", "full Ekeland principle");
  add_space_phi(full);
  full->add_option("--eps", eps_str)->required();
  full->add_option("--lambda", lambda_str)->required();
  full->add_option("--x0", x0_label)->required();
  auto* taka = app.add_subcommand("takahashi", "Takahashi minimization principle");
  add_space_phi(taka);
  auto* car = app.add_subcommand("caristi", "Caristi fixed point theorem");
  add_space_phi(car);
  car->add_option("--map", map_path)->required();
  auto* equiv = app.add_subcommand("equivalence", "three-way equivalence witness");
  add_space_phi(equiv);
  auto* demo = app.add_subcommand("incomplete-demo",
                                  "incompleteness counterexample on a truncation");
  demo->add_option("--n", n);
  auto* prop = app.add_subcommand("prop-test", "seeded random property suite");
  prop->add_option("--seed", seed);
  prop->add_option("--count", count);
  prop->add_option("--max-n", max_n);
  auto* verify = app.add_subcommand("verify", "re-verify an emitted certificate");
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("space", space_path)->required();
  verify->add_option("phi", phi_path)->required();
  for (auto* cmd : {validate, report, weak, full, taka, car, equiv, demo, prop, verify})
    cmd->add_option("--out", out_path, "write JSON here instead of stdout");

  std::vector<const char*> argv{"qpvar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*validate) {
      emit(validate_command(space_path), out_path, out);
      return 0;
    }
    if (*report) {
      emit(report_command(load_space(space_path)), out_path, out);
      return 0;
    }
    if (*demo) {
      if (n < 2) throw PreconditionError("--n must be >= 2");
      FiniteQPSpace truncation = demo_space(n);
      Objective phi = counterexample_phi(truncation);
      Json j{{"n", n},
             {"phi", objective_to_json(phi, truncation)["phi"]},
             {"cauchy", to_json(verify_cauchy_not_convergent(n))},
             {"refutation", to_json(refute_weak_ekeland(n), truncation)}};
      emit(j, out_path, out);
      return 0;
    }
    if (*prop) {
      Json j = prop_test_command(seed, count, max_n, err);
      emit(j, out_path, out);
      return j["pass"].get<bool>() ? 0 : 1;
    }

    FiniteQPSpace space = load_space(space_path);
    if (*verify) {
      Objective phi = load_objective(phi_path, space);
      VerifyResult r = verify_certificate(space, phi, load_json(cert_path));
      emit(Json{{"verified", r.ok}, {"detail", r.detail}}, out_path, out);
      return r.ok ? 0 : 2;
    }
    Objective phi = load_objective(phi_path, space);
    if (*weak) {
      emit(certificate_to_json(weak_ekeland(space, phi), space), out_path, out);
      return 0;
    }
    if (*full) {
      FullEkelandParams params{parse_rational(eps_str), parse_rational(lambda_str),
                               space.require_point(x0_label)};
      emit(certificate_to_json(full_ekeland(space, phi, params), space), out_path, out);
      return 0;
    }
    if (*taka) {
      auto result = takahashi(space, phi);
      if (std::holds_alternative<PrincipleCertificate>(result)) {
        emit(certificate_to_json(std::get<PrincipleCertificate>(result), space),
             out_path, out);
      } else {
        emit(Json{{"principle", "takahashi"},
                  {"hypothesis_violated_at",
                   space.label(std::get<TakahashiWitness>(result).x)}},
             out_path, out);
      }
      return 0;
    }
    if (*car) {
      CaristiMap map = load_caristi_map(map_path, space);
      emit(certificate_to_json(caristi(space, phi, map), space), out_path, out);
      return 0;
    }
    if (*equiv) {
      emit(certificate_to_json(equivalence_witness(space, phi), space), out_path, out);
      return 0;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qpvar
