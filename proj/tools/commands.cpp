// Copyright 2026 The finphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "finphase/dynamics.hpp"
#include "finphase/io.hpp"
#include "finphase/linalg.hpp"
#include "finphase/mub.hpp"
#include "finphase/random_states.hpp"
#include "finphase/wigner.hpp"

namespace finphase::cli {

namespace {

constexpr long long kMatrixLimit = 1LL << 10;

struct RunConfig {
  int p = 0;
  int n = 0;
  std::string convention;
  std::string input;
  std::string hamiltonian;
  std::string out;
  std::string format = "json";
  std::vector<std::string> checks;
  std::vector<int> poly;
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 10;
  double tol = 1e-10;
  unsigned long long seed = 1;
  bool compact = false;
};

class CheckFailed : public std::exception {};

int exponent(const RunConfig& cfg) { return cfg.n == 0 ? 1 : cfg.n; }

void require_dims(const RunConfig& cfg) {
  if (cfg.p == 0) throw ValidationError("--p is required");
  if (!is_prime(cfg.p)) throw ValidationError(std::to_string(cfg.p) + " is not prime");
  if (cfg.n < 0) throw ValidationError("--n must be at least 1");
  if (checked_pow(cfg.p, exponent(cfg)) > kMatrixLimit) throw ValidationError("p^n exceeds 2^10");
}

std::pair<int, int> dims_for(const RunConfig& cfg, long long d) {
  const auto [p, n] = prime_power_of(d);
  if ((cfg.p != 0 && cfg.p != p) || (cfg.n != 0 && cfg.n != n)) {
    throw ValidationError("matrix size " + std::to_string(d) + " does not match --p/--n");
  }
  if (d > kMatrixLimit) throw ValidationError("p^n exceeds 2^10");
  return {p, n};
}

// Named inputs: "random" is the completely random state I/d, "haar" a seeded pure state,
// "ginibre" a seeded mixed state, "entangled" the maximally entangled two-qudit state.
Matrix load_state(const RunConfig& cfg, const std::string& source) {
  if (source.empty()) throw ValidationError("--input is required");
  if (source == "random" || source == "haar" || source == "ginibre") {
    require_dims(cfg);
    const long long d = checked_pow(cfg.p, exponent(cfg));
    Rng rng(cfg.seed);
    if (source == "random") return Matrix::Identity(d, d) / static_cast<double>(d);
    return source == "haar" ? random_pure_state(d, rng) : random_density(d, rng);
  }
  if (source == "entangled") {
    if (cfg.p == 0) throw ValidationError("--p is required");
    if (cfg.n != 0 && cfg.n != 2) throw ValidationError("the entangled state needs n = 2");
    return maximally_entangled_state(cfg.p);
  }
  std::optional<PhaseSpace> space;
  if (cfg.p != 0) {
    require_dims(cfg);
    space.emplace(cfg.p, exponent(cfg));
  }
  return state_from_json(load_json_file(source), space);
}

Matrix load_hamiltonian(const RunConfig& cfg, long long d) {
  if (cfg.hamiltonian.empty()) throw ValidationError("--hamiltonian is required");
  if (cfg.hamiltonian == "random") {
    Rng rng(cfg.seed + 1);
    return random_hermitian(d, rng);
  }
  if (cfg.hamiltonian == "zero") return Matrix::Zero(d, d);
  return matrix_from_json(load_json_file(cfg.hamiltonian));
}

Convention pick_convention(const RunConfig& cfg, int p, int n) {
  return cfg.convention.empty() ? Convention::default_for(p, n) : Convention::parse(cfg.convention);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

void cmd_field(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p == 0) throw ValidationError("--p is required");
  const auto field = cfg.poly.empty() ? GaloisField::make(cfg.p, std::max(cfg.n, 1))
                                      : GaloisField::make(cfg.p, std::max(cfg.n, 1), cfg.poly);
  json j = field_to_json(field);
  json traces = json::array();
  for (int k = 0; k < 2 * field.n() - 1; ++k) traces.push_back(field.trace_of_power(k));
  j["trace_of_lambda_powers"] = traces;
  json dual = json::array();
  for (const auto& g : dual_basis(field)) dual.push_back(g.coeffs());
  j["dual_basis"] = dual;
  if (field.p() != 2) j["quadratic_nonresidue"] = smallest_nonresidue(field.p());
  out << j.dump(2) << "\n";
}

void cmd_mub(const RunConfig& cfg, std::ostream& out) {
  require_dims(cfg);
  const PhaseSpace space(cfg.p, cfg.n);
  const auto bases = full_mub(space);
  const auto rep = verify_mub(bases);
  json doc = {{"field", field_to_json(space.field())}, {"report", mub_report_to_json(rep)}};
  doc["classes"] = mub_compact_to_json(space);
  if (!cfg.compact) doc["bases"] = mub_to_json(space, bases);
  if (!cfg.out.empty()) write_text_file(cfg.out, doc.dump(2) + "\n");
  json summary = mub_report_to_json(rep);
  summary["pass"] = rep.ok(cfg.tol);
  out << summary.dump(2) << "\n";
  if (!rep.ok(cfg.tol)) throw CheckFailed();
}

void cmd_wigner(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Matrix rho = load_state(cfg, cfg.input);
  require_square(rho, "state");
  const auto [p, n] = dims_for(cfg, rho.rows());
  if (hermiticity_error(rho) > cfg.tol) {
    err << "warning: input is not Hermitian; the operator Wigner function is complex\n";
  }
  const WignerFrame frame(p, n, pick_convention(cfg, p, n));
  const auto w = wigner_function(frame, rho);
  if (cfg.format == "json") {
    emit(cfg, wigner_to_json(w).dump(2) + "\n", out);
  } else if (cfg.format == "csv") {
    emit(cfg, wigner_to_csv(w), out);
  } else {
    emit(cfg, wigner_to_pgm(w), out);
  }
}

std::vector<Matrix> reduced_states(const Matrix& rho, int p, int n) {
  std::vector<Matrix> parts;
  for (int j = 0; j < n; ++j) {
    const long long before = checked_pow(p, j);
    const long long after = checked_pow(p, n - j - 1);
    parts.push_back(partial_trace_second(partial_trace_first(rho, before, p * after), p, after));
  }
  return parts;
}

json check_marginals(const WignerFrame& frame, const Matrix& rho, double tol) {
  const auto w = wigner_function(frame, rho);
  double dev = 0;
  double lowest = 1;
  for (long long a = 0; a < frame.space().num_labels(); ++a) {
    for (const auto& s : outcome_vectors(frame.space().p(), frame.space().n())) {
      const cplx m = marginal_along(frame, w, a, s);
      dev = std::max(dev, std::abs(m - (rho * mub_projector_matrix(frame.space(), a, s)).trace()));
      lowest = std::min(lowest, m.real());
    }
  }
  return {{"check", "marginals"}, {"max_deviation", dev}, {"min_marginal", lowest}, {"pass", dev < tol}};
}

json check_plancherel(const WignerFrame& frame, const Matrix& rho, double tol) {
  const auto w = wigner_function(frame, rho);
  const double dev = std::abs(plancherel_inner(w, w) - (rho * rho).trace().real());
  const auto st = support_stats(w);
  return {{"check", "plancherel"},
          {"max_deviation", dev},
          {"support", st.support},
          {"max_abs", st.max_abs},
          {"bounds_ok", st.bound_ok},
          {"pass", dev < tol}};
}

json check_separability(const Matrix& rho, int p, int n, double tol) {
  if (n < 2) throw ValidationError("separability needs n >= 2");
  const auto parts = reduced_states(rho, p, n);
  const auto rep = check_separable_mixture({1.0}, {parts});
  const WignerFrame frame(p, n, Convention::parse(rep.convention));
  const auto w = wigner_function(frame, rho);
  const auto wp = wigner_function(frame, kron_all(parts));
  double dev = 0;
  for (std::size_t k = 0; k < w.values.size(); ++k) dev = std::max(dev, std::abs(w.values[k] - wp.values[k]));
  json j = {{"check", "separability"},
            {"convention", rep.convention},
            {"product_deviation", dev},
            {"factorization_deviation", rep.max_deviation},
            {"pass", dev < tol && rep.max_deviation < tol}};
  if (!rep.diagnostic.empty()) j["twist"] = rep.diagnostic;
  return j;
}

json positivity_json(const char* name, const PositivityReport& rep) {
  json witness = json::array();
  for (Eigen::Index k = 0; k < rep.witness_state.size(); ++k) {
    witness.push_back({rep.witness_state(k).real(), rep.witness_state(k).imag()});
  }
  json j = {{"check", name},
            {"min_eigenvalue", rep.min_eigenvalue},
            {"witness_value", rep.witness_value},
            {"pass", rep.positive}};
  if (!rep.positive) j["witness_state"] = witness;
  return j;
}

json check_pt(const Matrix& rho, int p, int n, double tol) {
  if (n != 2) throw ValidationError("partial transpose needs n = 2");
  Matrix pt;
  std::string route;
  if (p == 2) {
    pt = partial_transpose_second(rho, 2, 2);
    route = "matrix";
  } else {
    const WignerFrame frame(p, 2, Convention(ConventionKind::Separable));
    pt = reconstruct_density(frame, wigner_partial_transpose(wigner_function(frame, rho)));
    route = "wigner";
  }
  json j = positivity_json("pt", positivity_check(pt, tol));
  j["route"] = route;
  return j;
}

void cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.checks.empty()) throw ValidationError("--check is required");
  const Matrix rho = load_state(cfg, cfg.input);
  require_square(rho, "state");
  const auto [p, n] = dims_for(cfg, rho.rows());
  if (hermiticity_error(rho) > cfg.tol) throw ValidationError("checks need a Hermitian state");
  const WignerFrame frame(p, n, pick_convention(cfg, p, n));
  json results = json::array();
  bool pass = true;
  for (const auto& name : cfg.checks) {
    json r;
    if (name == "marginals") {
      r = check_marginals(frame, rho, cfg.tol);
    } else if (name == "plancherel") {
      r = check_plancherel(frame, rho, cfg.tol);
    } else if (name == "separability") {
      r = check_separability(rho, p, n, cfg.tol);
    } else if (name == "positivity") {
      r = positivity_json("positivity", positivity_check(rho, cfg.tol));
    } else {
      r = check_pt(rho, p, n, cfg.tol);
    }
    pass = pass && r.at("pass").get<bool>();
    results.push_back(std::move(r));
  }
  json doc = {{"p", p}, {"n", n}, {"convention", frame.convention().name()}, {"checks", results}, {"pass", pass}};
  emit(cfg, doc.dump(2) + "\n", out);
  if (!pass) throw CheckFailed();
}

void cmd_evolve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.steps < 1) throw ValidationError("--steps must be positive");
  const Matrix rho = load_state(cfg, cfg.input);
  require_square(rho, "state");
  const auto [p, n] = dims_for(cfg, rho.rows());
  const Matrix h = load_hamiltonian(cfg, rho.rows());
  const PhaseSpace space(p, n);
  const auto traj = evolve_trajectory(space, rho, h, cfg.t0, cfg.t1, cfg.steps);
  std::ostringstream lines;
  for (const auto& pt : traj.points) lines << trajectory_point_to_json(pt).dump() << "\n";
  const auto& r = traj.report;
  const bool pass = std::max({r.max_trace_drift, r.max_purity_drift, r.max_direct_deviation}) < 1e-8;
  json report = {{"max_trace_drift", r.max_trace_drift},
                 {"max_purity_drift", r.max_purity_drift},
                 {"max_direct_deviation", r.max_direct_deviation},
                 {"pass", pass}};
  if (cfg.out.empty()) {
    out << lines.str() << json{{"report", report}}.dump() << "\n";
  } else {
    write_text_file(cfg.out, lines.str());
    out << report.dump(2) << "\n";
  }
  if (!pass) throw CheckFailed();
}

void cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw ValidationError("--input is required");
  const json j = load_json_file(cfg.input);
  Matrix rho;
  if (j.at("values").at(0).contains("chi")) {
    const auto chi = char_from_json(j);
    rho = reconstruct_density(WignerFrame(chi.p, chi.n, chi.convention), chi);
  } else {
    const auto w = wigner_from_json(j);
    rho = reconstruct_density(WignerFrame(w.p, w.n, w.convention), w);
  }
  emit(cfg, matrix_to_json(rho).dump() + "\n", out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete phase space for dimension p^n", "finphase"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_dims = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--p", cfg.p, "prime p");
    sub->add_option("--n", cfg.n, "exponent n (default 1, or inferred from the input size)")
        ->default_val(required ? 1 : 0);
    if (required) p->required();
  };
  auto add_tol = [&](CLI::App* sub, double def) {
    sub->add_option("--tol", cfg.tol, "tolerance")->default_val(def)->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> formats = {"json", "csv", "pgm"};
  const std::vector<std::string> check_names = {"marginals", "plancherel", "separability", "positivity", "pt"};

  auto* field = app.add_subcommand("field", "irreducible polynomial, traces and dual basis");
  add_dims(field, true);
  field->add_option("--poly", cfg.poly, "coefficients c0..c_{n-1} of the monic polynomial");

  auto* mub = app.add_subcommand("mub", "complete set of mutually unbiased bases");
  add_dims(mub, true);
  add_tol(mub, 1e-10);
  mub->add_option("--out", cfg.out, "JSON file for the bases");
  mub->add_flag("--compact", cfg.compact, "omit projector matrices");

  auto* wig = app.add_subcommand("wigner", "Wigner function of a state or operator");
  add_dims(wig, false);
  add_tol(wig, 1e-10);
  wig->add_option("--input", cfg.input, "state file, random, haar, ginibre or entangled")->required();
  wig->add_option("--convention", cfg.convention, "phase convention");
  wig->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  wig->add_option("--out", cfg.out, "output file");
  wig->add_option("--seed", cfg.seed, "seed for haar and ginibre inputs");

  auto* check = app.add_subcommand("check", "marginal, Plancherel, separability, positivity and PT checks");
  add_dims(check, false);
  add_tol(check, 1e-10);
  check->add_option("--input", cfg.input, "state file, random, haar, ginibre or entangled")->required();
  check->add_option("--check", cfg.checks, "checks to run")->required()->check(CLI::IsMember(check_names));
  check->add_option("--convention", cfg.convention, "phase convention");
  check->add_option("--out", cfg.out, "report file");
  check->add_option("--seed", cfg.seed, "seed for haar and ginibre inputs");

  auto* evo = app.add_subcommand("evolve", "Hamiltonian evolution in phase space");
  add_dims(evo, false);
  evo->add_option("--input", cfg.input, "initial state")->required();
  evo->add_option("--hamiltonian", cfg.hamiltonian, "Hamiltonian file, random or zero")->required();
  evo->add_option("--t0", cfg.t0, "start time");
  evo->add_option("--t1", cfg.t1, "end time");
  evo->add_option("--steps", cfg.steps, "number of intervals");
  evo->add_option("--out", cfg.out, "JSON-lines trajectory file");
  evo->add_option("--seed", cfg.seed, "seed for random inputs");

  auto* rec = app.add_subcommand("reconstruct", "density matrix from a Wigner or characteristic table");
  rec->add_option("--input", cfg.input, "table file")->required();
  rec->add_option("--out", cfg.out, "output file");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*field) cmd_field(cfg, out);
    if (*mub) cmd_mub(cfg, out);
    if (*wig) cmd_wigner(cfg, out, err);
    if (*check) cmd_check(cfg, out);
    if (*evo) cmd_evolve(cfg, out);
    if (*rec) cmd_reconstruct(cfg, out);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace finphase::cli
