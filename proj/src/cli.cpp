// Copyright 2026 The circwit Authors
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

#include "circwit/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>

#include "circwit/circulant.hpp"
#include "circwit/detect.hpp"
#include "circwit/gellmann.hpp"
#include "circwit/io.hpp"
#include "circwit/states.hpp"
#include "circwit/witness.hpp"

namespace circwit::cli {
namespace {

using nlohmann::json;

struct Globals {
  double tol_eig = 1e-9;
  double tol_eq = 1e-10;
  std::uint64_t seed = 0;
  int restarts = 64;
  int max_iters = 500;

  Tolerance tolerance() const {
    Tolerance t{tol_eig, tol_eq};
    t.validate();
    return t;
  }
  SeeSawConfig see_saw() const {
    SeeSawConfig cfg{restarts, max_iters, 1e-12, seed};
    cfg.validate();
    return cfg;
  }
};

struct WitnessArgs {
  int d = 0;
  std::string alpha;
  bool primed = false;
  std::vector<std::string> a;
  std::string mu;
  std::string file;
};

struct StateArgs {
  int d = 0;
  std::string beta;
  std::vector<std::string> lambdas;
  std::string file;
};

struct GridArgs {
  std::string from;
  std::string to;
  std::string step;
  std::vector<std::string> list;

  bool given() const { return !list.empty() || !from.empty() || !to.empty() || !step.empty(); }
};

void add_witness_options(CLI::App* cmd, WitnessArgs& w, bool with_file) {
  cmd->add_option("--d", w.d, "Local dimension");
  cmd->add_option("--alpha", w.alpha, "alpha, as a decimal or p/q");
  cmd->add_flag("--primed", w.primed, "Build W'_alpha instead of W_alpha");
  cmd->add_option("--a", w.a, "Coefficients a_0..a_{d-1} of W[a]")->delimiter(',');
  cmd->add_option("--mu", w.mu, "Scale of W[a] (default 1)");
  if (with_file) cmd->add_option("--witness-file", w.file, "Witness JSON (matrix or description)");
}

json witness_params_echo(const WitnessArgs& w) {
  json j = json::object();
  if (!w.file.empty()) j["witness_file"] = w.file;
  if (w.d) j["d"] = w.d;
  if (!w.alpha.empty()) j["alpha"] = w.alpha;
  if (!w.a.empty()) j["a"] = w.a;
  if (!w.mu.empty()) j["mu"] = w.mu;
  j["primed"] = w.primed;
  return j;
}

Witness build_witness(const WitnessArgs& w, const Tolerance& tol) {
  if (!w.file.empty()) return io::witness_from_json(io::read_json_file(w.file), tol);
  if (w.d == 0) throw std::invalid_argument("--d is required");
  if (!w.alpha.empty() && !w.a.empty()) throw std::invalid_argument("give either --alpha or --a");
  if (!w.alpha.empty()) {
    return Witness::from_alpha({w.d, Number::parse(w.alpha), w.primed});
  }
  if (!w.a.empty()) {
    WitnessCoefficients c{w.d, {}, w.mu.empty() ? 1.0 : Number::parse(w.mu).value()};
    for (const auto& v : w.a) c.a.push_back(Number::parse(v).value());
    return Witness::from_coefficients(c);
  }
  throw std::invalid_argument("a witness needs --alpha, --a or --witness-file");
}

json state_params_echo(const StateArgs& s) {
  json j = json::object();
  if (!s.file.empty()) j["state_file"] = s.file;
  if (s.d) j["d"] = s.d;
  if (!s.beta.empty()) j["beta"] = s.beta;
  if (!s.lambdas.empty()) j["lambdas"] = s.lambdas;
  return j;
}

State build_state(const StateArgs& s, const Tolerance& tol) {
  if (!s.file.empty()) return io::state_from_json(io::read_json_file(s.file), tol);
  if (s.d == 0) throw std::invalid_argument("--d is required");
  if (!s.beta.empty() && !s.lambdas.empty()) throw std::invalid_argument("give either --beta or --lambdas");
  if (!s.beta.empty()) return State::from_beta({s.d, Number::parse(s.beta)}, tol);
  if (!s.lambdas.empty()) {
    StateLambdas l{s.d, {}, std::nullopt};
    for (const auto& v : s.lambdas) l.lambdas.push_back(Number::parse(v));
    return State::from_lambdas(l, tol);
  }
  throw std::invalid_argument("a state needs --beta, --lambdas or --state-file");
}

std::vector<Number> build_grid(const GridArgs& g, const char* name) {
  std::vector<Number> points;
  if (!g.list.empty()) {
    for (const auto& v : g.list) points.push_back(Number::parse(v));
    return points;
  }
  if (g.from.empty() || g.to.empty() || g.step.empty()) {
    throw std::invalid_argument(std::string(name) + " grid needs from, to and step");
  }
  const Number from = Number::parse(g.from);
  const Number to = Number::parse(g.to);
  const Number step = Number::parse(g.step);
  if (!(step.value() > 0.0)) throw std::invalid_argument(std::string(name) + " step must be positive");
  if (from.exact() && to.exact() && step.exact()) {
    for (Rational x = *from.exact(); x <= *to.exact(); x = x + *step.exact()) {
      points.emplace_back(x);
      if (points.size() > 100000) throw std::invalid_argument("grid too large");
    }
  } else {
    const double span = (to.value() - from.value()) / step.value();
    if (span > 100000) throw std::invalid_argument("grid too large");
    for (long k = 0; k <= static_cast<long>(std::floor(span + 1e-9)); ++k) {
      points.emplace_back(from.value() + double(k) * step.value());
    }
  }
  return points;
}

json min_eig_block(double numeric, std::optional<double> closed) {
  json j = {{"numeric", numeric}};
  if (closed) {
    j["closed_form"] = *closed;
    j["difference"] = numeric - *closed;
  }
  return j;
}

json necessary_json(const NecessaryConditions& n) {
  return {{"all_nonnegative", n.all_nonnegative},
          {"sum_condition", n.sum_condition},
          {"non_positive", n.non_positive},
          {"product_vector_value", n.product_value},
          {"product_vector_agrees", n.product_check_agrees}};
}

json lambdas_json(const StateLambdas& s) {
  json l = json::array();
  for (const auto& v : s.lambdas) l.push_back(io::number_to_json(v));
  json j = {{"d", s.d}, {"lambdas", l}};
  if (s.beta) j["beta"] = io::number_to_json(*s.beta);
  return j;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv);

 private:
  RunManifest manifest(const std::string& command, json params) const {
    RunManifest m;
    m.command = command;
    m.params = std::move(params);
    m.tol = globals_.tolerance();
    m.seed = globals_.seed;
    m.restarts = globals_.restarts;
    m.max_iters = globals_.max_iters;
    m.timestamp = iso8601_now();
    return m;
  }

  void emit_report(const json& report, const std::string& path) {
    const std::string text = report.dump(2) + "\n";
    out_ << text;
    if (!path.empty()) io::write_text_file(path, text);
  }

  void witness_build();
  void state_build();
  void detect();
  void scan();
  void decompose();
  int selftest();

  std::ostream& out_;
  std::ostream& err_;
  Globals globals_;
  WitnessArgs witness_;
  StateArgs state_;
  GridArgs alpha_grid_;
  GridArgs beta_grid_;
  std::string out_path_;
  bool with_product_min_ = false;
};

void Runner::witness_build() {
  const Tolerance tol = globals_.tolerance();
  const Witness w = build_witness(witness_, tol);
  json report = {{"manifest", manifest("witness build", witness_params_echo(witness_)).to_json()},
                 {"witness", io::witness_description(w)}};

  const auto eig = is_positive_semidefinite(w.matrix, tol);
  std::optional<double> closed;
  if (w.coefficients) closed = witness_family_spectrum(*w.coefficients).front();
  report["min_eig"] = min_eig_block(eig.min_eigenvalue, closed);
  report["psd"] = eig.positive;

  if (w.coefficients) {
    report["necessary_conditions"] = necessary_json(check_necessary_conditions(*w.coefficients, tol));
    if (w.d == 3) {
      const auto d3 = check_d3_conditions(*w.coefficients, tol);
      report["d3_conditions"] = {{"small_a0_condition", d3.small_a0_condition},
                                 {"is_ew", d3.is_ew},
                                 {"is_nd", d3.is_nd}};
    }
  }
  if (w.alpha) {
    const auto range = alpha_admissible_range(w.d);
    json r = {{"lower_open", range.lower.to_string()},
              {"upper_closed", range.upper.to_string()},
              {"in_certified_range", range.contains(w.alpha->alpha)},
              {"alpha_exact", w.alpha->alpha.is_exact()}};
    if (w.alpha->alpha.exact()) r["a1"] = a1_for_alpha(w.d, *w.alpha->alpha.exact()).to_string();
    report["alpha_range"] = r;
  }
  if (!out_path_.empty()) {
    io::write_text_file(out_path_, io::matrix_to_json_text(w.matrix) + "\n");
    report["matrix_file"] = out_path_;
    emit_report(report, out_path_ + ".report.json");
  } else {
    emit_report(report, "");
  }
}

void Runner::state_build() {
  const Tolerance tol = globals_.tolerance();
  if (state_.file.empty() && !state_.beta.empty()) {
    BetaFamilyParams{state_.d, Number::parse(state_.beta)}.validate();
  }
  const State s = build_state(state_, tol);
  json report = {{"manifest", manifest("state build", state_params_echo(state_)).to_json()}};
  const auto ppt = is_ppt(s.matrix, s.d, tol);
  json ppt_json = {{"eigenvalue_method", {{"ppt", ppt.ppt}, {"min_eig", ppt.min_eigenvalue}}}};
  if (s.lambdas) {
    report["state"] = lambdas_json(*s.lambdas);
    if (s.lambdas->beta) {
      const bool closed = ppt_closed_form(*s.lambdas);
      ppt_json["closed_form"] = closed;
      ppt_json["methods_agree"] = closed == ppt.ppt;
      const auto label = classify_beta(s.d, *s.lambdas->beta);
      report["label"] = to_string(label);
      if (label == BetaLabel::Separable) report["label_source"] = "reference (not computed)";
    }
  } else {
    report["state"] = {{"d", s.d}, {"matrix", true}};
  }
  report["ppt"] = ppt_json;
  report["trace"] = s.matrix.trace().real();
  const auto dis = disassemble(s.matrix, s.d, tol);
  report["circulant"] = dis.circulant;
  if (!out_path_.empty()) {
    io::write_text_file(out_path_, io::matrix_to_json_text(s.matrix) + "\n");
    report["matrix_file"] = out_path_;
    emit_report(report, out_path_ + ".report.json");
  } else {
    emit_report(report, "");
  }
}

void Runner::detect() {
  const Tolerance tol = globals_.tolerance();
  const Witness w = build_witness(witness_, tol);
  // detect shares --d between the witness and the state.
  if (state_.d == 0) state_.d = witness_.d ? witness_.d : w.d;
  const State s = build_state(state_, tol);
  json params = witness_params_echo(witness_);
  params.update(state_params_echo(state_));
  params["product_min"] = with_product_min_;
  const auto report = detect_state(w, s, globals_.see_saw(), tol, with_product_min_);
  json j = {{"manifest", manifest("detect", params).to_json()},
            {"witness", io::witness_description(w)},
            {"expectation", report.expectation},
            {"detected", report.detected}};
  if (s.lambdas) j["state"] = lambdas_json(*s.lambdas);
  if (report.closed_form) {
    j["closed_form"] = *report.closed_form;
    j["difference"] = report.expectation - *report.closed_form;
  }
  if (report.product_min) j["product_min"] = io::product_min_to_json(*report.product_min);
  emit_report(j, out_path_);
}

void Runner::scan() {
  const Tolerance tol = globals_.tolerance();
  const SeeSawConfig cfg = globals_.see_saw();
  const int d = witness_.d;
  if (d == 0) throw std::invalid_argument("--d is required");
  if (alpha_grid_.given() == beta_grid_.given()) {
    throw std::invalid_argument("scan needs exactly one of an alpha grid or a beta grid");
  }
  const bool over_beta = beta_grid_.given();
  const auto grid = build_grid(over_beta ? beta_grid_ : alpha_grid_, over_beta ? "beta" : "alpha");
  if (grid.empty()) throw std::invalid_argument("scan grid is empty");

  json params = {{"d", d}, {"primed", witness_.primed}, {"over", over_beta ? "beta" : "alpha"}};
  const GridArgs& g = over_beta ? beta_grid_ : alpha_grid_;
  params["grid"] = g.list.empty() ? json{{"from", g.from}, {"to", g.to}, {"step", g.step}} : json(g.list);

  std::vector<std::string> rows(grid.size());
  if (over_beta) {
    const Number alpha = witness_.alpha.empty() ? Number(alpha_admissible_range(d).upper)
                                                : Number::parse(witness_.alpha);
    const AlphaWitnessParams wp{d, alpha, witness_.primed};
    params["alpha"] = alpha.to_string();
    const Witness w = Witness::from_alpha(wp);
    for (const auto& b : grid) BetaFamilyParams{d, b}.validate();
    const double pmin = product_min(w.matrix, d, cfg, tol).value;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const State s = State::from_beta({d, grid[k]}, tol);
      const auto ppt = is_ppt(s.matrix, d, tol);
      const double e = expectation(w.matrix, s.matrix, tol);
      rows[k] = full_precision(grid[k].value()) + "," + full_precision(ppt.min_eigenvalue) + "," +
                csv_bool(ppt.ppt) + "," + full_precision(e) + "," + full_precision(pmin) + "," +
                to_string(classify_beta(d, grid[k]));
    }
  } else {
    const Number beta = state_.beta.empty() ? Number(1) : Number::parse(state_.beta);
    params["beta"] = beta.to_string();
    const State s = State::from_beta({d, beta}, tol);
    const auto ppt = is_ppt(s.matrix, d, tol);
    const auto range = alpha_admissible_range(d);
    for (const auto& a : grid) AlphaWitnessParams{d, a, witness_.primed}.validate();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const Witness w = Witness::from_alpha({d, grid[k], witness_.primed});
      const double min_eig = hermitian_eigenvalues(w.matrix, tol).front();
      const double e = expectation(w.matrix, s.matrix, tol);
      const double pmin = product_min(w.matrix, d, cfg, tol).value;
      rows[k] = full_precision(grid[k].value()) + "," + full_precision(min_eig) + "," +
                csv_bool(ppt.ppt) + "," + full_precision(e) + "," + full_precision(pmin) + "," +
                (range.contains(grid[k]) ? "certified-EW" : "outside-certified-range");
    }
  }

  std::string csv = "# manifest: " + manifest("scan", params).to_json().dump() + "\n";
  csv += std::string(over_beta ? "beta" : "alpha") + ",min_eig,ppt,expectation,product_min,label\n";
  for (const auto& r : rows) csv += r + "\n";
  if (out_path_.empty()) {
    out_ << csv;
  } else {
    io::write_text_file(out_path_, csv);
  }
}

void Runner::decompose() {
  const Tolerance tol = globals_.tolerance();
  const Witness w = build_witness(witness_, tol);
  const auto dec = expand_local(w.matrix, w.d, tol);
  const double residual = max_abs_diff(reconstruct(dec), w.matrix);
  const auto settings = measurement_settings_report(dec);
  const json m = manifest("decompose", witness_params_echo(witness_)).to_json();

  json report = {{"manifest", m},
                 {"witness", io::witness_description(w)},
                 {"settings", settings.count()},
                 {"reconstruction_residual", residual}};
  if (!out_path_.empty()) {
    io::write_text_file(out_path_ + ".csv",
                        "# manifest: " + m.dump() + "\n" + io::decomposition_csv(settings));
    json table = io::decomposition_json(dec);
    table["manifest"] = m;
    table["reconstruction_residual"] = residual;
    io::write_text_file(out_path_ + ".json", table.dump(2) + "\n");
    report["files"] = {out_path_ + ".csv", out_path_ + ".json"};
  } else {
    json rows = json::array();
    for (const auto& s : settings.settings) {
      rows.push_back({{"mu", s.mu_label}, {"nu", s.nu_label}, {"coefficient", s.coefficient}});
    }
    report["terms"] = rows;
  }
  emit_report(report, "");
}

int Runner::selftest() {
  const Tolerance tol = globals_.tolerance();
  struct Check {
    std::string name;
    std::function<bool()> pass;
  };
  const std::vector<Check> checks = {
      {"min eigenvalue of W_alpha (d=3, alpha=1/2) is -1/3",
       [&] {
         const auto w = witness_W_alpha({3, Rational(1, 2), false});
         return std::abs(hermitian_eigenvalues(w, tol).front() + 1.0 / 3.0) < 1e-10;
       }},
      {"Tr(W_alpha rho) at d=3, alpha=1/2, beta=1 is -1/21",
       [&] {
         const auto w = witness_W_alpha({3, Rational(1, 2), false});
         const auto s = State::from_beta({3, Number(1)}, tol);
         return std::abs(expectation(w, s.matrix, tol) + 1.0 / 21.0) < 1e-12;
       }},
      {"circulant partial transpose matches dense partial transpose (d=4)",
       [&] {
         CirculantSpec spec = zero_spec(4);
         for (int n = 0; n < 4; ++n) {
           ComplexMatrix g = ComplexMatrix::Zero(4, 4);
           for (int i = 0; i < 4; ++i) {
             for (int j = 0; j < 4; ++j) g(i, j) = Complex(1.0 + i + 3 * j + n, double(i - j));
           }
           spec.generators[n] = g + g.adjoint();
         }
         const auto tilde = assemble_tilde(circulant_partial_transpose(spec, tol), tol);
         return max_abs_diff(tilde, partial_transpose(assemble(spec, tol), 4)) < 1e-12;
       }},
      {"alpha range d=3 is (1/3, 2/3]",
       [&] {
         const auto r = alpha_admissible_range(3);
         return r.lower == Rational(1, 3) && r.upper == Rational(2, 3);
       }},
      {"alpha range d=4 is (1/4, 3/8]",
       [&] {
         const auto r = alpha_admissible_range(4);
         return r.lower == Rational(1, 4) && r.upper == Rational(3, 8);
       }},
      {"d=3 beta family has weights (beta/7, (5-beta)/7, 2/7)",
       [&] {
         const auto s = beta_lambdas({3, Number(Rational(5, 2))});
         return *s.lambdas[0].exact() == Rational(5, 14) && *s.lambdas[1].exact() == Rational(5, 14) &&
                *s.lambdas[2].exact() == Rational(2, 7);
       }},
      {"d=3 PPT window is [1, 4]",
       [&] {
         for (int k = 0; k <= 20; ++k) {
           const Rational b(k, 4);
           const bool expected = b >= Rational(1) && b <= Rational(4);
           const auto s = State::from_beta({3, Number(b)}, tol);
           if (is_ppt(s.matrix, 3, tol).ppt != expected) return false;
           if (ppt_closed_form(*s.lambdas) != expected) return false;
         }
         return true;
       }},
  };
  int failed = 0;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.pass();
    } catch (const std::exception&) {
      ok = false;
    }
    out_ << (ok ? "PASS  " : "FAIL  ") << c.name << "\n";
    if (!ok) ++failed;
  }
  out_ << (failed ? "selftest: " + std::to_string(failed) + " failed\n" : "selftest: all passed\n");
  if (failed) throw std::runtime_error("selftest failed");
  return 0;
}

int Runner::run(int argc, const char* const* argv) {
  CLI::App app{"Circulant entanglement witnesses and PPT states for two qudits", "circwit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_option("--tol-eig", globals_.tol_eig, "Eigenvalue nonnegativity slack");
  app.add_option("--tol-eq", globals_.tol_eq, "Entrywise equality slack");
  app.add_option("--seed", globals_.seed, "Seed of the see-saw restarts");
  app.add_option("--restarts", globals_.restarts, "See-saw restarts");
  app.add_option("--max-iters", globals_.max_iters, "See-saw iterations per restart");

  auto* witness = app.add_subcommand("witness", "Witness operators");
  witness->require_subcommand(1);
  auto* witness_build_cmd = witness->add_subcommand("build", "Build W_alpha, W'_alpha or W[a]");
  add_witness_options(witness_build_cmd, witness_, true);
  witness_build_cmd->add_option("--out", out_path_, "Matrix output path (report goes to <out>.report.json)");

  auto* state = app.add_subcommand("state", "Circulant states");
  state->require_subcommand(1);
  auto* state_build_cmd = state->add_subcommand("build", "Build the beta family or a lambda state");
  state_build_cmd->add_option("--d", state_.d, "Local dimension");
  state_build_cmd->add_option("--beta", state_.beta, "beta, as a decimal or p/q");
  state_build_cmd->add_option("--lambdas", state_.lambdas, "Weights lambda_1..lambda_d")->delimiter(',');
  state_build_cmd->add_option("--state-file", state_.file, "State JSON (matrix or description)");
  state_build_cmd->add_option("--out", out_path_, "Matrix output path (report goes to <out>.report.json)");

  auto* detect_cmd = app.add_subcommand("detect", "Evaluate a witness on a state");
  add_witness_options(detect_cmd, witness_, true);
  detect_cmd->add_option("--beta", state_.beta, "beta of the state");
  detect_cmd->add_option("--lambdas", state_.lambdas, "Weights of the state")->delimiter(',');
  detect_cmd->add_option("--state-file", state_.file, "State JSON (matrix or description)");
  detect_cmd->add_flag("--product-min", with_product_min_, "Also run the see-saw product minimization");
  detect_cmd->add_option("--out", out_path_, "Report output path");

  auto* scan_cmd = app.add_subcommand("scan", "Tabulate an alpha or beta grid as CSV");
  scan_cmd->add_option("--d", witness_.d, "Local dimension");
  scan_cmd->add_flag("--primed", witness_.primed, "Use W'_alpha");
  scan_cmd->add_option("--alpha", witness_.alpha, "alpha for a beta scan (default: certified upper end)");
  scan_cmd->add_option("--beta", state_.beta, "beta for an alpha scan (default 1)");
  scan_cmd->add_option("--alpha-from", alpha_grid_.from);
  scan_cmd->add_option("--alpha-to", alpha_grid_.to);
  scan_cmd->add_option("--alpha-step", alpha_grid_.step);
  scan_cmd->add_option("--alpha-grid", alpha_grid_.list, "Explicit alpha values")->delimiter(',');
  scan_cmd->add_option("--beta-from", beta_grid_.from);
  scan_cmd->add_option("--beta-to", beta_grid_.to);
  scan_cmd->add_option("--beta-step", beta_grid_.step);
  scan_cmd->add_option("--beta-grid", beta_grid_.list, "Explicit beta values")->delimiter(',');
  scan_cmd->add_option("--out", out_path_, "CSV output path (default: stdout)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Expand a witness in the Gell-Mann product basis");
  add_witness_options(decompose_cmd, witness_, true);
  decompose_cmd->add_option("--out", out_path_, "Output prefix for <out>.csv and <out>.json");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the closed-form oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out_ << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err_ << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  }

  try {
    if (witness_build_cmd->parsed()) {
      witness_build();
    } else if (state_build_cmd->parsed()) {
      state_build();
    } else if (detect_cmd->parsed()) {
      detect();
    } else if (scan_cmd->parsed()) {
      scan();
    } else if (decompose_cmd->parsed()) {
      decompose();
    } else if (selftest_cmd->parsed()) {
      return selftest();
    }
  } catch (const std::invalid_argument& e) {
    err_ << json{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err_ << json{{"error", {{"type", "runtime"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

nlohmann::json RunManifest::to_json() const {
  return {{"command", command},
          {"params", params},
          {"tolerances", {{"eig_tol", tol.eig_tol}, {"eq_tol", tol.eq_tol}}},
          {"seed", seed},
          {"restarts", restarts},
          {"max_iters", max_iters},
          {"generator", kGeneratorName},
          {"version", version},
          {"timestamp", timestamp}};
}

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace circwit::cli
