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

#include "circwit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace circwit::io {
namespace {

int infer_d(const ComplexMatrix& m) {
  const int d = static_cast<int>(std::lround(std::sqrt(double(m.rows()))));
  if (d < 2 || Eigen::Index(d) * d != m.rows()) {
    throw std::invalid_argument("matrix size " + std::to_string(m.rows()) + " is not d^2");
  }
  return d;
}

void append_rows(std::string& out, const ComplexMatrix& m, bool imag) {
  out += '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) out += ',';
    out += '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += full_precision(imag ? m(r, c).imag() : m(r, c).real());
    }
    out += ']';
  }
  out += ']';
}

std::vector<double> doubles(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw std::invalid_argument(std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string matrix_to_json_text(const ComplexMatrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) + ",\"cols\":" +
                    std::to_string(m.cols()) + ",\"re\":";
  append_rows(out, m, false);
  out += ",\"im\":";
  append_rows(out, m, true);
  out += "}";
  return out;
}

json matrix_to_json(const ComplexMatrix& m) { return json::parse(matrix_to_json_text(m)); }

bool is_matrix_json(const json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("re");
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!is_matrix_json(j)) throw std::invalid_argument("matrix: expected rows, cols, re, im");
  const auto rows = j.at("rows").get<long>();
  const auto cols = j.at("cols").get<long>();
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix: rows and cols must be positive");
  const json& re = j.at("re");
  const json im = j.value("im", json());
  if (!re.is_array() || re.size() != std::size_t(rows) ||
      (!im.is_null() && (!im.is_array() || im.size() != std::size_t(rows)))) {
    throw std::invalid_argument("matrix: row count does not match 'rows'");
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const auto re_row = doubles(re[r], "matrix.re row");
    const auto im_row = im.is_null() ? std::vector<double>(cols, 0.0) : doubles(im[r], "matrix.im row");
    if (re_row.size() != std::size_t(cols) || im_row.size() != std::size_t(cols)) {
      throw std::invalid_argument("matrix: column count does not match 'cols'");
    }
    for (long c = 0; c < cols; ++c) m(r, c) = Complex(re_row[c], im_row[c]);
  }
  return m;
}

json spec_to_json(const CirculantSpec& spec) {
  json gens = json::array();
  for (const auto& g : spec.generators) gens.push_back(matrix_to_json(g));
  json out = {{"d", spec.d}, {"generators", gens}};
  if (spec.support == Support::SigmaTilde) out["support"] = "sigma_tilde";
  return out;
}

CirculantSpec spec_from_json(const json& j) {
  CirculantSpec spec;
  spec.d = j.at("d").get<int>();
  for (const auto& g : j.at("generators")) spec.generators.push_back(matrix_from_json(g));
  if (j.value("support", std::string("sigma")) == "sigma_tilde") spec.support = Support::SigmaTilde;
  spec.validate();
  return spec;
}

Number number_from_json(const json& j) {
  if (j.is_string()) return Number::parse(j.get<std::string>());
  if (j.is_number_integer()) return Number(Rational(j.get<std::int64_t>()));
  if (j.is_number()) return Number::from_double_literal(j.get<double>());
  throw std::invalid_argument("expected a number or a rational string");
}

json number_to_json(const Number& n) {
  if (n.exact()) {
    if (n.exact()->den() == 1) return n.exact()->num();
    return n.exact()->to_string();
  }
  return n.value();
}

Witness witness_from_json(const json& j, const Tolerance& tol) {
  if (is_matrix_json(j)) {
    auto m = matrix_from_json(j);
    const int d = j.contains("d") ? j.at("d").get<int>() : infer_d(m);
    return Witness::from_matrix(std::move(m), d, tol);
  }
  if (!j.is_object() || !j.contains("d")) throw std::invalid_argument("witness: missing 'd'");
  const int d = j.at("d").get<int>();
  if (j.contains("alpha")) {
    AlphaWitnessParams p{d, number_from_json(j.at("alpha")), j.value("primed", false)};
    return Witness::from_alpha(p);
  }
  if (j.contains("a")) {
    WitnessCoefficients c{d, doubles(j.at("a"), "witness.a"), 1.0};
    if (j.contains("mu")) c.mu = number_from_json(j.at("mu")).value();
    return Witness::from_coefficients(c);
  }
  throw std::invalid_argument("witness: expected 'alpha' or 'a'");
}

json witness_description(const Witness& w) {
  if (w.alpha) {
    return {{"d", w.d}, {"alpha", number_to_json(w.alpha->alpha)}, {"primed", w.alpha->primed}};
  }
  if (w.coefficients) {
    return {{"d", w.d}, {"a", w.coefficients->a}, {"mu", w.coefficients->mu}};
  }
  return {{"d", w.d}, {"matrix", true}};
}

State state_from_json(const json& j, const Tolerance& tol) {
  if (is_matrix_json(j)) {
    auto m = matrix_from_json(j);
    const int d = j.contains("d") ? j.at("d").get<int>() : infer_d(m);
    return State::from_matrix(std::move(m), d, tol);
  }
  if (!j.is_object() || !j.contains("d")) throw std::invalid_argument("state: missing 'd'");
  const int d = j.at("d").get<int>();
  if (j.contains("beta")) return State::from_beta({d, number_from_json(j.at("beta"))}, tol);
  if (j.contains("lambdas")) {
    StateLambdas s{d, {}, std::nullopt};
    for (const auto& v : j.at("lambdas")) s.lambdas.push_back(number_from_json(v));
    return State::from_lambdas(s, tol);
  }
  throw std::invalid_argument("state: expected 'beta' or 'lambdas'");
}

json product_min_to_json(const ProductMinimum& p) {
  auto vec = [](const ComplexVector& v) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      re.push_back(v(i).real());
      im.push_back(v(i).imag());
    }
    return json{{"re", re}, {"im", im}};
  };
  return {{"value", p.value},        {"psi", vec(p.psi)},       {"phi", vec(p.phi)},
          {"restart", p.restart},    {"seed", p.seed},          {"restarts", p.restarts},
          {"generator", kGeneratorName}, {"certificate", "numerical"}};
}

json certificate_to_json(const NdCertificate& cert) {
  return {{"witness",
           {{"d", cert.witness.d},
            {"alpha", number_to_json(cert.witness.alpha)},
            {"primed", cert.witness.primed}}},
          {"beta", number_to_json(cert.beta)},
          {"expectation", cert.expectation},
          {"closed_form", cert.closed_form},
          {"ppt_min_eig", cert.ppt_min_eig},
          {"product_min", cert.product_min.value},
          {"seed", cert.product_min.seed},
          {"restarts", cert.product_min.restarts},
          {"generator", kGeneratorName},
          {"certificate", "numerical"}};
}

std::string decomposition_csv(const MeasurementSettingsReport& report) {
  std::string out = "mu_label,nu_label,coefficient\n";
  for (const auto& s : report.settings) {
    out += s.mu_label + "," + s.nu_label + "," + full_precision(s.coefficient) + "\n";
  }
  return out;
}

json decomposition_json(const LocalDecomposition& dec) {
  const auto basis = gellmann_basis(dec.d);
  json labels = json::array();
  for (const auto& e : basis.elements) labels.push_back(e.label());
  json table = json::array();
  for (Eigen::Index mu = 0; mu < dec.coefficients.rows(); ++mu) {
    json row = json::array();
    for (Eigen::Index nu = 0; nu < dec.coefficients.cols(); ++nu) {
      row.push_back(dec.coefficients(mu, nu));
    }
    table.push_back(row);
  }
  return {{"d", dec.d}, {"labels", labels}, {"coefficients", table}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace circwit::io
