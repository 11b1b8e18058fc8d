// Copyright 2026 The Resmex Authors
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

#include "resmex/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace resmex {

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(what + ": expected a non-empty array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(what + ": row " + std::to_string(i) +
                       " has inconsistent length");
    }
    for (Index k = 0; k < cols; ++k) {
      const Json& e = row.at(static_cast<size_t>(k));
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(what + ": entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") must be [re, im]");
      }
      const double re = e.at(0).get<double>();
      const double im = e.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError(what + ": non-finite entry at (" + std::to_string(i) +
                         "," + std::to_string(k) + ")");
      }
      m(i, k) = Complex(re, im);
    }
  }
  return m;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace

Json state_to_json(const DensityState& rho) {
  Json j;
  j["dim"] = rho.dim();
  j["trace_class"] = rho.trace_class == TraceClass::Normalized
                         ? "normalized"
                         : "subnormalized";
  j["matrix"] = matrix_to_json(rho.matrix);
  return j;
}

DensityState state_from_json(const Json& j, const Tolerances& tol) {
  if (!j.contains("dim") || !j.contains("trace_class") || !j.contains("matrix")) {
    throw ParseError("state needs fields dim, trace_class, matrix");
  }
  const Index dim = j.at("dim").get<Index>();
  const std::string tc = j.at("trace_class").get<std::string>();
  TraceClass trace_class;
  if (tc == "normalized") trace_class = TraceClass::Normalized;
  else if (tc == "subnormalized") trace_class = TraceClass::Subnormalized;
  else throw ParseError("trace_class must be normalized or subnormalized");
  const Matrix m = matrix_from_json(j.at("matrix"), "matrix");
  if (m.rows() != dim || m.cols() != dim) {
    throw ParseError("matrix shape disagrees with dim field");
  }
  return validate_state(m, trace_class, tol);
}

Json channel_to_json(const QuantumChannel& ch) {
  Json j;
  j["in_dim"] = ch.in_dim;
  j["out_dim"] = ch.out_dim;
  j["kind"] = ch.kind == ChannelKind::Cptp ? "cptp" : "tni";
  Json kraus = Json::array();
  for (const Matrix& k : ch.kraus) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

QuantumChannel channel_from_json(const Json& j, const Tolerances& tol) {
  if (!j.contains("in_dim") || !j.contains("out_dim") || !j.contains("kind") ||
      !j.contains("kraus")) {
    throw ParseError("channel needs fields in_dim, out_dim, kind, kraus");
  }
  const Index in_dim = j.at("in_dim").get<Index>();
  const Index out_dim = j.at("out_dim").get<Index>();
  const std::string kind_text = j.at("kind").get<std::string>();
  ChannelKind kind;
  if (kind_text == "cptp") kind = ChannelKind::Cptp;
  else if (kind_text == "tni") kind = ChannelKind::Tni;
  else throw ParseError("kind must be cptp or tni");
  std::vector<Matrix> kraus;
  for (const Json& jk : j.at("kraus")) {
    kraus.push_back(matrix_from_json(jk, "kraus"));
  }
  QuantumChannel ch = validate_channel(std::move(kraus), kind, tol);
  if (ch.in_dim != in_dim || ch.out_dim != out_dim) {
    throw ParseError("Kraus shapes disagree with in_dim/out_dim fields");
  }
  return ch;
}

DensityState load_state_file(const std::string& path, const Tolerances& tol) {
  return state_from_json(parse_file(path), tol);
}

QuantumChannel load_channel_file(const std::string& path,
                                 const Tolerances& tol) {
  return channel_from_json(parse_file(path), tol);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

BipartiteCut parse_cut(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw ParseError("cut must look like AxB, got '" + text + "'");
  }
  try {
    const Index a = std::stoll(text.substr(0, x));
    const Index b = std::stoll(text.substr(x + 1));
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError("cut must look like AxB, got '" + text + "'");
  }
}

std::string format_numeric(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace resmex
