// Copyright 2026 The qplee Authors
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

// JSON reports and the plain-text matrix / word formats.

#pragma once

#include <cstdio>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qplee/cayley_spectrum.hpp"
#include "qplee/lee_code.hpp"
#include "qplee/quadratic_subsets.hpp"
#include "qplee/subset_sums.hpp"

namespace qplee {

using Json = nlohmann::ordered_json;

inline Json to_json(const Field& f, std::optional<Elem> delta = std::nullopt) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["modulus"] = f.modulus();
  if (delta) j["delta"] = *delta;
  return j;
}

inline Json to_json(const GeneratorSet& h) {
  const auto g = h.group();
  Json j;
  j["family"] = to_string(h.family);
  j["p"] = h.field.p();
  j["k"] = h.field.k();
  if (h.delta) j["delta"] = *h.delta;
  Json reps = Json::array();
  for (auto r : h.representatives) reps.push_back(g.digits(r));
  j["representatives"] = std::move(reps);
  j["size"] = h.members.size();
  return j;
}

inline Json to_json(const AdmissibilityReport& r) {
  Json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["family"] = to_string(r.family);
  j["minus3_class"] = r.minus3_class;
  j["q_gt_12"] = r.q_gt_12;
  j["admissible"] = r.admissible;
  j["reason"] = r.reason;
  return j;
}

inline Json to_json(const SumsetLayers& s, const std::optional<Classification>& c = std::nullopt) {
  Json j;
  j["family"] = to_string(s.family);
  j["p"] = s.p;
  j["k"] = s.k;
  j["n"] = s.n;
  j["layer_sizes"] = s.sizes;
  j["critical_index"] = s.critical_index;
  j["limit_index"] = s.limit_index;
  j["covered"] = s.covered;
  if (c) {
    j["verdict"] = to_string(c->verdict);
    j["verdict_details"] = c->details;
  } else {
    j["verdict"] = nullptr;
  }
  return j;
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  // Normalise "-0.000000".
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

inline Json to_json(const SpectrumReport& r) {
  Json j;
  j["family"] = to_string(r.family);
  j["p"] = r.p;
  j["k"] = r.k;
  j["degree"] = r.degree;
  j["bound"] = r.ramanujan_bound;
  j["almost_bound"] = r.almost_bound;
  j["max_nontrivial_abs"] = r.max_nontrivial_abs;
  j["classification"] = to_string(r.classification);
  j["connected"] = r.connected;
  Json hist = Json::array();
  for (const auto& [micro, mult] : r.histogram())
    hist.push_back(Json::array({format_fixed(static_cast<double>(micro) * 1e-6, 6), mult}));
  j["histogram"] = std::move(hist);
  return j;
}

inline void write_spectrum_csv(std::ostream& os, const SpectrumReport& r) {
  os << "alpha,eigenvalue\n";
  for (std::size_t a = 0; a < r.eigenvalues.size(); ++a) os << a << ',' << format_fixed(r.eigenvalues[a], 12) << '\n';
}

inline std::string density_string(const LeeCode& c) {
  return std::to_string(c.matrix.p) + "^-" + std::to_string(c.n - c.dimension);
}

inline Json to_json(const LeeCode& c, const std::vector<std::uint64_t>& leader_histogram) {
  Json j;
  j["p"] = c.matrix.p;
  j["k"] = c.matrix.k;
  j["family"] = to_string(c.matrix.family);
  j["n"] = c.n;
  j["dimension"] = c.dimension;
  j["t"] = c.error_correction;
  j["covering_radius"] = c.covering_radius;
  j["density"] = c.density;
  j["density_exact"] = density_string(c);
  j["codeword_count"] = c.codeword_count.str();
  j["matrix"] = c.matrix.rows;
  j["leader_weight_histogram"] = leader_histogram;
  return j;
}

/// Header "p k n family", then 2k lines of n entries.
inline void write_matrix_text(std::ostream& os, const ParityCheckMatrix& m) {
  os << m.p << ' ' << m.k << ' ' << m.n() << ' ' << to_string(m.family) << '\n';
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

namespace detail {

inline std::vector<std::uint32_t> parse_uint_line(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == tok.size() && tok.front() != '-' && tok.front() != '+', Errc::ParseError,
            "line " + std::to_string(line_no) + ": '" + tok + "' is not a non-negative integer");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

inline ParityCheckMatrix matrix_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto k = j.at("k").get<std::uint32_t>();
    const auto family = parse_family(j.at("family").get<std::string>());
    const auto rows = j.at("matrix").get<std::vector<std::vector<std::uint32_t>>>();
    return matrix_from_rows(p, k, family, rows);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::ParseError, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace detail

/// Reads either the text format or a JSON document with p, k, family and
/// matrix keys (such as the code-gen report).
inline ParityCheckMatrix read_matrix(std::istream& is) {
  std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  const auto first = all.find_first_not_of(" \t\r\n");
  detail::require(first != std::string::npos, Errc::ParseError, "empty matrix input");
  if (all[first] == '{') {
    Json j;
    try {
      j = Json::parse(all);
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::ParseError, std::string("matrix JSON: ") + e.what());
    }
    return detail::matrix_from_json(j);
  }
  std::istringstream ss(all);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::string> header;
  while (std::getline(ss, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      header = line;
      break;
    }
  }
  detail::require(header.has_value(), Errc::ParseError, "missing matrix header");
  std::istringstream hs(*header);
  std::uint32_t p = 0, k = 0, n = 0;
  std::string fam;
  detail::require(static_cast<bool>(hs >> p >> k >> n >> fam), Errc::ParseError,
                  "line " + std::to_string(line_no) + ": header must be 'p k n family'");
  const Family family = parse_family(fam);
  std::vector<std::vector<std::uint32_t>> rows;
  while (rows.size() < 2 * std::size_t{k} && std::getline(ss, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto row = detail::parse_uint_line(line, line_no);
    detail::require(row.size() == n, Errc::ParseError,
                    "line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries");
    rows.push_back(std::move(row));
  }
  return matrix_from_rows(p, k, family, rows);
}

/// One word of n entries in [0, p).
inline Word parse_word(const std::string& line, std::uint32_t n, std::uint32_t p, std::size_t line_no) {
  auto w = detail::parse_uint_line(line, line_no);
  detail::require(w.size() == n, Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries, got " +
                      std::to_string(w.size()));
  for (auto v : w)
    detail::require(v < p, Errc::ParseError, "line " + std::to_string(line_no) + ": entry outside [0, p)");
  return w;
}

inline std::string join(std::span<const std::uint32_t> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace qplee
