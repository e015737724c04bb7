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

// Batch command dispatch for the qplee tool. Argument parsing lives in
// tools/qplee.cpp; everything here is testable with string streams.

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "qplee/lemmas.hpp"
#include "qplee/report.hpp"

namespace qplee::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitVerification = 2;
inline constexpr std::uint64_t kRoundTripTrials = 1000;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct RunConfig {
  std::string command;
  std::optional<std::uint32_t> p;
  std::uint32_t k = 1;
  std::optional<Family> family;
  std::string format = "json";
  std::string out;     // empty: standard output
  std::optional<std::uint64_t> cap;
  std::string matrix;  // matrix file for code-verify / decode
  std::uint64_t seed = kDefaultSeed;
  std::string csv;     // spectrum only
};

inline bool is_command(const std::string& c) {
  for (const char* k : {"admissible", "subset", "spectrum", "code-gen", "code-verify", "decode", "lemma-suite"})
    if (c == k) return true;
  return false;
}

namespace detail {

using qplee::detail::require;

inline std::uint64_t square_cap(const RunConfig& cfg) { return cfg.cap.value_or(kDefaultSquareCap); }

inline bool uses_matrix(const RunConfig& cfg) {
  return !cfg.matrix.empty() && (cfg.command == "code-verify" || cfg.command == "decode");
}

/// All checks that can run before any computation.
inline void validate(const RunConfig& cfg) {
  require(is_command(cfg.command), Errc::InvalidArgument, "unknown command '" + cfg.command + "'");
  require(cfg.format == "json" || cfg.format == "text", Errc::InvalidArgument, "format must be json or text");
  require(!cfg.cap || *cfg.cap >= 9, Errc::CapTooSmall, "cap must be at least 9");
  if (uses_matrix(cfg)) return;
  require(cfg.p.has_value(), Errc::InvalidArgument, "--p is required");
  const std::uint32_t p = *cfg.p;
  require(p >= 2 && is_prime(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  require(p != 2, Errc::EvenPrime, "p must be odd");
  require(cfg.k >= 1, Errc::InvalidArgument, "k must be >= 1");
  long double q2 = 1;
  for (std::uint32_t i = 0; i < 2 * cfg.k; ++i) q2 *= p;
  require(q2 <= static_cast<long double>(square_cap(cfg)), Errc::SizeCapExceeded,
          "q^2 = " + std::to_string(p) + "^" + std::to_string(2 * cfg.k) + " exceeds the cap " +
              std::to_string(square_cap(cfg)));
  const bool needs_family = cfg.command != "lemma-suite";
  require(!needs_family || cfg.family.has_value(), Errc::InvalidArgument, "--family is required");
  const bool code_command = cfg.command == "admissible" || cfg.command == "code-gen" ||
                            cfg.command == "code-verify" || cfg.command == "decode";
  require(!code_command || p >= 5, Errc::SmallPrime, "code constructions need p >= 5");
}

inline void write_text(std::ostream& os, const Json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      write_text(os, *it, key);
    else if (it->is_string())
      os << key << ": " << it->get<std::string>() << '\n';
    else
      os << key << ": " << it->dump() << '\n';
  }
}

inline void emit(std::ostream& os, const RunConfig& cfg, const Json& j) {
  if (cfg.format == "json")
    os << j.dump(2) << '\n';
  else
    write_text(os, j);
}

inline GeneratorSet generator_set(const RunConfig& cfg) {
  return build_generator_set(Field(*cfg.p, cfg.k, square_cap(cfg)), *cfg.family);
}

/// From --matrix when given, else from (p, k, family).
inline GeneratorSet code_generator_set(const RunConfig& cfg) {
  if (!uses_matrix(cfg)) return generator_set(cfg);
  std::ifstream in(cfg.matrix);
  require(static_cast<bool>(in), Errc::InvalidArgument, "cannot open matrix file '" + cfg.matrix + "'");
  const auto m = read_matrix(in);
  require(m.p >= 5, Errc::SmallPrime, "code constructions need p >= 5");
  return generator_set_from_matrix(m, square_cap(cfg));
}

inline int cmd_admissible(const RunConfig& cfg, std::ostream& out) {
  emit(out, cfg, to_json(admissibility(*cfg.p, cfg.k, *cfg.family)));
  return kExitOk;
}

inline int cmd_subset(const RunConfig& cfg, std::ostream& out) {
  const auto h = generator_set(cfg);
  const auto layers = layered_sums(h);
  std::optional<Classification> c;
  if (h.field.p() >= 5 && layers.covered) c = classify(h);
  emit(out, cfg, to_json(layers, c));
  return kExitOk;
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto h = generator_set(cfg);
  SpectrumOptions opt;
  if (cfg.cap) opt.budget = *cfg.cap;
  opt.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto s = full_spectrum(h, opt);
  if (!cfg.csv.empty()) {
    std::ofstream csv(cfg.csv);
    require(static_cast<bool>(csv), Errc::InvalidArgument, "cannot open '" + cfg.csv + "'");
    write_spectrum_csv(csv, s);
  }
  emit(out, cfg, to_json(s));
  return kExitOk;
}

inline int cmd_code_gen(const RunConfig& cfg, std::ostream& out) {
  const auto h = generator_set(cfg);
  const auto code = code_parameters(h);
  if (cfg.format == "text") {
    write_matrix_text(out, code.matrix);
    return kExitOk;
  }
  const auto table = build_coset_leader_table(code.matrix);
  emit(out, cfg, to_json(code, table.histogram()));
  return kExitOk;
}

inline int cmd_code_verify(const RunConfig& cfg, std::ostream& out) {
  const auto h = code_generator_set(cfg);
  const auto code = code_parameters(h);
  const auto table = build_coset_leader_table(code.matrix);
  const auto qp = verify_quasi_perfect(code, table);
  const std::uint32_t error_weight = std::min<std::uint32_t>(code.error_correction, 2);
  const auto rt = decode_round_trip(table, kRoundTripTrials, cfg.seed, error_weight);
  Json j = to_json(code, table.histogram());
  Json v;
  v["t_from_syndromes"] = qp.t_from_code;
  v["r_from_syndromes"] = qp.r_from_code;
  v["critical_index"] = qp.critical_index;
  v["limit_index"] = qp.limit_index;
  v["quasi_perfect"] = qp.quasi_perfect;
  v["perfect"] = qp.perfect;
  v["round_trip_seed"] = cfg.seed;
  v["round_trip_max_error_weight"] = error_weight;
  v["round_trip_trials"] = rt.trials;
  v["round_trip_recovered"] = rt.recovered;
  v["pass"] = rt.all_recovered();
  j["verification"] = std::move(v);
  emit(out, cfg, j);
  return rt.all_recovered() ? kExitOk : kExitVerification;
}

inline int cmd_decode(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto h = code_generator_set(cfg);
  const auto m = parity_check_matrix(h);
  const auto table = build_coset_leader_table(m);
  std::string line;
  std::size_t line_no = 0;
  Json results = Json::array();
  std::string text;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto word = parse_word(line, m.n(), m.p, line_no);
    const auto r = decode(table, word);
    if (cfg.format == "text") {
      text += join(r.codeword) + '\n';
      continue;
    }
    Json j;
    j["line"] = line_no;
    j["codeword"] = r.codeword;
    j["error"] = r.error;
    j["error_weight"] = r.corrected_weight;
    results.push_back(std::move(j));
  }
  if (cfg.format == "text") {
    out << text;
  } else {
    Json j;
    j["p"] = m.p;
    j["k"] = m.k;
    j["family"] = to_string(m.family);
    j["n"] = m.n();
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

inline int cmd_lemma_suite(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_lemma_suite(*cfg.p, cfg.k, square_cap(cfg));
  bool all = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    list.push_back(std::move(j));
  }
  if (cfg.format == "text") {
    for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
  } else {
    Json j;
    j["p"] = *cfg.p;
    j["k"] = cfg.k;
    j["results"] = std::move(list);
    j["all_pass"] = all;
    out << j.dump(2) << '\n';
  }
  return all ? kExitOk : kExitVerification;
}

inline int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.command == "admissible") return cmd_admissible(cfg, out);
  if (cfg.command == "subset") return cmd_subset(cfg, out);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
  if (cfg.command == "code-gen") return cmd_code_gen(cfg, out);
  if (cfg.command == "code-verify") return cmd_code_verify(cfg, out);
  if (cfg.command == "decode") return cmd_decode(cfg, in, out);
  return cmd_lemma_suite(cfg, out);
}

}  // namespace detail

inline int exit_code_for(Errc code) noexcept {
  return code == Errc::Mismatch || code == Errc::CoverageFailure ? kExitVerification : kExitPrecondition;
}

/// Runs one command. Reports go to `out` (or cfg.out); a failure prints
/// "error: <Code>: <message>" on `err`.
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    detail::validate(cfg);
    if (cfg.out.empty()) return detail::dispatch(cfg, in, out);
    std::ostringstream buf;
    const int rc = detail::dispatch(cfg, in, buf);
    std::ofstream file(cfg.out, std::ios::binary);
    qplee::detail::require(static_cast<bool>(file), Errc::InvalidArgument, "cannot open '" + cfg.out + "'");
    file << buf.str();
    return rc;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace qplee::cli
