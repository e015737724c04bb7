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

// Builds the plus-family code over F_13, prints its parameters and decodes
// one corrupted codeword.

#include <iostream>
#include <random>

#include "qplee/qplee.hpp"

int main() {
  using namespace qplee;
  const Field f(13, 1);
  const auto h = build_generator_set(f, Family::plus);
  const auto code = code_parameters(h);
  std::cout << "n = " << code.n << ", dimension = " << code.dimension << ", t = " << code.error_correction
            << ", R = " << code.covering_radius << ", codewords = " << code.codeword_count << '\n';

  const auto table = build_coset_leader_table(code.matrix);
  std::mt19937_64 rng(7);
  const Word c = CodewordSampler(code.matrix)(rng);
  Word received = c;
  received[0] = (received[0] + 1) % 13;
  received[3] = (received[3] + 12) % 13;
  const auto r = decode(table, received);
  std::cout << "sent     " << join(c) << "\nreceived " << join(received) << "\ndecoded  " << join(r.codeword)
            << (r.codeword == c ? "  (ok)" : "  (wrong)") << '\n';

  const auto s = full_spectrum(h);
  std::cout << "spectrum: " << to_string(s.classification) << ", max |lambda| = " << s.max_nontrivial_abs
            << " <= " << s.ramanujan_bound << '\n';
}
