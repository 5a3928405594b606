// Copyright 2026 The passmint Authors
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

#ifndef PASSMINT_VALIDATION_HPP_
#define PASSMINT_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "passmint/bitstream.hpp"
#include "passmint/charset.hpp"
#include "passmint/engine.hpp"
#include "passmint/hex.hpp"

namespace passmint {

// 1000 restarts x 1000 bits, packed row-major MSB-first (125 bytes per row).
class RestartMatrix {
 public:
  static constexpr size_t kRows = 1000;
  static constexpr size_t kCols = 1000;
  static constexpr size_t kRowBytes = kCols / 8;
  static constexpr size_t kTotalBytes = kRows * kRowBytes;

  RestartMatrix() : bytes_(kTotalBytes, 0) {}

  bool bit(size_t row, size_t col) const {
    return (bytes_[row * kRowBytes + col / 8] >> (7 - col % 8)) & 1;
  }
  BitStream row(size_t index) const;
  void set_row(size_t index, const BitStream& bits);

  const Bytes& bytes() const { return bytes_; }
  static RestartMatrix from_bytes(std::span<const uint8_t> data);

  friend bool operator==(const RestartMatrix&, const RestartMatrix&) = default;

 private:
  Bytes bytes_;
};

// Row i comes from base.restarted(i).fill(1000): MAC engines bind BE32(i)
// into the message, the LCG reseeds with base seed + i.  The two builders
// produce identical matrices; the second fans rows out across OpenMP threads
// (jobs = 0 means the OpenMP default).
RestartMatrix build_restart_matrix_serial(const PrngEngine& base);
RestartMatrix build_restart_matrix(const PrngEngine& base, int jobs = 0);

inline constexpr double kEntropyPassThreshold = 0.000005;
inline constexpr double kIidPassThreshold = 0.001;
inline constexpr double kCharUniformityThreshold = 0.01;
inline constexpr size_t kLrsMaxPassingLength = 28;

// How the 2000 per-line most-common-value counts feed the binomial test:
// one test against the global max (default), or one test per line with the
// same threshold.  Both modes accept/reject identically; per-line reporting
// additionally counts offending lines.
enum class McvAggregation { kMax, kPerLine };

struct EntropyReport {
  unsigned mcv = 0;        // max most-common-value count over all 2000 lines
  double p_hat = 0.0;      // mcv / 1000
  double min_entropy = 0.0;
  double p_value = 0.0;    // binomial upper tail at mcv
  bool pass = false;
  McvAggregation aggregation = McvAggregation::kMax;
  unsigned failing_lines = 0;  // per-line mode only
};

EntropyReport entropy_test_serial(const RestartMatrix& m,
                                  McvAggregation agg = McvAggregation::kMax);
EntropyReport entropy_test(const RestartMatrix& m,
                           McvAggregation agg = McvAggregation::kMax,
                           int jobs = 0);

// Per-row tests; each requires exactly 1000 bits.
double independence_test(const BitStream& row);  // 10 chunks, chi-square df 10
double gf_test(const BitStream& row);            // 500 bit-pairs, df 3

struct LrsResult {
  size_t length = 0;
  double p_value = 0.0;
};
LrsResult lrs_test(const BitStream& row);

struct IidReport {
  std::vector<double> ind_p;
  std::vector<double> gf_p;
  std::vector<double> lrs_p;
  std::vector<size_t> lrs_length;
  double ind_median = 0.0;
  double gf_median = 0.0;
  double lrs_median = 0.0;
  bool ind_pass = false;  // all rows >= 0.001
  bool gf_pass = false;
  bool lrs_pass = false;

  bool pass() const { return ind_pass && gf_pass && lrs_pass; }
};

IidReport run_iid_suite_serial(const RestartMatrix& m);
IidReport run_iid_suite(const RestartMatrix& m, int jobs = 0);

struct CharUniformityReport {
  std::vector<uint64_t> counts;  // per charset symbol
  double statistic = 0.0;
  double p_value = 0.0;
  bool pass = false;  // strictly above 0.01
  size_t trials = 0;
  size_t password_length = 0;
};

// Generates `trials` passwords at the security-equivalent length for the
// charset (trial index bound into the context like a matrix row), pools all
// characters, and chi-square-tests the pooled counts against uniform.
CharUniformityReport char_uniformity_test(const PrngEngine& base,
                                          const Charset& charset,
                                          size_t trials = 10000,
                                          uint64_t strength_bits = 128);

struct ValidationReport {
  std::string engine;
  EntropyReport entropy;
  IidReport iid;

  bool pass() const { return entropy.pass && iid.pass(); }
};

ValidationReport run_battery(const RestartMatrix& m, std::string engine_label,
                             McvAggregation agg = McvAggregation::kMax,
                             int jobs = 0);

}  // namespace passmint

#endif  // PASSMINT_VALIDATION_HPP_
