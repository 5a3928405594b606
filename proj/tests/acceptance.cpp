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
//
// Release gate: runs the full checklist the toolkit must satisfy and prints
// one verdict line per item.  Everything here goes through public interfaces;
// reference values come from published vectors, high-precision tables, or
// brute-force reimplementations, never from the code under test.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "passmint/aes.hpp"
#include "passmint/charset.hpp"
#include "passmint/defaults.hpp"
#include "passmint/engine.hpp"
#include "passmint/hex.hpp"
#include "passmint/keccak.hpp"
#include "passmint/lcg.hpp"
#include "passmint/mac.hpp"
#include "passmint/passgen.hpp"
#include "passmint/sha256.hpp"
#include "passmint/stats.hpp"
#include "passmint/validation.hpp"

using namespace passmint;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) {
    ++g_failures;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(PASSMINT_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    return r;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.out.append(buf, n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// --------------------------------------------------- 1. published vectors

std::vector<std::vector<std::string>> read_tsv(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) {
      fields.push_back(field);
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

bool criterion_vectors() {
  using Runner = std::function<std::string(const std::vector<std::string>&)>;
  const std::map<std::string, Runner> runners = {
      {"sha256",
       [](const auto& f) { return to_hex(Sha256::digest(from_hex(f[0]))); }},
      {"sha3_256",
       [](const auto& f) { return to_hex(sha3_256(from_hex(f[0]))); }},
      {"aes128",
       [](const auto& f) {
         return to_hex(Aes(from_hex(f[0])).encrypt_block(from_hex(f[1])));
       }},
      {"aes256",
       [](const auto& f) {
         return to_hex(Aes(from_hex(f[0])).encrypt_block(from_hex(f[1])));
       }},
      {"hmac_sha256",
       [](const auto& f) {
         return hmac(make_key(from_hex(f[0])), from_hex(f[1])).bits.hex();
       }},
      {"cmac_aes128",
       [](const auto& f) {
         return cmac(make_key(from_hex(f[0])), from_hex(f[1])).bits.hex();
       }},
      {"cmac_aes256",
       [](const auto& f) {
         CmacParams p{CmacCipher::kAes256};
         return cmac(make_key(from_hex(f[0])), from_hex(f[1]), p).bits.hex();
       }},
      {"kmac128",
       [](const auto& f) {
         KmacParams p;
         p.variant = KmacVariant::kKmac128;
         p.output_bits = std::stoull(f[2]);
         p.customization.assign(f[3].begin(), f[3].end());
         return kmac(make_key(from_hex(f[0])), from_hex(f[1]), p).bits.hex();
       }},
      {"kmac256",
       [](const auto& f) {
         KmacParams p;
         p.variant = KmacVariant::kKmac256;
         p.output_bits = std::stoull(f[2]);
         p.customization.assign(f[3].begin(), f[3].end());
         return kmac(make_key(from_hex(f[0])), from_hex(f[1]), p).bits.hex();
       }},
  };
  const std::map<std::string, size_t> minimum_cases = {
      {"hmac_sha256", 4}, {"cmac_aes128", 4}, {"kmac128", 2}, {"kmac256", 2}};

  auto t0 = std::chrono::steady_clock::now();
  size_t total = 0;
  size_t bad = 0;
  std::map<std::string, size_t> per_family;
  for (const auto& [family, run] : runners) {
    fs::path dir = fs::path(PASSMINT_VECTORS_DIR) / family;
    if (!fs::is_directory(dir)) {
      continue;
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
      for (const auto& fields : read_tsv(entry.path())) {
        ++total;
        ++per_family[family];
        if (run(fields) != fields.back()) {
          ++bad;
        }
      }
    }
  }
  double elapsed = seconds_since(t0);

  bool coverage = true;
  for (const auto& [family, want] : minimum_cases) {
    coverage = coverage && per_family[family] >= want;
  }
  bool ok = total > 0 && bad == 0 && coverage && elapsed < 1.0;
  report(1, ok,
         fmt("published MAC/cipher/hash vectors bit-exact (%zu/%zu cases, "
             "%.3f s)",
             total - bad, total, elapsed));
  return ok;
}

// ------------------------------------------- 2. security-equivalent length

bool criterion_lengths() {
  bool ok = required_length(52, 128) == 23 && required_length(62, 128) == 22 &&
            required_length(72, 128) == 21;
  report(2, ok,
         fmt("password lengths for 128-bit strength: q=52 -> %zu, "
             "q=62 -> %zu, q=72 -> %zu (want 23, 22, 21)",
             required_length(52, 128), required_length(62, 128),
             required_length(72, 128)));
  return ok;
}

// --------------------------------------- 3 & 4. restart-matrix validation

const EngineKind kAllEngines[] = {EngineKind::kLcg, EngineKind::kHmac,
                                  EngineKind::kCmac, EngineKind::kKmac};

struct EngineRun {
  std::string name;
  RestartMatrix matrix;
  double build_seconds = 0.0;
  EntropyReport entropy;
};

std::vector<EngineRun> build_all_matrices() {
  std::vector<EngineRun> runs;
  for (EngineKind kind : kAllEngines) {
    EngineRun run;
    run.name = engine_name(kind);
    auto t0 = std::chrono::steady_clock::now();
    run.matrix = build_restart_matrix(make_validation_engine(kind));
    run.entropy = entropy_test(run.matrix);
    run.build_seconds = seconds_since(t0);
    runs.push_back(std::move(run));
  }
  return runs;
}

bool criterion_entropy(const std::vector<EngineRun>& runs) {
  bool ok = true;
  std::string detail = "restart-matrix entropy test at defaults:";
  for (const EngineRun& run : runs) {
    bool pass = run.entropy.pass && run.build_seconds < 120.0;
    ok = ok && pass;
    detail += fmt(" %s mcv=%u p=%.3g (%.2f s)%s", run.name.c_str(),
                  run.entropy.mcv, run.entropy.p_value, run.build_seconds,
                  pass ? "" : " <-- FAIL");
  }
  report(3, ok, detail);
  return ok;
}

bool criterion_iid(const std::vector<EngineRun>& runs) {
  bool ok = true;
  std::string detail = "per-row IID battery (Ind, GF, LRS):";
  for (const EngineRun& run : runs) {
    IidReport iid = run_iid_suite(run.matrix);
    size_t max_lrs =
        *std::max_element(iid.lrs_length.begin(), iid.lrs_length.end());
    bool medians_ok = iid.ind_median >= 0.2 && iid.ind_median <= 0.7 &&
                      iid.gf_median >= 0.2 && iid.gf_median <= 0.7 &&
                      iid.lrs_median >= 0.5;
    bool pass = iid.pass() && max_lrs <= kLrsMaxPassingLength && medians_ok;
    ok = ok && pass;
    detail += fmt(" %s medians ind=%.3f gf=%.3f lrs=%.3f maxW=%zu%s",
                  run.name.c_str(), iid.ind_median, iid.gf_median,
                  iid.lrs_median, max_lrs, pass ? "" : " <-- FAIL");
  }
  report(4, ok, detail);
  return ok;
}

// ------------------------------------------------- 5. character uniformity

bool criterion_char_uniformity() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst_p = 1.0;
  for (EngineKind kind : kAllEngines) {
    PrngEngine engine = make_validation_engine(kind);
    for (int preset = 1; preset <= 3; ++preset) {
      CharUniformityReport r =
          char_uniformity_test(engine, Charset::preset(preset));
      ok = ok && r.pass;
      worst_p = std::min(worst_p, r.p_value);
    }
  }
  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  report(5, ok,
         fmt("character uniformity for 12 engine x charset pairs, 10000 "
             "passwords each (worst p=%.4f, %.1f s)",
             worst_p, elapsed));
  return ok;
}

// ------------------------------------------------------ 6. LCG seed attack

bool criterion_lcg_attack() {
  std::mt19937_64 rng(0x5eed5a17);  // fixed run-to-run
  size_t recovered = 0;
  const size_t kTrials = 1000;
  for (size_t trial = 0; trial < kTrials; ++trial) {
    uint64_t key = rng();
    size_t steps = 1 + trial % 20;  // observe the k-th output, k in [1, 20]
    LcgState s = lcg_seed(key);
    std::vector<uint64_t> outputs;
    for (size_t i = 0; i < steps; ++i) {
      auto [next, value] = lcg_next(s);
      s = next;
      outputs.push_back(value);
    }
    // Recover from the latest output alone, then replay the whole run.
    uint64_t low48 = lcg_recover_seed_low48(LcgState{outputs.back()}, steps);
    if (low48 != (key & LcgState::kModulusMask)) {
      continue;
    }
    LcgState replay = lcg_seed(low48);
    bool match = true;
    for (uint64_t want : outputs) {
      auto [next, value] = lcg_next(replay);
      replay = next;
      match = match && value == want;
    }
    recovered += match;
  }
  bool ok = recovered == kTrials;
  report(6, ok,
         fmt("LCG seed recovery from one full-state output: %zu/%zu seeds, "
             "forward replay confirmed",
             recovered, kTrials));
  return ok;
}

// ----------------------------------------------- 7. statistical kernels

bool criterion_stat_kernels() {
  // chi_square_p against a precomputed high-precision table.
  size_t grid_points = 0;
  double worst_abs = 0.0;
  {
    std::ifstream in(fs::path(PASSMINT_TEST_DATA_DIR) / "chi2_grid.tsv");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      std::istringstream ss(line);
      unsigned df;
      double stat, want;
      ss >> stat >> df >> want;
      ++grid_points;
      worst_abs = std::max(worst_abs,
                           std::fabs(chi_square_p(stat, df) - want));
    }
  }
  bool chi_ok = grid_points == 1000 && worst_abs < 1e-10;

  // binomial_upper_p against direct long-double summation.
  std::mt19937_64 rng(20260814);
  double worst_rel = 0.0;
  for (int i = 0; i < 500; ++i) {
    uint64_t n = 1 + rng() % 1000;
    uint64_t k = rng() % (n + 1);
    double p = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
    long double sum = 0.0L;
    for (uint64_t j = k; j <= n; ++j) {
      long double log_term =
          std::lgamma(static_cast<long double>(n) + 1.0L) -
          std::lgamma(static_cast<long double>(j) + 1.0L) -
          std::lgamma(static_cast<long double>(n - j) + 1.0L) +
          static_cast<long double>(j) * std::log(static_cast<long double>(p)) +
          static_cast<long double>(n - j) *
              std::log(1.0L - static_cast<long double>(p));
      sum += std::exp(log_term);
    }
    double want = static_cast<double>(std::min(sum, 1.0L));
    double got = binomial_upper_p(n, p, k);
    if (want > 1e-300) {
      worst_rel = std::max(worst_rel, std::fabs(got - want) / want);
    }
  }
  bool binom_ok = worst_rel < 1e-9;

  // Longest repeated substring against cubic brute force.
  bool lrs_ok = true;
  for (int i = 0; i < 500 && lrs_ok; ++i) {
    size_t n = 2 + rng() % 199;
    std::vector<uint8_t> s(n);
    for (auto& b : s) {
      b = rng() & 1;
    }
    size_t brute = 0;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = a + 1; b < n; ++b) {
        size_t len = 0;
        while (b + len < n && s[a + len] == s[b + len]) {
          ++len;
        }
        brute = std::max(brute, len);
      }
    }
    BitStream bits;
    for (uint8_t b : s) {
      bits.append_bit(b);
    }
    lrs_ok = longest_repeated_substring(bits) == brute;
  }

  bool ok = chi_ok && binom_ok && lrs_ok;
  report(7, ok,
         fmt("kernels vs oracles: chi-square %zu-point grid max |err|=%.2g, "
             "binomial max rel err=%.2g, LRS brute-force %s",
             grid_points, worst_abs, worst_rel,
             lrs_ok ? "500/500 match" : "MISMATCH"));
  return ok;
}

// ---------------------------------------------------- 8. determinism

bool criterion_determinism() {
  // Same spec, two in-process runs.
  CounterModeContext ctx;
  ctx.construction = EngineKind::kKmac;
  ctx.key = derive_key_from_timestamp(424242, 256);
  ctx.base_message = {'p', 'w'};
  PasswordSpec spec;
  spec.charset = Charset::preset(2);
  spec.length = 22;
  spec.engine = PrngEngine::counter_mode(ctx);
  Password first = generate_password(spec);
  Password second = generate_password(spec);
  bool in_process = first.text == second.text &&
                    spec.engine.fill(777) == spec.engine.fill(777);

  // Same flags, two separate processes.
  const std::string gen_args =
      "generate --engine kmac --key-time 424242 --message pw --charset 2 "
      "--format json-lines";
  CliResult a = run_cli(gen_args);
  CliResult b = run_cli(gen_args);
  bool two_process =
      a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;

  // Matrix written by two processes, byte-identical, and reloadable.
  fs::path dump_a = fs::temp_directory_path() / "passmint_accept_a.bin";
  fs::path dump_b = fs::temp_directory_path() / "passmint_accept_b.bin";
  CliResult da =
      run_cli("validate --engine hmac --dump " + dump_a.string());
  CliResult db =
      run_cli("validate --engine hmac --dump " + dump_b.string());
  bool matrix_ok = da.exit_code == 0 && db.exit_code == 0;
  if (matrix_ok) {
    std::ifstream fa(dump_a, std::ios::binary);
    std::ifstream fb(dump_b, std::ios::binary);
    Bytes bytes_a((std::istreambuf_iterator<char>(fa)),
                  std::istreambuf_iterator<char>());
    Bytes bytes_b((std::istreambuf_iterator<char>(fb)),
                  std::istreambuf_iterator<char>());
    RestartMatrix rebuilt =
        build_restart_matrix(make_validation_engine(EngineKind::kHmac));
    matrix_ok = bytes_a == bytes_b &&
                RestartMatrix::from_bytes(bytes_a) == rebuilt &&
                RestartMatrix::from_bytes(rebuilt.bytes()) == rebuilt;
  }
  fs::remove(dump_a);
  fs::remove(dump_b);

  bool ok = in_process && two_process && matrix_ok;
  report(8, ok,
         fmt("determinism: in-process %s, two-process %s, matrix dump/load "
             "round-trip %s",
             in_process ? "ok" : "FAIL", two_process ? "ok" : "FAIL",
             matrix_ok ? "ok" : "FAIL"));
  return ok;
}

// ---------------------------------------------------------- 9. bench

bool criterion_bench() {
  fs::path csv = fs::temp_directory_path() / "passmint_accept_bench.csv";
  fs::path summary =
      fs::temp_directory_path() / "passmint_accept_bench_summary.csv";
  CliResult r =
      run_cli("bench --trials 10000 --key-time 5 --out " + csv.string());

  size_t data_rows = 0;
  size_t summary_rows = 0;
  std::string header_data, header_summary, line;
  {
    std::ifstream in(csv);
    std::getline(in, header_data);
    while (std::getline(in, line)) {
      ++data_rows;
    }
  }
  {
    std::ifstream in(summary);
    std::getline(in, header_summary);
    while (std::getline(in, line)) {
      ++summary_rows;
    }
  }
  bool note_emitted = r.out.find("ordering") != std::string::npos &&
                      r.out.find("note") != std::string::npos;
  bool ok = r.exit_code == 0 && header_data == "engine,charset,run,nanos" &&
            data_rows == 120000 &&
            header_summary == "engine,charset,min,q1,median,q3,max" &&
            summary_rows == 12 && note_emitted;
  fs::remove(csv);
  fs::remove(summary);
  report(9, ok,
         fmt("bench harness: %zu data rows, %zu summary rows, ordering "
             "observation %s as a note",
             data_rows, summary_rows, note_emitted ? "emitted" : "MISSING"));
  return ok;
}

// ------------------------------------------------- 10. modulo-bias bound

bool criterion_modulo_bias() {
  const size_t kChars = 1000000;
  bool ok = true;
  std::string detail =
      fmt("32-bit draws, %zu characters per charset, all counts within 5 "
          "sigma of uniform:",
          kChars);
  int preset = 1;
  for (size_t q : {size_t{52}, size_t{62}, size_t{72}}) {
    PrngEngine engine =
        make_validation_engine(EngineKind::kKmac).restarted(9000 + preset);
    BitStream bits = engine.fill(kChars * 32);
    std::vector<uint64_t> counts(q, 0);
    for (uint64_t value : split_bits(bits, kChars, 32)) {
      ++counts[value % q];
    }
    double expected = static_cast<double>(kChars) / q;
    double sigma =
        std::sqrt(kChars * (1.0 / q) * (1.0 - 1.0 / q));
    double worst_z = 0.0;
    for (uint64_t c : counts) {
      worst_z = std::max(worst_z, std::fabs(c - expected) / sigma);
    }
    ok = ok && worst_z < 5.0;
    detail += fmt(" q=%zu worst z=%.2f", q, worst_z);
    ++preset;
  }
  report(10, ok, detail);
  return ok;
}

}  // namespace

int main() {
  std::printf("passmint acceptance checklist\n");
  criterion_vectors();
  criterion_lengths();
  std::vector<EngineRun> runs = build_all_matrices();
  criterion_entropy(runs);
  criterion_iid(runs);
  criterion_char_uniformity();
  criterion_lcg_attack();
  criterion_stat_kernels();
  criterion_determinism();
  criterion_bench();
  criterion_modulo_bias();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
