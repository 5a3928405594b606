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

#include "passmint/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace passmint {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Lower regularized gamma P(a, x) by power series, for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a, x) by modified Lentz continued fraction,
// for x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      break;
    }
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) {
    throw std::invalid_argument("gamma_q domain error");
  }
  if (x == 0.0) {
    return 1.0;
  }
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) {
      break;
    }
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
double beta_i(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                 a * std::log(x) + b * std::log1p(-x);
  double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cf(a, b, x) / a;
  }
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace

double chi_square_p(double stat, unsigned df) {
  if (stat < 0.0 || !std::isfinite(stat)) {
    throw std::invalid_argument("chi-square statistic must be >= 0");
  }
  if (df < 1) {
    throw std::invalid_argument("degrees of freedom must be >= 1");
  }
  double p = gamma_q(df / 2.0, stat / 2.0);
  return std::clamp(p, 0.0, 1.0);
}

double binomial_upper_p(uint64_t trials, double prob, uint64_t k) {
  if (k > trials) {
    throw std::invalid_argument("k must not exceed trials");
  }
  if (prob < 0.0 || prob > 1.0 || !std::isfinite(prob)) {
    throw std::invalid_argument("probability must be in [0, 1]");
  }
  if (k == 0) {
    return 1.0;
  }
  if (prob == 0.0) {
    return 0.0;  // k >= 1 cannot happen
  }
  if (prob == 1.0) {
    return 1.0;  // X == trials >= k always
  }
  if (k == trials) {
    return std::pow(prob, static_cast<double>(trials));
  }
  // P[X >= k] = I_p(k, n - k + 1).
  double p = beta_i(static_cast<double>(k),
                    static_cast<double>(trials - k + 1), prob);
  return std::clamp(p, 0.0, 1.0);
}

namespace {

// Suffix array by prefix doubling with counting sort per round.
std::vector<int> build_suffix_array(const std::vector<uint8_t>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> sa(n), rank(n), tmp(n), count;
  for (int i = 0; i < n; ++i) {
    rank[i] = s[i];
  }
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(),
            [&](int a, int b) { return s[a] < s[b]; });

  for (int k = 1; k < n; k <<= 1) {
    // Sort by (rank[i], rank[i+k]) with two counting passes; key values are
    // in [0, n] after the +1 shift for out-of-range second halves.
    auto key2 = [&](int i) { return i + k < n ? rank[i + k] + 1 : 0; };

    std::vector<int> order(n);
    count.assign(n + 2, 0);
    for (int i = 0; i < n; ++i) ++count[key2(i) + 1];
    for (size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (int i = 0; i < n; ++i) order[count[key2(i)]++] = i;

    count.assign(n + 2, 0);
    for (int i = 0; i < n; ++i) ++count[rank[i] + 1];
    for (size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    for (int i : order) sa[count[rank[i]]++] = i;

    tmp[sa[0]] = 0;
    for (int i = 1; i < n; ++i) {
      bool same = rank[sa[i]] == rank[sa[i - 1]] &&
                  key2(sa[i]) == key2(sa[i - 1]);
      tmp[sa[i]] = tmp[sa[i - 1]] + (same ? 0 : 1);
    }
    rank = tmp;
    if (rank[sa[n - 1]] == n - 1) {
      break;
    }
  }
  return sa;
}

}  // namespace

size_t longest_repeated_substring(const BitStream& bits) {
  if (bits.size() < 2) {
    throw std::invalid_argument("need at least 2 bits");
  }
  const std::vector<uint8_t> s = bits.unpacked();
  const int n = static_cast<int>(s.size());
  std::vector<int> sa = build_suffix_array(s);

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) {
    pos[sa[i]] = i;
  }
  // Kasai: LCP of each suffix with its predecessor in suffix order.
  size_t best = 0;
  int h = 0;
  for (int i = 0; i < n; ++i) {
    if (pos[i] > 0) {
      int j = sa[pos[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
        ++h;
      }
      best = std::max(best, static_cast<size_t>(h));
      if (h > 0) {
        --h;
      }
    } else {
      h = 0;
    }
  }
  return best;
}

double lrs_p_value(uint64_t w, uint64_t n) {
  if (w < 1 || w >= n) {
    throw std::invalid_argument("need 1 <= W < n");
  }
  double starts = static_cast<double>(n - w + 1);
  double pairs = starts * (starts - 1.0) / 2.0;
  // 1 - (1 - 2^-W)^pairs without catastrophic cancellation.
  double p = -std::expm1(pairs * std::log1p(-std::exp2(-static_cast<double>(w))));
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace passmint
