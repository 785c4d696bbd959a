// Copyright 2026 The EAKG Authors
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

#ifndef EAKG_TESTS_TESTUTIL_HPP_
#define EAKG_TESTS_TESTUTIL_HPP_

#include <cstdint>
#include <vector>

#include "group.hpp"

namespace eakg::testutil {

// Fixture group P=47, Q=23, g=4, h=16 (g=2^2, h=2^4; 2 has order 23
// mod 47). Small enough to enumerate the whole subgroup.
inline GroupParams tiny_group() {
  return params_from_values(47, 23, 4, 16, {0x74, 0x65, 0x73, 0x74});
}

// Fixture group P=607, Q=101 for the distribution tests: 101 bins keep the
// chi-square table lookups standard.
inline GroupParams chi_group() {
  return params_from_values(607, 101, 64, 122, {0x63, 0x68, 0x69});
}

// Independent primality oracle: plain trial division.
inline bool trial_division_is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime >= start with gcd(p-1, e) = 1, by linear scan over the
// trial-division oracle. Independent of the library search path.
inline unsigned long oracle_next_qualifying_prime(unsigned long start,
                                                  unsigned long e) {
  for (unsigned long c = start;; c++) {
    if (!trial_division_is_prime(c)) continue;
    unsigned long a = c - 1, b = e;
    while (b != 0) {
      unsigned long t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) return c;
  }
}

// Chi-square statistic against a uniform expectation.
inline double chi_square_uniform(const std::vector<uint64_t>& counts) {
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  double expected = double(total) / double(counts.size());
  double stat = 0.0;
  for (uint64_t c : counts) {
    double d = double(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

// 99.9th percentiles of the chi-square distribution.
inline constexpr double kChi2_999_df100 = 149.449;
inline constexpr double kChi2_999_df22 = 48.268;
inline constexpr double kChi2_999_df15 = 37.697;
inline constexpr double kChi2_999_df7 = 24.322;

}  // namespace eakg::testutil

#endif  // EAKG_TESTS_TESTUTIL_HPP_
