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

#include "prime.hpp"

#include <array>
#include <vector>

#include "bytes.hpp"
#include "hash.hpp"

namespace eakg {

namespace {

constexpr int kMillerRabinRounds = 64;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    std::array<bool, 1700> composite{};
    for (unsigned long i = 2; i < composite.size(); i++) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < composite.size(); j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const mpz_class& n, const mpz_class& base,
                        const mpz_class& d, unsigned long r) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; i++) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned long p : small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }

  // n-1 = d * 2^r with d odd
  mpz_class d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

  HashStream base_stream(int_to_bytes(n), "miller-rabin");
  mpz_class span = n - 3;  // bases in [2, n-2]
  size_t span_bytes = (mpz_sizeinbase(span.get_mpz_t(), 2) + 7) / 8 + 8;
  for (int round = 0; round < kMillerRabinRounds; round++) {
    mpz_class base = int_from_bytes(base_stream.take(span_bytes)) % span + 2;
    if (!miller_rabin_round(n, base, d, r)) return false;
  }
  return true;
}

mpz_class next_qualifying_prime(const mpz_class& start, const mpz_class& e,
                                const mpz_class* exclude) {
  EAKG_ENFORCE(start >= 2, "prime search needs start >= 2");
  mpz_class candidate = start;
  mpz_class g;
  while (true) {
    if (is_prime(candidate)) {
      mpz_gcd(g.get_mpz_t(), mpz_class(candidate - 1).get_mpz_t(),
              e.get_mpz_t());
      if (g == 1 && (exclude == nullptr || candidate != *exclude))
        return candidate;
    }
    candidate += 1;
  }
}

}  // namespace eakg
