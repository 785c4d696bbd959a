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

#ifndef EAKG_PRIME_HPP_
#define EAKG_PRIME_HPP_

#include <gmpxx.h>

namespace eakg {

/// Miller-Rabin with 64 rounds. The bases are drawn from a SHA-256 stream
/// seeded with the candidate itself, so verdicts are deterministic and
/// reproducible across runs and machines.
bool is_prime(const mpz_class& n);

/// Smallest prime p >= start with gcd(p-1, e) = 1, skipping `exclude`
/// if given. Unbounded ascending search.
mpz_class next_qualifying_prime(const mpz_class& start, const mpz_class& e,
                                const mpz_class* exclude = nullptr);

}  // namespace eakg

#endif  // EAKG_PRIME_HPP_
