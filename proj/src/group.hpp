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

#ifndef EAKG_GROUP_HPP_
#define EAKG_GROUP_HPP_

#include <optional>
#include <string>
#include <utility>

#include "bytes.hpp"
#include "hash.hpp"
#include "rng.hpp"

namespace eakg {

/// Element of the order-Q subgroup of Z_P^*. Always in [1, P).
struct GroupElement {
  mpz_class v;

  GroupElement() : v(0) {}
  explicit GroupElement(mpz_class value) : v(std::move(value)) {}
  bool operator==(const GroupElement&) const = default;
};

/// Integer in [0, Q).
struct Scalar {
  mpz_class v;

  Scalar() : v(0) {}
  explicit Scalar(mpz_class value) : v(std::move(value)) {}
  bool operator==(const Scalar&) const = default;
};

/// A Schnorr subgroup of Z_P^*: P prime, Q prime with Q | P-1, and two
/// generators g, h of the order-Q subgroup derived from independent hash
/// streams so that nobody knows log_g h. Immutable once constructed and
/// safe to share across threads.
struct GroupParams {
  mpz_class p;     // modulus
  mpz_class q;     // subgroup order
  GroupElement g;  // first generator
  GroupElement h;  // second generator
  Bytes seed;      // derivation seed
  unsigned k = 0;  // RSA prime half-width this group was sized for (0 = n/a)
  Digest params_hash{};

  unsigned q_bits() const {
    return static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
  }
  size_t p_width() const {  // element wire width in bytes
    return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
  }
  size_t q_width() const {  // scalar wire width in bytes
    return (q_bits() + 7) / 8;
  }
};

/// Deterministically builds group parameters: Q is the first q_bits-bit
/// prime from the seed's hash stream, P = 2*Q*f + 1 for the smallest f >= 1
/// making P prime, and g, h come from derive_generators.
GroupParams generate_group_params(unsigned q_bits,
                                  std::span<const uint8_t> seed,
                                  unsigned k = 0);

/// Candidates c = Hash_i(seed || tag) mod P raised to (P-1)/Q, skipping the
/// identity; tags "gen-g" and "gen-h" give independent streams.
std::pair<GroupElement, GroupElement> derive_generators(
    const mpz_class& p, const mpz_class& q, std::span<const uint8_t> seed);

/// Builds params from explicit values, checking every invariant and
/// computing the canonical hash. Used by the params-file loader and by
/// tests that pin tiny fixture groups.
GroupParams params_from_values(const mpz_class& p, const mpz_class& q,
                               const mpz_class& g, const mpz_class& h,
                               Bytes seed, unsigned k = 0);

Digest compute_params_hash(const mpz_class& p, const mpz_class& q,
                           const mpz_class& g, const mpz_class& h);

/// true iff 1 <= v < P and v^Q = 1 (mod P).
bool is_member(const GroupParams& params, const mpz_class& v);

GroupElement identity_element();
GroupElement element_mul(const GroupParams& params, const GroupElement& a,
                         const GroupElement& b);
GroupElement element_pow(const GroupParams& params, const GroupElement& base,
                         const Scalar& exp);
GroupElement element_inverse(const GroupParams& params,
                             const GroupElement& a);

Scalar scalar_from_int(const GroupParams& params, const mpz_class& v);
Scalar scalar_add(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar scalar_sub(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar scalar_mul(const GroupParams& params, const Scalar& a, const Scalar& b);
Scalar scalar_neg(const GroupParams& params, const Scalar& a);
Scalar scalar_invert(const GroupParams& params, const Scalar& a);

/// Rejection-sampled uniform scalar; completes on any byte source.
Scalar random_scalar(const GroupParams& params, ByteSource& rng);

// Wire encodings: fixed-width big-endian hex (element at P width, scalar
// at Q width).
std::string element_to_hex(const GroupParams& params, const GroupElement& e);
GroupElement element_from_hex(const GroupParams& params,
                              std::string_view hex);  // membership-checked
std::string scalar_to_hex(const GroupParams& params, const Scalar& s);
Scalar scalar_from_hex(const GroupParams& params, std::string_view hex);

/// Canonical params file (JSON text, stable key order, trailing newline).
std::string params_to_json(const GroupParams& params);
GroupParams params_from_json(std::string_view json_text);

}  // namespace eakg

#endif  // EAKG_GROUP_HPP_
