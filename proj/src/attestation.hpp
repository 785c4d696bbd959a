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

#ifndef EAKG_ATTESTATION_HPP_
#define EAKG_ATTESTATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bytes.hpp"
#include "hash.hpp"
#include "rng.hpp"

#include "json.hpp"

namespace eakg {

inline constexpr size_t kSigBytes = 64;
inline constexpr size_t kVerifyKeyBytes = 32;

/// Ed25519 signing identity of an entropy authority.
/// ea_id is the SHA-256 fingerprint of the verification key.
struct EaIdentity {
  std::vector<uint8_t> signing_key;  // 64 bytes (seed || public)
  std::vector<uint8_t> verify_key;   // 32 bytes
  Digest ea_id{};
};

EaIdentity ea_keygen(ByteSource& rng);
EaIdentity ea_identity_from_signing_key(std::span<const uint8_t> signing_key);
Digest ea_fingerprint(std::span<const uint8_t> verify_key);

Bytes ed25519_sign(const EaIdentity& id, std::span<const uint8_t> message);
bool ed25519_verify(std::span<const uint8_t> verify_key,
                    std::span<const uint8_t> message,
                    std::span<const uint8_t> sig);

/// Canonical public-key bytes placed under the attestation signature:
/// len4-framed fields, so the encoding is injective.
Bytes rsa_key_bytes(const mpz_class& n, const mpz_class& e);
Bytes dsa_key_bytes(const mpz_class& a_pub);

/// Signature payload:
///   "EAKG1-ATT" || scheme byte || params_hash || len4(key)||key || ts(8,BE)
Bytes attestation_payload(const std::string& scheme, const Digest& params_hash,
                          std::span<const uint8_t> key_bytes,
                          uint64_t timestamp);

Bytes sign_public_key(const EaIdentity& id, const std::string& scheme,
                      const Digest& params_hash,
                      std::span<const uint8_t> key_bytes, uint64_t timestamp);

/// One authority's signature over a key.
struct Attestation {
  Digest ea_id{};
  uint64_t timestamp = 0;
  Bytes sig;
};

/// Public key plus entropy-authority attestation(s). Single-authority
/// bundles use the flat {timestamp, ea_id, sig} JSON form; multi-authority
/// bundles carry an "attestations" array. Unknown fields are preserved.
struct AttestedKey {
  int version = 1;
  std::string scheme;  // "rsa" | "dsa"
  Digest params_hash{};
  nlohmann::json public_key;  // {"n","e"} or {"a_pub"} hex fields
  std::vector<Attestation> attestations;
  nlohmann::json extra = nlohmann::json::object();  // preserved unknown fields

  Bytes key_bytes() const;  // canonical signed key encoding
};

std::string bundle_to_json(const AttestedKey& bundle);
AttestedKey bundle_from_json(std::string_view text);  // throws on malformed

/// Armored file form: the JSON, base64-wrapped between BEGIN/END lines.
std::string bundle_to_armor(const AttestedKey& bundle);
AttestedKey bundle_from_armor(std::string_view text);
/// Accepts either the armored or the bare-JSON form.
AttestedKey bundle_from_text(std::string_view text);

struct TrustStore {
  // ea_id hex -> verification key
  std::map<std::string, Bytes> keys;

  static TrustStore from_json(std::string_view text);
  std::string to_json() const;
  void add(const EaIdentity& id);
};

enum class VerifyResult {
  ok,
  unknown_ea,
  bad_signature,
  unsupported_version,
  malformed,
};

const char* verify_result_name(VerifyResult r);

/// True result iff every attestation's ea_id is in the store and its
/// signature verifies over the recomputed payload. `min_timestamp`, when
/// set by the caller, is a freshness policy applied on top.
VerifyResult verify_attested_key(const TrustStore& store,
                                 const AttestedKey& bundle);

}  // namespace eakg

#endif  // EAKG_ATTESTATION_HPP_
