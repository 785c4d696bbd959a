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

#include "attestation.hpp"

#include <sodium.h>

#include <sstream>

namespace eakg {

using nlohmann::json;

namespace {

constexpr std::string_view kArmorBegin = "-----BEGIN EAKG ATTESTED KEY-----";
constexpr std::string_view kArmorEnd = "-----END EAKG ATTESTED KEY-----";

uint8_t scheme_byte(const std::string& scheme) {
  if (scheme == "rsa") return 0x01;
  if (scheme == "dsa") return 0x02;
  throw Error("unknown scheme: " + scheme);
}

Digest digest_from_hex(std::string_view hex) {
  Bytes b = hex_decode(hex);
  EAKG_ENFORCE(b.size() == 32, "digest must be 32 bytes");
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

json attestation_to_json(const Attestation& a) {
  json j;
  j["ea_id"] = hex_encode(a.ea_id);
  j["timestamp"] = a.timestamp;
  j["sig"] = hex_encode(a.sig);
  return j;
}

Attestation attestation_from_json(const json& j) {
  EAKG_ENFORCE(j.is_object() && j.contains("ea_id") && j.contains("sig") &&
                   j.contains("timestamp") && j["timestamp"].is_number(),
               "malformed attestation");
  Attestation a;
  a.ea_id = digest_from_hex(j["ea_id"].get<std::string>());
  a.timestamp = j["timestamp"].get<uint64_t>();
  a.sig = hex_decode(j["sig"].get<std::string>());
  return a;
}

}  // namespace

EaIdentity ea_keygen(ByteSource& rng) {
  Bytes seed = rng.take(crypto_sign_SEEDBYTES);
  EaIdentity id;
  id.signing_key.resize(crypto_sign_SECRETKEYBYTES);
  id.verify_key.resize(crypto_sign_PUBLICKEYBYTES);
  crypto_sign_seed_keypair(id.verify_key.data(), id.signing_key.data(),
                           seed.data());
  id.ea_id = ea_fingerprint(id.verify_key);
  return id;
}

EaIdentity ea_identity_from_signing_key(std::span<const uint8_t> signing_key) {
  EAKG_ENFORCE(signing_key.size() == crypto_sign_SECRETKEYBYTES,
               "bad signing key length");
  EaIdentity id;
  id.signing_key.assign(signing_key.begin(), signing_key.end());
  id.verify_key.resize(crypto_sign_PUBLICKEYBYTES);
  crypto_sign_ed25519_sk_to_pk(id.verify_key.data(), signing_key.data());
  id.ea_id = ea_fingerprint(id.verify_key);
  return id;
}

Digest ea_fingerprint(std::span<const uint8_t> verify_key) {
  return sha256(verify_key);
}

Bytes ed25519_sign(const EaIdentity& id, std::span<const uint8_t> message) {
  Bytes sig(crypto_sign_BYTES);
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                       id.signing_key.data());
  return sig;
}

bool ed25519_verify(std::span<const uint8_t> verify_key,
                    std::span<const uint8_t> message,
                    std::span<const uint8_t> sig) {
  if (verify_key.size() != crypto_sign_PUBLICKEYBYTES ||
      sig.size() != crypto_sign_BYTES)
    return false;
  return crypto_sign_verify_detached(sig.data(), message.data(),
                                     message.size(), verify_key.data()) == 0;
}

Bytes rsa_key_bytes(const mpz_class& n, const mpz_class& e) {
  Bytes out;
  append_framed(out, int_to_bytes(n));
  append_framed(out, int_to_bytes(e));
  return out;
}

Bytes dsa_key_bytes(const mpz_class& a_pub) {
  Bytes out;
  append_framed(out, int_to_bytes(a_pub));
  return out;
}

Bytes attestation_payload(const std::string& scheme, const Digest& params_hash,
                          std::span<const uint8_t> key_bytes,
                          uint64_t timestamp) {
  Bytes buf;
  const std::string_view magic = "EAKG1-ATT";
  buf.insert(buf.end(), magic.begin(), magic.end());
  buf.push_back(scheme_byte(scheme));
  buf.insert(buf.end(), params_hash.begin(), params_hash.end());
  append_framed(buf, key_bytes);
  append_u64(buf, timestamp);
  return buf;
}

Bytes sign_public_key(const EaIdentity& id, const std::string& scheme,
                      const Digest& params_hash,
                      std::span<const uint8_t> key_bytes, uint64_t timestamp) {
  return ed25519_sign(
      id, attestation_payload(scheme, params_hash, key_bytes, timestamp));
}

Bytes AttestedKey::key_bytes() const {
  if (scheme == "rsa")
    return rsa_key_bytes(int_from_hex(public_key.at("n").get<std::string>()),
                         int_from_hex(public_key.at("e").get<std::string>()));
  if (scheme == "dsa")
    return dsa_key_bytes(
        int_from_hex(public_key.at("a_pub").get<std::string>()));
  throw Error("unknown scheme: " + scheme);
}

std::string bundle_to_json(const AttestedKey& bundle) {
  json j = bundle.extra;
  j["version"] = bundle.version;
  j["scheme"] = bundle.scheme;
  j["params_hash"] = hex_encode(bundle.params_hash);
  j["public_key"] = bundle.public_key;
  EAKG_ENFORCE(!bundle.attestations.empty(), "bundle has no attestations");
  if (bundle.attestations.size() == 1) {
    const Attestation& a = bundle.attestations.front();
    j["timestamp"] = a.timestamp;
    j["ea_id"] = hex_encode(a.ea_id);
    j["sig"] = hex_encode(a.sig);
  } else {
    json arr = json::array();
    for (const Attestation& a : bundle.attestations)
      arr.push_back(attestation_to_json(a));
    j["attestations"] = arr;
  }
  return j.dump() + "\n";
}

AttestedKey bundle_from_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  EAKG_ENFORCE(!j.is_discarded() && j.is_object(), "malformed bundle");
  EAKG_ENFORCE(j.contains("version") && j["version"].is_number(),
               "malformed bundle");
  EAKG_ENFORCE(j.contains("scheme") && j["scheme"].is_string(),
               "malformed bundle");
  EAKG_ENFORCE(j.contains("params_hash") && j.contains("public_key") &&
                   j["public_key"].is_object(),
               "malformed bundle");

  AttestedKey b;
  b.version = j["version"].get<int>();
  b.scheme = j["scheme"].get<std::string>();
  b.params_hash = digest_from_hex(j["params_hash"].get<std::string>());
  b.public_key = j["public_key"];
  if (j.contains("attestations")) {
    EAKG_ENFORCE(j["attestations"].is_array() && !j["attestations"].empty(),
                 "malformed bundle");
    for (const json& a : j["attestations"])
      b.attestations.push_back(attestation_from_json(a));
  } else {
    EAKG_ENFORCE(j.contains("ea_id") && j.contains("sig") &&
                     j.contains("timestamp") && j["timestamp"].is_number(),
                 "malformed bundle");
    Attestation a;
    a.ea_id = digest_from_hex(j["ea_id"].get<std::string>());
    a.timestamp = j["timestamp"].get<uint64_t>();
    a.sig = hex_decode(j["sig"].get<std::string>());
    b.attestations.push_back(a);
  }

  // Preserve fields this reader does not know about.
  for (auto& [key, value] : j.items()) {
    if (key == "version" || key == "scheme" || key == "params_hash" ||
        key == "public_key" || key == "attestations" || key == "ea_id" ||
        key == "sig" || key == "timestamp")
      continue;
    b.extra[key] = value;
  }
  return b;
}

std::string bundle_to_armor(const AttestedKey& bundle) {
  std::string payload = bundle_to_json(bundle);
  std::string b64 = base64_encode(as_span(payload));
  std::string out(kArmorBegin);
  out.push_back('\n');
  for (size_t i = 0; i < b64.size(); i += 64) {
    out += b64.substr(i, 64);
    out.push_back('\n');
  }
  out += kArmorEnd;
  out.push_back('\n');
  return out;
}

AttestedKey bundle_from_armor(std::string_view text) {
  size_t begin = text.find(kArmorBegin);
  size_t end = text.find(kArmorEnd);
  EAKG_ENFORCE(begin != std::string_view::npos && end != std::string_view::npos
                   && end > begin,
               "malformed armor");
  std::string_view body =
      text.substr(begin + kArmorBegin.size(), end - begin - kArmorBegin.size());
  Bytes payload = base64_decode(body);
  return bundle_from_json(
      std::string_view(reinterpret_cast<const char*>(payload.data()),
                       payload.size()));
}

AttestedKey bundle_from_text(std::string_view text) {
  if (text.find(kArmorBegin) != std::string_view::npos)
    return bundle_from_armor(text);
  return bundle_from_json(text);
}

TrustStore TrustStore::from_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  EAKG_ENFORCE(!j.is_discarded() && j.is_object(), "malformed trust store");
  TrustStore store;
  for (auto& [ea_id_hex, vk_hex] : j.items()) {
    EAKG_ENFORCE(vk_hex.is_string(), "malformed trust store");
    Bytes vk = hex_decode(vk_hex.get<std::string>());
    EAKG_ENFORCE(vk.size() == kVerifyKeyBytes, "bad verification key length");
    // Fingerprints must match the stored keys.
    EAKG_ENFORCE(hex_encode(ea_fingerprint(vk)) == ea_id_hex,
                 "trust store fingerprint mismatch");
    store.keys[ea_id_hex] = vk;
  }
  return store;
}

std::string TrustStore::to_json() const {
  json j = json::object();
  for (const auto& [ea_id_hex, vk] : keys) j[ea_id_hex] = hex_encode(vk);
  return j.dump() + "\n";
}

void TrustStore::add(const EaIdentity& id) {
  keys[hex_encode(id.ea_id)] = id.verify_key;
}

const char* verify_result_name(VerifyResult r) {
  switch (r) {
    case VerifyResult::ok: return "ok";
    case VerifyResult::unknown_ea: return "unknown_ea";
    case VerifyResult::bad_signature: return "bad_signature";
    case VerifyResult::unsupported_version: return "unsupported_version";
    case VerifyResult::malformed: return "malformed";
  }
  return "malformed";
}

VerifyResult verify_attested_key(const TrustStore& store,
                                 const AttestedKey& bundle) {
  if (bundle.version != 1) return VerifyResult::unsupported_version;
  if (bundle.scheme != "rsa" && bundle.scheme != "dsa")
    return VerifyResult::malformed;
  if (bundle.attestations.empty()) return VerifyResult::malformed;

  Bytes key;
  try {
    key = bundle.key_bytes();
  } catch (const std::exception&) {
    return VerifyResult::malformed;
  }

  for (const Attestation& a : bundle.attestations) {
    auto it = store.keys.find(hex_encode(a.ea_id));
    if (it == store.keys.end()) return VerifyResult::unknown_ea;
    Bytes payload =
        attestation_payload(bundle.scheme, bundle.params_hash, key,
                            a.timestamp);
    if (!ed25519_verify(it->second, payload, a.sig))
      return VerifyResult::bad_signature;
  }
  return VerifyResult::ok;
}

}  // namespace eakg
