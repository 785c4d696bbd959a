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

#include "dsa_protocol.hpp"

#include <algorithm>

namespace eakg {

// --------------------------------------------------------------------------
// Single-authority protocol
// --------------------------------------------------------------------------

DsaDevice::DsaDevice(const GroupParams& params, ByteSource& rng)
    : params_(params), rng_(rng) {}

DsaMsg1 DsaDevice::start() {
  EAKG_ENFORCE(phase_ == Phase::kInit, "out-of-phase call");
  x_ = random_scalar(params_, rng_);
  r_ = random_scalar(params_, rng_);
  c_x_ = commit(params_, x_, r_);
  hedge_base_ = rng_.take(32);
  phase_ = Phase::kStarted;
  return DsaMsg1{c_x_};
}

DsaMsg3 DsaDevice::finalize(const DsaMsg2& msg2) {
  EAKG_ENFORCE(phase_ == Phase::kStarted, "out-of-phase call");
  EAKG_ENFORCE(msg2.x_prime.v >= 0 && msg2.x_prime.v < params_.q,
               "x' out of range");

  Scalar a = scalar_add(params_, x_, msg2.x_prime);
  GroupElement a_pub = element_pow(params_, params_.g, a);

  Bytes hedge = hedge_base_;
  append_framed(hedge, int_to_bytes(msg2.x_prime.v, params_.q_width()));

  DsaMsg3 msg3;
  msg3.a_pub = a_pub;
  msg3.proof = ped_prove(params_, x_, r_, c_x_, msg2.x_prime, a_pub, hedge);
  key_ = DsaKeyMaterial{a, a_pub};
  phase_ = Phase::kFinalized;
  return msg3;
}

AttestedKey DsaDevice::complete(const DsaMsg4& msg4,
                                std::span<const uint8_t> ea_verify_key) {
  EAKG_ENFORCE(phase_ == Phase::kFinalized, "out-of-phase call");
  Bytes key_bytes = dsa_key_bytes(key_->a_pub.v);
  Bytes payload = attestation_payload("dsa", params_.params_hash, key_bytes,
                                      msg4.timestamp);
  EAKG_ENFORCE(ed25519_verify(ea_verify_key, payload, msg4.sig),
               "ea signature invalid");

  AttestedKey bundle;
  bundle.scheme = "dsa";
  bundle.params_hash = params_.params_hash;
  bundle.public_key["a_pub"] = element_to_hex(params_, key_->a_pub);
  Attestation att;
  att.ea_id = ea_fingerprint(ea_verify_key);
  att.timestamp = msg4.timestamp;
  att.sig = msg4.sig;
  bundle.attestations.push_back(att);
  phase_ = Phase::kCompleted;
  return bundle;
}

const DsaKeyMaterial& DsaDevice::key() const {
  EAKG_ENFORCE(key_.has_value(), "no key material yet");
  return *key_;
}

const char* dsa_rejection_name(DsaRejection r) {
  switch (r) {
    case DsaRejection::proof_invalid: return "proof_invalid";
    case DsaRejection::bad_element: return "bad_element";
  }
  return "proof_invalid";
}

DsaEaSession::DsaEaSession(const GroupParams& params, ByteSource& rng,
                           const DsaMsg1& msg1)
    : params_(params) {
  EAKG_ENFORCE(is_member(params, msg1.c_x.element.v), "bad commitment");
  c_x_ = msg1.c_x;
  x_prime_ = random_scalar(params, rng);
}

DsaMsg2 DsaEaSession::response() const { return DsaMsg2{x_prime_}; }

std::variant<DsaRejection, GroupElement> DsaEaSession::verify(
    const DsaMsg3& msg3) const {
  if (!is_member(params_, msg3.a_pub.v)) return DsaRejection::bad_element;
  if (!ped_verify(params_, msg3.proof, c_x_, x_prime_, msg3.a_pub))
    return DsaRejection::proof_invalid;
  return msg3.a_pub;
}

std::variant<DsaRejection, DsaMsg4> ea_verify_and_sign(
    const DsaEaSession& session, const DsaMsg3& msg3, const EaIdentity& id,
    const GroupParams& params, uint64_t timestamp) {
  auto outcome = session.verify(msg3);
  if (std::holds_alternative<DsaRejection>(outcome))
    return std::get<DsaRejection>(outcome);
  const GroupElement& a_pub = std::get<GroupElement>(outcome);
  DsaMsg4 msg4;
  msg4.timestamp = timestamp;
  msg4.sig = sign_public_key(id, "dsa", params.params_hash,
                             dsa_key_bytes(a_pub.v), timestamp);
  return msg4;
}

// --------------------------------------------------------------------------
// Multi-authority variant
// --------------------------------------------------------------------------

Bytes multi_triple_payload(const GroupParams& params, unsigned index,
                           const Commitment& c, const Commitment& c_i) {
  Bytes buf;
  const std::string_view magic = "EAKG1-MA";
  buf.insert(buf.end(), magic.begin(), magic.end());
  buf.push_back(0x00);
  append_u32(buf, index);
  append_framed(buf, int_to_bytes(c.element.v, params.p_width()));
  append_framed(buf, int_to_bytes(c_i.element.v, params.p_width()));
  return buf;
}

MultiContribution multi_contribute(const GroupParams& params, ByteSource& rng,
                                   unsigned index, const Commitment& c,
                                   const EaIdentity& id) {
  EAKG_ENFORCE(index >= 1, "authority index is 1-based");
  EAKG_ENFORCE(is_member(params, c.element.v), "bad commitment");
  MultiContribution out;
  out.index = index;
  out.x_i = random_scalar(params, rng);
  out.r_i = random_scalar(params, rng);
  out.c_i = commit(params, out.x_i, out.r_i);
  out.sig = ed25519_sign(id, multi_triple_payload(params, index, c, out.c_i));
  out.verify_key = id.verify_key;
  return out;
}

MultiAuthDevice::MultiAuthDevice(const GroupParams& params, ByteSource& rng)
    : params_(params), rng_(rng) {
  x_ = random_scalar(params_, rng_);
  r_ = random_scalar(params_, rng_);
  c_ = commit(params_, x_, r_);
  hedge_base_ = rng_.take(32);
}

MultiBundle MultiAuthDevice::finalize(
    const std::vector<MultiContribution>& contributions) {
  EAKG_ENFORCE(!finalized_, "out-of-phase call");
  size_t n = contributions.size();
  EAKG_ENFORCE(n >= 1, "no contributions");

  // Indices must be exactly 1..N, each signed over <i, C, C_i>.
  std::vector<bool> seen(n, false);
  for (const MultiContribution& contrib : contributions) {
    EAKG_ENFORCE(contrib.index >= 1 && contrib.index <= n &&
                     !seen[contrib.index - 1],
                 "authority indices must be distinct 1..N");
    seen[contrib.index - 1] = true;
    Bytes payload =
        multi_triple_payload(params_, contrib.index, c_, contrib.c_i);
    EAKG_ENFORCE(ed25519_verify(contrib.verify_key, payload, contrib.sig),
                 "authority signature invalid");
    EAKG_ENFORCE(verify_opening(params_, contrib.c_i, contrib.x_i,
                                contrib.r_i),
                 "contribution opening mismatch");
  }

  std::vector<const MultiContribution*> ordered(n);
  for (const MultiContribution& contrib : contributions)
    ordered[contrib.index - 1] = &contrib;

  Scalar a = x_;
  SumWitness witness;
  witness.x = x_;
  witness.r = r_;
  std::vector<Commitment> c_list;
  Bytes hedge = hedge_base_;  // mixes in every authority's randomness
  for (const MultiContribution* contrib : ordered) {
    a = scalar_add(params_, a, contrib->x_i);
    witness.contributions.emplace_back(contrib->x_i, contrib->r_i);
    c_list.push_back(contrib->c_i);
    append_framed(hedge, int_to_bytes(contrib->x_i.v, params_.q_width()));
    append_framed(hedge, int_to_bytes(contrib->r_i.v, params_.q_width()));
  }
  GroupElement a_pub = element_pow(params_, params_.g, a);

  MultiBundle bundle;
  bundle.a_pub = a_pub;
  bundle.c = c_;
  bundle.pok = linked_sum_prove(params_, witness, c_, c_list, a_pub, hedge);
  for (const MultiContribution* contrib : ordered) {
    MultiContribution wire = *contrib;
    wire.x_i = Scalar();  // openings never travel with the bundle
    wire.r_i = Scalar();
    bundle.contributions.push_back(std::move(wire));
  }
  key_ = DsaKeyMaterial{a, a_pub};
  finalized_ = true;
  return bundle;
}

AttestedKey MultiAuthDevice::complete(
    const std::vector<std::pair<DsaMsg4, Bytes>>& signatures) {
  EAKG_ENFORCE(finalized_, "out-of-phase call");
  EAKG_ENFORCE(!signatures.empty(), "no signatures");
  Bytes key_bytes = dsa_key_bytes(key_->a_pub.v);

  AttestedKey bundle;
  bundle.scheme = "dsa";
  bundle.params_hash = params_.params_hash;
  bundle.public_key["a_pub"] = element_to_hex(params_, key_->a_pub);
  for (const auto& [msg4, verify_key] : signatures) {
    Bytes payload = attestation_payload("dsa", params_.params_hash, key_bytes,
                                        msg4.timestamp);
    EAKG_ENFORCE(ed25519_verify(verify_key, payload, msg4.sig),
                 "ea signature invalid");
    Attestation att;
    att.ea_id = ea_fingerprint(verify_key);
    att.timestamp = msg4.timestamp;
    att.sig = msg4.sig;
    bundle.attestations.push_back(att);
  }
  return bundle;
}

const DsaKeyMaterial& MultiAuthDevice::key() const {
  EAKG_ENFORCE(key_.has_value(), "no key material yet");
  return *key_;
}

const char* multi_rejection_name(MultiRejection r) {
  switch (r) {
    case MultiRejection::proof_invalid: return "proof_invalid";
    case MultiRejection::peer_signature_invalid:
      return "peer_signature_invalid";
    case MultiRejection::own_contribution_missing:
      return "own_contribution_missing";
  }
  return "proof_invalid";
}

std::variant<MultiRejection, DsaMsg4> multi_verify_and_sign(
    const GroupParams& params, const MultiAuthorityRecord& record,
    const MultiBundle& bundle, const EaIdentity& id, uint64_t timestamp) {
  if (bundle.c != record.c) return MultiRejection::own_contribution_missing;

  bool own_found = false;
  for (const MultiContribution& contrib : bundle.contributions) {
    if (contrib.index == record.index) {
      if (contrib.c_i != record.c_i)
        return MultiRejection::own_contribution_missing;
      own_found = true;
    }
    Bytes payload =
        multi_triple_payload(params, contrib.index, bundle.c, contrib.c_i);
    if (!ed25519_verify(contrib.verify_key, payload, contrib.sig))
      return MultiRejection::peer_signature_invalid;
  }
  if (!own_found) return MultiRejection::own_contribution_missing;

  if (!is_member(params, bundle.a_pub.v)) return MultiRejection::proof_invalid;
  std::vector<Commitment> c_list;
  for (const MultiContribution& contrib : bundle.contributions)
    c_list.push_back(contrib.c_i);
  if (!linked_sum_verify(params, bundle.pok, bundle.c, c_list, bundle.a_pub))
    return MultiRejection::proof_invalid;

  DsaMsg4 msg4;
  msg4.timestamp = timestamp;
  msg4.sig = sign_public_key(id, "dsa", params.params_hash,
                             dsa_key_bytes(bundle.a_pub.v), timestamp);
  return msg4;
}

DsaKeyMaterial local_dsa_keygen(const GroupParams& params, ByteSource& rng) {
  Scalar a = random_scalar(params, rng);
  return DsaKeyMaterial{a, element_pow(params, params.g, a)};
}

}  // namespace eakg
