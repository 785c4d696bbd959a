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

#ifndef EAKG_DSA_PROTOCOL_HPP_
#define EAKG_DSA_PROTOCOL_HPP_

#include <variant>
#include <vector>

#include "attestation.hpp"
#include "sigma.hpp"

namespace eakg {

struct DsaKeyMaterial {
  Scalar a;       // private key
  GroupElement a_pub;  // A = g^a
};

struct DsaMsg1 {
  Commitment c_x;
};
struct DsaMsg2 {
  Scalar x_prime;
};
struct DsaMsg3 {
  GroupElement a_pub;
  PedProof proof;
};
struct DsaMsg4 {
  Bytes sig;
  uint64_t timestamp = 0;
};

/// Device side of the DSA protocol.
class DsaDevice {
 public:
  enum class Phase { kInit, kStarted, kFinalized, kCompleted };

  DsaDevice(const GroupParams& params, ByteSource& rng);

  DsaMsg1 start();
  /// a = x + x' mod Q, A = g^a, plus the proof that A matches C_x and x'.
  DsaMsg3 finalize(const DsaMsg2& msg2);
  AttestedKey complete(const DsaMsg4& msg4,
                       std::span<const uint8_t> ea_verify_key);

  const DsaKeyMaterial& key() const;
  Phase phase() const { return phase_; }

  // Openings for tests.
  const Scalar& x() const { return x_; }
  const Scalar& r() const { return r_; }
  const Commitment& c_x() const { return c_x_; }

 private:
  const GroupParams& params_;
  ByteSource& rng_;
  Phase phase_ = Phase::kInit;
  Scalar x_, r_;
  Bytes hedge_base_;
  Commitment c_x_;
  std::optional<DsaKeyMaterial> key_;
};

enum class DsaRejection {
  proof_invalid,
  bad_element,
};
const char* dsa_rejection_name(DsaRejection r);

class DsaEaSession {
 public:
  /// Throws "bad commitment" on a non-member commitment.
  DsaEaSession(const GroupParams& params, ByteSource& rng,
               const DsaMsg1& msg1);

  DsaMsg2 response() const;
  std::variant<DsaRejection, GroupElement> verify(const DsaMsg3& msg3) const;

  const Commitment& c_x() const { return c_x_; }

 private:
  const GroupParams& params_;
  Commitment c_x_;
  Scalar x_prime_;
};

std::variant<DsaRejection, DsaMsg4> ea_verify_and_sign(
    const DsaEaSession& session, const DsaMsg3& msg3, const EaIdentity& id,
    const GroupParams& params, uint64_t timestamp);

// --------------------------------------------------------------------------
// Multi-authority variant: N authorities each contribute (x_i, r_i) and
// sign <i, C, C_i>; the device proves A = g^{x + sum x_i} against all
// commitments and every authority countersigns A.
// --------------------------------------------------------------------------

/// One authority's randomness contribution.
struct MultiContribution {
  unsigned index = 0;  // 1-based
  Scalar x_i, r_i;
  Commitment c_i;
  Bytes sig;        // over the canonical <index, C, C_i> triple
  Bytes verify_key;  // authority's long-term verification key
};

/// Canonical signing payload "EAKG1-MA" || 0x00 || be32(i) || len4(C) ||
/// len4(C_i) with elements at P width.
Bytes multi_triple_payload(const GroupParams& params, unsigned index,
                           const Commitment& c, const Commitment& c_i);

MultiContribution multi_contribute(const GroupParams& params, ByteSource& rng,
                                   unsigned index, const Commitment& c,
                                   const EaIdentity& id);

struct MultiBundle {
  GroupElement a_pub;
  SumProof pok;
  Commitment c;
  std::vector<MultiContribution> contributions;  // x_i/r_i omitted on the wire
};

class MultiAuthDevice {
 public:
  MultiAuthDevice(const GroupParams& params, ByteSource& rng);

  const Commitment& commitment() const { return c_; }

  /// Verifies every sigma_i and index completeness (1..N, distinct), then
  /// assembles a = x + sum x_i, A = g^a and the linked-sum proof with
  /// nonces hedged by all authority randomness. Throws
  /// "authority signature invalid" on any bad sigma_i.
  MultiBundle finalize(const std::vector<MultiContribution>& contributions);

  AttestedKey complete(const std::vector<std::pair<DsaMsg4, Bytes>>&
                           signatures /* (msg4, verify_key) */);

  const DsaKeyMaterial& key() const;
  const Scalar& x() const { return x_; }
  const Scalar& r() const { return r_; }

 private:
  const GroupParams& params_;
  ByteSource& rng_;
  Scalar x_, r_;
  Bytes hedge_base_;
  Commitment c_;
  std::optional<DsaKeyMaterial> key_;
  bool finalized_ = false;
};

enum class MultiRejection {
  proof_invalid,
  peer_signature_invalid,
  own_contribution_missing,
};
const char* multi_rejection_name(MultiRejection r);

/// Authority record kept between contribute and finalize.
struct MultiAuthorityRecord {
  unsigned index = 0;
  Commitment c;    // device commitment
  Commitment c_i;  // own contribution commitment
};

/// Checks every peer signature, the linked-sum proof, and that the
/// authority's own contribution appears unmodified; then signs A.
std::variant<MultiRejection, DsaMsg4> multi_verify_and_sign(
    const GroupParams& params, const MultiAuthorityRecord& record,
    const MultiBundle& bundle, const EaIdentity& id, uint64_t timestamp);

/// Conventional local DSA keygen (bench baseline).
DsaKeyMaterial local_dsa_keygen(const GroupParams& params, ByteSource& rng);

}  // namespace eakg

#endif  // EAKG_DSA_PROTOCOL_HPP_
