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

#ifndef EAKG_SIGMA_HPP_
#define EAKG_SIGMA_HPP_

#include <optional>
#include <vector>

#include "pedersen.hpp"
#include "transcript.hpp"

namespace eakg {

inline constexpr std::string_view kTagMul = "EAKG1-NIZK-MUL";
inline constexpr std::string_view kTagPed = "EAKG1-NIZK-PED";
inline constexpr std::string_view kTagSum = "EAKG1-NIZK-SUM";

// ---------------------------------------------------------------------------
// Multiplication proof: knows (q, r_q, s) with
//   C_q = g^q h^{r_q}   and   g^n h^s = C_p^q     (s = r_p * q mod Q)
// which ties n to the product of the values committed in C_p and C_q.
// ---------------------------------------------------------------------------

struct MulStatement {
  Commitment c_p;
  Commitment c_q;
  mpz_class n;  // in [0, Q)
};

struct MulProof {
  mpz_class c;  // challenge, l bits
  Scalar z1, z2, z3;
};

/// Interactive-level transcript (commitment, challenge, response); used by
/// the simulator, the extractor and the HVZK tests.
struct MulTranscript {
  GroupElement t1, t2;
  mpz_class c;
  Scalar z1, z2, z3;
};

struct MulWitness {
  Scalar q, r_q, s;
};

/// Wire size: challenge_width + 3 * q_width bytes.
size_t mul_proof_size(const GroupParams& params);
Bytes mul_proof_encode(const GroupParams& params, const MulProof& proof);
std::optional<MulProof> mul_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data);

/// Non-interactive proof that n = p*q for the values committed in
/// C_p = Commit(p; r_p) and C_q = Commit(q; r_q). Throws if the relation
/// does not hold. Nonces are hedged: deterministically expanded from
/// SHA-256 over (hedge || witness || statement), where callers put device
/// entropy and all authority-supplied randomness into `hedge`.
MulProof mul_prove(const GroupParams& params, const mpz_class& n,
                   const Commitment& c_p, const Commitment& c_q,
                   const Scalar& p, const Scalar& r_p, const Scalar& q,
                   const Scalar& r_q, std::span<const uint8_t> hedge);

bool mul_verify(const GroupParams& params, const mpz_class& n,
                const Commitment& c_p, const Commitment& c_q,
                const MulProof& proof);

/// Sigma-level prover with explicit nonces and challenge.
MulTranscript mul_sigma_prove(const GroupParams& params,
                              const MulStatement& stmt,
                              const MulWitness& witness, const Scalar& k1,
                              const Scalar& k2, const Scalar& k3,
                              const mpz_class& c);

/// Checks the two verification equations against the provided commitments;
/// does not recompute the Fiat-Shamir challenge.
bool mul_sigma_check(const GroupParams& params, const MulStatement& stmt,
                     const MulTranscript& t);

/// Samples responses and solves for the commitments; the result passes
/// mul_sigma_check for any forced challenge.
MulTranscript mul_simulate(const GroupParams& params, const MulStatement& stmt,
                           const mpz_class& forced_challenge, ByteSource& rng);

/// Special soundness: two accepting transcripts with equal commitments and
/// distinct challenges yield the witness. Throws "challenges equal".
MulWitness mul_extract(const GroupParams& params, const MulStatement& stmt,
                       const MulTranscript& a, const MulTranscript& b);

// ---------------------------------------------------------------------------
// Pedersen PoK: knows (x, r) with  C_x = g^x h^r  and  A * g^{-x'} = g^x.
// ---------------------------------------------------------------------------

struct PedStatement {
  Commitment c_x;
  Scalar x_prime;
  GroupElement a;
};

struct PedProof {
  mpz_class c;
  Scalar z1, z2;
};

struct PedTranscript {
  GroupElement t1, t2;
  mpz_class c;
  Scalar z1, z2;
};

struct PedWitness {
  Scalar x, r;
};

/// Wire size: challenge_width + 2 * q_width bytes.
size_t ped_proof_size(const GroupParams& params);
Bytes ped_proof_encode(const GroupParams& params, const PedProof& proof);
std::optional<PedProof> ped_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data);

PedProof ped_prove(const GroupParams& params, const Scalar& x, const Scalar& r,
                   const Commitment& c_x, const Scalar& x_prime,
                   const GroupElement& a, std::span<const uint8_t> hedge);

bool ped_verify(const GroupParams& params, const PedProof& proof,
                const Commitment& c_x, const Scalar& x_prime,
                const GroupElement& a);

PedTranscript ped_sigma_prove(const GroupParams& params,
                              const PedStatement& stmt,
                              const PedWitness& witness, const Scalar& k1,
                              const Scalar& k2, const mpz_class& c);
bool ped_sigma_check(const GroupParams& params, const PedStatement& stmt,
                     const PedTranscript& t);
PedTranscript ped_simulate(const GroupParams& params, const PedStatement& stmt,
                           const mpz_class& forced_challenge, ByteSource& rng);
PedWitness ped_extract(const GroupParams& params, const PedStatement& stmt,
                       const PedTranscript& a, const PedTranscript& b);

// ---------------------------------------------------------------------------
// Linked-sum PoK (multi-authority): knows (x, r, {x_i, r_i}) with
//   C = g^x h^r,  C_i = g^{x_i} h^{r_i} for all i,  A = g^{x + sum_i x_i}.
// ---------------------------------------------------------------------------

struct SumStatement {
  Commitment c;
  std::vector<Commitment> c_list;
  GroupElement a;
};

struct SumProof {
  mpz_class c;
  Scalar z_x, z_r;
  std::vector<std::pair<Scalar, Scalar>> pairs;  // (z_xi, z_ri), 1..N
};

struct SumTranscript {
  GroupElement t0;
  std::vector<GroupElement> t_list;
  GroupElement t_a;
  mpz_class c;
  Scalar z_x, z_r;
  std::vector<std::pair<Scalar, Scalar>> pairs;
};

struct SumWitness {
  Scalar x, r;
  std::vector<std::pair<Scalar, Scalar>> contributions;  // (x_i, r_i)
};

/// Wire size: challenge_width + (2N + 2) * q_width bytes.
size_t sum_proof_size(const GroupParams& params, size_t n_authorities);
Bytes sum_proof_encode(const GroupParams& params, const SumProof& proof);
std::optional<SumProof> sum_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data,
                                         size_t n_authorities);

SumProof linked_sum_prove(const GroupParams& params, const SumWitness& witness,
                          const Commitment& c,
                          const std::vector<Commitment>& c_list,
                          const GroupElement& a,
                          std::span<const uint8_t> hedge);

bool linked_sum_verify(const GroupParams& params, const SumProof& proof,
                       const Commitment& c,
                       const std::vector<Commitment>& c_list,
                       const GroupElement& a);

SumTranscript sum_sigma_prove(const GroupParams& params,
                              const SumStatement& stmt,
                              const SumWitness& witness,
                              const std::vector<Scalar>& nonces,
                              const mpz_class& c);
bool sum_sigma_check(const GroupParams& params, const SumStatement& stmt,
                     const SumTranscript& t);
SumTranscript sum_simulate(const GroupParams& params, const SumStatement& stmt,
                           const mpz_class& forced_challenge, ByteSource& rng);
SumWitness sum_extract(const GroupParams& params, const SumStatement& stmt,
                       const SumTranscript& a, const SumTranscript& b);

}  // namespace eakg

#endif  // EAKG_SIGMA_HPP_
