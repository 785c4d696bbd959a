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

#include "sigma.hpp"

namespace eakg {

namespace {

bool scalar_in_range(const GroupParams& params, const Scalar& s) {
  return s.v >= 0 && s.v < params.q;
}

bool challenge_in_range(const GroupParams& params, const mpz_class& c) {
  if (c < 0) return false;
  return mpz_sizeinbase(c.get_mpz_t(), 2) <= challenge_bits(params) ||
         c == 0;
}

/// Deterministic nonce source seeded from the hedge material, the witness
/// and the statement. A device with a broken RNG still never reuses a
/// nonce across sessions because the authority randomness differs.
SeededRng hedged_nonces(std::string_view tag, const GroupParams& params,
                        std::span<const uint8_t> statement_ser,
                        std::span<const uint8_t> witness_ser,
                        std::span<const uint8_t> hedge) {
  Bytes buf;
  const std::string_view magic = "EAKG1-HEDGE";
  buf.insert(buf.end(), magic.begin(), magic.end());
  buf.push_back(0x00);
  buf.insert(buf.end(), tag.begin(), tag.end());
  buf.push_back(0x00);
  buf.insert(buf.end(), params.params_hash.begin(), params.params_hash.end());
  append_framed(buf, hedge);
  append_framed(buf, witness_ser);
  append_framed(buf, statement_ser);
  Digest seed = sha256(buf);
  return SeededRng(std::span<const uint8_t>(seed.data(), seed.size()));
}

void append_scalar_raw(const GroupParams& params, Bytes& out,
                       const Scalar& s) {
  Bytes b = int_to_bytes(s.v, params.q_width());
  out.insert(out.end(), b.begin(), b.end());
}

void append_element_raw(const GroupParams& params, Bytes& out,
                        const GroupElement& e) {
  Bytes b = int_to_bytes(e.v, params.p_width());
  out.insert(out.end(), b.begin(), b.end());
}

// z = k + c*w mod Q
Scalar respond(const GroupParams& params, const Scalar& k, const mpz_class& c,
               const Scalar& w) {
  return scalar_add(params, k, scalar_mul(params, scalar_from_int(params, c), w));
}

// base^{-c}
GroupElement pow_neg_challenge(const GroupParams& params,
                               const GroupElement& base, const mpz_class& c) {
  return element_pow(params, base,
                     scalar_neg(params, scalar_from_int(params, c)));
}

}  // namespace

// --------------------------------------------------------------------------
// Multiplication proof
// --------------------------------------------------------------------------

namespace {

Bytes mul_statement_bytes(const GroupParams& params, const MulStatement& s) {
  Bytes out;
  append_element_raw(params, out, s.c_p.element);
  append_element_raw(params, out, s.c_q.element);
  Bytes n = int_to_bytes(s.n, params.q_width());
  out.insert(out.end(), n.begin(), n.end());
  return out;
}

mpz_class mul_challenge(const GroupParams& params, const MulStatement& s,
                        const GroupElement& t1, const GroupElement& t2) {
  Transcript tr(kTagMul, params);
  tr.append_element(s.c_p.element);
  tr.append_element(s.c_q.element);
  tr.append_int(s.n);
  tr.append_element(t1);
  tr.append_element(t2);
  return tr.challenge();
}

// t1 = g^{z1} h^{z2} C_q^{-c}
GroupElement mul_t1_from_responses(const GroupParams& params,
                                   const MulStatement& s, const mpz_class& c,
                                   const Scalar& z1, const Scalar& z2) {
  GroupElement t = element_mul(params, element_pow(params, params.g, z1),
                               element_pow(params, params.h, z2));
  return element_mul(params, t, pow_neg_challenge(params, s.c_q.element, c));
}

// t2 = C_p^{z1} h^{-z3} (g^n)^{-c}
GroupElement mul_t2_from_responses(const GroupParams& params,
                                   const MulStatement& s, const mpz_class& c,
                                   const Scalar& z1, const Scalar& z3) {
  GroupElement t =
      element_mul(params, element_pow(params, s.c_p.element, z1),
                  element_pow(params, params.h, scalar_neg(params, z3)));
  GroupElement gn =
      element_pow(params, params.g, scalar_from_int(params, s.n));
  return element_mul(params, t, pow_neg_challenge(params, gn, c));
}

bool mul_statement_valid(const GroupParams& params, const MulStatement& s) {
  return is_member(params, s.c_p.element.v) &&
         is_member(params, s.c_q.element.v) && s.n >= 0 && s.n < params.q;
}

}  // namespace

size_t mul_proof_size(const GroupParams& params) {
  return challenge_width(params) + 3 * params.q_width();
}

Bytes mul_proof_encode(const GroupParams& params, const MulProof& proof) {
  Bytes out = int_to_bytes(proof.c, challenge_width(params));
  append_scalar_raw(params, out, proof.z1);
  append_scalar_raw(params, out, proof.z2);
  append_scalar_raw(params, out, proof.z3);
  return out;
}

std::optional<MulProof> mul_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data) {
  if (data.size() != mul_proof_size(params)) return std::nullopt;
  size_t cw = challenge_width(params), qw = params.q_width();
  MulProof p;
  p.c = int_from_bytes(data.subspan(0, cw));
  p.z1 = Scalar(int_from_bytes(data.subspan(cw, qw)));
  p.z2 = Scalar(int_from_bytes(data.subspan(cw + qw, qw)));
  p.z3 = Scalar(int_from_bytes(data.subspan(cw + 2 * qw, qw)));
  if (!challenge_in_range(params, p.c)) return std::nullopt;
  if (!scalar_in_range(params, p.z1) || !scalar_in_range(params, p.z2) ||
      !scalar_in_range(params, p.z3))
    return std::nullopt;
  return p;
}

MulProof mul_prove(const GroupParams& params, const mpz_class& n,
                   const Commitment& c_p, const Commitment& c_q,
                   const Scalar& p, const Scalar& r_p, const Scalar& q,
                   const Scalar& r_q, std::span<const uint8_t> hedge) {
  // The relation is checked up front; a mismatched witness must fail
  // loudly here rather than produce a proof the verifier rejects.
  EAKG_ENFORCE(n >= 0 && n < params.q, "relation does not hold");
  EAKG_ENFORCE(verify_opening(params, c_p, p, r_p), "relation does not hold");
  EAKG_ENFORCE(verify_opening(params, c_q, q, r_q), "relation does not hold");
  EAKG_ENFORCE(scalar_mul(params, p, q).v == n, "relation does not hold");

  MulStatement stmt{c_p, c_q, n};
  Scalar s = scalar_mul(params, r_p, q);  // C_p^q = g^n h^s

  Bytes witness_ser;
  append_scalar_raw(params, witness_ser, q);
  append_scalar_raw(params, witness_ser, r_q);
  append_scalar_raw(params, witness_ser, s);
  SeededRng nonce_rng = hedged_nonces(kTagMul, params,
                                      mul_statement_bytes(params, stmt),
                                      witness_ser, hedge);
  Scalar k1 = random_scalar(params, nonce_rng);
  Scalar k2 = random_scalar(params, nonce_rng);
  Scalar k3 = random_scalar(params, nonce_rng);

  GroupElement t1 = element_mul(params, element_pow(params, params.g, k1),
                                element_pow(params, params.h, k2));
  GroupElement t2 =
      element_mul(params, element_pow(params, c_p.element, k1),
                  element_pow(params, params.h, scalar_neg(params, k3)));
  mpz_class c = mul_challenge(params, stmt, t1, t2);

  MulProof proof;
  proof.c = c;
  proof.z1 = respond(params, k1, c, q);
  proof.z2 = respond(params, k2, c, r_q);
  proof.z3 = respond(params, k3, c, s);
  return proof;
}

bool mul_verify(const GroupParams& params, const mpz_class& n,
                const Commitment& c_p, const Commitment& c_q,
                const MulProof& proof) {
  MulStatement stmt{c_p, c_q, n};
  if (!mul_statement_valid(params, stmt)) return false;
  if (!challenge_in_range(params, proof.c)) return false;
  if (!scalar_in_range(params, proof.z1) ||
      !scalar_in_range(params, proof.z2) ||
      !scalar_in_range(params, proof.z3))
    return false;
  GroupElement t1 =
      mul_t1_from_responses(params, stmt, proof.c, proof.z1, proof.z2);
  GroupElement t2 =
      mul_t2_from_responses(params, stmt, proof.c, proof.z1, proof.z3);
  return mul_challenge(params, stmt, t1, t2) == proof.c;
}

MulTranscript mul_sigma_prove(const GroupParams& params,
                              const MulStatement& stmt,
                              const MulWitness& witness, const Scalar& k1,
                              const Scalar& k2, const Scalar& k3,
                              const mpz_class& c) {
  MulTranscript t;
  t.t1 = element_mul(params, element_pow(params, params.g, k1),
                     element_pow(params, params.h, k2));
  t.t2 = element_mul(params, element_pow(params, stmt.c_p.element, k1),
                     element_pow(params, params.h, scalar_neg(params, k3)));
  t.c = c;
  t.z1 = respond(params, k1, c, witness.q);
  t.z2 = respond(params, k2, c, witness.r_q);
  t.z3 = respond(params, k3, c, witness.s);
  return t;
}

bool mul_sigma_check(const GroupParams& params, const MulStatement& stmt,
                     const MulTranscript& t) {
  if (!mul_statement_valid(params, stmt)) return false;
  if (!is_member(params, t.t1.v) || !is_member(params, t.t2.v)) return false;
  return mul_t1_from_responses(params, stmt, t.c, t.z1, t.z2) == t.t1 &&
         mul_t2_from_responses(params, stmt, t.c, t.z1, t.z3) == t.t2;
}

MulTranscript mul_simulate(const GroupParams& params, const MulStatement& stmt,
                           const mpz_class& forced_challenge,
                           ByteSource& rng) {
  MulTranscript t;
  t.c = forced_challenge;
  t.z1 = random_scalar(params, rng);
  t.z2 = random_scalar(params, rng);
  t.z3 = random_scalar(params, rng);
  t.t1 = mul_t1_from_responses(params, stmt, t.c, t.z1, t.z2);
  t.t2 = mul_t2_from_responses(params, stmt, t.c, t.z1, t.z3);
  return t;
}

MulWitness mul_extract(const GroupParams& params, const MulStatement& stmt,
                       const MulTranscript& a, const MulTranscript& b) {
  (void)stmt;
  EAKG_ENFORCE(a.t1 == b.t1 && a.t2 == b.t2,
               "transcripts do not share commitments");
  EAKG_ENFORCE(a.c != b.c, "challenges equal");
  Scalar dc = scalar_sub(params, scalar_from_int(params, a.c),
                         scalar_from_int(params, b.c));
  Scalar inv = scalar_invert(params, dc);
  auto solve = [&](const Scalar& za, const Scalar& zb) {
    return scalar_mul(params, scalar_sub(params, za, zb), inv);
  };
  return MulWitness{solve(a.z1, b.z1), solve(a.z2, b.z2), solve(a.z3, b.z3)};
}

// --------------------------------------------------------------------------
// Pedersen PoK
// --------------------------------------------------------------------------

namespace {

Bytes ped_statement_bytes(const GroupParams& params, const PedStatement& s) {
  Bytes out;
  append_element_raw(params, out, s.c_x.element);
  append_scalar_raw(params, out, s.x_prime);
  append_element_raw(params, out, s.a);
  return out;
}

mpz_class ped_challenge(const GroupParams& params, const PedStatement& s,
                        const GroupElement& t1, const GroupElement& t2) {
  Transcript tr(kTagPed, params);
  tr.append_element(s.c_x.element);
  tr.append_scalar(s.x_prime);
  tr.append_element(s.a);
  tr.append_element(t1);
  tr.append_element(t2);
  return tr.challenge();
}

// B = A g^{-x'}
GroupElement ped_shifted_key(const GroupParams& params,
                             const PedStatement& s) {
  GroupElement g_neg =
      element_pow(params, params.g, scalar_neg(params, s.x_prime));
  return element_mul(params, s.a, g_neg);
}

GroupElement ped_t1_from_responses(const GroupParams& params,
                                   const PedStatement& s, const mpz_class& c,
                                   const Scalar& z1, const Scalar& z2) {
  GroupElement t = element_mul(params, element_pow(params, params.g, z1),
                               element_pow(params, params.h, z2));
  return element_mul(params, t, pow_neg_challenge(params, s.c_x.element, c));
}

GroupElement ped_t2_from_responses(const GroupParams& params,
                                   const PedStatement& s, const mpz_class& c,
                                   const Scalar& z1) {
  GroupElement b = ped_shifted_key(params, s);
  return element_mul(params, element_pow(params, params.g, z1),
                     pow_neg_challenge(params, b, c));
}

bool ped_statement_valid(const GroupParams& params, const PedStatement& s) {
  return is_member(params, s.c_x.element.v) && is_member(params, s.a.v) &&
         scalar_in_range(params, s.x_prime);
}

}  // namespace

size_t ped_proof_size(const GroupParams& params) {
  return challenge_width(params) + 2 * params.q_width();
}

Bytes ped_proof_encode(const GroupParams& params, const PedProof& proof) {
  Bytes out = int_to_bytes(proof.c, challenge_width(params));
  append_scalar_raw(params, out, proof.z1);
  append_scalar_raw(params, out, proof.z2);
  return out;
}

std::optional<PedProof> ped_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data) {
  if (data.size() != ped_proof_size(params)) return std::nullopt;
  size_t cw = challenge_width(params), qw = params.q_width();
  PedProof p;
  p.c = int_from_bytes(data.subspan(0, cw));
  p.z1 = Scalar(int_from_bytes(data.subspan(cw, qw)));
  p.z2 = Scalar(int_from_bytes(data.subspan(cw + qw, qw)));
  if (!challenge_in_range(params, p.c)) return std::nullopt;
  if (!scalar_in_range(params, p.z1) || !scalar_in_range(params, p.z2))
    return std::nullopt;
  return p;
}

PedProof ped_prove(const GroupParams& params, const Scalar& x, const Scalar& r,
                   const Commitment& c_x, const Scalar& x_prime,
                   const GroupElement& a, std::span<const uint8_t> hedge) {
  EAKG_ENFORCE(verify_opening(params, c_x, x, r), "relation does not hold");
  EAKG_ENFORCE(
      element_pow(params, params.g, scalar_add(params, x, x_prime)) == a,
      "relation does not hold");

  PedStatement stmt{c_x, x_prime, a};
  Bytes witness_ser;
  append_scalar_raw(params, witness_ser, x);
  append_scalar_raw(params, witness_ser, r);
  SeededRng nonce_rng = hedged_nonces(kTagPed, params,
                                      ped_statement_bytes(params, stmt),
                                      witness_ser, hedge);
  Scalar k1 = random_scalar(params, nonce_rng);
  Scalar k2 = random_scalar(params, nonce_rng);

  GroupElement t1 = element_mul(params, element_pow(params, params.g, k1),
                                element_pow(params, params.h, k2));
  GroupElement t2 = element_pow(params, params.g, k1);
  mpz_class c = ped_challenge(params, stmt, t1, t2);

  PedProof proof;
  proof.c = c;
  proof.z1 = respond(params, k1, c, x);
  proof.z2 = respond(params, k2, c, r);
  return proof;
}

bool ped_verify(const GroupParams& params, const PedProof& proof,
                const Commitment& c_x, const Scalar& x_prime,
                const GroupElement& a) {
  PedStatement stmt{c_x, x_prime, a};
  if (!ped_statement_valid(params, stmt)) return false;
  if (!challenge_in_range(params, proof.c)) return false;
  if (!scalar_in_range(params, proof.z1) ||
      !scalar_in_range(params, proof.z2))
    return false;
  GroupElement t1 =
      ped_t1_from_responses(params, stmt, proof.c, proof.z1, proof.z2);
  GroupElement t2 = ped_t2_from_responses(params, stmt, proof.c, proof.z1);
  return ped_challenge(params, stmt, t1, t2) == proof.c;
}

PedTranscript ped_sigma_prove(const GroupParams& params,
                              const PedStatement& stmt,
                              const PedWitness& witness, const Scalar& k1,
                              const Scalar& k2, const mpz_class& c) {
  (void)stmt;
  PedTranscript t;
  t.t1 = element_mul(params, element_pow(params, params.g, k1),
                     element_pow(params, params.h, k2));
  t.t2 = element_pow(params, params.g, k1);
  t.c = c;
  t.z1 = respond(params, k1, c, witness.x);
  t.z2 = respond(params, k2, c, witness.r);
  return t;
}

bool ped_sigma_check(const GroupParams& params, const PedStatement& stmt,
                     const PedTranscript& t) {
  if (!ped_statement_valid(params, stmt)) return false;
  if (!is_member(params, t.t1.v) || !is_member(params, t.t2.v)) return false;
  return ped_t1_from_responses(params, stmt, t.c, t.z1, t.z2) == t.t1 &&
         ped_t2_from_responses(params, stmt, t.c, t.z1) == t.t2;
}

PedTranscript ped_simulate(const GroupParams& params, const PedStatement& stmt,
                           const mpz_class& forced_challenge,
                           ByteSource& rng) {
  PedTranscript t;
  t.c = forced_challenge;
  t.z1 = random_scalar(params, rng);
  t.z2 = random_scalar(params, rng);
  t.t1 = ped_t1_from_responses(params, stmt, t.c, t.z1, t.z2);
  t.t2 = ped_t2_from_responses(params, stmt, t.c, t.z1);
  return t;
}

PedWitness ped_extract(const GroupParams& params, const PedStatement& stmt,
                       const PedTranscript& a, const PedTranscript& b) {
  (void)stmt;
  EAKG_ENFORCE(a.t1 == b.t1 && a.t2 == b.t2,
               "transcripts do not share commitments");
  EAKG_ENFORCE(a.c != b.c, "challenges equal");
  Scalar dc = scalar_sub(params, scalar_from_int(params, a.c),
                         scalar_from_int(params, b.c));
  Scalar inv = scalar_invert(params, dc);
  auto solve = [&](const Scalar& za, const Scalar& zb) {
    return scalar_mul(params, scalar_sub(params, za, zb), inv);
  };
  return PedWitness{solve(a.z1, b.z1), solve(a.z2, b.z2)};
}

// --------------------------------------------------------------------------
// Linked-sum PoK
// --------------------------------------------------------------------------

namespace {

Bytes sum_statement_bytes(const GroupParams& params, const SumStatement& s) {
  Bytes out;
  append_element_raw(params, out, s.c.element);
  for (const Commitment& ci : s.c_list)
    append_element_raw(params, out, ci.element);
  append_element_raw(params, out, s.a);
  return out;
}

mpz_class sum_challenge(const GroupParams& params, const SumStatement& s,
                        const GroupElement& t0,
                        const std::vector<GroupElement>& t_list,
                        const GroupElement& t_a) {
  Transcript tr(kTagSum, params);
  tr.append_element(s.c.element);
  for (const Commitment& ci : s.c_list) tr.append_element(ci.element);
  tr.append_element(s.a);
  tr.append_element(t0);
  for (const GroupElement& ti : t_list) tr.append_element(ti);
  tr.append_element(t_a);
  return tr.challenge();
}

GroupElement sum_t0_from_responses(const GroupParams& params,
                                   const SumStatement& s, const mpz_class& c,
                                   const Scalar& z_x, const Scalar& z_r) {
  GroupElement t = element_mul(params, element_pow(params, params.g, z_x),
                               element_pow(params, params.h, z_r));
  return element_mul(params, t, pow_neg_challenge(params, s.c.element, c));
}

GroupElement sum_ti_from_responses(const GroupParams& params,
                                   const Commitment& c_i, const mpz_class& c,
                                   const Scalar& z_xi, const Scalar& z_ri) {
  GroupElement t = element_mul(params, element_pow(params, params.g, z_xi),
                               element_pow(params, params.h, z_ri));
  return element_mul(params, t, pow_neg_challenge(params, c_i.element, c));
}

GroupElement sum_ta_from_responses(
    const GroupParams& params, const SumStatement& s, const mpz_class& c,
    const Scalar& z_x, const std::vector<std::pair<Scalar, Scalar>>& pairs) {
  Scalar z_sum = z_x;
  for (const auto& [z_xi, z_ri] : pairs)
    z_sum = scalar_add(params, z_sum, z_xi);
  GroupElement t = element_pow(params, params.g, z_sum);
  return element_mul(params, t, pow_neg_challenge(params, s.a, c));
}

bool sum_statement_valid(const GroupParams& params, const SumStatement& s) {
  if (!is_member(params, s.c.element.v) || !is_member(params, s.a.v))
    return false;
  if (s.c_list.empty()) return false;
  for (const Commitment& ci : s.c_list)
    if (!is_member(params, ci.element.v)) return false;
  return true;
}

}  // namespace

size_t sum_proof_size(const GroupParams& params, size_t n_authorities) {
  return challenge_width(params) +
         (2 * n_authorities + 2) * params.q_width();
}

Bytes sum_proof_encode(const GroupParams& params, const SumProof& proof) {
  Bytes out = int_to_bytes(proof.c, challenge_width(params));
  append_scalar_raw(params, out, proof.z_x);
  append_scalar_raw(params, out, proof.z_r);
  for (const auto& [z_xi, z_ri] : proof.pairs) {
    append_scalar_raw(params, out, z_xi);
    append_scalar_raw(params, out, z_ri);
  }
  return out;
}

std::optional<SumProof> sum_proof_decode(const GroupParams& params,
                                         std::span<const uint8_t> data,
                                         size_t n_authorities) {
  if (data.size() != sum_proof_size(params, n_authorities))
    return std::nullopt;
  size_t cw = challenge_width(params), qw = params.q_width();
  SumProof p;
  p.c = int_from_bytes(data.subspan(0, cw));
  if (!challenge_in_range(params, p.c)) return std::nullopt;
  size_t off = cw;
  auto read_scalar = [&]() {
    Scalar s(int_from_bytes(data.subspan(off, qw)));
    off += qw;
    return s;
  };
  p.z_x = read_scalar();
  p.z_r = read_scalar();
  if (!scalar_in_range(params, p.z_x) || !scalar_in_range(params, p.z_r))
    return std::nullopt;
  for (size_t i = 0; i < n_authorities; i++) {
    Scalar z_xi = read_scalar();
    Scalar z_ri = read_scalar();
    if (!scalar_in_range(params, z_xi) || !scalar_in_range(params, z_ri))
      return std::nullopt;
    p.pairs.emplace_back(z_xi, z_ri);
  }
  return p;
}

SumProof linked_sum_prove(const GroupParams& params, const SumWitness& witness,
                          const Commitment& c,
                          const std::vector<Commitment>& c_list,
                          const GroupElement& a,
                          std::span<const uint8_t> hedge) {
  size_t n = witness.contributions.size();
  EAKG_ENFORCE(n >= 1 && c_list.size() == n, "relation does not hold");
  EAKG_ENFORCE(verify_opening(params, c, witness.x, witness.r),
               "relation does not hold");
  Scalar exponent = witness.x;
  for (size_t i = 0; i < n; i++) {
    const auto& [x_i, r_i] = witness.contributions[i];
    EAKG_ENFORCE(verify_opening(params, c_list[i], x_i, r_i),
                 "relation does not hold");
    exponent = scalar_add(params, exponent, x_i);
  }
  EAKG_ENFORCE(element_pow(params, params.g, exponent) == a,
               "relation does not hold");

  SumStatement stmt{c, c_list, a};
  Bytes witness_ser;
  append_scalar_raw(params, witness_ser, witness.x);
  append_scalar_raw(params, witness_ser, witness.r);
  for (const auto& [x_i, r_i] : witness.contributions) {
    append_scalar_raw(params, witness_ser, x_i);
    append_scalar_raw(params, witness_ser, r_i);
  }
  SeededRng nonce_rng = hedged_nonces(kTagSum, params,
                                      sum_statement_bytes(params, stmt),
                                      witness_ser, hedge);
  std::vector<Scalar> nonces;
  for (size_t i = 0; i < 2 * n + 2; i++)
    nonces.push_back(random_scalar(params, nonce_rng));

  // Sigma-level prover with a Fiat-Shamir challenge.
  Scalar k_x = nonces[0], k_r = nonces[1];
  GroupElement t0 = element_mul(params, element_pow(params, params.g, k_x),
                                element_pow(params, params.h, k_r));
  std::vector<GroupElement> t_list;
  Scalar k_sum = k_x;
  for (size_t i = 0; i < n; i++) {
    const Scalar& k_xi = nonces[2 + 2 * i];
    const Scalar& k_ri = nonces[3 + 2 * i];
    t_list.push_back(element_mul(params,
                                 element_pow(params, params.g, k_xi),
                                 element_pow(params, params.h, k_ri)));
    k_sum = scalar_add(params, k_sum, k_xi);
  }
  GroupElement t_a = element_pow(params, params.g, k_sum);
  mpz_class challenge = sum_challenge(params, stmt, t0, t_list, t_a);

  SumProof proof;
  proof.c = challenge;
  proof.z_x = respond(params, k_x, challenge, witness.x);
  proof.z_r = respond(params, k_r, challenge, witness.r);
  for (size_t i = 0; i < n; i++) {
    const auto& [x_i, r_i] = witness.contributions[i];
    proof.pairs.emplace_back(respond(params, nonces[2 + 2 * i], challenge, x_i),
                             respond(params, nonces[3 + 2 * i], challenge, r_i));
  }
  return proof;
}

bool linked_sum_verify(const GroupParams& params, const SumProof& proof,
                       const Commitment& c,
                       const std::vector<Commitment>& c_list,
                       const GroupElement& a) {
  SumStatement stmt{c, c_list, a};
  if (!sum_statement_valid(params, stmt)) return false;
  if (proof.pairs.size() != c_list.size()) return false;
  if (!challenge_in_range(params, proof.c)) return false;
  if (!scalar_in_range(params, proof.z_x) ||
      !scalar_in_range(params, proof.z_r))
    return false;
  for (const auto& [z_xi, z_ri] : proof.pairs)
    if (!scalar_in_range(params, z_xi) || !scalar_in_range(params, z_ri))
      return false;

  GroupElement t0 =
      sum_t0_from_responses(params, stmt, proof.c, proof.z_x, proof.z_r);
  std::vector<GroupElement> t_list;
  for (size_t i = 0; i < c_list.size(); i++)
    t_list.push_back(sum_ti_from_responses(params, c_list[i], proof.c,
                                           proof.pairs[i].first,
                                           proof.pairs[i].second));
  GroupElement t_a =
      sum_ta_from_responses(params, stmt, proof.c, proof.z_x, proof.pairs);
  return sum_challenge(params, stmt, t0, t_list, t_a) == proof.c;
}

SumTranscript sum_sigma_prove(const GroupParams& params,
                              const SumStatement& stmt,
                              const SumWitness& witness,
                              const std::vector<Scalar>& nonces,
                              const mpz_class& c) {
  (void)stmt;
  size_t n = witness.contributions.size();
  EAKG_ENFORCE(nonces.size() == 2 * n + 2, "nonce count mismatch");
  SumTranscript t;
  t.c = c;
  Scalar k_sum = nonces[0];
  t.t0 = element_mul(params, element_pow(params, params.g, nonces[0]),
                     element_pow(params, params.h, nonces[1]));
  t.z_x = respond(params, nonces[0], c, witness.x);
  t.z_r = respond(params, nonces[1], c, witness.r);
  for (size_t i = 0; i < n; i++) {
    const Scalar& k_xi = nonces[2 + 2 * i];
    const Scalar& k_ri = nonces[3 + 2 * i];
    t.t_list.push_back(element_mul(params,
                                   element_pow(params, params.g, k_xi),
                                   element_pow(params, params.h, k_ri)));
    k_sum = scalar_add(params, k_sum, k_xi);
    t.pairs.emplace_back(
        respond(params, k_xi, c, witness.contributions[i].first),
        respond(params, k_ri, c, witness.contributions[i].second));
  }
  t.t_a = element_pow(params, params.g, k_sum);
  return t;
}

bool sum_sigma_check(const GroupParams& params, const SumStatement& stmt,
                     const SumTranscript& t) {
  if (!sum_statement_valid(params, stmt)) return false;
  if (t.t_list.size() != stmt.c_list.size() ||
      t.pairs.size() != stmt.c_list.size())
    return false;
  if (sum_t0_from_responses(params, stmt, t.c, t.z_x, t.z_r) != t.t0)
    return false;
  for (size_t i = 0; i < stmt.c_list.size(); i++)
    if (sum_ti_from_responses(params, stmt.c_list[i], t.c, t.pairs[i].first,
                              t.pairs[i].second) != t.t_list[i])
      return false;
  return sum_ta_from_responses(params, stmt, t.c, t.z_x, t.pairs) == t.t_a;
}

SumTranscript sum_simulate(const GroupParams& params, const SumStatement& stmt,
                           const mpz_class& forced_challenge,
                           ByteSource& rng) {
  SumTranscript t;
  t.c = forced_challenge;
  t.z_x = random_scalar(params, rng);
  t.z_r = random_scalar(params, rng);
  for (size_t i = 0; i < stmt.c_list.size(); i++)
    t.pairs.emplace_back(random_scalar(params, rng),
                         random_scalar(params, rng));
  t.t0 = sum_t0_from_responses(params, stmt, t.c, t.z_x, t.z_r);
  for (size_t i = 0; i < stmt.c_list.size(); i++)
    t.t_list.push_back(sum_ti_from_responses(
        params, stmt.c_list[i], t.c, t.pairs[i].first, t.pairs[i].second));
  t.t_a = sum_ta_from_responses(params, stmt, t.c, t.z_x, t.pairs);
  return t;
}

SumWitness sum_extract(const GroupParams& params, const SumStatement& stmt,
                       const SumTranscript& a, const SumTranscript& b) {
  (void)stmt;
  EAKG_ENFORCE(a.t0 == b.t0 && a.t_a == b.t_a && a.t_list == b.t_list,
               "transcripts do not share commitments");
  EAKG_ENFORCE(a.c != b.c, "challenges equal");
  EAKG_ENFORCE(a.pairs.size() == b.pairs.size(), "transcript shape mismatch");
  Scalar dc = scalar_sub(params, scalar_from_int(params, a.c),
                         scalar_from_int(params, b.c));
  Scalar inv = scalar_invert(params, dc);
  auto solve = [&](const Scalar& za, const Scalar& zb) {
    return scalar_mul(params, scalar_sub(params, za, zb), inv);
  };
  SumWitness w;
  w.x = solve(a.z_x, b.z_x);
  w.r = solve(a.z_r, b.z_r);
  for (size_t i = 0; i < a.pairs.size(); i++)
    w.contributions.emplace_back(solve(a.pairs[i].first, b.pairs[i].first),
                                 solve(a.pairs[i].second, b.pairs[i].second));
  return w;
}

}  // namespace eakg
