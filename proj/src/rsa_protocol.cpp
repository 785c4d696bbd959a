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

#include "rsa_protocol.hpp"

#include <cmath>

#include "prime.hpp"

namespace eakg {

RsaConfig RsaConfig::make(unsigned k, const mpz_class& e, unsigned lambda,
                          bool zero_leak, bool insecure_test) {
  RsaConfig c;
  c.k = k;
  c.e = e;
  c.lambda = lambda;
  c.delta = delta_bound(k, e, lambda);
  c.zero_leak = zero_leak;
  c.insecure_test = insecure_test;
  return c;
}

void RsaConfig::validate(const GroupParams& params) const {
  EAKG_ENFORCE(k >= 4, "k too small");
  EAKG_ENFORCE(e >= 3 && mpz_odd_p(e.get_mpz_t()) && is_prime(e),
               "e must be an odd prime");
  EAKG_ENFORCE(delta >= 1, "delta bound must be positive");
  if (!insecure_test) {
    EAKG_ENFORCE(params.q_bits() >= 128, "toy group needs insecure_test");
    EAKG_ENFORCE(params.q_bits() >= 2 * k + 100,
                 "group order too small for k");
  }
  // Even toy groups must hold every reachable modulus: n < 2^{2k+4} <= Q.
  EAKG_ENFORCE(params.q_bits() >= 2 * k + 5, "group order below 2^{2k+4}");
}

mpz_class delta_bound(unsigned k, const mpz_class& e, unsigned lambda) {
  EAKG_ENFORCE(k >= 4, "k too small");
  EAKG_ENFORCE(e > 1, "bad exponent");
  // ceil(lambda * ln(2^{k+1}) * e/(e-1))
  double e_d = mpz_get_d(e.get_mpz_t());
  double v = lambda * (double(k) + 1.0) * std::log(2.0) * e_d / (e_d - 1.0);
  mpz_class out;
  mpz_set_d(out.get_mpz_t(), std::ceil(v));
  return out;
}

std::optional<mpz_class> find_delta(const mpz_class& sum,
                                    const mpz_class& bound, const mpz_class& e,
                                    const mpz_class* exclude) {
  EAKG_ENFORCE(sum >= 2, "sum too small");
  mpz_class g;
  for (mpz_class d = 0; d < bound; d += 1) {
    mpz_class candidate = sum + d;
    if (!is_prime(candidate)) continue;
    mpz_gcd(g.get_mpz_t(), mpz_class(candidate - 1).get_mpz_t(),
            e.get_mpz_t());
    if (g != 1) continue;
    if (exclude != nullptr && candidate == *exclude) continue;
    return d;
  }
  return std::nullopt;
}

RsaKeyMaterial build_rsa_key(const mpz_class& p, const mpz_class& q,
                             const mpz_class& e) {
  EAKG_ENFORCE(p != q, "primes must be distinct");
  EAKG_ENFORCE(is_prime(p) && is_prime(q), "factors must be prime");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpz_class(p - 1).get_mpz_t(), e.get_mpz_t());
  EAKG_ENFORCE(g == 1, "gcd(p-1, e) != 1");
  mpz_gcd(g.get_mpz_t(), mpz_class(q - 1).get_mpz_t(), e.get_mpz_t());
  EAKG_ENFORCE(g == 1, "gcd(q-1, e) != 1");

  RsaKeyMaterial key;
  key.p = p;
  key.q = q;
  key.n = p * q;
  key.e = e;
  mpz_class carmichael;
  mpz_lcm(carmichael.get_mpz_t(), mpz_class(p - 1).get_mpz_t(),
          mpz_class(q - 1).get_mpz_t());
  int ok = mpz_invert(key.d.get_mpz_t(), e.get_mpz_t(),
                      carmichael.get_mpz_t());
  EAKG_ENFORCE(ok != 0, "e not invertible mod lcm(p-1, q-1)");
  return key;
}

// --------------------------------------------------------------------------
// Device
// --------------------------------------------------------------------------

RsaDevice::RsaDevice(const GroupParams& params, RsaConfig config,
                     ByteSource& rng)
    : params_(params), config_(std::move(config)), rng_(rng) {
  config_.validate(params);
}

RsaMsg1 RsaDevice::start() {
  EAKG_ENFORCE(phase_ == Phase::kInit, "out-of-phase call");
  x_ = scalar_from_int(params_, random_in_band(rng_, config_.k));
  y_ = scalar_from_int(params_, random_in_band(rng_, config_.k));
  r_x_ = random_scalar(params_, rng_);
  r_y_ = random_scalar(params_, rng_);
  c_x_ = commit(params_, x_, r_x_);
  c_y_ = commit(params_, y_, r_y_);
  hedge_base_ = rng_.take(32);
  phase_ = Phase::kStarted;
  return RsaMsg1{c_x_, c_y_};
}

std::variant<Restart, RsaMsg3> RsaDevice::finalize(const RsaMsg2& msg2) {
  EAKG_ENFORCE(phase_ == Phase::kStarted, "out-of-phase call");

  mpz_class band_lo = mpz_class(1) << config_.k;
  mpz_class band_hi = mpz_class(1) << (config_.k + 1);
  if (msg2.x_prime < band_lo || msg2.x_prime >= band_hi ||
      msg2.y_prime < band_lo || msg2.y_prime >= band_hi) {
    phase_ = Phase::kAborted;
    return Restart{};
  }

  mpz_class sum_x = x_.v + msg2.x_prime;  // over the integers; x < 2^{k+1} << Q
  mpz_class sum_y = y_.v + msg2.y_prime;

  std::optional<mpz_class> dx = find_delta(sum_x, config_.delta, config_.e);
  if (!dx) {
    phase_ = Phase::kAborted;
    return Restart{};
  }
  mpz_class p = sum_x + *dx;
  std::optional<mpz_class> dy =
      find_delta(sum_y, config_.delta, config_.e, &p);
  if (!dy) {
    phase_ = Phase::kAborted;
    return Restart{};
  }
  mpz_class q = sum_y + *dy;

  if (config_.zero_leak && (*dx != 0 || *dy != 0)) {
    phase_ = Phase::kAborted;
    return Restart{};
  }

  // Keep the primes inside [2^{k+1}, 2^{k+2}); a sum within delta of the
  // band top can push past it, which the range invariants forbid.
  mpz_class prime_hi = mpz_class(1) << (config_.k + 2);
  if (p >= prime_hi || q >= prime_hi) {
    phase_ = Phase::kAborted;
    return Restart{};
  }

  RsaMsg3 msg3;
  msg3.n = p * q;
  msg3.delta_x = *dx;
  msg3.delta_y = *dy;

  Scalar shift_x = scalar_from_int(params_, msg2.x_prime + *dx);
  Scalar shift_y = scalar_from_int(params_, msg2.y_prime + *dy);
  Commitment c_p = shift_by_public(params_, c_x_, shift_x);
  Commitment c_q = shift_by_public(params_, c_y_, shift_y);

  // Proof nonces are hedged with the authority randomness so a weak device
  // RNG cannot repeat them across sessions.
  Bytes hedge = hedge_base_;
  append_framed(hedge, int_to_bytes(msg2.x_prime));
  append_framed(hedge, int_to_bytes(msg2.y_prime));

  Scalar p_scalar = scalar_from_int(params_, p);
  Scalar q_scalar = scalar_from_int(params_, q);
  Scalar r_p = r_x_;  // shifting by a public value leaves randomness unchanged
  Scalar r_q = r_y_;
  msg3.proof = mul_prove(params_, scalar_from_int(params_, msg3.n).v, c_p, c_q,
                         p_scalar, r_p, q_scalar, r_q, hedge);

  key_ = build_rsa_key(p, q, config_.e);
  phase_ = Phase::kFinalized;
  return msg3;
}

AttestedKey RsaDevice::complete(const RsaMsg4& msg4,
                                std::span<const uint8_t> ea_verify_key) {
  EAKG_ENFORCE(phase_ == Phase::kFinalized, "out-of-phase call");
  Bytes key_bytes = rsa_key_bytes(key_->n, key_->e);
  Bytes payload = attestation_payload("rsa", params_.params_hash, key_bytes,
                                      msg4.timestamp);
  EAKG_ENFORCE(ed25519_verify(ea_verify_key, payload, msg4.sig),
               "ea signature invalid");

  AttestedKey bundle;
  bundle.scheme = "rsa";
  bundle.params_hash = params_.params_hash;
  bundle.public_key["n"] = int_to_hex(key_->n);
  bundle.public_key["e"] = int_to_hex(key_->e);
  Attestation att;
  att.ea_id = ea_fingerprint(ea_verify_key);
  att.timestamp = msg4.timestamp;
  att.sig = msg4.sig;
  bundle.attestations.push_back(att);
  phase_ = Phase::kCompleted;
  return bundle;
}

const RsaKeyMaterial& RsaDevice::key() const {
  EAKG_ENFORCE(key_.has_value(), "no key material yet");
  return *key_;
}

// --------------------------------------------------------------------------
// Entropy authority
// --------------------------------------------------------------------------

const char* rsa_rejection_name(RsaRejection r) {
  switch (r) {
    case RsaRejection::delta_out_of_range: return "delta_out_of_range";
    case RsaRejection::modulus_out_of_range: return "modulus_out_of_range";
    case RsaRejection::proof_invalid: return "proof_invalid";
  }
  return "proof_invalid";
}

RsaEaSession::RsaEaSession(const GroupParams& params, const RsaConfig& config,
                           ByteSource& rng, const RsaMsg1& msg1)
    : params_(params), config_(config) {
  config_.validate(params);
  EAKG_ENFORCE(is_member(params, msg1.c_x.element.v), "bad commitment");
  EAKG_ENFORCE(is_member(params, msg1.c_y.element.v), "bad commitment");
  c_x_ = msg1.c_x;
  c_y_ = msg1.c_y;
  x_prime_ = random_in_band(rng, config_.k);
  y_prime_ = random_in_band(rng, config_.k);
}

RsaMsg2 RsaEaSession::response() const { return RsaMsg2{x_prime_, y_prime_}; }

std::variant<RsaRejection, mpz_class> RsaEaSession::verify(
    const RsaMsg3& msg3) const {
  if (msg3.delta_x < 0 || msg3.delta_x >= config_.delta ||
      msg3.delta_y < 0 || msg3.delta_y >= config_.delta)
    return RsaRejection::delta_out_of_range;

  mpz_class n_lo = mpz_class(1) << (2 * config_.k + 2);
  mpz_class n_hi = mpz_class(1) << (2 * config_.k + 4);
  if (msg3.n < n_lo || msg3.n >= n_hi)
    return RsaRejection::modulus_out_of_range;

  Commitment c_p = shift_by_public(
      params_, c_x_, scalar_from_int(params_, x_prime_ + msg3.delta_x));
  Commitment c_q = shift_by_public(
      params_, c_y_, scalar_from_int(params_, y_prime_ + msg3.delta_y));
  if (!mul_verify(params_, scalar_from_int(params_, msg3.n).v, c_p, c_q,
                  msg3.proof))
    return RsaRejection::proof_invalid;
  return msg3.n;
}

std::variant<RsaRejection, RsaMsg4> ea_verify_and_sign(
    const RsaEaSession& session, const RsaMsg3& msg3, const EaIdentity& id,
    const GroupParams& params, uint64_t timestamp) {
  auto outcome = session.verify(msg3);
  if (std::holds_alternative<RsaRejection>(outcome))
    return std::get<RsaRejection>(outcome);
  const mpz_class& n = std::get<mpz_class>(outcome);
  RsaMsg4 msg4;
  msg4.timestamp = timestamp;
  msg4.sig = sign_public_key(id, "rsa", params.params_hash,
                             rsa_key_bytes(n, session.config().e), timestamp);
  return msg4;
}

// --------------------------------------------------------------------------
// Reference generators
// --------------------------------------------------------------------------

mpz_class reference_prime_gen(unsigned k, const mpz_class& p_min,
                              const mpz_class& e, ByteSource& rng) {
  // random x in [2^k, 2^{k+1}]
  mpz_class x = random_in_band(rng, k);
  return next_qualifying_prime(p_min + x, e);
}

mpz_class reference_rsa_keygen(unsigned k, const mpz_class& p_min,
                               const mpz_class& q_min, const mpz_class& e,
                               ByteSource& rng) {
  mpz_class p = reference_prime_gen(k, p_min, e, rng);
  mpz_class q = reference_prime_gen(k, q_min, e, rng);
  return p * q;
}

RsaKeyMaterial local_rsa_keygen(unsigned k, const mpz_class& e,
                                ByteSource& rng) {
  mpz_class p = reference_prime_gen(k, random_in_band(rng, k), e, rng);
  mpz_class q;
  do {
    q = reference_prime_gen(k, random_in_band(rng, k), e, rng);
  } while (q == p);
  return build_rsa_key(p, q, e);
}

}  // namespace eakg
