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

#ifndef EAKG_RSA_PROTOCOL_HPP_
#define EAKG_RSA_PROTOCOL_HPP_

#include <optional>
#include <variant>

#include "attestation.hpp"
#include "sigma.hpp"

namespace eakg {

/// Protocol parameters for one RSA key generation.
///   k:         prime half-width; primes land in [2^{k+1}, 2^{k+2})
///   e:         public exponent, odd prime
///   lambda:    delta-search failure parameter (restart probability e^-lambda)
///   delta:     offset bound; defaults to delta_bound(k, e, lambda)
///   zero_leak: require delta_x = delta_y = 0, restarting until the sums
///              are already prime (no prime-gap leakage)
struct RsaConfig {
  unsigned k = 0;
  mpz_class e = 65537;
  unsigned lambda = 80;
  mpz_class delta;
  bool zero_leak = false;
  bool insecure_test = false;

  static RsaConfig make(unsigned k, const mpz_class& e = 65537,
                        unsigned lambda = 80, bool zero_leak = false,
                        bool insecure_test = false);

  /// Throws unless e is an odd prime, delta >= 1, k >= 4, and the group is
  /// large enough (bitlen(Q) >= 2k+100, waived by insecure_test along with
  /// the toy-group floor of 128 bits).
  void validate(const GroupParams& params) const;
};

/// Offset bound: ceil(lambda * ln(2^{k+1}) * e/(e-1)).
mpz_class delta_bound(unsigned k, const mpz_class& e, unsigned lambda);

/// Smallest delta in [0, bound) such that sum+delta is prime,
/// gcd(sum+delta-1, e) = 1 and sum+delta != exclude; nullopt if none.
std::optional<mpz_class> find_delta(const mpz_class& sum,
                                    const mpz_class& bound, const mpz_class& e,
                                    const mpz_class* exclude = nullptr);

struct RsaKeyMaterial {
  mpz_class p, q, n, e, d;
};

/// d = e^{-1} mod lcm(p-1, q-1). Throws if the gcd conditions fail or the
/// primes are equal / out of order with the basic requirements.
RsaKeyMaterial build_rsa_key(const mpz_class& p, const mpz_class& q,
                             const mpz_class& e);

// Wire messages (transport encodings live in ea_service).
struct RsaMsg1 {
  Commitment c_x, c_y;
};
struct RsaMsg2 {
  mpz_class x_prime, y_prime;
};
struct RsaMsg3 {
  mpz_class n, delta_x, delta_y;
  MulProof proof;
};
struct RsaMsg4 {
  Bytes sig;
  uint64_t timestamp = 0;
};

/// Restart marker: the device aborts and re-runs from the first step with
/// fresh secrets; nothing about delta or n has been sent.
struct Restart {};

/// Device side of the RSA protocol. Single-session, exclusively owned.
class RsaDevice {
 public:
  enum class Phase { kInit, kStarted, kFinalized, kCompleted, kAborted };

  RsaDevice(const GroupParams& params, RsaConfig config, ByteSource& rng);

  /// Samples x, y in [2^k, 2^{k+1}) and commits to them.
  RsaMsg1 start();

  /// Range-checks the authority randomness, runs the delta searches, and
  /// either produces (n, deltas, proof) or requests a restart. On restart
  /// the device must be discarded and the protocol re-run from start().
  std::variant<Restart, RsaMsg3> finalize(const RsaMsg2& msg2);

  /// Verifies the authority signature over n and assembles the bundle.
  /// Throws "ea signature invalid" on a bad signature.
  AttestedKey complete(const RsaMsg4& msg4,
                       std::span<const uint8_t> ea_verify_key);

  const RsaKeyMaterial& key() const;
  Phase phase() const { return phase_; }

  // Openings, exposed for tests and instrumented runs.
  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }
  const Scalar& r_x() const { return r_x_; }
  const Scalar& r_y() const { return r_y_; }
  const Commitment& c_x() const { return c_x_; }
  const Commitment& c_y() const { return c_y_; }

 private:
  const GroupParams& params_;
  RsaConfig config_;
  ByteSource& rng_;
  Phase phase_ = Phase::kInit;
  Scalar x_, y_, r_x_, r_y_;
  Bytes hedge_base_;  // device entropy folded into the proof nonces
  Commitment c_x_, c_y_;
  std::optional<RsaKeyMaterial> key_;
};

enum class RsaRejection {
  delta_out_of_range,
  modulus_out_of_range,
  proof_invalid,
};
const char* rsa_rejection_name(RsaRejection r);

/// Authority side of one RSA session.
class RsaEaSession {
 public:
  /// Validates the commitments (throws "bad commitment" on a non-member)
  /// and draws x', y'.
  RsaEaSession(const GroupParams& params, const RsaConfig& config,
               ByteSource& rng, const RsaMsg1& msg1);

  RsaMsg2 response() const;

  /// Recomputes C_p, C_q and checks the deltas, the modulus range and the
  /// proof. Returns the modulus to sign, or the rejection.
  std::variant<RsaRejection, mpz_class> verify(const RsaMsg3& msg3) const;

  const Commitment& c_x() const { return c_x_; }
  const Commitment& c_y() const { return c_y_; }
  const RsaConfig& config() const { return config_; }

 private:
  const GroupParams& params_;
  RsaConfig config_;
  Commitment c_x_, c_y_;
  mpz_class x_prime_, y_prime_;
};

/// Runs RsaEaSession::verify and, on acceptance, signs the modulus.
std::variant<RsaRejection, RsaMsg4> ea_verify_and_sign(
    const RsaEaSession& session, const RsaMsg3& msg3, const EaIdentity& id,
    const GroupParams& params, uint64_t timestamp);

/// Standalone generator mirroring the no-protocol baseline: picks a random
/// offset x in [2^k, 2^{k+1}] and takes the smallest qualifying prime
/// >= p_min + x.
mpz_class reference_prime_gen(unsigned k, const mpz_class& p_min,
                              const mpz_class& e, ByteSource& rng);
mpz_class reference_rsa_keygen(unsigned k, const mpz_class& p_min,
                               const mpz_class& q_min, const mpz_class& e,
                               ByteSource& rng);

/// Conventional local keygen (no authority): both primes drawn via
/// reference_prime_gen with random lower bounds. Used as the bench
/// baseline and for smoke tests.
RsaKeyMaterial local_rsa_keygen(unsigned k, const mpz_class& e,
                                ByteSource& rng);

}  // namespace eakg

#endif  // EAKG_RSA_PROTOCOL_HPP_
