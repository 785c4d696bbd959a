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

#include "adversary.hpp"

#include "prime.hpp"

namespace eakg {

using nlohmann::json;

// --------------------------------------------------------------------------
// Weak byte sources
// --------------------------------------------------------------------------

namespace {
SeededRng make_expanded(WeakRng::Mode mode, uint64_t seed) {
  switch (mode) {
    case WeakRng::Mode::kCounter:
      // Only 16 bits of the seed survive, like a PRNG seeded with a
      // process id.
      return SeededRng(seed & 0xffff);
    case WeakRng::Mode::kLowBits:
    case WeakRng::Mode::kConstant:
      return SeededRng(seed);
  }
  return SeededRng(seed);
}
}  // namespace

WeakRng::WeakRng(Mode mode, uint64_t seed)
    : mode_(mode),
      constant_(static_cast<uint8_t>(seed & 0xff)),
      expanded_(make_expanded(mode, seed)) {}

WeakRng::Mode WeakRng::mode_from_name(const std::string& name) {
  if (name == "constant") return Mode::kConstant;
  if (name == "counter") return Mode::kCounter;
  if (name == "low-bits") return Mode::kLowBits;
  throw Error("unknown weak rng mode: " + name);
}

void WeakRng::fill(uint8_t* out, size_t len) {
  switch (mode_) {
    case Mode::kConstant:
      std::fill(out, out + len, constant_);
      return;
    case Mode::kCounter:
      expanded_.fill(out, len);
      return;
    case Mode::kLowBits:
      expanded_.fill(out, len);
      for (size_t i = 0; i < len; i++) out[i] &= 0x03;
      return;
  }
}

// --------------------------------------------------------------------------
// Scenarios
// --------------------------------------------------------------------------

std::vector<Scenario> scenarios_from_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  EAKG_ENFORCE(!j.is_discarded() && j.is_array(), "malformed scenario file");
  std::vector<Scenario> out;
  for (const json& sj : j) {
    Scenario s;
    s.name = sj.at("name").get<std::string>();
    s.actor = sj.at("actor").get<std::string>();
    s.strategy = sj.at("strategy").get<std::string>();
    s.params = sj.value("params", json::object());
    s.expected = sj.at("expected").get<std::string>();
    out.push_back(std::move(s));
  }
  return out;
}

std::string Outcome::label() const {
  if (accepted) return "accept";
  if (device_aborted) return "device_abort";
  return "reject:" + rejection_code;
}

namespace {

void record(json& transcript, const std::string& dir, const std::string& name,
            json body) {
  json entry;
  entry["dir"] = dir;
  entry["msg"] = name;
  entry["body"] = std::move(body);
  transcript.push_back(std::move(entry));
}

/// Builds a multiplication proof the way an honest prover would, except the
/// claimed modulus in the challenge is `n_claim` while the responses use
/// the witness of the true relation. MulVer cannot accept it.
MulProof mismatched_witness_proof(const GroupParams& params,
                                  const mpz_class& n_claim,
                                  const Commitment& c_p, const Commitment& c_q,
                                  const Scalar& q, const Scalar& r_q,
                                  const Scalar& s, ByteSource& rng) {
  Scalar k1 = random_scalar(params, rng);
  Scalar k2 = random_scalar(params, rng);
  Scalar k3 = random_scalar(params, rng);
  GroupElement t1 = element_mul(params, element_pow(params, params.g, k1),
                                element_pow(params, params.h, k2));
  GroupElement t2 =
      element_mul(params, element_pow(params, c_p.element, k1),
                  element_pow(params, params.h, scalar_neg(params, k3)));
  Transcript tr(kTagMul, params);
  tr.append_element(c_p.element);
  tr.append_element(c_q.element);
  tr.append_int(scalar_from_int(params, n_claim).v);
  tr.append_element(t1);
  tr.append_element(t2);
  mpz_class c = tr.challenge();

  auto respond = [&](const Scalar& k, const Scalar& w) {
    return scalar_add(params, k,
                      scalar_mul(params, scalar_from_int(params, c), w));
  };
  MulProof proof;
  proof.c = c;
  proof.z1 = respond(k1, q);
  proof.z2 = respond(k2, r_q);
  proof.z3 = respond(k3, s);
  return proof;
}

/// Product of three primes inside [2^{2k+2}, 2^{2k+4}).
mpz_class three_prime_modulus(unsigned k, const mpz_class& e) {
  unsigned bits = 2 * k + 3;
  unsigned b1 = bits / 3, b2 = bits / 3;
  mpz_class p1 = next_qualifying_prime(mpz_class(1) << b1, e);
  mpz_class p2 = next_qualifying_prime((mpz_class(1) << b2) + 57, e);
  mpz_class target = mpz_class(1) << bits;
  mpz_class p3 = next_qualifying_prime(target / (p1 * p2), e);
  mpz_class n = p1 * p2 * p3;
  EAKG_ENFORCE(n >= mpz_class(1) << (2 * k + 2) &&
                   n < mpz_class(1) << (2 * k + 4),
               "three-prime modulus out of range");
  return n;
}

}  // namespace

Outcome run_scenario(const Scenario& scenario, const GroupParams& params,
                     const RsaConfig& config, const EaIdentity& ea_identity,
                     ByteSource& rng) {
  Outcome outcome;
  const unsigned max_restarts = 64;

  for (unsigned attempt = 0; attempt < max_restarts; attempt++) {
    RsaDevice device(params, config, rng);
    RsaMsg1 msg1 = device.start();

    RsaMsg1 msg1_sent = msg1;
    if (scenario.strategy == "tamper_commitment") {
      // The device proves against its own commitment but showed the
      // authority a different one.
      msg1_sent.c_x = Commitment{element_mul(params, msg1.c_x.element,
                                             params.g)};
    }
    record(outcome.transcript, "device->ea", "msg1",
           wire::rsa_start_request(params, config, msg1_sent));

    RsaMsg2 msg2;
    std::unique_ptr<RsaEaSession> ea;
    if (scenario.actor == "ea" && scenario.strategy == "xprime_out_of_range") {
      msg2.x_prime = mpz_class(1) << (config.k + 1);  // just past the band
      msg2.y_prime = random_in_band(rng, config.k);
    } else {
      ea = std::make_unique<RsaEaSession>(params, config, rng, msg1_sent);
      msg2 = ea->response();
    }
    record(outcome.transcript, "ea->device", "msg2",
           wire::rsa_msg2_to_json(msg2, "scenario"));

    auto finalized = device.finalize(msg2);
    if (std::holds_alternative<Restart>(finalized)) {
      if (scenario.strategy == "xprime_out_of_range") {
        // The range abort is the expected outcome, not a retry.
        record(outcome.transcript, "device", "abort",
               json{{"reason", "authority randomness out of range"}});
        outcome.device_aborted = true;
        return outcome;
      }
      record(outcome.transcript, "device", "restart", json::object());
      continue;
    }
    RsaMsg3 msg3 = std::get<RsaMsg3>(finalized);

    // Device-side tampering of the finalize message.
    if (scenario.strategy == "delta_at_bound") {
      msg3.delta_x = config.delta;
    } else if (scenario.strategy == "delta_over_bound") {
      msg3.delta_x = config.delta + 1;
    } else if (scenario.strategy == "modulus_low") {
      msg3.n = (mpz_class(1) << (2 * config.k + 2)) - 1;
    } else if (scenario.strategy == "modulus_high") {
      msg3.n = mpz_class(1) << (2 * config.k + 4);
    } else if (scenario.strategy == "three_prime_modulus") {
      mpz_class n_claim = three_prime_modulus(config.k, config.e);
      Commitment c_p = shift_by_public(
          params, device.c_x(),
          scalar_from_int(params, msg2.x_prime + msg3.delta_x));
      Commitment c_q = shift_by_public(
          params, device.c_y(),
          scalar_from_int(params, msg2.y_prime + msg3.delta_y));
      Scalar q_scalar = scalar_from_int(params, device.key().q);
      Scalar s = scalar_mul(params, device.r_x(), q_scalar);
      msg3.n = n_claim;
      msg3.proof = mismatched_witness_proof(params, n_claim, c_p, c_q,
                                            q_scalar, device.r_y(), s, rng);
    }
    record(outcome.transcript, "device->ea", "msg3",
           wire::rsa_msg3_to_json(params, msg3));

    if (ea == nullptr) {  // malicious EA already answered out of range
      outcome.device_aborted = true;
      return outcome;
    }

    uint64_t now = 1700000000;
    auto verdict = ea_verify_and_sign(*ea, msg3, ea_identity, params, now);
    if (std::holds_alternative<RsaRejection>(verdict)) {
      outcome.rejection_code =
          rsa_rejection_name(std::get<RsaRejection>(verdict));
      record(outcome.transcript, "ea->device", "reject",
             json{{"error", outcome.rejection_code}});
      return outcome;
    }
    RsaMsg4 msg4 = std::get<RsaMsg4>(verdict);

    if (scenario.actor == "ea" && scenario.strategy == "invalid_signature") {
      msg4.sig.assign(kSigBytes, 0x42);
    }
    record(outcome.transcript, "ea->device", "msg4",
           wire::msg4_to_json(DsaMsg4{msg4.sig, msg4.timestamp}));

    try {
      device.complete(msg4, ea_identity.verify_key);
    } catch (const Error&) {
      record(outcome.transcript, "device", "abort",
             json{{"reason", "ea signature invalid"}});
      outcome.device_aborted = true;
      return outcome;
    }
    outcome.accepted = true;
    return outcome;
  }

  record(outcome.transcript, "device", "abort",
         json{{"reason", "restarts exhausted"}});
  outcome.device_aborted = true;
  return outcome;
}

}  // namespace eakg
