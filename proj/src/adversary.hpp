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

#ifndef EAKG_ADVERSARY_HPP_
#define EAKG_ADVERSARY_HPP_

#include <string>
#include <vector>

#include "ea_service.hpp"

namespace eakg {

/// Deliberately bad byte sources, emulating the classic failure modes.
///   constant: every byte equals the low byte of the seed
///   counter:  stream expanded from a 16-bit truncation of the seed
///             (process-id style seeding)
///   low-bits: only the low two bits of each byte vary, seeded from `seed`
class WeakRng : public ByteSource {
 public:
  enum class Mode { kConstant, kCounter, kLowBits };

  WeakRng(Mode mode, uint64_t seed);
  void fill(uint8_t* out, size_t len) override;

  static Mode mode_from_name(const std::string& name);

 private:
  Mode mode_;
  uint8_t constant_ = 0;
  SeededRng expanded_;
};

/// A scripted protocol run: who cheats, how, and what must happen.
struct Scenario {
  std::string name;
  std::string actor;     // "device" | "ea"
  std::string strategy;  // see run_scenario
  nlohmann::json params = nlohmann::json::object();  // strategy knobs
  std::string expected;  // "accept" | "reject:<code>" | "device_abort"
};

std::vector<Scenario> scenarios_from_json(std::string_view text);

struct Outcome {
  bool accepted = false;
  bool device_aborted = false;
  std::string rejection_code;  // set when the authority rejected
  nlohmann::json transcript = nlohmann::json::array();

  std::string label() const;
  bool matches(const std::string& expected) const { return label() == expected; }
};

/// Executes the RSA protocol with the scripted actor against an honest
/// counterparty, recording every wire message. Strategies:
///   device: "honest", "delta_at_bound", "delta_over_bound", "modulus_low",
///           "modulus_high", "three_prime_modulus", "tamper_commitment"
///   ea:     "xprime_out_of_range", "invalid_signature"
Outcome run_scenario(const Scenario& scenario, const GroupParams& params,
                     const RsaConfig& config, const EaIdentity& ea_identity,
                     ByteSource& rng);

}  // namespace eakg

#endif  // EAKG_ADVERSARY_HPP_
