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

#ifndef EAKG_HASH_HPP_
#define EAKG_HASH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "bytes.hpp"

namespace eakg {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);

/// Deterministic byte stream: block i is SHA-256(seed || tag || be32(i)).
/// Used for generator derivation, Miller-Rabin bases and hedged nonces.
class HashStream {
 public:
  HashStream(std::span<const uint8_t> seed, std::string_view tag);

  void fill(uint8_t* out, size_t len);
  Bytes take(size_t len);

 private:
  Bytes prefix_;  // seed || tag
  uint32_t counter_ = 0;
  Digest block_{};
  size_t offset_ = 32;  // forces a refill on first use
};

}  // namespace eakg

#endif  // EAKG_HASH_HPP_
