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

#ifndef EAKG_TRANSCRIPT_HPP_
#define EAKG_TRANSCRIPT_HPP_

#include <string_view>

#include "group.hpp"

namespace eakg {

/// Challenge bit length: min(256, bitlen(Q) - 2), floor 1, so that raw
/// challenges always embed in Z_Q.
unsigned challenge_bits(const GroupParams& params);

/// Byte width of the challenge field on the wire.
size_t challenge_width(const GroupParams& params);

/// Fiat-Shamir transcript. The serialization is injective:
///   tag || 0x00 || params_hash || (len4(item) || item)*
/// with elements at P width and scalars/integers at Q width.
class Transcript {
 public:
  Transcript(std::string_view domain_tag, const GroupParams& params);

  void append_element(const GroupElement& e);
  void append_scalar(const Scalar& s);
  void append_int(const mpz_class& v);  // values in [0, Q)
  void append_bytes(std::span<const uint8_t> data);

  /// First challenge_bits(params) bits of SHA-256 over the serialization.
  mpz_class challenge() const;

  const Bytes& serialized() const { return buf_; }

 private:
  const GroupParams& params_;
  Bytes buf_;
};

}  // namespace eakg

#endif  // EAKG_TRANSCRIPT_HPP_
