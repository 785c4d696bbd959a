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

#ifndef EAKG_RNG_HPP_
#define EAKG_RNG_HPP_

#include <cstdint>
#include <memory>

#include "bytes.hpp"

namespace eakg {

/// A source of bytes. Implementations may be cryptographically strong
/// (SystemRng) or deliberately weak; the protocols must run either way.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  virtual void fill(uint8_t* out, size_t len) = 0;

  Bytes take(size_t len) {
    Bytes out(len);
    fill(out.data(), len);
    return out;
  }
};

/// OS-backed CSPRNG.
class SystemRng : public ByteSource {
 public:
  void fill(uint8_t* out, size_t len) override;
};

/// Seed-expanded deterministic source (SHA-256 counter stream).
/// Handy for reproducible tests and as a hedged-nonce expander.
class SeededRng : public ByteSource {
 public:
  explicit SeededRng(std::span<const uint8_t> seed);
  explicit SeededRng(uint64_t seed);
  void fill(uint8_t* out, size_t len) override;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Uniform integer in [0, 2^bits) from the source.
mpz_class random_bits(ByteSource& src, unsigned bits);

/// Uniform integer in [2^k, 2^{k+1}) from the source.
mpz_class random_in_band(ByteSource& src, unsigned k);

/// Rejection-sampled uniform integer in [0, bound). The draw is masked to
/// bitlen(bound) bits before the comparison so out-of-range draws are
/// discarded rather than reduced.
mpz_class random_below(ByteSource& src, const mpz_class& bound);

}  // namespace eakg

#endif  // EAKG_RNG_HPP_
