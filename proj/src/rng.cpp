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

#include "rng.hpp"

#include <sodium.h>

#include "hash.hpp"

namespace eakg {

void SystemRng::fill(uint8_t* out, size_t len) { randombytes_buf(out, len); }

struct SeededRng::Impl {
  HashStream stream;
  Impl(std::span<const uint8_t> seed) : stream(seed, "seeded-rng") {}
};

SeededRng::SeededRng(std::span<const uint8_t> seed)
    : impl_(std::make_shared<Impl>(seed)) {}

SeededRng::SeededRng(uint64_t seed) {
  Bytes s;
  append_u64(s, seed);
  impl_ = std::make_shared<Impl>(s);
}

void SeededRng::fill(uint8_t* out, size_t len) {
  impl_->stream.fill(out, len);
}

mpz_class random_bits(ByteSource& src, unsigned bits) {
  if (bits == 0) return 0;
  size_t nbytes = (bits + 7) / 8;
  Bytes buf = src.take(nbytes);
  unsigned extra = static_cast<unsigned>(nbytes * 8 - bits);
  buf[0] &= static_cast<uint8_t>(0xff >> extra);
  return int_from_bytes(buf);
}

mpz_class random_in_band(ByteSource& src, unsigned k) {
  mpz_class top = 1;
  top <<= k;
  return top + random_bits(src, k);
}

mpz_class random_below(ByteSource& src, const mpz_class& bound) {
  EAKG_ENFORCE(bound > 0, "sampling bound must be positive");
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  // A uniform source rejects with probability < 1/2 per draw. Degenerate
  // sources (all-ones, etc.) could reject forever, so after a cutoff the
  // draw is reduced instead; the protocols must complete on any source.
  for (int attempts = 0; attempts < 256; attempts++) {
    mpz_class v = random_bits(src, bits);
    if (v < bound) return v;
  }
  return random_bits(src, bits) % bound;
}

}  // namespace eakg
