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

#include "hash.hpp"

#include <sodium.h>

#include <cstring>

namespace eakg {

Digest sha256(std::span<const uint8_t> data) {
  Digest out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

HashStream::HashStream(std::span<const uint8_t> seed, std::string_view tag) {
  prefix_.assign(seed.begin(), seed.end());
  prefix_.insert(prefix_.end(), tag.begin(), tag.end());
}

void HashStream::fill(uint8_t* out, size_t len) {
  while (len > 0) {
    if (offset_ == 32) {
      Bytes block_input = prefix_;
      append_u32(block_input, counter_++);
      block_ = sha256(block_input);
      offset_ = 0;
    }
    size_t take_now = std::min(len, size_t{32} - offset_);
    std::memcpy(out, block_.data() + offset_, take_now);
    offset_ += take_now;
    out += take_now;
    len -= take_now;
  }
}

Bytes HashStream::take(size_t len) {
  Bytes out(len);
  fill(out.data(), len);
  return out;
}

}  // namespace eakg
