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

#ifndef EAKG_BYTES_HPP_
#define EAKG_BYTES_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eakg {

using Bytes = std::vector<uint8_t>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EAKG_ENFORCE(cond, msg)      \
  do {                               \
    if (!(cond)) throw ::eakg::Error(msg); \
  } while (0)

std::string hex_encode(std::span<const uint8_t> data);
Bytes hex_decode(std::string_view hex);  // throws Error on odd length / bad digit

// Big-endian fixed-width integer serialization. `width` of 0 means the
// minimal whole-byte width of the value (at least one byte).
Bytes int_to_bytes(const mpz_class& v, size_t width = 0);
mpz_class int_from_bytes(std::span<const uint8_t> data);

std::string int_to_hex(const mpz_class& v, size_t width = 0);
mpz_class int_from_hex(std::string_view hex);

// Appends a 4-byte big-endian length followed by the item itself.
void append_framed(Bytes& out, std::span<const uint8_t> item);
void append_u32(Bytes& out, uint32_t v);
void append_u64(Bytes& out, uint64_t v);

std::string base64_encode(std::span<const uint8_t> data);
Bytes base64_decode(std::string_view text);

inline std::span<const uint8_t> as_span(const std::string& s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}
inline std::span<const uint8_t> as_span(std::string_view s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

}  // namespace eakg

#endif  // EAKG_BYTES_HPP_
