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

#include "bytes.hpp"

#include <sodium.h>

namespace eakg {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string hex_encode(std::span<const uint8_t> data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0x0f]);
  }
  return out;
}

Bytes hex_decode(std::string_view hex) {
  EAKG_ENFORCE(hex.size() % 2 == 0, "hex string has odd length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); i++) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    EAKG_ENFORCE(hi >= 0 && lo >= 0, "invalid hex digit");
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

Bytes int_to_bytes(const mpz_class& v, size_t width) {
  EAKG_ENFORCE(v >= 0, "cannot serialize negative integer");
  size_t need = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  if (v == 0) need = 1;
  if (width == 0) width = need;
  EAKG_ENFORCE(need <= width, "integer wider than requested encoding");
  Bytes out(width, 0);
  size_t count = 0;
  mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v.get_mpz_t());
  return out;
}

mpz_class int_from_bytes(std::span<const uint8_t> data) {
  mpz_class v;
  if (!data.empty())
    mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

std::string int_to_hex(const mpz_class& v, size_t width) {
  return hex_encode(int_to_bytes(v, width));
}

mpz_class int_from_hex(std::string_view hex) {
  Bytes b = hex_decode(hex);
  return int_from_bytes(b);
}

void append_u32(Bytes& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void append_u64(Bytes& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<uint8_t>(v >> shift));
}

void append_framed(Bytes& out, std::span<const uint8_t> item) {
  EAKG_ENFORCE(item.size() <= UINT32_MAX, "item too large to frame");
  append_u32(out, static_cast<uint32_t>(item.size()));
  out.insert(out.end(), item.begin(), item.end());
}

std::string base64_encode(std::span<const uint8_t> data) {
  std::string out(sodium_base64_encoded_len(data.size(),
                                            sodium_base64_VARIANT_ORIGINAL),
                  '\0');
  sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                    sodium_base64_VARIANT_ORIGINAL);
  out.resize(out.find('\0') == std::string::npos ? out.size()
                                                 : out.find('\0'));
  return out;
}

Bytes base64_decode(std::string_view text) {
  Bytes out(text.size());
  size_t len = 0;
  int rc = sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                             " \t\r\n", &len, nullptr,
                             sodium_base64_VARIANT_ORIGINAL);
  EAKG_ENFORCE(rc == 0, "invalid base64 input");
  out.resize(len);
  return out;
}

}  // namespace eakg
