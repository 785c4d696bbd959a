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

#include "transcript.hpp"

namespace eakg {

unsigned challenge_bits(const GroupParams& params) {
  unsigned qb = params.q_bits();
  unsigned l = qb > 3 ? qb - 2 : 1;
  return l > 256 ? 256 : l;
}

size_t challenge_width(const GroupParams& params) {
  return (challenge_bits(params) + 7) / 8;
}

Transcript::Transcript(std::string_view domain_tag, const GroupParams& params)
    : params_(params) {
  buf_.insert(buf_.end(), domain_tag.begin(), domain_tag.end());
  buf_.push_back(0x00);
  buf_.insert(buf_.end(), params.params_hash.begin(),
              params.params_hash.end());
}

void Transcript::append_element(const GroupElement& e) {
  append_framed(buf_, int_to_bytes(e.v, params_.p_width()));
}

void Transcript::append_scalar(const Scalar& s) {
  append_framed(buf_, int_to_bytes(s.v, params_.q_width()));
}

void Transcript::append_int(const mpz_class& v) {
  EAKG_ENFORCE(v >= 0 && v < params_.q, "transcript integer out of range");
  append_framed(buf_, int_to_bytes(v, params_.q_width()));
}

void Transcript::append_bytes(std::span<const uint8_t> data) {
  append_framed(buf_, data);
}

mpz_class Transcript::challenge() const {
  Digest d = sha256(buf_);
  unsigned l = challenge_bits(params_);
  size_t width = (l + 7) / 8;
  mpz_class c = int_from_bytes(std::span(d.data(), width));
  // keep only the first l bits
  c >>= static_cast<unsigned>(width * 8 - l);
  return c;
}

}  // namespace eakg
