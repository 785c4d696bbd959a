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

#include "pedersen.hpp"

namespace eakg {

Commitment commit(const GroupParams& params, const Scalar& x,
                  const Scalar& r) {
  GroupElement gx = element_pow(params, params.g, x);
  GroupElement hr = element_pow(params, params.h, r);
  return Commitment{element_mul(params, gx, hr)};
}

Commitment combine(const GroupParams& params, const Commitment& c1,
                   const Commitment& c2) {
  return Commitment{element_mul(params, c1.element, c2.element)};
}

Commitment shift_by_public(const GroupParams& params, const Commitment& c,
                           const Scalar& delta) {
  GroupElement gd = element_pow(params, params.g, delta);
  return Commitment{element_mul(params, c.element, gd)};
}

bool verify_opening(const GroupParams& params, const Commitment& c,
                    const Scalar& x, const Scalar& r) {
  if (!is_member(params, c.element.v)) return false;
  if (x.v < 0 || x.v >= params.q || r.v < 0 || r.v >= params.q) return false;
  return commit(params, x, r) == c;
}

std::string commitment_to_hex(const GroupParams& params, const Commitment& c) {
  return element_to_hex(params, c.element);
}

Commitment commitment_from_hex(const GroupParams& params,
                               std::string_view hex) {
  return Commitment{element_from_hex(params, hex)};
}

}  // namespace eakg
