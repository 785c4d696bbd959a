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

#ifndef EAKG_PEDERSEN_HPP_
#define EAKG_PEDERSEN_HPP_

#include "group.hpp"

namespace eakg {

/// Pedersen commitment C = g^x h^r. Perfectly hiding, computationally
/// binding, additively homomorphic. Carries no opening data; openings
/// live in protocol state and never go on the wire.
struct Commitment {
  GroupElement element;

  bool operator==(const Commitment&) const = default;
};

/// C = g^x * h^r (mod P).
Commitment commit(const GroupParams& params, const Scalar& x, const Scalar& r);

/// Product of commitments: commits to x1+x2 under randomness r1+r2 (mod Q).
Commitment combine(const GroupParams& params, const Commitment& c1,
                   const Commitment& c2);

/// C * g^delta: commits to x+delta with unchanged randomness.
Commitment shift_by_public(const GroupParams& params, const Commitment& c,
                           const Scalar& delta);

/// true iff c = g^x h^r.
bool verify_opening(const GroupParams& params, const Commitment& c,
                    const Scalar& x, const Scalar& r);

std::string commitment_to_hex(const GroupParams& params, const Commitment& c);
Commitment commitment_from_hex(const GroupParams& params,
                               std::string_view hex);

}  // namespace eakg

#endif  // EAKG_PEDERSEN_HPP_
