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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "pedersen.hpp"
#include "testutil.hpp"

using namespace eakg;
using namespace eakg::testutil;

TEST_CASE("commit matches direct modular arithmetic") {
  GroupParams tiny = tiny_group();
  // 4^3 * 16^5 mod 47 = 8
  CHECK(commit(tiny, Scalar(3), Scalar(5)).element.v == 8);
  CHECK(commit(tiny, Scalar(0), Scalar(0)).element == identity_element());
}

TEST_CASE("commitments stay in the subgroup") {
  GroupParams tiny = tiny_group();
  SeededRng rng(1);
  for (int i = 0; i < 100; i++) {
    Commitment c =
        commit(tiny, random_scalar(tiny, rng), random_scalar(tiny, rng));
    CHECK(is_member(tiny, c.element.v));
  }
}

TEST_CASE("homomorphism: combine equals commit of summed openings") {
  GroupParams tiny = tiny_group();

  Commitment lhs =
      combine(tiny, commit(tiny, Scalar(3), Scalar(5)),
              commit(tiny, Scalar(4), Scalar(6)));
  CHECK(lhs == commit(tiny, Scalar(7), Scalar(11)));
  Commitment c = commit(tiny, Scalar(9), Scalar(2));
  CHECK(combine(tiny, c, commit(tiny, Scalar(0), Scalar(0))) == c);

  // randomized re-commit oracle
  SeededRng rng(2);
  for (int i = 0; i < 1000; i++) {
    Scalar x1 = random_scalar(tiny, rng), r1 = random_scalar(tiny, rng);
    Scalar x2 = random_scalar(tiny, rng), r2 = random_scalar(tiny, rng);
    Commitment combined =
        combine(tiny, commit(tiny, x1, r1), commit(tiny, x2, r2));
    Commitment expected = commit(tiny, scalar_add(tiny, x1, x2),
                                 scalar_add(tiny, r1, r2));
    CHECK(combined == expected);
  }
}

TEST_CASE("combine rejects non-members") {
  GroupParams tiny = tiny_group();
  Commitment good = commit(tiny, Scalar(1), Scalar(1));
  Commitment bad{GroupElement(46)};
  CHECK_THROWS_WITH(combine(tiny, good, bad), "not a group element");
}

TEST_CASE("shift_by_public adds to the committed value only") {
  GroupParams tiny = tiny_group();

  CHECK(shift_by_public(tiny, commit(tiny, Scalar(3), Scalar(5)), Scalar(4)) ==
        commit(tiny, Scalar(7), Scalar(5)));
  Commitment c = commit(tiny, Scalar(13), Scalar(17));
  CHECK(shift_by_public(tiny, c, Scalar(0)) == c);

  SeededRng rng(3);
  for (int i = 0; i < 1000; i++) {
    Scalar x = random_scalar(tiny, rng), r = random_scalar(tiny, rng);
    Scalar d = random_scalar(tiny, rng);
    CHECK(shift_by_public(tiny, commit(tiny, x, r), d) ==
          commit(tiny, scalar_add(tiny, x, d), r));
  }
}

TEST_CASE("verify_opening") {
  GroupParams tiny = tiny_group();
  CHECK(verify_opening(tiny, commit(tiny, Scalar(3), Scalar(5)), Scalar(3),
                       Scalar(5)));
  CHECK_FALSE(verify_opening(tiny, commit(tiny, Scalar(3), Scalar(5)),
                             Scalar(3), Scalar(6)));
  CHECK(verify_opening(tiny, Commitment{GroupElement(8)}, Scalar(3),
                       Scalar(5)));
}

TEST_CASE("perfect hiding: commitments to a fixed value are uniform") {
  GroupParams tiny = tiny_group();
  SeededRng rng(4);

  // enumerate the subgroup to index the histogram
  std::map<unsigned long, size_t> order_index;
  GroupElement acc = identity_element();
  for (unsigned long i = 0; i < 23; i++) {
    order_index[acc.v.get_ui()] = i;
    acc = element_mul(tiny, acc, tiny.g);
  }
  CHECK(order_index.size() == 23);

  const Scalar fixed_x(11);
  std::vector<uint64_t> counts(23, 0);
  for (int i = 0; i < 23000; i++) {
    Commitment c = commit(tiny, fixed_x, random_scalar(tiny, rng));
    counts[order_index.at(c.element.v.get_ui())]++;
  }
  CHECK(chi_square_uniform(counts) < kChi2_999_df22);
}
