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

#include <set>

#include "prime.hpp"
#include "testutil.hpp"

using namespace eakg;
using namespace eakg::testutil;

namespace {
Bytes seed_bytes(const std::string& s) {
  return Bytes(s.begin(), s.end());
}
}  // namespace

TEST_CASE("deterministic miller-rabin agrees with trial division") {
  for (unsigned long n = 0; n < 4000; n++)
    CHECK(is_prime(n) == trial_division_is_prime(n));
}

TEST_CASE("group params satisfy invariants and are deterministic") {
  GroupParams a = generate_group_params(64, seed_bytes("params-seed"));
  GroupParams b = generate_group_params(64, seed_bytes("params-seed"));

  CHECK(a.q_bits() == 64);
  CHECK(is_prime(a.q));
  CHECK(is_prime(a.p));
  CHECK((a.p - 1) % a.q == 0);
  CHECK(a.g.v != 1);
  CHECK(a.h.v != 1);
  CHECK(is_member(a, a.g.v));
  CHECK(is_member(a, a.h.v));
  CHECK(a.g != a.h);

  // byte-identical re-derivation
  CHECK(a.p == b.p);
  CHECK(a.q == b.q);
  CHECK(a.g == b.g);
  CHECK(a.h == b.h);
  CHECK(a.params_hash == b.params_hash);
  CHECK(params_to_json(a) == params_to_json(b));
}

TEST_CASE("5-bit group orders come from the 5-bit primes") {
  // brute-force oracle: the only 5-bit primes
  std::set<unsigned long> five_bit_primes;
  for (unsigned long n = 16; n < 32; n++)
    if (trial_division_is_prime(n)) five_bit_primes.insert(n);
  CHECK(five_bit_primes == std::set<unsigned long>{17, 19, 23, 29, 31});

  for (int i = 0; i < 8; i++) {
    GroupParams p = generate_group_params(5, seed_bytes("s" + std::to_string(i)));
    CHECK(five_bit_primes.count(p.q.get_ui()) == 1);
    // verify Q | P-1 by brute division
    CHECK(mpz_class(p.p - 1) % p.q == 0);
  }
}

TEST_CASE("generator derivation is deterministic and order-Q") {
  auto [g1, h1] = derive_generators(47, 23, seed_bytes("gen"));
  auto [g2, h2] = derive_generators(47, 23, seed_bytes("gen"));
  CHECK(g1 == g2);
  CHECK(h1 == h2);

  GroupParams tiny = tiny_group();
  for (const GroupElement& e : {g1, h1}) {
    CHECK(e.v != 1);
    CHECK(is_member(tiny, e.v));
  }
}

TEST_CASE("distinct seeds give distinct generator pairs with high probability") {
  // exhaustive check over the 22 order-23 elements of Z_47^*
  std::set<unsigned long> order23;
  for (unsigned long v = 2; v < 47; v++) {
    unsigned long acc = 1;
    for (int i = 0; i < 23; i++) acc = acc * v % 47;
    if (acc == 1) order23.insert(v);
  }
  CHECK(order23.size() == 22);

  auto [ga, ha] = derive_generators(47, 23, seed_bytes("seed-a"));
  auto [gb, hb] = derive_generators(47, 23, seed_bytes("seed-b"));
  CHECK(order23.count(ga.v.get_ui()) == 1);
  CHECK(order23.count(gb.v.get_ui()) == 1);
  CHECK((ga != gb || ha != hb));
}

TEST_CASE("element ops match direct modular arithmetic") {
  GroupParams tiny = tiny_group();

  CHECK(element_pow(tiny, tiny.g, Scalar(0)) == identity_element());
  CHECK(element_pow(tiny, tiny.g, Scalar(7)).v == 28);  // 4^7 mod 47
  CHECK(element_mul(tiny, GroupElement(4), GroupElement(16)).v == 17);

  // 46 has order 2, so it is not in the order-23 subgroup
  CHECK_FALSE(is_member(tiny, 46));
  CHECK(is_member(tiny, 1));
  CHECK_FALSE(is_member(tiny, 0));
  CHECK_FALSE(is_member(tiny, 47));

  CHECK_THROWS_WITH(element_mul(tiny, GroupElement(46), GroupElement(4)),
                    "not a group element");
  CHECK_THROWS_WITH(element_pow(tiny, GroupElement(46), Scalar(2)),
                    "not a group element");
}

TEST_CASE("group laws hold on randomized triples") {
  GroupParams tiny = tiny_group();
  SeededRng rng(7);
  for (int i = 0; i < 200; i++) {
    GroupElement a = element_pow(tiny, tiny.g, random_scalar(tiny, rng));
    GroupElement b = element_pow(tiny, tiny.h, random_scalar(tiny, rng));
    GroupElement c = element_pow(tiny, tiny.g, random_scalar(tiny, rng));
    CHECK(element_mul(tiny, element_mul(tiny, a, b), c) ==
          element_mul(tiny, a, element_mul(tiny, b, c)));

    Scalar s = random_scalar(tiny, rng);
    Scalar t = random_scalar(tiny, rng);
    GroupElement lhs = element_pow(tiny, a, scalar_add(tiny, s, t));
    GroupElement rhs =
        element_mul(tiny, element_pow(tiny, a, s), element_pow(tiny, a, t));
    CHECK(lhs == rhs);

    CHECK(element_mul(tiny, a, element_inverse(tiny, a)) ==
          identity_element());
  }
}

TEST_CASE("random_scalar is rejection-sampled uniform") {
  GroupParams tiny = tiny_group();

  SUBCASE("uniform source: counts within 5 sigma") {
    SeededRng rng(99);
    std::vector<uint64_t> counts(23, 0);
    const int draws = 23000;
    for (int i = 0; i < draws; i++)
      counts[random_scalar(tiny, rng).v.get_ui()]++;
    // binomial: mean 1000, sigma = sqrt(23000 * (1/23) * (22/23)) ~ 30.9
    for (uint64_t c : counts) {
      CHECK(c > 1000 - 5 * 31);
      CHECK(c < 1000 + 5 * 31);
    }
  }

  SUBCASE("constant-zero source is deterministic") {
    struct Zero : ByteSource {
      void fill(uint8_t* out, size_t len) override {
        std::fill(out, out + len, 0);
      }
    } zero;
    CHECK(random_scalar(tiny, zero).v == 0);
    CHECK(random_scalar(tiny, zero).v == 0);
  }

  SUBCASE("draws at or above Q are rejected, never reduced blindly") {
    SeededRng rng(123);
    for (int i = 0; i < 5000; i++) {
      Scalar s = random_scalar(tiny, rng);
      CHECK(s.v >= 0);
      CHECK(s.v < 23);
    }
  }
}

TEST_CASE("params file round trip and canonical hash") {
  GroupParams p = generate_group_params(64, seed_bytes("file-seed"), 0);
  std::string text = params_to_json(p);
  GroupParams q = params_from_json(text);
  CHECK(p.p == q.p);
  CHECK(p.q == q.q);
  CHECK(p.g == q.g);
  CHECK(p.h == q.h);
  CHECK(p.params_hash == q.params_hash);
  CHECK(params_to_json(q) == text);

  // hash binds the group values: flipping g is detected
  GroupParams forged = q;
  forged.g = element_pow(q, q.g, Scalar(2));
  CHECK(compute_params_hash(forged.p, forged.q, forged.g.v, forged.h.v) !=
        q.params_hash);
}

TEST_CASE("fixed-width hex encodings") {
  GroupParams tiny = tiny_group();
  CHECK(element_to_hex(tiny, tiny.g) == "04");
  CHECK(scalar_to_hex(tiny, Scalar(7)) == "07");
  CHECK(element_from_hex(tiny, "1c").v == 28);
  CHECK_THROWS(element_from_hex(tiny, "2e"));  // 46: not in the subgroup
  CHECK_THROWS(scalar_from_hex(tiny, "17"));   // 23 == Q: out of range
}
