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

#include <cmath>
#include <deque>

#include "prime.hpp"
#include "rsa_protocol.hpp"
#include "testutil.hpp"

using namespace eakg;
using namespace eakg::testutil;

namespace {

// Byte source with a scripted prefix, zeros afterwards.
struct ScriptedRng : ByteSource {
  std::deque<uint8_t> script;
  explicit ScriptedRng(std::initializer_list<uint8_t> bytes)
      : script(bytes) {}
  void fill(uint8_t* out, size_t len) override {
    for (size_t i = 0; i < len; i++) {
      if (script.empty()) {
        out[i] = 0;
      } else {
        out[i] = script.front();
        script.pop_front();
      }
    }
  }
};

const GroupParams& params_k4() {
  static GroupParams p =
      generate_group_params(108, as_span(std::string_view("rsa-k4")), 4);
  return p;
}

const GroupParams& params_k16() {
  static GroupParams p =
      generate_group_params(132, as_span(std::string_view("rsa-k16")), 16);
  return p;
}

const GroupParams& params_k128() {
  static GroupParams p =
      generate_group_params(356, as_span(std::string_view("rsa-k128")), 128);
  return p;
}

// evaluate the bound formula independently of the library
mpz_class oracle_delta(unsigned k, double e, unsigned lambda) {
  double v = lambda * (k + 1.0) * std::log(2.0) * e / (e - 1.0);
  return mpz_class(std::ceil(v));
}

// Runs one full honest protocol; returns the attested bundle.
struct HonestRun {
  RsaKeyMaterial key;
  AttestedKey bundle;
  unsigned restarts = 0;
};

HonestRun honest_run(const GroupParams& params, const RsaConfig& config,
                     ByteSource& device_rng, ByteSource& ea_rng,
                     const EaIdentity& ea) {
  HonestRun out;
  for (;; out.restarts++) {
    REQUIRE(out.restarts < 10000);
    RsaDevice device(params, config, device_rng);
    RsaMsg1 msg1 = device.start();
    RsaEaSession session(params, config, ea_rng, msg1);
    auto finalized = device.finalize(session.response());
    if (std::holds_alternative<Restart>(finalized)) continue;
    auto verdict = ea_verify_and_sign(session, std::get<RsaMsg3>(finalized),
                                      ea, params, 1700000000);
    REQUIRE(std::holds_alternative<RsaMsg4>(verdict));
    out.bundle =
        device.complete(std::get<RsaMsg4>(verdict), ea.verify_key);
    out.key = device.key();
    return out;
  }
}

}  // namespace

TEST_CASE("delta_bound follows the formula") {
  CHECK(delta_bound(16, 3, 80) == oracle_delta(16, 3, 80));
  CHECK(delta_bound(16, 3, 80) == 1415);  // ceil(80 * ln(2^17) * 1.5)
  CHECK(delta_bound(1024, 3, 80) == oracle_delta(1024, 3, 80));
  CHECK(delta_bound(1024, 3, 80) == 85258);  // 1.5x the e->inf value

  // k=1024, e=65537 lands just under 2^16
  mpz_class d = delta_bound(1024, 65537, 80);
  CHECK(d == oracle_delta(1024, 65537, 80));
  CHECK(d == 56839);
  CHECK(d > mpz_class(1) << 15);
  CHECK(d < mpz_class(1) << 16);
}

TEST_CASE("find_delta matches the brute-force oracle") {
  SUBCASE("pinned examples") {
    auto d = find_delta(45, 100, 3);
    REQUIRE(d.has_value());
    CHECK(*d == 2);  // 45, 46 composite; 47 prime with gcd(46,3)=1

    d = find_delta(47, 100, 3);
    REQUIRE(d.has_value());
    CHECK(*d == 0);

    CHECK_FALSE(find_delta(24, 4, 3).has_value());  // 24..27 all composite
  }

  SUBCASE("exclusion skips the named prime") {
    mpz_class p47 = 47;
    auto d = find_delta(45, 100, 3, &p47);
    REQUIRE(d.has_value());
    CHECK(45 + *d == 53);  // 53 is the next prime with gcd(52,3)=1
  }

  SUBCASE("random sums against trial division") {
    SeededRng rng(17);
    for (int i = 0; i < 200; i++) {
      unsigned long sum = 2 + random_below(rng, 200000).get_ui();
      auto d = find_delta(sum, 4000, 5);
      unsigned long expect = oracle_next_qualifying_prime(sum, 5);
      REQUIRE(d.has_value());
      CHECK(sum + d->get_ui() == expect);
    }
  }
}

TEST_CASE("build_rsa_key") {
  RsaKeyMaterial key = build_rsa_key(47, 41, 3);
  CHECK(key.n == 1927);
  CHECK(key.d == 307);  // 3^{-1} mod lcm(46,40) = 3^{-1} mod 920

  // round trip m=5: (5^3)^307 mod 1927 = 5
  mpz_class c, m;
  mpz_powm(c.get_mpz_t(), mpz_class(5).get_mpz_t(), key.e.get_mpz_t(),
           key.n.get_mpz_t());
  mpz_powm(m.get_mpz_t(), c.get_mpz_t(), key.d.get_mpz_t(), key.n.get_mpz_t());
  CHECK(m == 5);

  // e divides p-1
  CHECK_THROWS_WITH(build_rsa_key(7, 11, 3), "gcd(p-1, e) != 1");
  CHECK_THROWS_WITH(build_rsa_key(47, 47, 3), "primes must be distinct");
}

TEST_CASE("device_start commits to in-band secrets") {
  const GroupParams& params = params_k16();
  RsaConfig config = RsaConfig::make(16, 3, 80, false, true);

  SUBCASE("honest rng") {
    SeededRng rng(1);
    RsaDevice device(params, config, rng);
    RsaMsg1 msg1 = device.start();
    CHECK(is_member(params, msg1.c_x.element.v));
    CHECK(is_member(params, msg1.c_y.element.v));
    CHECK(device.x().v >= 65536);
    CHECK(device.x().v < 131072);
    CHECK(verify_opening(params, msg1.c_x, device.x(), device.r_x()));
    CHECK(verify_opening(params, msg1.c_y, device.y(), device.r_y()));
  }

  SUBCASE("constant rng still produces a well-formed message") {
    struct Constant : ByteSource {
      void fill(uint8_t* out, size_t len) override {
        std::fill(out, out + len, 0);
      }
    } zero1, zero2;
    RsaDevice d1(params, config, zero1);
    RsaDevice d2(params, config, zero2);
    RsaMsg1 a = d1.start();
    RsaMsg1 b = d2.start();
    CHECK(a.c_x == b.c_x);
    CHECK(a.c_y == b.c_y);
    CHECK(is_member(params, a.c_x.element.v));
  }
}

TEST_CASE("ea_respond ranges and rejection") {
  const GroupParams& params = params_k4();
  RsaConfig config = RsaConfig::make(4, 3, 80, false, true);
  SeededRng device_rng(2);
  RsaDevice device(params, config, device_rng);
  RsaMsg1 msg1 = device.start();

  SUBCASE("x', y' land in [2^k, 2^{k+1})") {
    SeededRng ea_rng(3);
    for (int i = 0; i < 50; i++) {
      RsaEaSession session(params, config, ea_rng, msg1);
      RsaMsg2 msg2 = session.response();
      CHECK(msg2.x_prime >= 16);
      CHECK(msg2.x_prime < 32);
      CHECK(msg2.y_prime >= 16);
      CHECK(msg2.y_prime < 32);
    }
  }

  SUBCASE("non-member commitment is rejected") {
    RsaMsg1 bad = msg1;
    bad.c_x = Commitment{GroupElement(0)};
    SeededRng ea_rng(4);
    CHECK_THROWS_WITH(RsaEaSession(params, config, ea_rng, bad),
                      "bad commitment");
  }

  SUBCASE("x' is chi-square uniform over the band") {
    SeededRng ea_rng(5);
    std::vector<uint64_t> counts(16, 0);
    for (int i = 0; i < 10000; i++) {
      RsaEaSession session(params, config, ea_rng, msg1);
      counts[session.response().x_prime.get_ui() - 16]++;
    }
    CHECK(chi_square_uniform(counts) < kChi2_999_df15);
  }
}

TEST_CASE("device_finalize: pinned toy run") {
  const GroupParams& params = params_k4();
  RsaConfig config = RsaConfig::make(4, 3, 80, false, true);

  // script: x = 16+4 = 20, y = 16+2 = 18, randomness zeros
  ScriptedRng rng({0x04, 0x02});
  RsaDevice device(params, config, rng);
  device.start();

  auto finalized = device.finalize(RsaMsg2{25, 22});
  REQUIRE(std::holds_alternative<RsaMsg3>(finalized));
  const RsaMsg3& msg3 = std::get<RsaMsg3>(finalized);
  CHECK(msg3.delta_x == 2);  // 45 -> 47
  CHECK(msg3.delta_y == 1);  // 40 -> 41
  CHECK(msg3.n == 1927);
  CHECK(device.key().p == 47);
  CHECK(device.key().q == 41);
  CHECK(msg3.n >= 1024);  // [2^10, 2^12)
  CHECK(msg3.n < 4096);
}

TEST_CASE("device_finalize restarts") {
  const GroupParams& params = params_k4();
  RsaConfig config = RsaConfig::make(4, 3, 80, false, true);

  SUBCASE("authority randomness out of range") {
    SeededRng rng(6);
    RsaDevice device(params, config, rng);
    device.start();
    auto out = device.finalize(RsaMsg2{32, 20});  // 32 = 2^{k+1}
    CHECK(std::holds_alternative<Restart>(out));
    CHECK(device.phase() == RsaDevice::Phase::kAborted);
    CHECK_THROWS(device.key());  // restart leaves nothing behind
  }

  SUBCASE("zero-leak misses restart") {
    RsaConfig zl = RsaConfig::make(4, 3, 80, true, true);
    ScriptedRng rng({0x04, 0x02});  // x=20, y=18
    RsaDevice device(params, zl, rng);
    device.start();
    // x+x' = 45 is composite, so the zero-leak rule forces a restart
    auto out = device.finalize(RsaMsg2{25, 22});
    CHECK(std::holds_alternative<Restart>(out));
  }

  SUBCASE("out-of-phase calls are errors") {
    SeededRng rng(7);
    RsaDevice device(params, config, rng);
    CHECK_THROWS_WITH(device.finalize(RsaMsg2{20, 20}), "out-of-phase call");
    device.start();
    CHECK_THROWS_WITH(device.start(), "out-of-phase call");
  }
}

TEST_CASE("ea verification and signing") {
  const GroupParams& params = params_k16();
  RsaConfig config = RsaConfig::make(16, 3, 80, false, true);
  SeededRng device_rng(8), ea_rng(9), id_rng(10);
  EaIdentity ea = ea_keygen(id_rng);

  RsaDevice device(params, config, device_rng);
  RsaMsg1 msg1 = device.start();
  RsaEaSession session(params, config, ea_rng, msg1);
  auto finalized = device.finalize(session.response());
  REQUIRE(std::holds_alternative<RsaMsg3>(finalized));
  RsaMsg3 msg3 = std::get<RsaMsg3>(finalized);

  SUBCASE("honest message yields a verifying signature") {
    auto verdict = ea_verify_and_sign(session, msg3, ea, params, 42);
    REQUIRE(std::holds_alternative<RsaMsg4>(verdict));
    AttestedKey bundle =
        device.complete(std::get<RsaMsg4>(verdict), ea.verify_key);
    TrustStore store;
    store.add(ea);
    CHECK(verify_attested_key(store, bundle) == VerifyResult::ok);
  }

  SUBCASE("delta at the bound is rejected") {
    RsaMsg3 bad = msg3;
    bad.delta_x = config.delta;
    auto verdict = session.verify(bad);
    REQUIRE(std::holds_alternative<RsaRejection>(verdict));
    CHECK(std::get<RsaRejection>(verdict) == RsaRejection::delta_out_of_range);
  }

  SUBCASE("modulus out of range is rejected") {
    RsaMsg3 bad = msg3;
    bad.n = (mpz_class(1) << 34) - 1;
    auto verdict = session.verify(bad);
    REQUIRE(std::holds_alternative<RsaRejection>(verdict));
    CHECK(std::get<RsaRejection>(verdict) ==
          RsaRejection::modulus_out_of_range);
  }

  SUBCASE("invalid signature aborts completion without key output") {
    auto verdict = ea_verify_and_sign(session, msg3, ea, params, 42);
    RsaMsg4 msg4 = std::get<RsaMsg4>(verdict);

    RsaMsg4 wrong = msg4;
    wrong.timestamp++;  // signature no longer covers this payload
    CHECK_THROWS_WITH(device.complete(wrong, ea.verify_key),
                      "ea signature invalid");

    RsaMsg4 truncated = msg4;
    truncated.sig.resize(10);
    CHECK_THROWS_WITH(device.complete(truncated, ea.verify_key),
                      "ea signature invalid");

    // the honest signature still completes afterwards
    AttestedKey bundle = device.complete(msg4, ea.verify_key);
    CHECK(bundle.scheme == "rsa");
  }
}

TEST_CASE("honest completeness at k=16 and k=128") {
  SeededRng id_rng(11);
  EaIdentity ea = ea_keygen(id_rng);

  auto run_at = [&](const GroupParams& params, unsigned k,
                    const mpz_class& e) {
    RsaConfig config = RsaConfig::make(k, e, 80, false, true);
    SeededRng device_rng(12 + k), ea_rng(13 + k);
    HonestRun run = honest_run(params, config, device_rng, ea_rng, ea);

    // independent re-derivation of the key invariants
    CHECK(run.key.n == run.key.p * run.key.q);
    CHECK(run.key.p != run.key.q);
    CHECK(is_prime(run.key.p));
    CHECK(is_prime(run.key.q));
    mpz_class lo = mpz_class(1) << (k + 1), hi = mpz_class(1) << (k + 2);
    CHECK(run.key.p >= lo);
    CHECK(run.key.p < hi);
    CHECK(run.key.q >= lo);
    CHECK(run.key.q < hi);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(run.key.p - 1).get_mpz_t(),
            run.key.e.get_mpz_t());
    CHECK(g == 1);
    mpz_gcd(g.get_mpz_t(), mpz_class(run.key.q - 1).get_mpz_t(),
            run.key.e.get_mpz_t());
    CHECK(g == 1);
    mpz_class lcm, check;
    mpz_lcm(lcm.get_mpz_t(), mpz_class(run.key.p - 1).get_mpz_t(),
            mpz_class(run.key.q - 1).get_mpz_t());
    check = run.key.e * run.key.d % lcm;
    CHECK(check == 1);
  };

  run_at(params_k16(), 16, 3);
  run_at(params_k128(), 128, 65537);
}

TEST_CASE("oracle agreement: protocol prime equals reference prime") {
  const GroupParams& params = params_k16();
  RsaConfig config = RsaConfig::make(16, 3, 80, false, true);
  SeededRng device_rng(20), pick_rng(21);

  for (int i = 0; i < 50; i++) {
    RsaDevice device(params, config, device_rng);
    device.start();
    RsaMsg2 msg2{random_in_band(pick_rng, 16), random_in_band(pick_rng, 16)};
    auto finalized = device.finalize(msg2);
    REQUIRE(std::holds_alternative<RsaMsg3>(finalized));

    unsigned long sum_x = mpz_class(device.x().v + msg2.x_prime).get_ui();
    unsigned long sum_y = mpz_class(device.y().v + msg2.y_prime).get_ui();
    unsigned long expect_p = oracle_next_qualifying_prime(sum_x, 3);
    unsigned long expect_q = oracle_next_qualifying_prime(sum_y, 3);
    if (expect_q == expect_p)  // the q search skips equality with p
      expect_q = oracle_next_qualifying_prime(expect_q + 1, 3);
    CHECK(device.key().p == expect_p);
    CHECK(device.key().q == expect_q);
  }
}

TEST_CASE("reference generators") {
  SUBCASE("pinned: x=20, p_min=25, e=3 gives 47") {
    ScriptedRng rng({0x04});  // x = 16 + 4 = 20
    CHECK(reference_prime_gen(4, 25, 3, rng) == 47);
  }

  SUBCASE("search terminates and n lands near the expected band") {
    SeededRng rng(23);
    for (int i = 0; i < 1000; i++) {
      mpz_class p_min = random_in_band(rng, 16);
      mpz_class q_min = random_in_band(rng, 16);
      mpz_class n = reference_rsa_keygen(16, p_min, q_min, 3, rng);
      // loose construction bound, recorded rather than asserted tightly
      CHECK(n >= mpz_class(1) << 34);
      CHECK(n < mpz_class(1) << 37);
    }
  }

  SUBCASE("local keygen produces working keys") {
    SeededRng rng(24);
    RsaKeyMaterial key = local_rsa_keygen(16, 65537, rng);
    mpz_class c, m;
    mpz_powm(c.get_mpz_t(), mpz_class(99).get_mpz_t(), key.e.get_mpz_t(),
             key.n.get_mpz_t());
    mpz_powm(m.get_mpz_t(), c.get_mpz_t(), key.d.get_mpz_t(),
             key.n.get_mpz_t());
    CHECK(m == 99);
  }
}

TEST_CASE("config validation") {
  RsaConfig config = RsaConfig::make(4, 3, 80, false, false);
  // 108-bit toy group needs the explicit insecure flag
  CHECK_THROWS_WITH(config.validate(params_k4()),
                    "toy group needs insecure_test");
  RsaConfig ok = RsaConfig::make(4, 3, 80, false, true);
  ok.validate(params_k4());

  // k too large for the group order
  RsaConfig big = RsaConfig::make(64, 3, 80, false, false);
  CHECK_THROWS_WITH(big.validate(params_k16()), "group order too small for k");

  CHECK_THROWS_WITH(RsaConfig::make(16, 4, 80, false, true)
                        .validate(params_k16()),
                    "e must be an odd prime");
}
