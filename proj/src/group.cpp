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

#include "group.hpp"

#include "json.hpp"

#include "prime.hpp"

namespace eakg {

namespace {

using nlohmann::json;

mpz_class first_prime_from_stream(unsigned bits, HashStream& stream) {
  size_t nbytes = (bits + 7) / 8;
  unsigned extra = static_cast<unsigned>(nbytes * 8 - bits);
  while (true) {
    Bytes buf = stream.take(nbytes);
    buf[0] &= static_cast<uint8_t>(0xff >> extra);
    buf[0] |= static_cast<uint8_t>(0x80 >> extra);  // force exact bit length
    buf[nbytes - 1] |= 0x01;                        // odd
    mpz_class candidate = int_from_bytes(buf);
    if (bits >= 2 && candidate == 2) continue;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace

GroupParams generate_group_params(unsigned q_bits,
                                  std::span<const uint8_t> seed, unsigned k) {
  EAKG_ENFORCE(q_bits >= 2, "q_bits too small");

  HashStream q_stream(seed, "gen-q");
  mpz_class q = first_prime_from_stream(q_bits, q_stream);

  // P = 2*Q*f + 1 for the smallest f >= 1 making P prime.
  mpz_class p;
  for (mpz_class f = 1;; f += 1) {
    p = 2 * q * f + 1;
    if (is_prime(p)) break;
  }

  auto [g, h] = derive_generators(p, q, seed);

  GroupParams params;
  params.p = p;
  params.q = q;
  params.g = g;
  params.h = h;
  params.seed.assign(seed.begin(), seed.end());
  params.k = k;
  params.params_hash = compute_params_hash(p, q, g.v, h.v);
  return params;
}

std::pair<GroupElement, GroupElement> derive_generators(
    const mpz_class& p, const mpz_class& q, std::span<const uint8_t> seed) {
  EAKG_ENFORCE(q > 1 && p > 2, "bad group moduli");
  mpz_class rem = (p - 1) % q;
  EAKG_ENFORCE(rem == 0, "Q must divide P-1");
  mpz_class cofactor = (p - 1) / q;

  auto derive_one = [&](std::string_view tag) {
    HashStream stream(seed, tag);
    size_t nbytes = (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8 + 8;
    while (true) {
      mpz_class candidate = int_from_bytes(stream.take(nbytes)) % p;
      if (candidate <= 1) continue;
      mpz_class e;
      mpz_powm(e.get_mpz_t(), candidate.get_mpz_t(), cofactor.get_mpz_t(),
               p.get_mpz_t());
      if (e != 1) return GroupElement(e);
    }
  };

  GroupElement g = derive_one("gen-g");
  GroupElement h = derive_one("gen-h");
  return {g, h};
}

Digest compute_params_hash(const mpz_class& p, const mpz_class& q,
                           const mpz_class& g, const mpz_class& h) {
  Bytes buf;
  const std::string_view magic = "EAKG1-PARAMS";
  buf.insert(buf.end(), magic.begin(), magic.end());
  for (const mpz_class* v : {&p, &q, &g, &h}) {
    Bytes b = int_to_bytes(*v);
    append_framed(buf, b);
  }
  return sha256(buf);
}

GroupParams params_from_values(const mpz_class& p, const mpz_class& q,
                               const mpz_class& g, const mpz_class& h,
                               Bytes seed, unsigned k) {
  EAKG_ENFORCE(is_prime(q), "Q is not prime");
  EAKG_ENFORCE(is_prime(p), "P is not prime");
  EAKG_ENFORCE((p - 1) % q == 0, "Q does not divide P-1");

  GroupParams params;
  params.p = p;
  params.q = q;
  params.g = GroupElement(g);
  params.h = GroupElement(h);
  params.seed = std::move(seed);
  params.k = k;
  params.params_hash = compute_params_hash(p, q, g, h);

  EAKG_ENFORCE(g != 1 && is_member(params, g), "g is not an order-Q element");
  EAKG_ENFORCE(h != 1 && is_member(params, h), "h is not an order-Q element");
  return params;
}

bool is_member(const GroupParams& params, const mpz_class& v) {
  if (v < 1 || v >= params.p) return false;
  mpz_class e;
  mpz_powm(e.get_mpz_t(), v.get_mpz_t(), params.q.get_mpz_t(),
           params.p.get_mpz_t());
  return e == 1;
}

GroupElement identity_element() { return GroupElement(1); }

GroupElement element_mul(const GroupParams& params, const GroupElement& a,
                         const GroupElement& b) {
  EAKG_ENFORCE(is_member(params, a.v), "not a group element");
  EAKG_ENFORCE(is_member(params, b.v), "not a group element");
  return GroupElement(a.v * b.v % params.p);
}

GroupElement element_pow(const GroupParams& params, const GroupElement& base,
                         const Scalar& exp) {
  EAKG_ENFORCE(is_member(params, base.v), "not a group element");
  EAKG_ENFORCE(exp.v >= 0 && exp.v < params.q, "exponent out of range");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.v.get_mpz_t(), exp.v.get_mpz_t(),
           params.p.get_mpz_t());
  return GroupElement(r);
}

GroupElement element_inverse(const GroupParams& params,
                             const GroupElement& a) {
  EAKG_ENFORCE(is_member(params, a.v), "not a group element");
  mpz_class r;
  int ok = mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), params.p.get_mpz_t());
  EAKG_ENFORCE(ok != 0, "element not invertible");
  return GroupElement(r);
}

Scalar scalar_from_int(const GroupParams& params, const mpz_class& v) {
  mpz_class r = v % params.q;
  if (r < 0) r += params.q;
  return Scalar(r);
}

Scalar scalar_add(const GroupParams& params, const Scalar& a,
                  const Scalar& b) {
  return Scalar((a.v + b.v) % params.q);
}

Scalar scalar_sub(const GroupParams& params, const Scalar& a,
                  const Scalar& b) {
  mpz_class r = (a.v - b.v) % params.q;
  if (r < 0) r += params.q;
  return Scalar(r);
}

Scalar scalar_mul(const GroupParams& params, const Scalar& a,
                  const Scalar& b) {
  return Scalar(a.v * b.v % params.q);
}

Scalar scalar_neg(const GroupParams& params, const Scalar& a) {
  if (a.v == 0) return a;
  return Scalar(params.q - a.v);
}

Scalar scalar_invert(const GroupParams& params, const Scalar& a) {
  mpz_class r;
  int ok = mpz_invert(r.get_mpz_t(), a.v.get_mpz_t(), params.q.get_mpz_t());
  EAKG_ENFORCE(ok != 0, "scalar not invertible");
  return Scalar(r);
}

Scalar random_scalar(const GroupParams& params, ByteSource& rng) {
  return Scalar(random_below(rng, params.q));
}

std::string element_to_hex(const GroupParams& params, const GroupElement& e) {
  return int_to_hex(e.v, params.p_width());
}

GroupElement element_from_hex(const GroupParams& params,
                              std::string_view hex) {
  mpz_class v = int_from_hex(hex);
  EAKG_ENFORCE(is_member(params, v), "not a group element");
  return GroupElement(v);
}

std::string scalar_to_hex(const GroupParams& params, const Scalar& s) {
  return int_to_hex(s.v, params.q_width());
}

Scalar scalar_from_hex(const GroupParams& params, std::string_view hex) {
  mpz_class v = int_from_hex(hex);
  EAKG_ENFORCE(v >= 0 && v < params.q, "scalar out of range");
  return Scalar(v);
}

std::string params_to_json(const GroupParams& params) {
  json j;
  j["version"] = 1;
  j["kind"] = "schnorr";
  j["k"] = params.k;
  j["p"] = int_to_hex(params.p, params.p_width());
  j["q"] = int_to_hex(params.q, params.q_width());
  j["g"] = element_to_hex(params, params.g);
  j["h"] = element_to_hex(params, params.h);
  j["seed"] = hex_encode(params.seed);
  return j.dump() + "\n";  // nlohmann emits keys sorted; stable output
}

GroupParams params_from_json(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, false);
  EAKG_ENFORCE(!j.is_discarded() && j.is_object(), "malformed params file");
  EAKG_ENFORCE(j.value("version", 0) == 1, "unsupported params version");
  EAKG_ENFORCE(j.value("kind", "") == "schnorr", "unsupported params kind");
  for (const char* field : {"p", "q", "g", "h", "seed"})
    EAKG_ENFORCE(j.contains(field) && j[field].is_string(),
                 "missing params field");
  return params_from_values(
      int_from_hex(j["p"].get<std::string>()),
      int_from_hex(j["q"].get<std::string>()),
      int_from_hex(j["g"].get<std::string>()),
      int_from_hex(j["h"].get<std::string>()),
      hex_decode(j["seed"].get<std::string>()), j.value("k", 0u));
}

}  // namespace eakg
