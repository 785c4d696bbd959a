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

#include "ea_service.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace eakg {

using nlohmann::json;

namespace {

uint64_t system_clock_seconds() {
  return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(
                                   std::chrono::system_clock::now()
                                       .time_since_epoch())
                                   .count());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EAKG_ENFORCE(in.good(), "cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

json parse_json_object(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  EAKG_ENFORCE(!j.is_discarded() && j.is_object(), "malformed JSON body");
  return j;
}

std::string get_string(const json& j, const char* field) {
  EAKG_ENFORCE(j.contains(field) && j[field].is_string(),
               std::string("missing field: ") + field);
  return j[field].get<std::string>();
}

}  // namespace

std::string error_body(const std::string& code, const std::string& message) {
  json j;
  j["error"] = code;
  j["message"] = message;
  return j.dump();
}

// --------------------------------------------------------------------------
// Config and identity files
// --------------------------------------------------------------------------

std::string ea_identity_to_json(const EaIdentity& id) {
  json j;
  j["signing_key"] = hex_encode(id.signing_key);
  j["verification_key"] = hex_encode(id.verify_key);
  j["ea_id"] = hex_encode(id.ea_id);
  return j.dump() + "\n";
}

EaIdentity ea_identity_from_json(std::string_view text) {
  json j = parse_json_object(text);
  Bytes sk = hex_decode(get_string(j, "signing_key"));
  EaIdentity id = ea_identity_from_signing_key(sk);
  if (j.contains("verification_key"))
    EAKG_ENFORCE(hex_encode(id.verify_key) == j["verification_key"],
                 "verification key mismatch");
  return id;
}

EaConfig ea_config_from_json(std::string_view text) {
  json j = parse_json_object(text);
  EaConfig config;
  config.listen_host = j.value("listen_host", config.listen_host);
  config.listen_port = j.value("listen_port", config.listen_port);
  config.session_ttl_secs = j.value("session_ttl_secs", config.session_ttl_secs);
  config.max_sessions = j.value("max_sessions", config.max_sessions);
  config.insecure_test = j.value("insecure_test", false);
  EAKG_ENFORCE(config.session_ttl_secs > 0, "session TTL must be positive");

  for (const json& path : j.value("params_files", json::array())) {
    std::string file_text = read_file(path.get<std::string>());
    config.params_sets.push_back({params_from_json(file_text), file_text});
  }
  for (const json& inline_text : j.value("params_inline", json::array())) {
    std::string file_text = inline_text.get<std::string>();
    config.params_sets.push_back({params_from_json(file_text), file_text});
  }
  EAKG_ENFORCE(!config.params_sets.empty(), "no params configured");
  for (const HostedParams& hosted : config.params_sets)
    if (!config.insecure_test)
      EAKG_ENFORCE(hosted.params.q_bits() >= 128,
                   "toy params need insecure_test");

  if (j.contains("signing_key_file"))
    config.identity =
        ea_identity_from_json(read_file(j["signing_key_file"].get<std::string>()));
  else if (j.contains("signing_key_inline"))
    config.identity =
        ea_identity_from_json(j["signing_key_inline"].dump());
  else
    throw Error("no signing key configured");
  return config;
}

// --------------------------------------------------------------------------
// Wire helpers
// --------------------------------------------------------------------------

namespace wire {

json rsa_start_request(const GroupParams& params, const RsaConfig& config,
                       const RsaMsg1& msg1) {
  json j;
  j["params_hash"] = hex_encode(params.params_hash);
  j["k"] = config.k;
  j["e"] = int_to_hex(config.e);
  j["c_x"] = commitment_to_hex(params, msg1.c_x);
  j["c_y"] = commitment_to_hex(params, msg1.c_y);
  return j;
}

json rsa_msg2_to_json(const RsaMsg2& msg2, const std::string& session_id) {
  json j;
  j["session_id"] = session_id;
  j["x_prime"] = int_to_hex(msg2.x_prime);
  j["y_prime"] = int_to_hex(msg2.y_prime);
  return j;
}

RsaMsg2 rsa_msg2_from_json(const json& j) {
  RsaMsg2 msg2;
  msg2.x_prime = int_from_hex(get_string(j, "x_prime"));
  msg2.y_prime = int_from_hex(get_string(j, "y_prime"));
  return msg2;
}

json rsa_msg3_to_json(const GroupParams& params, const RsaMsg3& msg3) {
  json j;
  j["n"] = int_to_hex(msg3.n);
  j["delta_x"] = int_to_hex(msg3.delta_x);
  j["delta_y"] = int_to_hex(msg3.delta_y);
  j["proof"] = hex_encode(mul_proof_encode(params, msg3.proof));
  return j;
}

RsaMsg3 rsa_msg3_from_json(const GroupParams& params, const json& j) {
  RsaMsg3 msg3;
  msg3.n = int_from_hex(get_string(j, "n"));
  msg3.delta_x = int_from_hex(get_string(j, "delta_x"));
  msg3.delta_y = int_from_hex(get_string(j, "delta_y"));
  Bytes proof_bytes = hex_decode(get_string(j, "proof"));
  auto proof = mul_proof_decode(params, proof_bytes);
  EAKG_ENFORCE(proof.has_value(), "malformed proof");
  msg3.proof = *proof;
  return msg3;
}

json dsa_start_request(const GroupParams& params, const DsaMsg1& msg1) {
  json j;
  j["params_hash"] = hex_encode(params.params_hash);
  j["c_x"] = commitment_to_hex(params, msg1.c_x);
  return j;
}

json dsa_msg2_to_json(const GroupParams& params, const DsaMsg2& msg2,
                      const std::string& session_id) {
  json j;
  j["session_id"] = session_id;
  j["x_prime"] = scalar_to_hex(params, msg2.x_prime);
  return j;
}

DsaMsg2 dsa_msg2_from_json(const GroupParams& params, const json& j) {
  return DsaMsg2{scalar_from_hex(params, get_string(j, "x_prime"))};
}

json dsa_msg3_to_json(const GroupParams& params, const DsaMsg3& msg3) {
  json j;
  j["a_pub"] = element_to_hex(params, msg3.a_pub);
  j["proof"] = hex_encode(ped_proof_encode(params, msg3.proof));
  return j;
}

DsaMsg3 dsa_msg3_from_json(const GroupParams& params, const json& j) {
  DsaMsg3 msg3;
  msg3.a_pub = element_from_hex(params, get_string(j, "a_pub"));
  Bytes proof_bytes = hex_decode(get_string(j, "proof"));
  auto proof = ped_proof_decode(params, proof_bytes);
  EAKG_ENFORCE(proof.has_value(), "malformed proof");
  msg3.proof = *proof;
  return msg3;
}

json msg4_to_json(const DsaMsg4& msg4) {
  json j;
  j["sig"] = hex_encode(msg4.sig);
  j["timestamp"] = msg4.timestamp;
  return j;
}

DsaMsg4 msg4_from_json(const json& j) {
  DsaMsg4 msg4;
  msg4.sig = hex_decode(get_string(j, "sig"));
  EAKG_ENFORCE(j.contains("timestamp") && j["timestamp"].is_number(),
               "missing field: timestamp");
  msg4.timestamp = j["timestamp"].get<uint64_t>();
  return msg4;
}

RsaMsg4 rsa_msg4_from_json(const json& j) {
  DsaMsg4 m = msg4_from_json(j);
  return RsaMsg4{m.sig, m.timestamp};
}

json multi_start_request(const GroupParams& params, unsigned index,
                         const Commitment& c) {
  json j;
  j["params_hash"] = hex_encode(params.params_hash);
  j["authority_index"] = index;
  j["c"] = commitment_to_hex(params, c);
  return j;
}

json contribution_to_json(const GroupParams& params,
                          const MultiContribution& c,
                          const std::string& session_id,
                          bool include_openings) {
  json j;
  if (!session_id.empty()) j["session_id"] = session_id;
  j["authority_index"] = c.index;
  j["c_i"] = commitment_to_hex(params, c.c_i);
  j["sig_i"] = hex_encode(c.sig);
  j["verification_key"] = hex_encode(c.verify_key);
  j["ea_id"] = hex_encode(ea_fingerprint(c.verify_key));
  if (include_openings) {
    j["x_i"] = scalar_to_hex(params, c.x_i);
    j["r_i"] = scalar_to_hex(params, c.r_i);
  }
  return j;
}

MultiContribution contribution_from_json(const GroupParams& params,
                                         const json& j, bool expect_openings) {
  MultiContribution c;
  EAKG_ENFORCE(j.contains("authority_index") &&
                   j["authority_index"].is_number_unsigned(),
               "missing field: authority_index");
  c.index = j["authority_index"].get<unsigned>();
  c.c_i = commitment_from_hex(params, get_string(j, "c_i"));
  c.sig = hex_decode(get_string(j, "sig_i"));
  c.verify_key = hex_decode(get_string(j, "verification_key"));
  if (expect_openings) {
    c.x_i = scalar_from_hex(params, get_string(j, "x_i"));
    c.r_i = scalar_from_hex(params, get_string(j, "r_i"));
  }
  return c;
}

json multi_bundle_to_json(const GroupParams& params,
                          const MultiBundle& bundle) {
  json j;
  j["a_pub"] = element_to_hex(params, bundle.a_pub);
  j["c"] = commitment_to_hex(params, bundle.c);
  j["pok"] = hex_encode(sum_proof_encode(params, bundle.pok));
  json contribs = json::array();
  for (const MultiContribution& c : bundle.contributions)
    contribs.push_back(contribution_to_json(params, c, "", false));
  j["contributions"] = contribs;
  return j;
}

MultiBundle multi_bundle_from_json(const GroupParams& params, const json& j) {
  MultiBundle bundle;
  bundle.a_pub = element_from_hex(params, get_string(j, "a_pub"));
  bundle.c = commitment_from_hex(params, get_string(j, "c"));
  EAKG_ENFORCE(j.contains("contributions") && j["contributions"].is_array() &&
                   !j["contributions"].empty(),
               "missing field: contributions");
  for (const json& cj : j["contributions"])
    bundle.contributions.push_back(contribution_from_json(params, cj, false));
  Bytes pok_bytes = hex_decode(get_string(j, "pok"));
  auto pok =
      sum_proof_decode(params, pok_bytes, bundle.contributions.size());
  EAKG_ENFORCE(pok.has_value(), "malformed proof");
  bundle.pok = *pok;
  return bundle;
}

}  // namespace wire

// --------------------------------------------------------------------------
// Service
// --------------------------------------------------------------------------

EaService::EaService(EaConfig config)
    : config_(std::move(config)),
      clock_(system_clock_seconds),
      rng_(std::make_unique<SystemRng>()) {}

void EaService::log(const std::string& line) {
  if (log_) log_(line);
}

const HostedParams* EaService::find_params(const std::string& hash_hex) const {
  for (const HostedParams& hosted : config_.params_sets)
    if (hex_encode(hosted.params.params_hash) == hash_hex) return &hosted;
  return nullptr;
}

std::string EaService::new_session_id() {
  while (true) {
    std::string id = hex_encode(rng_->take(16));
    std::lock_guard lock(mu_);
    if (!sessions_.contains(id)) return id;
  }
}

bool EaService::insert_session(Session session) {
  std::lock_guard lock(mu_);
  uint64_t now = clock_();
  std::erase_if(sessions_,
                [now](const auto& kv) { return kv.second.expires_at <= now; });
  if (sessions_.size() >= config_.max_sessions) return false;
  sessions_[session.id] = std::move(session);
  return true;
}

std::unique_ptr<EaService::Session> EaService::take_session(
    const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  auto out = std::make_unique<Session>(std::move(it->second));
  sessions_.erase(it);
  return out;
}

size_t EaService::gc(uint64_t now) {
  std::lock_guard lock(mu_);
  return std::erase_if(sessions_, [now](const auto& kv) {
    return kv.second.expires_at <= now;
  });
}

size_t EaService::live_sessions() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

HttpResponse EaService::params_index() const {
  json arr = json::array();
  for (const HostedParams& hosted : config_.params_sets) {
    json entry;
    entry["k"] = hosted.params.k;
    entry["q_bits"] = hosted.params.q_bits();
    entry["params_hash"] = hex_encode(hosted.params.params_hash);
    arr.push_back(entry);
  }
  json j;
  j["params"] = arr;
  return {200, j.dump()};
}

HttpResponse EaService::params_file(const std::string& hash_hex) const {
  const HostedParams* hosted = find_params(hash_hex);
  if (hosted == nullptr)
    return {404, error_body("unknown_params", "no such params")};
  return {200, hosted->file_text};
}

HttpResponse EaService::rsa_start(std::string_view body) {
  json j;
  const HostedParams* hosted;
  try {
    j = parse_json_object(body);
    hosted = find_params(get_string(j, "params_hash"));
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }
  if (hosted == nullptr)
    return {400, error_body("unknown_params", "no such params")};

  RsaConfig rsa_config;
  try {
    EAKG_ENFORCE(j.contains("k") && j["k"].is_number_unsigned(),
                 "missing field: k");
    rsa_config = RsaConfig::make(j["k"].get<unsigned>(),
                                 int_from_hex(get_string(j, "e")), 80, false,
                                 config_.insecure_test);
    rsa_config.validate(hosted->params);
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }

  RsaMsg1 msg1;
  try {
    msg1.c_x = commitment_from_hex(hosted->params, get_string(j, "c_x"));
    msg1.c_y = commitment_from_hex(hosted->params, get_string(j, "c_y"));
  } catch (const std::exception&) {
    return {400, error_body("bad_commitment", "commitment rejected")};
  }

  Session session;
  session.id = new_session_id();
  session.kind = "rsa";
  session.created_at = clock_();
  session.expires_at = session.created_at + config_.session_ttl_secs;
  session.hosted = hosted;
  {
    std::lock_guard lock(mu_);  // rng handle is owned exclusively
    session.rsa = std::make_unique<RsaEaSession>(hosted->params, rsa_config,
                                                 *rng_, msg1);
  }
  RsaMsg2 msg2 = session.rsa->response();
  std::string id = session.id;
  if (!insert_session(std::move(session)))
    return {429, error_body("too_many_sessions", "session cap reached")};
  log("rsa start session=" + id.substr(0, 8) +
      " k=" + std::to_string(rsa_config.k));
  return {200, wire::rsa_msg2_to_json(msg2, id).dump()};
}

HttpResponse EaService::rsa_finalize(const std::string& id,
                                     std::string_view body) {
  auto session = take_session(id);
  if (session == nullptr)
    return {404, error_body("unknown_session", "no such session")};
  if (session->expires_at <= clock_()) {
    log("rsa finalize session=" + id.substr(0, 8) + " expired");
    return {410, error_body("session_expired", "session expired")};
  }
  if (session->kind != "rsa" || session->rsa == nullptr)
    return {404, error_body("unknown_session", "no such session")};

  RsaMsg3 msg3;
  try {
    msg3 = wire::rsa_msg3_from_json(session->hosted->params,
                                    parse_json_object(body));
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }

  auto outcome = ea_verify_and_sign(*session->rsa, msg3, config_.identity,
                                    session->hosted->params, clock_());
  if (std::holds_alternative<RsaRejection>(outcome)) {
    const char* code = rsa_rejection_name(std::get<RsaRejection>(outcome));
    log("rsa finalize session=" + id.substr(0, 8) + " rejected " + code);
    return {422, error_body(code, "verification failed")};
  }
  log("rsa finalize session=" + id.substr(0, 8) + " signed");
  const RsaMsg4& msg4 = std::get<RsaMsg4>(outcome);
  return {200, wire::msg4_to_json(DsaMsg4{msg4.sig, msg4.timestamp}).dump()};
}

HttpResponse EaService::dsa_start(std::string_view body) {
  json j;
  const HostedParams* hosted;
  try {
    j = parse_json_object(body);
    hosted = find_params(get_string(j, "params_hash"));
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }
  if (hosted == nullptr)
    return {400, error_body("unknown_params", "no such params")};

  DsaMsg1 msg1;
  try {
    msg1.c_x = commitment_from_hex(hosted->params, get_string(j, "c_x"));
  } catch (const std::exception&) {
    return {400, error_body("bad_commitment", "commitment rejected")};
  }

  Session session;
  session.id = new_session_id();
  session.kind = "dsa";
  session.created_at = clock_();
  session.expires_at = session.created_at + config_.session_ttl_secs;
  session.hosted = hosted;
  {
    std::lock_guard lock(mu_);
    session.dsa =
        std::make_unique<DsaEaSession>(hosted->params, *rng_, msg1);
  }
  DsaMsg2 msg2 = session.dsa->response();
  std::string id = session.id;
  if (!insert_session(std::move(session)))
    return {429, error_body("too_many_sessions", "session cap reached")};
  log("dsa start session=" + id.substr(0, 8));
  return {200, wire::dsa_msg2_to_json(hosted->params, msg2, id).dump()};
}

HttpResponse EaService::dsa_finalize(const std::string& id,
                                     std::string_view body) {
  auto session = take_session(id);
  if (session == nullptr)
    return {404, error_body("unknown_session", "no such session")};
  if (session->expires_at <= clock_()) {
    log("dsa finalize session=" + id.substr(0, 8) + " expired");
    return {410, error_body("session_expired", "session expired")};
  }
  if (session->kind != "dsa" || session->dsa == nullptr)
    return {404, error_body("unknown_session", "no such session")};

  DsaMsg3 msg3;
  try {
    msg3 = wire::dsa_msg3_from_json(session->hosted->params,
                                    parse_json_object(body));
  } catch (const std::exception&) {
    // a_pub outside the subgroup or a malformed proof
    return {422, error_body("bad_element", "message rejected")};
  }

  auto outcome = ea_verify_and_sign(*session->dsa, msg3, config_.identity,
                                    session->hosted->params, clock_());
  if (std::holds_alternative<DsaRejection>(outcome)) {
    const char* code = dsa_rejection_name(std::get<DsaRejection>(outcome));
    log("dsa finalize session=" + id.substr(0, 8) + " rejected " + code);
    return {422, error_body(code, "verification failed")};
  }
  log("dsa finalize session=" + id.substr(0, 8) + " signed");
  return {200, wire::msg4_to_json(std::get<DsaMsg4>(outcome)).dump()};
}

HttpResponse EaService::multi_start(std::string_view body) {
  json j;
  const HostedParams* hosted;
  try {
    j = parse_json_object(body);
    hosted = find_params(get_string(j, "params_hash"));
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }
  if (hosted == nullptr)
    return {400, error_body("unknown_params", "no such params")};

  unsigned index = 0;
  Commitment c;
  try {
    EAKG_ENFORCE(j.contains("authority_index") &&
                     j["authority_index"].is_number_unsigned() &&
                     j["authority_index"].get<unsigned>() >= 1,
                 "missing field: authority_index");
    index = j["authority_index"].get<unsigned>();
    c = commitment_from_hex(hosted->params, get_string(j, "c"));
  } catch (const std::exception&) {
    return {400, error_body("bad_commitment", "commitment rejected")};
  }

  MultiContribution contrib;
  {
    std::lock_guard lock(mu_);
    contrib =
        multi_contribute(hosted->params, *rng_, index, c, config_.identity);
  }

  Session session;
  session.id = new_session_id();
  session.kind = "dsa-multi";
  session.created_at = clock_();
  session.expires_at = session.created_at + config_.session_ttl_secs;
  session.hosted = hosted;
  session.multi = std::make_unique<MultiAuthorityRecord>(
      MultiAuthorityRecord{index, c, contrib.c_i});
  std::string id = session.id;
  if (!insert_session(std::move(session)))
    return {429, error_body("too_many_sessions", "session cap reached")};
  log("dsa-multi start session=" + id.substr(0, 8) +
      " index=" + std::to_string(index));
  return {200,
          wire::contribution_to_json(hosted->params, contrib, id, true).dump()};
}

HttpResponse EaService::multi_finalize(const std::string& id,
                                       std::string_view body) {
  auto session = take_session(id);
  if (session == nullptr)
    return {404, error_body("unknown_session", "no such session")};
  if (session->expires_at <= clock_()) {
    log("dsa-multi finalize session=" + id.substr(0, 8) + " expired");
    return {410, error_body("session_expired", "session expired")};
  }
  if (session->kind != "dsa-multi" || session->multi == nullptr)
    return {404, error_body("unknown_session", "no such session")};

  MultiBundle bundle;
  try {
    bundle = wire::multi_bundle_from_json(session->hosted->params,
                                          parse_json_object(body));
  } catch (const std::exception& e) {
    return {400, error_body("bad_request", e.what())};
  }

  auto outcome =
      multi_verify_and_sign(session->hosted->params, *session->multi, bundle,
                            config_.identity, clock_());
  if (std::holds_alternative<MultiRejection>(outcome)) {
    const char* code = multi_rejection_name(std::get<MultiRejection>(outcome));
    log("dsa-multi finalize session=" + id.substr(0, 8) + " rejected " + code);
    return {422, error_body(code, "verification failed")};
  }
  log("dsa-multi finalize session=" + id.substr(0, 8) + " signed");
  return {200, wire::msg4_to_json(std::get<DsaMsg4>(outcome)).dump()};
}

HttpResponse EaService::handle(std::string_view method, std::string_view path,
                               std::string_view body) {
  try {
    // split path into segments
    std::vector<std::string> seg;
    size_t pos = 0;
    while (pos < path.size()) {
      size_t next = path.find('/', pos);
      if (next == std::string_view::npos) next = path.size();
      if (next > pos) seg.emplace_back(path.substr(pos, next - pos));
      pos = next + 1;
    }

    if (seg.size() >= 1 && seg[0] == "v1") {
      if (method == "GET" && seg.size() == 2 && seg[1] == "health")
        return {200, R"({"status":"ok"})"};
      if (method == "GET" && seg.size() == 2 && seg[1] == "identity") {
        json j;
        j["ea_id"] = hex_encode(config_.identity.ea_id);
        j["verification_key"] = hex_encode(config_.identity.verify_key);
        return {200, j.dump()};
      }
      if (method == "GET" && seg.size() == 2 && seg[1] == "params")
        return params_index();
      if (method == "GET" && seg.size() == 3 && seg[1] == "params")
        return params_file(seg[2]);
      if (method == "POST" && seg.size() == 3 && seg[1] == "rsa" &&
          seg[2] == "session")
        return rsa_start(body);
      if (method == "POST" && seg.size() == 5 && seg[1] == "rsa" &&
          seg[2] == "session" && seg[4] == "finalize")
        return rsa_finalize(seg[3], body);
      if (method == "POST" && seg.size() == 3 && seg[1] == "dsa" &&
          seg[2] == "session")
        return dsa_start(body);
      if (method == "POST" && seg.size() == 5 && seg[1] == "dsa" &&
          seg[2] == "session" && seg[4] == "finalize")
        return dsa_finalize(seg[3], body);
      if (method == "POST" && seg.size() == 4 && seg[1] == "dsa" &&
          seg[2] == "multi" && seg[3] == "session")
        return multi_start(body);
      if (method == "POST" && seg.size() == 6 && seg[1] == "dsa" &&
          seg[2] == "multi" && seg[3] == "session" && seg[5] == "finalize")
        return multi_finalize(seg[4], body);
    }
    return {404, error_body("not_found", "no such endpoint")};
  } catch (const std::exception&) {
    // Never leak internals in error bodies.
    return {500, error_body("internal", "internal error")};
  }
}

bool serve_http(EaService& service, const std::string& host, int port,
                int* ready_port, std::function<bool()> stop) {
  httplib::Server server;

  auto dispatch = [&service](const httplib::Request& req,
                             httplib::Response& res) {
    HttpResponse out = service.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);

  int bound = port;
  if (port == 0) {
    bound = server.bind_to_any_port(host);
    if (bound < 0) return false;
  } else if (!server.bind_to_port(host, port)) {
    return false;
  }
  if (ready_port != nullptr) *ready_port = bound;

  if (stop) {
    // Poll the stop predicate between accept timeouts.
    server.set_idle_interval(0, 100000);
    std::thread poller([&server, stop] {
      while (!stop()) std::this_thread::sleep_for(std::chrono::milliseconds(50));
      server.stop();
    });
    bool ok = server.listen_after_bind();
    poller.join();
    return ok;
  }
  return server.listen_after_bind();
}

}  // namespace eakg
