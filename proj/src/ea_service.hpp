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

#ifndef EAKG_EA_SERVICE_HPP_
#define EAKG_EA_SERVICE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dsa_protocol.hpp"
#include "rsa_protocol.hpp"

namespace eakg {

/// One params set the authority serves: the parsed group plus the exact
/// file text handed out by GET /v1/params/{hash}.
struct HostedParams {
  GroupParams params;
  std::string file_text;
};

struct EaConfig {
  std::string listen_host = "127.0.0.1";
  int listen_port = 8080;
  std::vector<HostedParams> params_sets;
  EaIdentity identity;
  uint64_t session_ttl_secs = 120;
  size_t max_sessions = 10000;
  bool insecure_test = false;
};

/// Parses the config JSON:
///   {"listen_host", "listen_port", "params_files": [...],
///    "signing_key_file": "...", "session_ttl_secs", "max_sessions",
///    "insecure_test"}
/// plus inline variants "params_inline": [<params file text>...] and
/// "signing_key_inline": {"signing_key": hex} used by tests and by the
/// in-process bench authority.
EaConfig ea_config_from_json(std::string_view text);

/// Identity file helpers ({"signing_key","verification_key","ea_id"} hex).
std::string ea_identity_to_json(const EaIdentity& id);
EaIdentity ea_identity_from_json(std::string_view text);

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// The network-facing entropy authority. `handle` is the transport-agnostic
/// dispatcher used by the HTTP wiring, the C API and the tests; the session
/// store is the only shared mutable state and take-on-finalize makes a
/// double finalize race-free.
class EaService {
 public:
  explicit EaService(EaConfig config);

  HttpResponse handle(std::string_view method, std::string_view path,
                      std::string_view body);

  /// Removes sessions with expires_at <= now; returns how many.
  size_t gc(uint64_t now);

  size_t live_sessions() const;
  const EaConfig& config() const { return config_; }
  const EaIdentity& identity() const { return config_.identity; }

  void set_clock(std::function<uint64_t()> clock) { clock_ = std::move(clock); }
  void set_rng(std::unique_ptr<ByteSource> rng) { rng_ = std::move(rng); }
  void set_logger(std::function<void(const std::string&)> log) {
    log_ = std::move(log);
  }

 private:
  struct Session {
    std::string id;
    std::string kind;  // rsa | dsa | dsa-multi
    uint64_t created_at = 0;
    uint64_t expires_at = 0;
    const HostedParams* hosted = nullptr;
    std::unique_ptr<RsaEaSession> rsa;
    std::unique_ptr<DsaEaSession> dsa;
    std::unique_ptr<MultiAuthorityRecord> multi;
  };

  HttpResponse rsa_start(std::string_view body);
  HttpResponse rsa_finalize(const std::string& id, std::string_view body);
  HttpResponse dsa_start(std::string_view body);
  HttpResponse dsa_finalize(const std::string& id, std::string_view body);
  HttpResponse multi_start(std::string_view body);
  HttpResponse multi_finalize(const std::string& id, std::string_view body);
  HttpResponse params_index() const;
  HttpResponse params_file(const std::string& hash_hex) const;

  const HostedParams* find_params(const std::string& hash_hex) const;
  std::string new_session_id();
  /// Inserts a session; empty return means the cap was hit.
  bool insert_session(Session session);
  /// Removes and returns the session (single-use).
  std::unique_ptr<Session> take_session(const std::string& id);
  void log(const std::string& line);

  EaConfig config_;
  std::function<uint64_t()> clock_;
  std::unique_ptr<ByteSource> rng_;
  std::function<void(const std::string&)> log_;
  mutable std::mutex mu_;
  std::map<std::string, Session> sessions_;
};

/// Blocking HTTP server around the dispatcher (used by the daemon).
/// `ready_port`, when given, receives the bound port before serving.
bool serve_http(EaService& service, const std::string& host, int port,
                int* ready_port = nullptr, std::function<bool()> stop = {});

// --- wire helpers shared by service, client and tests -----------------------

std::string error_body(const std::string& code, const std::string& message);

namespace wire {

nlohmann::json rsa_start_request(const GroupParams& params,
                                 const RsaConfig& config, const RsaMsg1& msg1);
nlohmann::json rsa_msg2_to_json(const RsaMsg2& msg2,
                                const std::string& session_id);
RsaMsg2 rsa_msg2_from_json(const nlohmann::json& j);
nlohmann::json rsa_msg3_to_json(const GroupParams& params, const RsaMsg3& msg3);
RsaMsg3 rsa_msg3_from_json(const GroupParams& params, const nlohmann::json& j);

nlohmann::json dsa_start_request(const GroupParams& params, const DsaMsg1& msg1);
nlohmann::json dsa_msg2_to_json(const GroupParams& params, const DsaMsg2& msg2,
                                const std::string& session_id);
DsaMsg2 dsa_msg2_from_json(const GroupParams& params, const nlohmann::json& j);
nlohmann::json dsa_msg3_to_json(const GroupParams& params, const DsaMsg3& msg3);
DsaMsg3 dsa_msg3_from_json(const GroupParams& params, const nlohmann::json& j);

nlohmann::json msg4_to_json(const DsaMsg4& msg4);  // {"sig","timestamp"}
DsaMsg4 msg4_from_json(const nlohmann::json& j);
RsaMsg4 rsa_msg4_from_json(const nlohmann::json& j);

nlohmann::json multi_start_request(const GroupParams& params, unsigned index,
                                   const Commitment& c);
nlohmann::json contribution_to_json(const GroupParams& params,
                                    const MultiContribution& c,
                                    const std::string& session_id,
                                    bool include_openings);
MultiContribution contribution_from_json(const GroupParams& params,
                                         const nlohmann::json& j,
                                         bool expect_openings);
nlohmann::json multi_bundle_to_json(const GroupParams& params,
                                    const MultiBundle& bundle);
MultiBundle multi_bundle_from_json(const GroupParams& params,
                                   const nlohmann::json& j);

}  // namespace wire

}  // namespace eakg

#endif  // EAKG_EA_SERVICE_HPP_
