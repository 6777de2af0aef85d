// Copyright 2026 The BFID Toolkit Authors
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

#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "bfid/codec.hpp"
#include "bfid/reesse.hpp"

/// The verification platform: key registry, identity store, verification,
/// tracing and fraud scanning behind one line-oriented protocol.
namespace bfid::platform {

// Wire protocol, one frame per line, space-separated tokens:
//   REGISTER_SUBJECT <id> <key-blob-hex> <sig-hex>
//   REGISTER_ID <bfid> <subject> <digest-hex> <u-hex> "<source>" <sig-hex>
//   VERIFY <bfid> [<digest-hex>] [region=<r>] [ts=<t>]
//   EVENT <bfid> <stage> <region> <ts> <sig-hex>
//   TRACE <bfid>
//   SCAN [<window>]
// <sig-hex> signs the frame text before it; REGISTER_SUBJECT is signed by the
// key it carries, REGISTER_ID by <subject>, EVENT by the owner of <bfid>.

struct KeyRecord {
    std::string subject_id;
    std::string key_text;
    reesse::PublicKey pub;
    reesse::CommonParams common;
    std::uint64_t registered_at = 0;  // log sequence number
};

struct IdentityRecord {
    std::string bfid;
    std::string subject_id;
    std::string digest_hex;
    std::string u_hex;
    std::string source_info;
    std::uint64_t seq = 0;
};

enum class Stage { warehouse_out, delivery, passage, marketing };
std::string to_string(Stage s);
Stage parse_stage(const std::string& s);

struct TraceEvent {
    std::string bfid;
    Stage stage = Stage::warehouse_out;
    std::string region;
    std::uint64_t ts = 0;
    std::uint64_t seq = 0;
};

enum class Verdict { accept, reject, unknown };
std::string to_string(Verdict v);

struct VerifyRecord {
    std::string bfid;
    std::string region;  // "-" when not supplied
    std::uint64_t ts = 0;
    Verdict verdict = Verdict::unknown;
    std::uint64_t seq = 0;
};

struct VerifyResult {
    Verdict verdict = Verdict::unknown;
    std::string source_info;
    std::string reason;
};

enum class AlertReason { repeat_verify_overlap, verify_failure_burst, unknown_id_burst };
std::string to_string(AlertReason r);

struct FraudAlert {
    std::string bfid;  // "*" for unknown-id bursts, which span many ids
    AlertReason reason = AlertReason::repeat_verify_overlap;
    std::vector<std::uint64_t> evidence;  // log sequence numbers
};

class PlatformError : public std::runtime_error {
public:
    PlatformError(std::string code, const std::string& msg) : std::runtime_error(msg), code(std::move(code)) {}
    std::string code;  // DUPLICATE, UNKNOWN_SUBJECT, UNKNOWN_ID, BAD_SIGNATURE, BAD_KEY, MALFORMED, OUT_OF_ORDER
};

struct PlatformConfig {
    std::string log_path;               // empty: memory only
    std::size_t burst_threshold = 5;    // a burst is more than this many events
    std::uint64_t default_window = 86'400;
    bool durable = true;                // fsync each appended frame
};

/// Splits a frame into tokens; "..." tokens may hold spaces, \" and \\.
std::vector<std::string> tokenize(const std::string& line);
std::string quote(const std::string& text);

/// Text covered by a mutation signature: the tokens joined by single spaces,
/// with the REGISTER_ID source always quoted.
std::string canonical_body(const std::vector<std::string>& tokens);

std::string signature_hex(const reesse::Signature& sig, std::size_t m);
reesse::Signature parse_signature_hex(const std::string& hex, std::size_t m);

/// Digest that mutation signatures cover.
BitString request_digest(const std::string& body, std::size_t nbits);

/// Appends <sig-hex> over canonical_body(tokens).
std::string signed_frame(const std::vector<std::string>& tokens, const reesse::PrivateKey& priv,
                         const reesse::CommonParams& common, numeric::Rng& rng);

class Platform {
public:
    /// Replays the log when config.log_path names an existing file.
    explicit Platform(PlatformConfig config = {});
    ~Platform();
    Platform(const Platform&) = delete;
    Platform& operator=(const Platform&) = delete;

    /// Handles one request frame; returns the response lines, each ending in '\n'.
    std::string handle(const std::string& line);

    // Typed operations; each throws PlatformError.
    void register_subject(const std::string& id, const std::string& key_text, const std::string& sig_hex);
    void register_identity(const IdentityRecord& rec, const std::string& sig_hex);
    VerifyResult verify_request(const std::string& bfid, const std::optional<std::string>& digest_hex,
                                const std::optional<std::string>& region = std::nullopt,
                                const std::optional<std::uint64_t>& ts = std::nullopt);
    void record_trace_event(const TraceEvent& ev, const std::string& sig_hex);
    std::vector<TraceEvent> trace_request(const std::string& bfid) const;
    std::vector<FraudAlert> fraud_scan(std::optional<std::uint64_t> window = std::nullopt) const;
    /// Re-derives the alert's rule from the logged entries it cites.
    bool evidence_valid(const FraudAlert& alert, std::optional<std::uint64_t> window = std::nullopt) const;

    std::optional<KeyRecord> subject(const std::string& id) const;
    std::optional<IdentityRecord> identity(const std::string& bfid) const;
    /// Deterministic dump of all state; equal across a restart.
    std::string snapshot() const;
    std::uint64_t log_size() const;
    const PlatformConfig& config() const { return config_; }

private:
    std::string dispatch(const std::vector<std::string>& tokens, bool replay);
    void append_log(const std::string& frame);
    std::uint64_t next_seq() const { return static_cast<std::uint64_t>(log_.size()) + 1; }
    void check_signature(const KeyRecord& key, const std::string& body, const std::string& sig_hex) const;

    std::string do_register_subject(const std::vector<std::string>& t);
    std::string do_register_id(const std::vector<std::string>& t);
    std::string do_verify(const std::vector<std::string>& t, VerifyResult* out);
    std::string do_event(const std::vector<std::string>& t);
    std::string do_trace(const std::vector<std::string>& t) const;
    std::string do_scan(const std::vector<std::string>& t) const;

    std::vector<FraudAlert> scan_locked(std::uint64_t window) const;

    PlatformConfig config_;
    mutable std::shared_mutex mu_;
    int log_fd_ = -1;
    bool replaying_ = false;
    std::vector<std::string> log_;  // logged frames; index + 1 is the sequence number
    std::map<std::string, KeyRecord> subjects_;
    std::map<std::string, IdentityRecord> identities_;
    std::map<std::string, std::vector<TraceEvent>> traces_;
    std::vector<VerifyRecord> verifies_;
    std::uint64_t clock_ = 0;  // latest logical timestamp seen
};

class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How applications reach the platform.
class VerifierClient {
public:
    virtual ~VerifierClient() = default;
    /// Sends one frame and returns the complete response.
    virtual std::string request(const std::string& line) = 0;
};

class LocalClient : public VerifierClient {
public:
    explicit LocalClient(Platform& p) : platform_(p) {}
    std::string request(const std::string& line) override { return platform_.handle(line); }

private:
    Platform& platform_;
};

class TcpClient : public VerifierClient {
public:
    /// Throws TransportError when the endpoint cannot be reached.
    TcpClient(const std::string& host, std::uint16_t port);
    ~TcpClient() override;
    std::string request(const std::string& line) override;

private:
    std::string read_line();
    int fd_ = -1;
    std::string buffer_;
};

/// "host:port" with a numeric port.
std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& endpoint);

/// Accepts clients on a TCP port, one thread per connection.
class Server {
public:
    Server(Platform& platform, const std::string& host, std::uint16_t port);
    ~Server();
    /// Bound port; useful when constructed with port 0.
    std::uint16_t port() const { return port_; }
    void start();
    /// Blocks until stop() is called from another thread.
    void serve_forever();
    void stop();

private:
    void accept_loop();
    void serve_client(int fd);

    Platform& platform_;
    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
    std::atomic<bool> running_{false};
    std::thread acceptor_;
    std::mutex clients_mu_;
    std::vector<std::thread> clients_;
    std::vector<int> client_fds_;
};

}  // namespace bfid::platform
