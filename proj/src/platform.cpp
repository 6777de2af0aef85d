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

#include "bfid/platform.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "bfid/keyfile.hpp"

namespace bfid::platform {

namespace {

constexpr std::array<const char*, 4> kStages = {"warehouse-out", "delivery", "passage", "marketing"};

bool needs_quotes(const std::string& s) {
    if (s.empty()) return true;
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return c <= ' ' || c == '"' || c == '\\'; });
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        throw PlatformError("MALFORMED", std::string("bad ") + what + " '" + s + "'");
    }
    return v;
}

Natural parse_hex(const std::string& s, const char* what) {
    try {
        return from_hex(s);
    } catch (const std::invalid_argument&) {
        throw PlatformError("MALFORMED", std::string("bad ") + what + " hex");
    }
}

std::string normalize_bfid(const std::string& text) {
    try {
        return codec::encode_bits(codec::decode_text(text));
    } catch (const codec::DecodeError& e) {
        throw PlatformError("MALFORMED", e.what());
    }
}

void expect_arity(const std::vector<std::string>& t, std::size_t n) {
    if (t.size() != n) {
        throw PlatformError("MALFORMED", t[0] + " takes " + std::to_string(n - 1) + " arguments");
    }
}

std::vector<std::string> head(const std::vector<std::string>& t) { return {t.begin(), t.end() - 1}; }

reesse::InterpretationConfig interp_of(const reesse::CommonParams& c) {
    return reesse::InterpretationConfig::by_name(c.interpretation);
}

// Longest run of records inside any window [ts_i, ts_i + window].
std::vector<const VerifyRecord*> densest(std::vector<const VerifyRecord*> recs, std::uint64_t window) {
    std::stable_sort(recs.begin(), recs.end(), [](auto* a, auto* b) { return a->ts < b->ts; });
    std::size_t best_lo = 0, best_n = 0;
    for (std::size_t lo = 0, hi = 0; lo < recs.size(); ++lo) {
        if (hi < lo) hi = lo;
        while (hi < recs.size() && recs[hi]->ts - recs[lo]->ts <= window) ++hi;
        if (hi - lo > best_n) {
            best_n = hi - lo;
            best_lo = lo;
        }
    }
    std::vector<const VerifyRecord*> out(recs.begin() + best_lo, recs.begin() + best_lo + best_n);
    std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->seq < b->seq; });
    return out;
}

std::uint64_t span(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::string to_string(Stage s) { return kStages[static_cast<std::size_t>(s)]; }

Stage parse_stage(const std::string& s) {
    for (std::size_t i = 0; i < kStages.size(); ++i) {
        if (s == kStages[i]) return static_cast<Stage>(i);
    }
    throw PlatformError("MALFORMED", "unknown stage '" + s + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::accept: return "ACCEPT";
        case Verdict::reject: return "REJECT";
        case Verdict::unknown: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(AlertReason r) {
    switch (r) {
        case AlertReason::repeat_verify_overlap: return "repeat-verify-overlap";
        case AlertReason::verify_failure_burst: return "verify-failure-burst";
        case AlertReason::unknown_id_burst: return "unknown-id-burst";
    }
    return "?";
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::string tok;
        if (line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char c = line[i++];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\') {
                    if (i >= line.size()) break;
                    c = line[i++];
                    if (c == 'n') c = '\n';
                }
                tok.push_back(c);
            }
            if (!closed) throw PlatformError("MALFORMED", "unterminated quoted string");
        } else {
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
                if (line[i] == '"') throw PlatformError("MALFORMED", "quote inside a bare token");
                tok.push_back(line[i++]);
            }
        }
        out.push_back(std::move(tok));
    }
    return out;
}

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string canonical_body(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        const bool source = i == 5 && tokens[0] == "REGISTER_ID";
        out += source || needs_quotes(tokens[i]) ? quote(tokens[i]) : tokens[i];
    }
    return out;
}

std::string signature_hex(const reesse::Signature& sig, std::size_t m) {
    return to_hex_padded(reesse::pack_signature(sig, m).to_natural(), (2 * m + 3) / 4);
}

reesse::Signature parse_signature_hex(const std::string& hex, std::size_t m) {
    const Natural v = parse_hex(hex, "signature");
    if (bit_length(v) > 2 * m) throw PlatformError("MALFORMED", "signature longer than 2m bits");
    return reesse::unpack_signature(BitString::from_natural(v, 2 * m), m);
}

BitString request_digest(const std::string& body, std::size_t nbits) { return expand_sha256(as_bytes(body), nbits); }

std::string signed_frame(const std::vector<std::string>& tokens, const reesse::PrivateKey& priv,
                         const reesse::CommonParams& common, numeric::Rng& rng) {
    const std::string body = canonical_body(tokens);
    const auto sig = reesse::sign_digest(priv, common, request_digest(body, common.n), interp_of(common), rng);
    return body + " " + signature_hex(sig, common.m());
}

Platform::Platform(PlatformConfig config) : config_(std::move(config)) {
    if (config_.log_path.empty()) return;
    std::ifstream in(config_.log_path);
    if (in) {
        replaying_ = true;
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (line.empty()) continue;
            try {
                dispatch(tokenize(line), true);
            } catch (const PlatformError& e) {
                throw std::runtime_error("log replay failed at line " + std::to_string(no) + ": " + e.code + " " +
                                         e.what());
            }
        }
        replaying_ = false;
    }
    log_fd_ = ::open(config_.log_path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
    if (log_fd_ < 0) throw std::runtime_error("cannot open log " + config_.log_path);
}

Platform::~Platform() {
    if (log_fd_ >= 0) ::close(log_fd_);
}

void Platform::append_log(const std::string& frame) {
    if (!replaying_ && log_fd_ >= 0) {
        const std::string line = frame + "\n";
        std::size_t off = 0;
        while (off < line.size()) {
            const ssize_t w = ::write(log_fd_, line.data() + off, line.size() - off);
            if (w < 0) throw std::runtime_error("log write failed");
            off += static_cast<std::size_t>(w);
        }
        if (config_.durable && ::fsync(log_fd_) != 0) throw std::runtime_error("log fsync failed");
    }
    log_.push_back(frame);
}

void Platform::check_signature(const KeyRecord& key, const std::string& body, const std::string& sig_hex) const {
    const auto sig = parse_signature_hex(sig_hex, key.common.m());
    const auto v = reesse::verify_digest(key.pub, key.common, request_digest(body, key.common.n), sig,
                                         interp_of(key.common));
    if (!v.accepted) throw PlatformError("BAD_SIGNATURE", "request signature does not verify");
}

std::string Platform::handle(const std::string& line) {
    try {
        const auto tokens = tokenize(line);
        if (tokens.empty()) throw PlatformError("MALFORMED", "empty frame");
        if (tokens[0] == "TRACE") {
            std::shared_lock lock(mu_);
            return do_trace(tokens);
        }
        if (tokens[0] == "SCAN") {
            std::shared_lock lock(mu_);
            return do_scan(tokens);
        }
        std::unique_lock lock(mu_);
        return dispatch(tokens, false);
    } catch (const PlatformError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        return "ERR " + e.code + " " + msg + "\n";
    } catch (const std::exception& e) {
        return std::string("ERR INTERNAL ") + e.what() + "\n";
    }
}

std::string Platform::dispatch(const std::vector<std::string>& t, bool) {
    if (t.empty()) throw PlatformError("MALFORMED", "empty frame");
    const std::string& cmd = t[0];
    if (cmd == "REGISTER_SUBJECT") return do_register_subject(t);
    if (cmd == "REGISTER_ID") return do_register_id(t);
    if (cmd == "VERIFY") return do_verify(t, nullptr);
    if (cmd == "EVENT") return do_event(t);
    throw PlatformError("MALFORMED", "unknown command '" + cmd + "'");
}

std::string Platform::do_register_subject(const std::vector<std::string>& t) {
    expect_arity(t, 4);
    const std::string& id = t[1];
    if (needs_quotes(id)) throw PlatformError("MALFORMED", "subject id must be a bare token");
    if (subjects_.count(id)) throw PlatformError("DUPLICATE", "subject '" + id + "' already registered");
    KeyRecord rec;
    rec.subject_id = id;
    try {
        const auto bytes = hex_to_bytes(t[2]);
        rec.key_text.assign(bytes.begin(), bytes.end());
        auto kf = reesse::parse_key_text(rec.key_text);
        if (!kf.pub) throw PlatformError("BAD_KEY", "key blob has no [public] block");
        rec.pub = *kf.pub;
        rec.common = kf.common;
        interp_of(rec.common);
    } catch (const PlatformError&) {
        throw;
    } catch (const std::exception& e) {
        throw PlatformError("BAD_KEY", e.what());
    }
    const auto audit = reesse::audit_public(rec.pub, rec.common);
    if (!audit.all_pass()) {
        throw PlatformError("BAD_KEY", "public key fails: " + audit.failures().front().condition);
    }
    check_signature(rec, canonical_body(head(t)), t[3]);
    rec.registered_at = next_seq();
    append_log(canonical_body(t));
    subjects_.emplace(id, std::move(rec));
    return "OK\n";
}

std::string Platform::do_register_id(const std::vector<std::string>& t) {
    expect_arity(t, 7);
    IdentityRecord rec;
    rec.bfid = normalize_bfid(t[1]);
    rec.subject_id = t[2];
    auto key = subjects_.find(rec.subject_id);
    if (key == subjects_.end()) throw PlatformError("UNKNOWN_SUBJECT", "subject '" + t[2] + "' not registered");
    try {
        codec::decode_bfid(rec.bfid, key->second.common.m());
    } catch (const codec::DecodeError& e) {
        throw PlatformError("MALFORMED", e.what());
    }
    if (identities_.count(rec.bfid)) throw PlatformError("DUPLICATE", "bfid " + rec.bfid + " already registered");
    const Natural digest = parse_hex(t[3], "digest");
    if (bit_length(digest) > key->second.common.n) throw PlatformError("MALFORMED", "digest longer than n bits");
    const Natural u = parse_hex(t[4], "U");
    rec.digest_hex = to_hex(digest);
    rec.u_hex = to_hex(u);
    rec.source_info = t[5];
    check_signature(key->second, canonical_body(head(t)), t[6]);
    rec.seq = next_seq();
    append_log(canonical_body(t));
    identities_.emplace(rec.bfid, std::move(rec));
    return "OK\n";
}

std::string Platform::do_verify(const std::vector<std::string>& t, VerifyResult* out) {
    if (t.size() < 2 || t.size() > 5) throw PlatformError("MALFORMED", "VERIFY takes a bfid and up to 3 options");
    const std::string bfid = normalize_bfid(t[1]);
    std::optional<std::string> digest;
    std::string region = "-";
    std::optional<std::uint64_t> ts;
    for (std::size_t i = 2; i < t.size(); ++i) {
        if (t[i].rfind("region=", 0) == 0) {
            region = t[i].substr(7);
            if (region.empty() || needs_quotes(region)) throw PlatformError("MALFORMED", "bad region");
        } else if (t[i].rfind("ts=", 0) == 0) {
            ts = parse_u64(t[i].substr(3), "timestamp");
        } else if (!digest) {
            digest = to_hex(parse_hex(t[i], "digest"));
        } else {
            throw PlatformError("MALFORMED", "unexpected token '" + t[i] + "'");
        }
    }
    VerifyResult res;
    auto id = identities_.find(bfid);
    if (id == identities_.end()) {
        res.verdict = Verdict::unknown;
        res.reason = "bfid not registered";
    } else if (digest && *digest != id->second.digest_hex) {
        res.verdict = Verdict::reject;
        res.reason = "digest mismatch";
    } else {
        const KeyRecord& key = subjects_.at(id->second.subject_id);
        const BitString bits = BitString::from_natural(from_hex(id->second.digest_hex), key.common.n);
        try {
            const auto v = codec::verify_bfid_digest(key.pub, key.common, bits, bfid, from_hex(id->second.u_hex),
                                                     interp_of(key.common));
            res.verdict = v.accepted ? Verdict::accept : Verdict::reject;
            res.reason = v.reason;
        } catch (const std::invalid_argument& e) {
            res.verdict = Verdict::reject;
            res.reason = e.what();
        }
        if (res.verdict == Verdict::accept) res.source_info = id->second.source_info;
    }

    VerifyRecord rec{bfid, region, ts.value_or(clock_), res.verdict, next_seq()};
    std::vector<std::string> frame = {"VERIFY", bfid};
    if (digest) frame.push_back(*digest);
    frame.push_back("region=" + region);
    frame.push_back("ts=" + std::to_string(rec.ts));
    append_log(canonical_body(frame));
    clock_ = std::max(clock_, rec.ts);
    verifies_.push_back(rec);
    if (out) *out = res;
    if (res.verdict == Verdict::accept) return "OK ACCEPT " + quote(res.source_info) + "\n";
    return "OK " + to_string(res.verdict) + "\n";
}

std::string Platform::do_event(const std::vector<std::string>& t) {
    expect_arity(t, 6);
    TraceEvent ev;
    ev.bfid = normalize_bfid(t[1]);
    auto id = identities_.find(ev.bfid);
    if (id == identities_.end()) throw PlatformError("UNKNOWN_ID", "bfid " + ev.bfid + " not registered");
    ev.stage = parse_stage(t[2]);
    ev.region = t[3];
    if (needs_quotes(ev.region)) throw PlatformError("MALFORMED", "bad region");
    ev.ts = parse_u64(t[4], "timestamp");
    auto& list = traces_[ev.bfid];
    if (!list.empty() && ev.ts < list.back().ts) {
        throw PlatformError("OUT_OF_ORDER", "timestamp " + t[4] + " precedes " + std::to_string(list.back().ts));
    }
    check_signature(subjects_.at(id->second.subject_id), canonical_body(head(t)), t[5]);
    ev.seq = next_seq();
    append_log(canonical_body(t));
    clock_ = std::max(clock_, ev.ts);
    list.push_back(ev);
    return "OK\n";
}

std::string Platform::do_trace(const std::vector<std::string>& t) const {
    expect_arity(t, 2);
    const std::string bfid = normalize_bfid(t[1]);
    if (!identities_.count(bfid)) throw PlatformError("UNKNOWN_ID", "bfid " + bfid + " not registered");
    std::ostringstream os;
    auto it = traces_.find(bfid);
    const std::size_t n = it == traces_.end() ? 0 : it->second.size();
    os << "OK " << n << '\n';
    if (n) {
        for (const auto& ev : it->second) os << ev.ts << ' ' << to_string(ev.stage) << ' ' << ev.region << '\n';
    }
    return os.str();
}

std::string Platform::do_scan(const std::vector<std::string>& t) const {
    if (t.size() > 2) throw PlatformError("MALFORMED", "SCAN takes at most a window");
    const std::uint64_t window = t.size() == 2 ? parse_u64(t[1], "window") : config_.default_window;
    const auto alerts = scan_locked(window);
    std::ostringstream os;
    os << "OK " << alerts.size() << '\n';
    for (const auto& a : alerts) {
        os << "ALERT " << to_string(a.reason) << ' ' << a.bfid << ' ';
        for (std::size_t i = 0; i < a.evidence.size(); ++i) os << (i ? "," : "") << a.evidence[i];
        os << '\n';
    }
    return os.str();
}

std::vector<FraudAlert> Platform::scan_locked(std::uint64_t window) const {
    std::vector<FraudAlert> out;
    std::map<std::string, std::vector<const VerifyRecord*>> by_bfid;
    std::vector<const VerifyRecord*> unknown;
    for (const auto& v : verifies_) {
        if (v.verdict == Verdict::unknown) {
            unknown.push_back(&v);
        } else {
            by_bfid[v.bfid].push_back(&v);
        }
    }
    for (const auto& [bfid, recs] : by_bfid) {
        bool found = false;
        for (std::size_t i = 0; i < recs.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < recs.size() && !found; ++j) {
                const auto* a = recs[i];
                const auto* b = recs[j];
                if (a->region != "-" && b->region != "-" && a->region != b->region && span(a->ts, b->ts) <= window) {
                    out.push_back({bfid, AlertReason::repeat_verify_overlap, {a->seq, b->seq}});
                    found = true;
                }
            }
        }
    }
    for (const auto& [bfid, recs] : by_bfid) {
        std::vector<const VerifyRecord*> rejects;
        for (const auto* r : recs) {
            if (r->verdict == Verdict::reject) rejects.push_back(r);
        }
        const auto burst = densest(rejects, window);
        if (burst.size() > config_.burst_threshold) {
            FraudAlert a{bfid, AlertReason::verify_failure_burst, {}};
            for (const auto* r : burst) a.evidence.push_back(r->seq);
            out.push_back(std::move(a));
        }
    }
    const auto burst = densest(unknown, window);
    if (burst.size() > config_.burst_threshold) {
        FraudAlert a{"*", AlertReason::unknown_id_burst, {}};
        for (const auto* r : burst) a.evidence.push_back(r->seq);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<FraudAlert> Platform::fraud_scan(std::optional<std::uint64_t> window) const {
    std::shared_lock lock(mu_);
    return scan_locked(window.value_or(config_.default_window));
}

bool Platform::evidence_valid(const FraudAlert& alert, std::optional<std::uint64_t> window) const {
    std::shared_lock lock(mu_);
    const std::uint64_t w = window.value_or(config_.default_window);
    std::vector<const VerifyRecord*> recs;
    for (auto seq : alert.evidence) {
        if (seq == 0 || seq > log_.size() || log_[seq - 1].rfind("VERIFY ", 0) != 0) return false;
        auto it = std::find_if(verifies_.begin(), verifies_.end(), [&](const auto& v) { return v.seq == seq; });
        if (it == verifies_.end()) return false;
        recs.push_back(&*it);
    }
    if (recs.empty()) return false;
    std::uint64_t lo = recs.front()->ts, hi = lo;
    for (const auto* r : recs) {
        lo = std::min(lo, r->ts);
        hi = std::max(hi, r->ts);
    }
    switch (alert.reason) {
        case AlertReason::repeat_verify_overlap:
            return recs.size() == 2 && recs[0]->bfid == alert.bfid && recs[1]->bfid == alert.bfid &&
                   recs[0]->region != "-" && recs[1]->region != "-" && recs[0]->region != recs[1]->region &&
                   recs[0]->verdict != Verdict::unknown && recs[1]->verdict != Verdict::unknown && hi - lo <= w;
        case AlertReason::verify_failure_burst:
            return recs.size() > config_.burst_threshold && hi - lo <= w &&
                   std::all_of(recs.begin(), recs.end(), [&](auto* r) {
                       return r->bfid == alert.bfid && r->verdict == Verdict::reject;
                   });
        case AlertReason::unknown_id_burst:
            return recs.size() > config_.burst_threshold && hi - lo <= w &&
                   std::all_of(recs.begin(), recs.end(), [](auto* r) { return r->verdict == Verdict::unknown; });
    }
    return false;
}

void Platform::register_subject(const std::string& id, const std::string& key_text, const std::string& sig_hex) {
    std::unique_lock lock(mu_);
    do_register_subject({"REGISTER_SUBJECT", id, bytes_to_hex(as_bytes(key_text)), sig_hex});
}

void Platform::register_identity(const IdentityRecord& rec, const std::string& sig_hex) {
    std::unique_lock lock(mu_);
    do_register_id({"REGISTER_ID", rec.bfid, rec.subject_id, rec.digest_hex, rec.u_hex, rec.source_info, sig_hex});
}

VerifyResult Platform::verify_request(const std::string& bfid, const std::optional<std::string>& digest_hex,
                                      const std::optional<std::string>& region,
                                      const std::optional<std::uint64_t>& ts) {
    std::vector<std::string> t = {"VERIFY", bfid};
    if (digest_hex) t.push_back(*digest_hex);
    if (region) t.push_back("region=" + *region);
    if (ts) t.push_back("ts=" + std::to_string(*ts));
    std::unique_lock lock(mu_);
    VerifyResult res;
    do_verify(t, &res);
    return res;
}

void Platform::record_trace_event(const TraceEvent& ev, const std::string& sig_hex) {
    std::unique_lock lock(mu_);
    do_event({"EVENT", ev.bfid, to_string(ev.stage), ev.region, std::to_string(ev.ts), sig_hex});
}

std::vector<TraceEvent> Platform::trace_request(const std::string& bfid) const {
    std::shared_lock lock(mu_);
    const std::string key = normalize_bfid(bfid);
    if (!identities_.count(key)) throw PlatformError("UNKNOWN_ID", "bfid " + key + " not registered");
    auto it = traces_.find(key);
    return it == traces_.end() ? std::vector<TraceEvent>{} : it->second;
}

std::optional<KeyRecord> Platform::subject(const std::string& id) const {
    std::shared_lock lock(mu_);
    auto it = subjects_.find(id);
    if (it == subjects_.end()) return std::nullopt;
    return it->second;
}

std::optional<IdentityRecord> Platform::identity(const std::string& bfid) const {
    std::shared_lock lock(mu_);
    auto it = identities_.find(bfid);
    if (it == identities_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t Platform::log_size() const {
    std::shared_lock lock(mu_);
    return log_.size();
}

std::string Platform::snapshot() const {
    std::shared_lock lock(mu_);
    std::ostringstream os;
    os << "log " << log_.size() << " clock " << clock_ << '\n';
    for (const auto& [id, k] : subjects_) {
        os << "subject " << id << ' ' << k.registered_at << ' ' << bytes_to_hex(as_bytes(k.key_text)) << '\n';
    }
    for (const auto& [b, r] : identities_) {
        os << "identity " << b << ' ' << r.subject_id << ' ' << r.digest_hex << ' ' << r.u_hex << ' '
           << quote(r.source_info) << ' ' << r.seq << '\n';
    }
    for (const auto& [b, list] : traces_) {
        for (const auto& e : list) {
            os << "event " << b << ' ' << to_string(e.stage) << ' ' << e.region << ' ' << e.ts << ' ' << e.seq << '\n';
        }
    }
    for (const auto& v : verifies_) {
        os << "verify " << v.bfid << ' ' << v.region << ' ' << v.ts << ' ' << to_string(v.verdict) << ' ' << v.seq
           << '\n';
    }
    return os.str();
}

}  // namespace bfid::platform
