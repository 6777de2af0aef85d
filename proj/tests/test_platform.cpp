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

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

using namespace bfid;
using namespace bfid::platform;
using bfid::testing::Issuer;
using bfid::testing::item;

namespace {

std::string temp_log(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() /
             ("bfid_" + tag + "_" + std::to_string(::getpid()) + ".log");
    std::filesystem::remove(p);
    return p.string();
}

PlatformConfig memory_config() {
    PlatformConfig c;
    c.durable = false;
    return c;
}

std::string code_of(const std::string& resp) {
    if (resp.rfind("ERR ", 0) != 0) return {};
    return resp.substr(4, resp.find(' ', 4) - 4);
}

}  // namespace

TEST(Wire, TokenizeAndQuote) {
    EXPECT_EQ(tokenize("A b  c"), (std::vector<std::string>{"A", "b", "c"}));
    EXPECT_EQ(tokenize(R"(X "two words" "q\"x" "b\\s")"),
              (std::vector<std::string>{"X", "two words", "q\"x", "b\\s"}));
    EXPECT_EQ(tokenize(R"(X "")"), (std::vector<std::string>{"X", ""}));
    EXPECT_EQ(tokenize(quote("a \"b\" \\c")).front(), "a \"b\" \\c");
    EXPECT_THROW(tokenize("X \"open"), PlatformError);
}

TEST(Wire, CanonicalBody) {
    EXPECT_EQ(canonical_body({"REGISTER_ID", "B", "s", "1", "2", "plain", "x"}), "REGISTER_ID B s 1 2 \"plain\" x");
    EXPECT_EQ(canonical_body({"EVENT", "B", "delivery", "r", "5"}), "EVENT B delivery r 5");
    EXPECT_EQ(canonical_body({"VERIFY", "has space"}), "VERIFY \"has space\"");
}

TEST(Wire, SignatureHex) {
    const reesse::Signature s{0x1f, 0x2e};
    const auto hex = signature_hex(s, 24);
    EXPECT_EQ(hex.size(), 12u);
    EXPECT_EQ(parse_signature_hex(hex, 24), s);
    EXPECT_THROW(parse_signature_hex("zz", 24), PlatformError);
}

TEST(Platform, EndToEnd) {
    Platform p(memory_config());
    Issuer acme("acme", 60);
    EXPECT_EQ(p.handle(acme.register_frame()), "OK\n");
    EXPECT_EQ(code_of(p.handle(acme.register_frame())), "DUPLICATE");

    const auto c = acme.confect(item("1"), "Hangzhou plant 3");
    EXPECT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
    EXPECT_EQ(code_of(p.handle(acme.register_id_frame(c))), "DUPLICATE");

    EXPECT_EQ(p.handle("VERIFY " + c.bfid.text), "OK ACCEPT \"Hangzhou plant 3\"\n");
    EXPECT_EQ(p.handle("VERIFY " + c.bfid.text + " " + to_hex(c.digest.to_natural())),
              "OK ACCEPT \"Hangzhou plant 3\"\n");
    const Natural wrong = c.digest.to_natural() ^ 1;
    EXPECT_EQ(p.handle("VERIFY " + c.bfid.text + " " + to_hex(wrong)), "OK REJECT\n");
    EXPECT_EQ(p.handle("VERIFY " + std::string(16, '7')), "OK UNKNOWN\n");

    // lowercase input names the same identity
    std::string lower = c.bfid.text;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    EXPECT_EQ(p.verify_request(lower, std::nullopt).verdict, Verdict::accept);

    EXPECT_TRUE(p.subject("acme").has_value());
    EXPECT_EQ(p.identity(c.bfid.text)->source_info, "Hangzhou plant 3");
}

TEST(Platform, ErrorCodes) {
    Platform p(memory_config());
    Issuer acme("acme", 61);
    Issuer rogue("rogue", 62);
    ASSERT_EQ(p.handle(acme.register_frame()), "OK\n");
    const auto c = acme.confect(item("2"));

    EXPECT_EQ(code_of(p.handle("FROB x")), "MALFORMED");
    EXPECT_EQ(code_of(p.handle("")), "MALFORMED");
    EXPECT_EQ(code_of(p.handle("VERIFY 0I00")), "MALFORMED");
    EXPECT_EQ(code_of(p.handle("VERIFY " + c.bfid.text + " ts=abc")), "MALFORMED");
    EXPECT_EQ(code_of(p.handle("TRACE " + c.bfid.text)), "UNKNOWN_ID");
    EXPECT_EQ(code_of(p.handle(rogue.register_id_frame(rogue.confect(item("r"))))), "UNKNOWN_SUBJECT");

    // rogue signs a registration claiming to be acme
    auto forged = tokenize(rogue.register_id_frame(c));
    forged[2] = "acme";
    EXPECT_EQ(code_of(p.handle(canonical_body(forged))), "BAD_SIGNATURE");

    // a key blob whose signature comes from another key
    auto swapped = tokenize(acme.register_frame());
    swapped[1] = "acme2";
    EXPECT_EQ(code_of(p.handle(canonical_body(swapped))), "BAD_SIGNATURE");

    EXPECT_EQ(code_of(p.handle("REGISTER_SUBJECT x 00ff 00")), "BAD_KEY");
    auto broken = acme.keys.pub;
    broken.alpha = 1;
    const auto text = reesse::public_key_text(broken, acme.keys.common);
    const auto frame = signed_frame({"REGISTER_SUBJECT", "broken", bytes_to_hex(as_bytes(text))}, acme.keys.priv,
                                    acme.keys.common, acme.rng);
    EXPECT_EQ(code_of(p.handle(frame)), "BAD_KEY");

    ASSERT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
    EXPECT_EQ(code_of(p.handle(acme.event_frame(c.bfid.text, "teleport", "x", 1))), "MALFORMED");
    EXPECT_EQ(p.handle(acme.event_frame(c.bfid.text, "delivery", "east", 10)), "OK\n");
    EXPECT_EQ(code_of(p.handle(acme.event_frame(c.bfid.text, "passage", "east", 9))), "OUT_OF_ORDER");
    EXPECT_EQ(code_of(p.handle(rogue.event_frame(c.bfid.text, "passage", "east", 11))), "BAD_SIGNATURE");
    EXPECT_THROW(p.trace_request(std::string(16, '9')), PlatformError);
}

TEST(Platform, TraceOrdering) {
    Platform p(memory_config());
    Issuer acme("acme", 63);
    ASSERT_EQ(p.handle(acme.register_frame()), "OK\n");
    const auto c = acme.confect(item("3"));
    ASSERT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
    EXPECT_EQ(p.handle("TRACE " + c.bfid.text), "OK 0\n");
    ASSERT_EQ(p.handle(acme.event_frame(c.bfid.text, "warehouse-out", "north", 100)), "OK\n");
    ASSERT_EQ(p.handle(acme.event_frame(c.bfid.text, "delivery", "east", 100)), "OK\n");
    ASSERT_EQ(p.handle(acme.event_frame(c.bfid.text, "marketing", "south", 250)), "OK\n");
    EXPECT_EQ(p.handle("TRACE " + c.bfid.text), "OK 3\n100 warehouse-out north\n100 delivery east\n250 marketing south\n");
    const auto events = p.trace_request(c.bfid.text);
    ASSERT_EQ(events.size(), 3u);
    EXPECT_LT(events[0].seq, events[1].seq);
    EXPECT_EQ(events[2].stage, Stage::marketing);
}

TEST(Platform, RestartReplaysToIdenticalState) {
    const auto path = temp_log("restart");
    std::string before;
    std::string bfid;
    {
        PlatformConfig cfg;
        cfg.log_path = path;
        Platform p(cfg);
        Issuer acme("acme", 64);
        ASSERT_EQ(p.handle(acme.register_frame()), "OK\n");
        const auto c = acme.confect(item("4"), "with \"quotes\" and spaces");
        bfid = c.bfid.text;
        ASSERT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
        ASSERT_EQ(p.handle(acme.event_frame(bfid, "delivery", "west", 7)), "OK\n");
        p.handle("VERIFY " + bfid + " region=west ts=8");
        p.handle("VERIFY " + std::string(16, 'Z'));
        p.handle("BOGUS");  // rejected frames are not logged
        before = p.snapshot();
        EXPECT_EQ(p.log_size(), 5u);
    }
    {
        PlatformConfig cfg;
        cfg.log_path = path;
        Platform p(cfg);
        EXPECT_EQ(p.snapshot(), before);
        EXPECT_EQ(p.handle("VERIFY " + bfid), "OK ACCEPT \"with \\\"quotes\\\" and spaces\"\n");
    }
    std::filesystem::remove(path);
}

TEST(Platform, CorruptLogRefusesToStart) {
    const auto path = temp_log("corrupt");
    {
        std::ofstream out(path);
        out << "REGISTER_ID 0000000000000000 nobody 1 2 \"x\" 00\n";
    }
    PlatformConfig cfg;
    cfg.log_path = path;
    EXPECT_THROW(Platform p(cfg), std::runtime_error);
    std::filesystem::remove(path);
}

TEST(Fraud, OverlapAlert) {
    Platform p(memory_config());
    Issuer acme("acme", 65);
    ASSERT_EQ(p.handle(acme.register_frame()), "OK\n");
    const auto c = acme.confect(item("5"));
    ASSERT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
    p.handle("VERIFY " + c.bfid.text + " region=beijing ts=1000");
    p.handle("VERIFY " + c.bfid.text + " region=beijing ts=1500");
    p.handle("VERIFY " + c.bfid.text + " region=lhasa ts=2000");
    const auto alerts = p.fraud_scan(3600);
    ASSERT_EQ(alerts.size(), 1u);
    EXPECT_EQ(alerts[0].reason, AlertReason::repeat_verify_overlap);
    EXPECT_EQ(alerts[0].bfid, c.bfid.text);
    EXPECT_TRUE(p.evidence_valid(alerts[0], 3600));
    EXPECT_TRUE(p.fraud_scan(100).empty());

    auto forged = alerts[0];
    forged.evidence = {1, 2};
    EXPECT_FALSE(p.evidence_valid(forged, 3600));
    const auto scan = p.handle("SCAN 3600");
    EXPECT_EQ(scan.rfind("OK 1\nALERT repeat-verify-overlap " + c.bfid.text + " ", 0), 0u) << scan;
}

TEST(Fraud, FailureAndUnknownBursts) {
    Platform p(memory_config());
    Issuer acme("acme", 66);
    ASSERT_EQ(p.handle(acme.register_frame()), "OK\n");
    const auto c = acme.confect(item("6"));
    ASSERT_EQ(p.handle(acme.register_id_frame(c)), "OK\n");
    const std::string wrong = to_hex(c.digest.to_natural() ^ 2);
    for (int i = 0; i < 5; ++i) p.handle("VERIFY " + c.bfid.text + " " + wrong + " ts=" + std::to_string(10 + i));
    EXPECT_TRUE(p.fraud_scan().empty());  // five is not more than the threshold
    p.handle("VERIFY " + c.bfid.text + " " + wrong + " ts=20");
    auto alerts = p.fraud_scan();
    ASSERT_EQ(alerts.size(), 1u);
    EXPECT_EQ(alerts[0].reason, AlertReason::verify_failure_burst);
    EXPECT_EQ(alerts[0].evidence.size(), 6u);
    EXPECT_TRUE(p.evidence_valid(alerts[0]));

    for (int i = 0; i < 6; ++i) p.handle("VERIFY " + std::string(15, 'A') + std::to_string(i) + " ts=30");
    alerts = p.fraud_scan();
    ASSERT_EQ(alerts.size(), 2u);
    EXPECT_EQ(alerts[1].reason, AlertReason::unknown_id_burst);
    EXPECT_EQ(alerts[1].bfid, "*");
    EXPECT_TRUE(p.evidence_valid(alerts[1]));
    auto bad = alerts[1];
    bad.evidence.pop_back();
    bad.evidence.pop_back();
    EXPECT_FALSE(p.evidence_valid(bad));
}

TEST(Transport, TcpRoundTrip) {
    Platform p(memory_config());
    Server server(p, "127.0.0.1", 0);
    server.start();
    ASSERT_NE(server.port(), 0);
    Issuer acme("acme", 67);
    {
        TcpClient client("127.0.0.1", server.port());
        EXPECT_EQ(client.request(acme.register_frame()), "OK\n");
        const auto c = acme.confect(item("7"), "dock 4");
        EXPECT_EQ(client.request(acme.register_id_frame(c)), "OK\n");
        EXPECT_EQ(client.request(acme.event_frame(c.bfid.text, "delivery", "port", 3)), "OK\n");
        EXPECT_EQ(client.request("TRACE " + c.bfid.text), "OK 1\n3 delivery port\n");
        EXPECT_EQ(client.request("VERIFY " + c.bfid.text), "OK ACCEPT \"dock 4\"\n");
        EXPECT_EQ(client.request("SCAN"), "OK 0\n");
        TcpClient second("127.0.0.1", server.port());
        EXPECT_EQ(second.request("VERIFY " + c.bfid.text), "OK ACCEPT \"dock 4\"\n");
    }
    const auto port = server.port();
    server.stop();
    EXPECT_THROW(TcpClient("127.0.0.1", port), TransportError);
}

TEST(Transport, Endpoint) {
    EXPECT_EQ(parse_endpoint("localhost:7000"), (std::pair<std::string, std::uint16_t>{"localhost", 7000}));
    EXPECT_THROW(parse_endpoint("localhost"), std::invalid_argument);
    EXPECT_THROW(parse_endpoint("h:70000"), std::invalid_argument);
    EXPECT_THROW(parse_endpoint("h:7x"), std::invalid_argument);
}
