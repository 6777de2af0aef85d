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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bfid/netapps.hpp"
#include "fixtures.hpp"

using namespace bfid;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs <= limit_s;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3fs / limit %.3fs", secs, limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << id << "] " << name << " (" << timing
              << (in_time ? "" : ", over time") << ")";
    if (!out.detail.empty()) std::cout << ": " << out.detail;
    std::cout << std::endl;
}

std::string digits(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (auto x : v) s += std::to_string(x);
    return s;
}

BitString random_nonzero(std::size_t n, numeric::Rng& rng) {
    BitString b(n);
    do {
        for (std::size_t i = 0; i < n; ++i) b.set(i, rng.uniform(0, 1));
    } while (b.is_zero());
    return b;
}

// Independent exponent oracle: cyclic distance to the previous 1-bit,
// doubled when the bit half a string away is set.
std::vector<std::uint32_t> exponent_oracle(const BitString& b) {
    const std::size_t n = b.size();
    std::vector<std::uint32_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!b[i]) continue;
        std::uint32_t dist = 1;
        while (!b[(i + n - dist) % n]) ++dist;
        out[i] = dist * (b[(i + n / 2) % n] ? 2 : 1);
    }
    return out;
}

std::string pct(std::size_t num, std::size_t den) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu/%zu = %.2f%%", num, den, 100.0 * static_cast<double>(num) / den);
    return buf;
}

}  // namespace

int main() {
    constexpr double kShadowLimit = 0.001;
    constexpr double kMinRejection = 0.999;

    criterion(1, "bit shadow of 01010100 is 04020200", kShadowLimit, [] {
        const auto s = digits(juna::bit_shadow(BitString::from_text("01010100")).values);
        return Outcome{s == "04020200", "got " + s};
    });

    criterion(2, "bit long-shadow of 01010100 is 08020400", kShadowLimit, [] {
        const auto s = digits(juna::bit_long_shadow(BitString::from_text("01010100")));
        return Outcome{s == "08020400", "got " + s};
    });

    criterion(3, "shadow sums equal n over 10000 random strings", 5.0, [] {
        numeric::Rng rng(1001);
        std::size_t good = 0, total = 0;
        for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
            for (int t = 0; t < 2000; ++t) {
                const auto s = juna::bit_shadow(random_nonzero(n, rng)).values;
                std::uint64_t sum = 0;
                for (auto v : s) sum += v;
                good += sum == n;
                ++total;
            }
        }
        return Outcome{good == total && total == 10000, pct(good, total)};
    });

    criterion(4, "Juna compression matches the direct product oracle (m=20, n=8)", 5.0, [] {
        numeric::Rng rng(1002);
        const auto iv = juna::hash_init(juna::HashConfig::toy_config(20, 8, 31, 8), rng);
        std::size_t good = 0;
        for (int t = 0; t < 1000; ++t) {
            const auto msg = random_nonzero(8, rng);
            const auto exps = exponent_oracle(msg);
            Natural d = 1;
            for (std::size_t i = 0; i < exps.size(); ++i) {
                for (std::uint32_t k = 0; k < exps[i]; ++k) d = d * iv.C[i] % iv.M;
            }
            good += juna::hash_compress(iv, msg) == d;
        }
        return Outcome{good == 1000, pct(good, 1000) + ", M bits " + std::to_string(bit_length(iv.M))};
    });

    criterion(5, "hash_init at m=80, n=80 passes the invariant audit", 60.0, [] {
        numeric::Rng rng(1003);
        const auto iv = juna::hash_init(juna::HashConfig::paper(80, 80), rng);
        const auto audit = juna::audit_init_value(iv);
        std::size_t pass = 0;
        std::string first_fail;
        for (const auto& e : audit) {
            pass += e.pass;
            if (!e.pass && first_fail.empty()) first_fail = e.condition;
        }
        return Outcome{pass == audit.size(),
                       std::to_string(pass) + "/" + std::to_string(audit.size()) + " checks" +
                           (first_fail.empty() ? "" : ", first failure: " + first_fail)};
    });

    std::optional<reesse::KeyMaterial> paper_key;
    criterion(6, "keygen at m=80 passes constraint_audit (relaxed e_i budget)", 300.0, [&] {
        numeric::Rng rng(1004);
        paper_key = reesse::keygen(reesse::ParameterProfile::paper(80, 80),
                                   reesse::InterpretationConfig::reconstructed(), rng);
        const auto rep = reesse::constraint_audit(paper_key->pub, paper_key->priv, paper_key->common,
                                                  paper_key->profile, reesse::InterpretationConfig::reconstructed());
        return Outcome{rep.all_pass(), std::to_string(rep.passed()) + "/" + std::to_string(rep.items.size()) +
                                           " checks, prod e_i " +
                                           std::to_string(paper_key->small_primes.e_product) +
                                           (paper_key->small_primes.relaxed ? " (relaxed)" : "")};
    });
    for (const std::string profile : {"toy24", "toy32"}) {
        criterion(6, "keygen on " + profile + " passes the strict audit", 5.0, [&] {
            numeric::Rng rng(1005);
            const auto strict = reesse::InterpretationConfig::by_name("reconstructed-strict");
            const auto k = reesse::keygen(reesse::ParameterProfile::by_name(profile), strict, rng);
            const auto rep = reesse::constraint_audit(k.pub, k.priv, k.common, k.profile, strict);
            return Outcome{rep.all_pass(), std::to_string(rep.passed()) + "/" + std::to_string(rep.items.size()) +
                                               " checks"};
        });
    }

    criterion(7, "packed signature is 160 bits and escrow BFID is 16 symbols at m=80", 60.0, [&] {
        if (!paper_key) return Outcome{false, "no m=80 key"};
        numeric::Rng rng(1006);
        codec::ObjectProfile p;
        p.subject_id = "acme";
        p.add("product", "tea").add("serial", "000001");
        const auto c = codec::confect_bfid(paper_key->priv, paper_key->common, p, expand_sha256, codec::Mode::escrow,
                                           reesse::InterpretationConfig::reconstructed(), rng);
        const auto bits = reesse::pack_signature(c.signature, paper_key->common.m()).size();
        const auto ok = codec::verify_bfid(paper_key->pub, paper_key->common, p, c.bfid.text, c.signature.U,
                                           expand_sha256, reesse::InterpretationConfig::reconstructed())
                            .accepted;
        return Outcome{bits == 160 && c.bfid.text.size() == 16,
                       std::to_string(bits) + " bits, BFID " + c.bfid.text + " (" +
                           std::to_string(c.bfid.text.size()) + " symbols, verifies " + (ok ? "yes" : "no") + ")"};
    });

    criterion(8, "tamper and cross-key rejection at toy scale", 120.0, [] {
        const auto interp = reesse::InterpretationConfig::reconstructed();
        numeric::Rng rng(1007);
        const auto a = reesse::keygen(reesse::ParameterProfile::toy32(), interp, rng);
        const auto b = reesse::keygen(reesse::ParameterProfile::toy32(), interp, rng);
        std::size_t tamper_rej = 0, cross_rej = 0;
        for (int t = 0; t < 1000; ++t) {
            const auto digest = random_nonzero(a.common.n, rng);
            const auto sig = reesse::sign_digest(a.priv, a.common, digest, interp, rng);
            auto tampered = digest;
            tampered.flip(rng.uniform(0, digest.size() - 1));
            tamper_rej += !reesse::verify_digest(a.pub, a.common, tampered, sig, interp).accepted;
            cross_rej += !reesse::verify_digest(b.pub, b.common, digest, sig, interp).accepted;
        }
        const bool ok = tamper_rej >= kMinRejection * 1000 && cross_rej >= kMinRejection * 1000;
        return Outcome{ok, "tamper " + pct(tamper_rej, 1000) + ", cross-key " + pct(cross_rej, 1000)};
    });

    criterion(9, "round-trip probe localizes every non-accepting trial", 600.0, [] {
        numeric::Rng rng(1008);
        const auto variants = reesse::InterpretationConfig::probe_variants();
        const auto rep = reesse::roundtrip_probe({reesse::ParameterProfile::toy24(), reesse::ParameterProfile::toy32()},
                                                 variants, 100, rng);
        bool localized = true, reaudit = true;
        for (const auto& row : rep.rows) {
            std::size_t n = 0;
            for (const auto& [q, c] : row.divergences) n += c;
            localized &= n == row.trials - row.accepted && row.trials == 100;
            reaudit &= row.reaudit_ok;
        }
        std::string accepting;
        for (const auto& v : rep.fully_accepting_variants()) accepting += (accepting.empty() ? "" : ",") + v;
        std::string printed = "?";
        for (const auto& row : rep.rows) {
            if (row.variant == "as-printed" && row.profile == "toy24") {
                printed = std::to_string(row.accepted) + "/" + std::to_string(row.trials) + " first divergence " +
                          row.first_divergence;
            }
        }
        const bool ok = localized && reaudit && variants.size() >= 4 && rep.rows.size() == 2 * variants.size();
        return Outcome{ok, std::to_string(variants.size()) + " variants x 2 profiles; as-printed " + printed +
                               "; fully accepting: " + (accepting.empty() ? "none" : accepting)};
    });

    criterion(10, "platform end-to-end scenario and restart replay", 30.0, [] {
        const auto path = (std::filesystem::temp_directory_path() /
                           ("bfid_accept_" + std::to_string(::getpid()) + ".log"))
                              .string();
        std::filesystem::remove(path);
        platform::PlatformConfig cfg;
        cfg.log_path = path;
        std::string snap;
        std::vector<std::string> got;
        {
            platform::Platform p(cfg);
            testing::Issuer acme("acme", 1009);
            got.push_back(p.handle(acme.register_frame()));
            const auto c = acme.confect(testing::item("42"), "Hangzhou plant 3");
            got.push_back(p.handle(acme.register_id_frame(c)));
            got.push_back(p.handle("VERIFY " + c.bfid.text));
            got.push_back(p.handle("VERIFY " + std::string(16, '7')));
            got.push_back(p.handle("VERIFY " + c.bfid.text + " " + to_hex(c.digest.to_natural() ^ 1)));
            snap = p.snapshot();
        }
        platform::Platform again(cfg);
        const bool same = again.snapshot() == snap;
        std::filesystem::remove(path);
        const std::vector<std::string> want = {"OK\n", "OK\n", "OK ACCEPT \"Hangzhou plant 3\"\n", "OK UNKNOWN\n",
                                               "OK REJECT\n"};
        std::string trace;
        for (auto s : got) trace += (trace.empty() ? "" : " | ") + s.substr(0, s.size() - 1);
        return Outcome{got == want && same, trace + (same ? "; replay identical" : "; replay differs")};
    });

    criterion(11, "fraud guard raises one overlap and one failure-burst alert", 5.0, [] {
        platform::PlatformConfig cfg;
        cfg.durable = false;
        cfg.burst_threshold = 5;
        std::string detail;
        bool ok = true;
        {
            platform::Platform p(cfg);
            testing::Issuer acme("acme", 1010);
            p.handle(acme.register_frame());
            const auto c = acme.confect(testing::item("overlap"));
            p.handle(acme.register_id_frame(c));
            p.handle("VERIFY " + c.bfid.text + " region=beijing ts=1000");
            p.handle("VERIFY " + c.bfid.text + " region=urumqi ts=1600");
            const auto alerts = p.fraud_scan(3600);
            ok &= alerts.size() == 1 && alerts[0].reason == platform::AlertReason::repeat_verify_overlap &&
                  p.evidence_valid(alerts[0], 3600);
            detail += "overlap alerts " + std::to_string(alerts.size());
        }
        {
            platform::Platform p(cfg);
            testing::Issuer acme("acme", 1011);
            p.handle(acme.register_frame());
            const auto c = acme.confect(testing::item("burst"));
            p.handle(acme.register_id_frame(c));
            const auto wrong = to_hex(c.digest.to_natural() ^ 1);
            for (int i = 0; i < 10; ++i) p.handle("VERIFY " + c.bfid.text + " " + wrong + " ts=" + std::to_string(i));
            const auto alerts = p.fraud_scan(3600);
            ok &= alerts.size() == 1 && alerts[0].reason == platform::AlertReason::verify_failure_burst &&
                  p.evidence_valid(alerts[0], 3600);
            detail += ", burst alerts " + std::to_string(alerts.size());
            if (!alerts.empty()) detail += " citing " + std::to_string(alerts[0].evidence.size()) + " entries";
        }
        return Outcome{ok, detail + (ok ? ", evidence valid" : "")};
    });

    criterion(12, "IPv6+ pack/parse identity on layouts (32,8) and (24,16)", 5.0, [] {
        numeric::Rng rng(1012);
        std::size_t good = 0;
        for (const netapps::Layout layout : {netapps::Layout{32, 8}, netapps::Layout{24, 16}}) {
            for (int t = 0; t < 1000; ++t) {
                netapps::Ipv6PlusAddress a;
                a.layout = layout;
                a.nation_id = static_cast<unsigned>(rng.uniform(0, 255));
                a.routing = rng.random_bits(layout.routing_bits);
                a.subnet = rng.random_bits(layout.subnet_bits);
                for (std::size_t i = 0; i < netapps::kInterfaceIdBits; ++i) a.interface_id.set(i, rng.uniform(0, 1));
                good += netapps::parse_address(netapps::pack_address(a), layout) == a &&
                        netapps::parse_address_text(netapps::format_address(a)) == a;
            }
        }
        netapps::Ipv6PlusAddress cn;
        cn.nation_id = 86;
        cn.routing = 0x0a000001;
        cn.subnet = 0x10;
        const auto text = netapps::format_address(cn);
        const bool cn_ok = text.rfind("560a00000110", 0) == 0 && netapps::parse_address_text(text) == cn;
        return Outcome{good == 2000 && cn_ok, pct(good, 2000) + ", nation 86: " + text};
    });

    criterion(13, "dynamic passwords are distinct and bound to the login context", 120.0, [] {
        testing::Issuer bank("bank", 1013);
        const netapps::LoginContext ctx{"alice", "2026-10-19", "09:30:00", "ws-17"};
        std::set<std::string> seen;
        for (int i = 0; i < 1000; ++i) {
            seen.insert(netapps::gen_dynamic_password(bank.keys.priv, bank.keys.common, ctx, expand_sha256,
                                                      bank.interp(), bank.rng));
        }
        const auto pw = *seen.begin();
        const bool genuine =
            netapps::check_dynamic_password(bank.keys.pub, bank.keys.common, ctx, pw, expand_sha256, bank.interp());
        const netapps::LoginContext altered{"alice", "2026-10-19", "09:31:00", "ws-17"};
        const bool replay =
            netapps::check_dynamic_password(bank.keys.pub, bank.keys.common, altered, pw, expand_sha256,
                                            bank.interp());
        return Outcome{seen.size() == 1000 && genuine && !replay,
                       std::to_string(seen.size()) + " distinct; genuine " + (genuine ? "accepted" : "rejected") +
                           "; altered-context replay " + (replay ? "accepted" : "rejected")};
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
