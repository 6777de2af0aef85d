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

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bfid/reesse.hpp"

namespace bfid::reesse {

std::string ProbeReport::to_text() const {
    std::ostringstream os;
    os << "# profile\tvariant\ttrials\taccepted\taccept_rate\tsign_failures\taudit\treaudit\tfirst_divergence"
          "\tdivergence_counts\n";
    for (const auto& r : rows) {
        os << r.profile << '\t' << r.variant << '\t' << r.trials << '\t' << r.accepted << '\t' << std::fixed
           << std::setprecision(3) << r.accept_rate() << '\t' << r.sign_failures << '\t' << r.audit_passed << '/'
           << r.audit_total << '\t' << (r.reaudit_ok ? "ok" : "FAIL") << '\t' << r.first_divergence << '\t';
        if (r.divergences.empty()) os << '-';
        bool first = true;
        for (const auto& [k, v] : r.divergences) {
            os << (first ? "" : ",") << k << '=' << v;
            first = false;
        }
        os << '\n';
    }
    os << "# checkpoints: G1 = verifier product vs signer G0^-1 W^k; y-base = (G1^Q Ubar^-1)^S vs (alpha Q^-1)^Q;\n"
          "# left-factor = first X term vs first Y term with the r-part restored; right-factor = alpha^(Q^sigma)\n"
          "# vs beta term with the r-part removed; verdict = X vs Y; sign-budget = signing gave up\n";
    return os.str();
}

std::vector<std::string> ProbeReport::fully_accepting_variants() const {
    std::map<std::string, bool> all;
    for (const auto& r : rows) {
        auto [it, fresh] = all.emplace(r.variant, true);
        it->second = it->second && r.trials > 0 && r.accepted == r.trials;
    }
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (all[r.variant]) {
            out.push_back(r.variant);
            all[r.variant] = false;
        }
    }
    return out;
}

namespace {

ProbeRow probe_one(const ParameterProfile& profile, const InterpretationConfig& interp, std::size_t trials,
                   numeric::Rng& rng) {
    ProbeRow row;
    row.profile = profile.name;
    row.variant = interp.name;
    row.trials = trials;
    const KeyMaterial keys = keygen(profile, interp, rng);
    const AuditReport audit = constraint_audit(keys.pub, keys.priv, keys.common, keys.profile, interp);
    row.audit_passed = audit.passed();
    row.audit_total = audit.items.size();
    row.reaudit_ok = audit.all_pass();

    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint8_t> msg(16);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng.uniform(0, 255));
        BitString digest = expand_sha256(msg, keys.common.n);
        SigningTranscript st;
        Signature sig;
        try {
            sig = sign_digest(keys.priv, keys.common, digest, interp, rng, &st);
        } catch (const SigningError&) {
            ++row.sign_failures;
            ++row.divergences["sign-budget"];
            continue;
        }
        const Verification v = verify_digest(keys.pub, keys.common, digest, sig, interp);
        const auto cps = expand_verification(keys, st, v.transcript, sig, interp);
        // The expansion must rebuild the verifier's X and Y from the transcripts.
        const auto& verdict = cps.back();
        row.reaudit_ok = row.reaudit_ok && verdict.lhs == v.transcript.X && verdict.rhs == v.transcript.Y;
        if (v.accepted) {
            ++row.accepted;
            continue;
        }
        for (const auto& cp : cps) {
            if (!cp.equal()) {
                ++row.divergences[cp.name];
                break;
            }
        }
    }
    std::size_t best = 0;
    for (const auto& [k, v] : row.divergences) {
        if (v > best) {
            best = v;
            row.first_divergence = k;
        }
    }
    return row;
}

}  // namespace

ProbeReport roundtrip_probe(const std::vector<ParameterProfile>& profiles,
                            const std::vector<InterpretationConfig>& variants, std::size_t trials,
                            numeric::Rng& rng) {
    if (variants.size() < 4) throw std::invalid_argument("probe needs at least 4 interpretation variants");
    const bool has_printed = std::any_of(variants.begin(), variants.end(),
                                         [](const InterpretationConfig& v) { return v.name == "as-printed"; });
    if (!has_printed) throw std::invalid_argument("probe variants must include as-printed");
    if (profiles.empty()) throw std::invalid_argument("probe needs at least one profile");
    ProbeReport report;
    for (const auto& p : profiles) {
        for (const auto& v : variants) report.rows.push_back(probe_one(p, v, trials, rng));
    }
    return report;
}

}  // namespace bfid::reesse
