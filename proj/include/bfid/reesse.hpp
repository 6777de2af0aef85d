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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfid/bits.hpp"
#include "bfid/digest.hpp"
#include "bfid/numeric.hpp"

/// Optimized REESSE1+ signatures: key generation, signing, verification,
/// a constraint auditor and a round-trip prober for the ambiguous formulas.
namespace bfid::reesse {

using numeric::FactoredModulus;
using numeric::PrimePower;

enum class ProfileKind { paper, toy };

struct ParameterBounds {
    Natural d_min, d_max, T_min, D_min, D_prime_min;
    std::size_t dDT_bits_min = 0;  // ceil(lg(dDT)) lower bound
};

struct ParameterProfile {
    std::string name;
    ProfileKind kind = ProfileKind::paper;
    std::size_t m = 80;
    std::size_t n = 80;
    // Fixed for toy profiles; generated in key generation S1 when empty.
    std::optional<Natural> d;
    std::optional<Natural> T;
    std::optional<std::vector<PrimePower>> D_factors;
    ParameterBounds bounds;
    unsigned long e_product_target = 256;  // prod e_i ~ 2^8
    Natural coprime_bound = 863;           // A_i drawn from {2, ..., 863}
    std::size_t cofactor_reserve_bits = 8; // bits left for the random prime-search cofactor

    static ParameterProfile paper(std::size_t m = 80, std::size_t n = 80);
    /// m=24, n=8, d=5, T=7, D=11*13.
    static ParameterProfile toy24();
    /// m=32, n=16, d=7, T=17, D=19*23*29.
    static ParameterProfile toy32();
    static ParameterProfile by_name(const std::string& name);

    bool conforming() const { return kind == ProfileKind::paper; }
    /// Throws KeygenError on inconsistent or out-of-range parameters.
    void validate() const;
};

// One flag per typographically ambiguous step; the first enumerator is the
// as-printed reading.
enum class WGcdScope { dD, order };                                // S3 "gcd(W, d̄D̄) > 1"
enum class AlphaForm { printed_power, product_T, delta_power_sigma }; // S4 alpha exponent
enum class BetaForm { printed_power, product_T };                  // S4 "δ^{W^{σ̄T}}"
enum class HbarForm { printed, w_only };                           // S4 ℏ
enum class G0Form { per_item, outer };                             // signing S2 G0
enum class UExponent { power, product };                           // verification S3 "QU^T"
enum class S6Exit { when_divides, when_not_divides };              // signing S6 loop polarity
enum class ExponentModulus { order, modulus };                     // reduce exponents mod M-1 or mod M
enum class EBudget { relaxed, strict };                            // S2 prod e_i ~ 2^8

struct InterpretationConfig {
    std::string name = "as-printed";
    WGcdScope w_gcd = WGcdScope::dD;
    AlphaForm alpha = AlphaForm::printed_power;
    BetaForm beta = BetaForm::printed_power;
    HbarForm hbar = HbarForm::printed;
    G0Form g0 = G0Form::per_item;
    UExponent u_exponent = UExponent::power;
    S6Exit s6 = S6Exit::when_divides;
    ExponentModulus exponents = ExponentModulus::order;
    EBudget e_budget = EBudget::relaxed;

    static InterpretationConfig as_printed();
    /// The variant under which verification accepts genuine signatures.
    static InterpretationConfig reconstructed();
    /// Every named variant the prober knows, as-printed first.
    static std::vector<InterpretationConfig> probe_variants();
    static InterpretationConfig by_name(const std::string& name);

    struct Flag {
        std::string name;
        std::string value;
        std::string printed;  // the printed text the flag disambiguates
    };
    std::vector<Flag> describe() const;
};

struct CommonParams {
    Natural sigma;
    std::size_t n = 0;
    Natural S;
    Natural T;
    FactoredModulus ctx;
    std::string interpretation = "as-printed";

    const Natural& M() const { return ctx.modulus; }
    const Natural& order() const { return ctx.order; }
    std::size_t m() const { return bit_length(ctx.modulus); }
};

struct PrivateKey {
    numeric::CoprimeSequence A;
    std::vector<long> ell;
    Natural W, delta, D, d, h_bar;
};

struct PublicKey {
    std::vector<Natural> C;
    Natural alpha, beta;
};

/// Which small-prime part S2 settled on.
struct SmallPrimeChoice {
    std::vector<PrimePower> part;
    unsigned long e_product = 1;
    bool relaxed = false;
    std::size_t budget_bits = 0;
};

struct KeyMaterial {
    PublicKey pub;
    PrivateKey priv;
    CommonParams common;
    ParameterProfile profile;  // with the S1 parameters filled in
    SmallPrimeChoice small_primes;
};

struct Signature {
    Natural Q, U;
    bool operator==(const Signature&) const = default;
};

/// Q || U, each left-padded to m bits.
BitString pack_signature(const Signature& sig, std::size_t m);
Signature unpack_signature(const BitString& bits, std::size_t m);

struct SigningTranscript {
    BitString b;
    Natural H, k_bar, G0, a_bar, Q, R, U_bar, g_bar, xi, U;
    std::uint64_t r = 0;
    std::uint64_t outer_iterations = 0;
    std::uint64_t r_draws = 0;
};

struct VerificationTranscript {
    Natural H, G1_bar, X, Y;
};

struct Verification {
    bool accepted = false;
    std::string reason;
    VerificationTranscript transcript;
};

class KeygenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SigningError : public std::runtime_error {
public:
    SigningError(const std::string& what, SigningTranscript t)
        : std::runtime_error(what), transcript(std::move(t)) {}
    SigningTranscript transcript;
};

constexpr std::uint64_t kMaxOuterIterations = 10'000;

KeyMaterial keygen(const ParameterProfile& profile, const InterpretationConfig& interp, numeric::Rng& rng);

Signature sign_digest(const PrivateKey& priv, const CommonParams& common, const BitString& digest,
                      const InterpretationConfig& interp, numeric::Rng& rng,
                      SigningTranscript* transcript = nullptr);

Signature sign(const PrivateKey& priv, const CommonParams& common, std::span<const std::uint8_t> message,
               const DigestFn& hash, const InterpretationConfig& interp, numeric::Rng& rng);

Verification verify_digest(const PublicKey& pub, const CommonParams& common, const BitString& digest,
                           const Signature& sig, const InterpretationConfig& interp);

Verification verify(const PublicKey& pub, const CommonParams& common, std::span<const std::uint8_t> message,
                    const Signature& sig, const DigestFn& hash, const InterpretationConfig& interp);

struct AuditItem {
    std::string step;
    std::string condition;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;

    bool all_pass() const;
    std::size_t passed() const;
    std::vector<AuditItem> failures() const;
    std::string to_text() const;
};

AuditReport constraint_audit(const PublicKey& pub, const PrivateKey& priv, const CommonParams& common,
                             const ParameterProfile& profile, const InterpretationConfig& interp);

/// Checks that need only public material; used when a registry accepts a key.
AuditReport audit_public(const PublicKey& pub, const CommonParams& common);

/// One comparison between the X- and Y-side expansions of verification.
struct Checkpoint {
    std::string name;
    Natural lhs, rhs;
    bool equal() const { return lhs == rhs; }
};

/// Term-by-term expansion of X and Y from the signer's and verifier's transcripts.
std::vector<Checkpoint> expand_verification(const KeyMaterial& keys, const SigningTranscript& st,
                                            const VerificationTranscript& vt, const Signature& sig,
                                            const InterpretationConfig& interp);

struct ProbeRow {
    std::string profile;
    std::string variant;
    std::size_t trials = 0;
    std::size_t accepted = 0;
    std::size_t sign_failures = 0;
    std::size_t audit_passed = 0;
    std::size_t audit_total = 0;
    bool reaudit_ok = true;
    std::string first_divergence = "-";            // most frequent first divergent quantity
    std::map<std::string, std::size_t> divergences; // quantity -> count of non-accepting trials

    double accept_rate() const { return trials == 0 ? 0.0 : static_cast<double>(accepted) / trials; }
};

struct ProbeReport {
    std::vector<ProbeRow> rows;

    std::string to_text() const;
    /// Variants that reached accept rate 1.0 on every profile.
    std::vector<std::string> fully_accepting_variants() const;
};

ProbeReport roundtrip_probe(const std::vector<ParameterProfile>& profiles,
                            const std::vector<InterpretationConfig>& variants, std::size_t trials,
                            numeric::Rng& rng);

}  // namespace bfid::reesse
