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

#include "bfid/reesse.hpp"

namespace bfid::reesse {

namespace {

Natural pow2(unsigned k) { return Natural(1) << k; }

void require(bool ok, const std::string& what) {
    if (!ok) throw KeygenError(what);
}

}  // namespace

ParameterProfile ParameterProfile::paper(std::size_t m, std::size_t n) {
    ParameterProfile p;
    p.name = "paper" + std::to_string(m);
    p.kind = ProfileKind::paper;
    p.m = m;
    p.n = n;
    p.bounds = {5, pow2(8), pow2(9), pow2(54), pow2(52), 64};
    p.e_product_target = 256;
    p.cofactor_reserve_bits = 8;
    p.validate();
    return p;
}

ParameterProfile ParameterProfile::toy24() {
    ParameterProfile p;
    p.name = "toy24";
    p.kind = ProfileKind::toy;
    p.m = 24;
    p.n = 8;
    p.d = Natural(5);
    p.T = Natural(7);
    p.D_factors = std::vector<PrimePower>{{11, 1}, {13, 1}};
    p.bounds = {5, pow2(8), 7, pow2(7), pow2(3), 12};
    p.e_product_target = 2;
    p.cofactor_reserve_bits = 6;
    return p;
}

ParameterProfile ParameterProfile::toy32() {
    ParameterProfile p;
    p.name = "toy32";
    p.kind = ProfileKind::toy;
    p.m = 32;
    p.n = 16;
    p.d = Natural(7);
    p.T = Natural(17);
    p.D_factors = std::vector<PrimePower>{{19, 1}, {23, 1}, {29, 1}};
    p.bounds = {5, pow2(8), 17, pow2(13), pow2(4), 20};
    p.e_product_target = 2;
    p.cofactor_reserve_bits = 6;
    return p;
}

ParameterProfile ParameterProfile::by_name(const std::string& name) {
    if (name == "toy24") return toy24();
    if (name == "toy32") return toy32();
    if (name == "paper80" || name == "paper") return paper(80, 80);
    if (name == "paper96") return paper(96, 96);
    throw std::invalid_argument("unknown parameter profile '" + name + "' (toy24, toy32, paper80, paper96)");
}

void ParameterProfile::validate() const {
    require(n >= 2 && n % 2 == 0, "sequence length n must be even and >= 2");
    require(n <= m, "sequence length n must not exceed m");
    if (kind == ProfileKind::paper) {
        require(m >= 80 && m <= 96, "paper profiles need 80 <= m <= 96");
        require(n >= 80, "paper profiles need n >= 80");
    } else {
        require(m >= 16, "toy profiles need m >= 16");
    }
    require(numeric::small_primes_upto(coprime_bound.get_ui()).size() >= n,
            "coprime set is too small for n pairwise coprime values");
    const bool fixed = d.has_value();
    require(fixed == T.has_value() && fixed == D_factors.has_value(), "d, T, D must be fixed together");
    if (!fixed) return;
    const Natural D = numeric::product(*D_factors);
    require(numeric::gcd(*d, *T) == 1 && numeric::gcd(*d, D) == 1 && numeric::gcd(D, *T) == 1,
            "d, D, T must be pairwise coprime");
    require(*d >= bounds.d_min && *d <= bounds.d_max, "d out of range");
    require(*T >= bounds.T_min, "T below its lower bound");
    require(D >= bounds.D_min, "D below its lower bound");
    bool has_big_prime = std::any_of(D_factors->begin(), D_factors->end(),
                                     [&](const PrimePower& f) { return f.prime >= bounds.D_prime_min; });
    require(has_big_prime, "D lacks a prime factor above its bound");
    require(bit_length(*d * D * *T - 1) >= bounds.dDT_bits_min, "ceil(lg(dDT)) below its bound");
}

InterpretationConfig InterpretationConfig::as_printed() { return {}; }

InterpretationConfig InterpretationConfig::reconstructed() {
    InterpretationConfig c;
    c.name = "reconstructed";
    c.alpha = AlphaForm::delta_power_sigma;
    c.beta = BetaForm::product_T;
    c.hbar = HbarForm::w_only;
    c.u_exponent = UExponent::product;
    return c;
}

std::vector<InterpretationConfig> InterpretationConfig::probe_variants() {
    std::vector<InterpretationConfig> out;
    auto printed = [&](std::string name, auto&& tweak) {
        InterpretationConfig c = as_printed();
        c.name = std::move(name);
        tweak(c);
        out.push_back(c);
    };
    auto rebuilt = [&](std::string name, auto&& tweak) {
        InterpretationConfig c = reconstructed();
        c.name = std::move(name);
        tweak(c);
        out.push_back(c);
    };
    out.push_back(as_printed());
    printed("s6-inverted", [](auto& c) { c.s6 = S6Exit::when_not_divides; });
    printed("u-product", [](auto& c) { c.u_exponent = UExponent::product; });
    printed("alpha-product", [](auto& c) { c.alpha = AlphaForm::product_T; });
    printed("beta-product", [](auto& c) { c.beta = BetaForm::product_T; });
    printed("g0-outer", [](auto& c) { c.g0 = G0Form::outer; });
    printed("w-gcd-order", [](auto& c) { c.w_gcd = WGcdScope::order; });
    printed("exp-mod-M", [](auto& c) { c.exponents = ExponentModulus::modulus; });
    out.push_back(reconstructed());
    rebuilt("reconstructed-s6-inverted", [](auto& c) { c.s6 = S6Exit::when_not_divides; });
    rebuilt("reconstructed-hbar-printed", [](auto& c) { c.hbar = HbarForm::printed; });
    rebuilt("reconstructed-alpha-printed", [](auto& c) { c.alpha = AlphaForm::printed_power; });
    rebuilt("reconstructed-alpha-product", [](auto& c) { c.alpha = AlphaForm::product_T; });
    rebuilt("reconstructed-beta-printed", [](auto& c) { c.beta = BetaForm::printed_power; });
    rebuilt("reconstructed-u-power", [](auto& c) { c.u_exponent = UExponent::power; });
    rebuilt("reconstructed-g0-outer", [](auto& c) { c.g0 = G0Form::outer; });
    rebuilt("reconstructed-exp-mod-M", [](auto& c) { c.exponents = ExponentModulus::modulus; });
    return out;
}

InterpretationConfig InterpretationConfig::by_name(const std::string& name) {
    for (auto& v : probe_variants()) {
        if (v.name == name) return v;
    }
    if (name == "as-printed-strict") {
        InterpretationConfig c;
        c.name = name;
        c.e_budget = EBudget::strict;
        return c;
    }
    if (name == "reconstructed-strict") {
        InterpretationConfig c = reconstructed();
        c.name = name;
        c.e_budget = EBudget::strict;
        return c;
    }
    throw std::invalid_argument("unknown interpretation '" + name + "'");
}

std::vector<InterpretationConfig::Flag> InterpretationConfig::describe() const {
    std::vector<Flag> out;
    out.push_back({"w_gcd", w_gcd == WGcdScope::dD ? "gcd(W,dD)>1" : "gcd(W,M-1)>1",
                   "S3: gcd(W, d̄D̄) > 1"});
    const char* a = alpha == AlphaForm::printed_power ? "(sigma+delta*W^(sigma-1))^T"
                    : alpha == AlphaForm::product_T   ? "(sigma+delta*W^(sigma-1))*T"
                                                      : "(delta^sigma+delta*W^(sigma-1))*T";
    out.push_back({"alpha", a, "S4: α ← δ^{(σ̄ + δW^{σ̄−1})^T}"});
    out.push_back({"beta", beta == BetaForm::printed_power ? "W^(sigma*T)" : "W^sigma*T", "S4: β ← δ^{W^{σ̄T}}"});
    out.push_back({"hbar", hbar == HbarForm::printed ? "(W*prod A_i)^(-delta*S)*alpha/delta"
                                                     : "W^(-delta*S)*alpha/delta",
                   "S4: ℏ ← (W∏A_i)^{−δS}(αδ^{−1}) % M"});
    out.push_back({"g0", g0 == G0Form::per_item ? "(prod A_i^(-b_i))^delta" : "(prod A_i^(b_i))^(-delta)",
                   "signing S2: G0 ← (∏A_i^{−b_i})^δ % M"});
    out.push_back({"u_exponent", u_exponent == UExponent::power ? "U^T" : "U*T", "verification S3: (αQ^{−1})^{QU^T}"});
    out.push_back({"s6", s6 == S6Exit::when_divides ? "exit when d | expr" : "exit when d does not divide expr",
                   "signing S6: If d̄ ∤ ((WQ)^{σ̄−1} + ξ̄ + rUS) % M̄ then go to S5 else end"});
    out.push_back({"exponents", exponents == ExponentModulus::order ? "mod M-1" : "mod M",
                   "exponent arithmetic of S4 and verification S3 (printed '% M')"});
    out.push_back({"e_budget", e_budget == EBudget::relaxed ? "relaxed" : "strict",
                   "S2: ∏e_i ≈ 2^8 and p_k < p_{n/2}"});
    return out;
}

}  // namespace bfid::reesse
