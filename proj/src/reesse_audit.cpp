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

#include <set>
#include <sstream>

#include "bfid/reesse.hpp"

namespace bfid::reesse {

using numeric::gcd;
using numeric::mod;
using numeric::mod_inv;
using numeric::mod_pow;

bool AuditReport::all_pass() const { return passed() == items.size(); }

std::size_t AuditReport::passed() const {
    std::size_t k = 0;
    for (const auto& i : items) k += i.pass ? 1 : 0;
    return k;
}

std::vector<AuditItem> AuditReport::failures() const {
    std::vector<AuditItem> out;
    for (const auto& i : items) {
        if (!i.pass) out.push_back(i);
    }
    return out;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    for (const auto& i : items) {
        os << (i.pass ? "PASS" : "FAIL") << '\t' << i.step << '\t' << i.condition;
        if (!i.detail.empty()) os << '\t' << i.detail;
        os << '\n';
    }
    os << passed() << '/' << items.size() << " conditions hold\n";
    return os.str();
}

namespace {

class Recorder {
public:
    explicit Recorder(AuditReport& r) : r_(r) {}
    void operator()(std::string step, std::string cond, bool pass, std::string detail = {}) {
        r_.items.push_back({std::move(step), std::move(cond), pass, std::move(detail)});
    }

private:
    AuditReport& r_;
};

std::string hex(const Natural& v) { return to_hex(v); }

bool in_open(const Natural& x, const Natural& lo, const Natural& hi) { return x > lo && x < hi; }

void audit_common(Recorder& rec, const PublicKey& pub, const CommonParams& common) {
    const Natural& M = common.M();
    const Natural& Mbar = common.order();
    rec("S2", "M is prime", numeric::is_probable_prime(M), "M=" + hex(M));
    rec("S2", "M - 1 equals the product of the recorded factors",
        Mbar == M - 1 && numeric::product(common.ctx.factors) == Mbar);
    bool factors_prime = true;
    for (const auto& f : common.ctx.factors) factors_prime &= numeric::is_probable_prime(f.prime);
    rec("S2", "recorded factors of M - 1 are prime", factors_prime);
    rec("S2", "T | M - 1", common.T > 0 && Mbar % common.T == 0, "T=" + hex(common.T));
    rec("S4", "gcd(S, M - 1) = 1", gcd(common.S, Mbar) == 1, "S=" + hex(common.S));
    const Natural half = Mbar / 2;
    const Natural lo = half > (Natural(1) << 40) ? Natural(half - (Natural(1) << 40)) : Natural(0);
    rec("S4", "sigma is prime", numeric::is_probable_prime(common.sigma), "sigma=" + hex(common.sigma));
    rec("S4", "sigma in [(M-1)/2 - 2^40, (M-1)/2]", common.sigma >= lo && common.sigma <= half);
    rec("S6", "|C| = n", pub.C.size() == common.n, std::to_string(pub.C.size()));
    bool c_range = true;
    for (const auto& c : pub.C) c_range &= in_open(c, 1, M);
    rec("S6", "every C_i in (1, M)", c_range);
    rec("S4", "alpha in (1, M)", in_open(pub.alpha, 1, M), "alpha=" + hex(pub.alpha));
    rec("S4", "beta in (1, M)", in_open(pub.beta, 1, M), "beta=" + hex(pub.beta));
}

}  // namespace

AuditReport audit_public(const PublicKey& pub, const CommonParams& common) {
    AuditReport r;
    Recorder rec(r);
    audit_common(rec, pub, common);
    return r;
}

AuditReport constraint_audit(const PublicKey& pub, const PrivateKey& priv, const CommonParams& common,
                             const ParameterProfile& profile, const InterpretationConfig& interp) {
    AuditReport r;
    Recorder rec(r);
    const Natural& M = common.M();
    const Natural& Mbar = common.order();
    const Natural& d = priv.d;
    const Natural& D = priv.D;
    const Natural& T = common.T;
    const std::size_t n = common.n;

    // S1
    rec("S1", "d, D, T pairwise coprime", gcd(d, D) == 1 && gcd(d, T) == 1 && gcd(D, T) == 1,
        "d=" + hex(d) + " D=" + hex(D) + " T=" + hex(T));
    if (profile.kind == ProfileKind::paper) {
        const auto& b = profile.bounds;
        rec("S1", "d in [5, 2^8]", d >= b.d_min && d <= b.d_max);
        rec("S1", "T >= 2^9", T >= b.T_min);
        rec("S1", "D >= 2^54", D >= b.D_min);
        bool big = false;
        for (const auto& f : numeric::factorize(D)) big |= f.prime >= b.D_prime_min;
        rec("S1", "D has a prime factor >= 2^52", big);
        rec("S1", "ceil(lg(dDT)) >= 64", bit_length(d * D * T - 1) >= b.dDT_bits_min);
    }
    rec("S1", "|A| = n", priv.A.items.size() == n);
    bool a_range = true, a_coprime = true;
    for (std::size_t i = 0; i < priv.A.items.size(); ++i) {
        a_range &= priv.A.items[i] >= 2 && priv.A.items[i] <= priv.A.bound;
        for (std::size_t j = i + 1; j < priv.A.items.size(); ++j) {
            a_coprime &= gcd(priv.A.items[i], priv.A.items[j]) == 1;
        }
    }
    rec("S1", "every A_i in [2, P]", a_range, "P=" + priv.A.bound.get_str());
    rec("S1", "A_i pairwise coprime", a_coprime);

    // S2
    audit_common(rec, pub, common);
    rec("S2", "bit length of M is m", bit_length(M) == profile.m, std::to_string(bit_length(M)));
    rec("S2", "dDT | M - 1", Mbar % (d * D * T) == 0);
    const auto primes = numeric::first_primes(n / 2);
    unsigned long e_prod = 1;
    for (const auto& f : common.ctx.factors) {
        if (f.prime < primes.back() && d % f.prime != 0 && T % f.prime != 0 && D % f.prime != 0 && f.prime != 2) {
            e_prod *= f.exponent;
        }
    }
    const bool strict_ok = e_prod * 2 >= profile.e_product_target;
    if (interp.e_budget == EBudget::strict) {
        rec("S2", "prod e_i >= target / 2", strict_ok, "prod e_i=" + std::to_string(e_prod));
    } else {
        rec("S2", "prod e_i maximized within the bit budget", true,
            "prod e_i=" + std::to_string(e_prod) + (strict_ok ? "" : " (relaxed)"));
    }

    // S3
    const Natural w_scope = interp.w_gcd == WGcdScope::dD ? Natural(d * D) : Mbar;
    rec("S3", interp.w_gcd == WGcdScope::dD ? "gcd(W, dD) > 1" : "gcd(W, M-1) > 1", gcd(priv.W, w_scope) > 1,
        "W=" + hex(priv.W));
    rec("S3", "W in (1, M - 1)", in_open(priv.W, 1, Mbar));
    rec("S3", "delta in (1, M - 1)", in_open(priv.delta, 1, Mbar), "delta=" + hex(priv.delta));
    rec("S3", "gcd(delta, M - 1) = 1", gcd(priv.delta, Mbar) == 1);
    const bool unit = gcd(priv.delta, M) == 1 && priv.delta != 0;
    const Natural ord = unit ? numeric::element_order(priv.delta, common.ctx) : Natural(0);
    rec("S3", "order of delta = dDT", ord == d * D * T, "order=" + hex(ord));

    // S4: recompute alpha, beta, h_bar independently of key generation.
    const Natural E = interp.exponents == ExponentModulus::order ? Mbar : M;
    const Natural& s = common.sigma;
    const Natural& w = priv.W;
    const Natural& dl = priv.delta;
    Natural ae;
    switch (interp.alpha) {
        case AlphaForm::printed_power: ae = mod_pow(s + dl * mod_pow(w, s - 1, E), T, E); break;
        case AlphaForm::product_T: ae = mod((s + dl * mod_pow(w, s - 1, E)) * T, E); break;
        case AlphaForm::delta_power_sigma: ae = mod((mod_pow(dl, s, E) + dl * mod_pow(w, s - 1, E)) * T, E); break;
    }
    rec("S4", "alpha recomputes", mod_pow(dl, ae, M) == pub.alpha);
    const Natural be = interp.beta == BetaForm::printed_power ? mod_pow(w, s * T, E) : mod(mod_pow(w, s, E) * T, E);
    rec("S4", "beta recomputes", mod_pow(dl, be, M) == pub.beta);
    Natural hb = w;
    if (interp.hbar == HbarForm::printed) {
        for (const auto& a : priv.A.items) hb = mod(hb * a, M);
    }
    const auto dinv = mod_inv(dl, M);
    const bool h_ok = dinv && mod(mod_pow(hb, mod(-(dl * common.S), E), M) * pub.alpha * *dinv, M) == priv.h_bar;
    rec("S4", "h_bar recomputes", h_ok);

    // S5
    std::set<long> seen;
    bool in_omega = true;
    for (long l : priv.ell) {
        const long a = l < 0 ? -l : l;
        in_omega &= a >= 5 && a <= static_cast<long>(2 * n + 3) && a % 2 == 1;
        seen.insert(l);
    }
    rec("S5", "|ell| = n", priv.ell.size() == n);
    rec("S5", "ell(i) pairwise distinct", seen.size() == priv.ell.size());
    rec("S5", "every ell(i) in Omega = {+-5, +-7, ..., +-(2n+3)}", in_omega);

    // S6
    bool c_ok = priv.ell.size() == n && pub.C.size() == n && priv.A.items.size() == n;
    for (std::size_t i = 0; c_ok && i < n; ++i) {
        const long l = priv.ell[i];
        Natural wl = l >= 0 ? mod_pow(w, Natural(static_cast<unsigned long>(l)), M)
                            : mod_pow(mod_inv(w, M).value_or(0), Natural(static_cast<unsigned long>(-l)), M);
        c_ok &= mod_pow(mod(priv.A.items[i] * wl, M), dl, M) == pub.C[i];
    }
    rec("S6", "C_i = (A_i W^ell(i))^delta mod M", c_ok);
    return r;
}

}  // namespace bfid::reesse
