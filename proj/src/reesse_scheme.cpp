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
#include <functional>

#include "bfid/reesse.hpp"

namespace bfid::reesse {

using numeric::gcd;
using numeric::mod;
using numeric::mod_inv_or_throw;
using numeric::mod_pow;
using numeric::Rng;

namespace {

Natural random_prime(const Natural& lo, const Natural& hi, Rng& rng) {
    for (int i = 0; i < 1'000'000; ++i) {
        Natural c = rng.between(lo, hi);
        if (numeric::is_probable_prime(c)) return c;
    }
    throw KeygenError("no prime found in range");
}

Natural signed_pow(const Natural& base, long e, const Natural& M) {
    const Natural order = M - 1;
    if (e >= 0) return mod_pow(base, Natural(static_cast<unsigned long>(e)), M);
    return mod_pow(base, order - static_cast<unsigned long>(-e), M);
}

std::size_t lcm_bits(std::span<const PrimePower> a, std::span<const PrimePower> b) {
    const PrimePower two{2, 1};
    auto merged = numeric::merge_lcm(numeric::merge_lcm(a, b), std::span(&two, 1));
    return bit_length(numeric::product(merged));
}

// Picks prod_{i<=k} p_i^{e_i} maximizing prod e_i (capped near the target)
// within the bits left after d, D, T, the factor 2 and the cofactor reserve.
SmallPrimeChoice choose_small_primes(const std::vector<std::uint64_t>& candidates,
                                     const std::vector<PrimePower>& required, std::size_t m,
                                     std::size_t reserve, unsigned long target, EBudget rule) {
    const std::size_t base_bits = lcm_bits(required, {});
    if (base_bits + reserve + 2 > m) {
        throw KeygenError("d, D and T leave no room for the prime-search cofactor");
    }
    const std::size_t limit_bits = m - reserve;
    SmallPrimeChoice best;
    best.budget_bits = limit_bits - base_bits;
    std::size_t best_bits = base_bits;
    const unsigned long cap = 2 * target;

    std::vector<PrimePower> part;
    std::function<void(std::size_t, unsigned long)> dfs = [&](std::size_t idx, unsigned long eprod) {
        if (!part.empty()) {
            const std::size_t bits = lcm_bits(required, part);
            if (bits > limit_bits) return;
            if (eprod > best.e_product || (eprod == best.e_product && bits < best_bits)) {
                best.part = part;
                best.e_product = eprod;
                best_bits = bits;
            }
        }
        if (idx >= candidates.size()) return;
        for (unsigned e = 1; eprod * e <= cap; ++e) {
            part.push_back({Natural(static_cast<unsigned long>(candidates[idx])), e});
            const std::size_t bits = lcm_bits(required, part);
            if (bits > limit_bits) {
                part.pop_back();
                break;
            }
            dfs(idx + 1, eprod * e);
            part.pop_back();
        }
    };
    dfs(0, 1);

    const unsigned long floor_target = (target + 1) / 2;
    if (best.e_product < floor_target) {
        if (rule == EBudget::strict) {
            throw KeygenError("strict reading infeasible: best prod e_i = " + std::to_string(best.e_product) +
                              " within " + std::to_string(best.budget_bits) + " bits, target " +
                              std::to_string(target));
        }
        best.relaxed = true;
    }
    return best;
}

Natural exponent_modulus(const CommonParams& common, const InterpretationConfig& interp) {
    return interp.exponents == ExponentModulus::order ? common.order() : common.M();
}

struct PublicExtras {
    Natural alpha, beta, h_bar;
};

PublicExtras derive_alpha_beta_hbar(const CommonParams& common, const numeric::CoprimeSequence& A,
                                    const Natural& W, const Natural& delta, const InterpretationConfig& interp) {
    const Natural& M = common.M();
    const Natural E = exponent_modulus(common, interp);
    const Natural& sigma = common.sigma;
    const Natural w_sigma_1 = mod_pow(W, sigma - 1, E);
    Natural a_exp;
    switch (interp.alpha) {
        case AlphaForm::printed_power: a_exp = mod_pow(sigma + delta * w_sigma_1, common.T, E); break;
        case AlphaForm::product_T: a_exp = mod((sigma + delta * w_sigma_1) * common.T, E); break;
        case AlphaForm::delta_power_sigma: a_exp = mod((mod_pow(delta, sigma, E) + delta * w_sigma_1) * common.T, E); break;
    }
    const Natural b_exp = interp.beta == BetaForm::printed_power ? mod_pow(W, sigma * common.T, E)
                                                                 : mod(mod_pow(W, sigma, E) * common.T, E);
    PublicExtras out;
    out.alpha = mod_pow(delta, a_exp, M);
    out.beta = mod_pow(delta, b_exp, M);
    Natural base = W;
    if (interp.hbar == HbarForm::printed) {
        for (const auto& a : A.items) base = mod(base * a, M);
    }
    const Natural h_exp = mod(-(delta * common.S), E);
    out.h_bar = mod(mod_pow(base, h_exp, M) * out.alpha * mod_inv_or_throw(delta, M), M);
    return out;
}

}  // namespace

KeyMaterial keygen(const ParameterProfile& profile, const InterpretationConfig& interp, Rng& rng) {
    profile.validate();
    const std::size_t n = profile.n;
    const std::size_t m = profile.m;

    for (int attempt = 0; attempt < 64; ++attempt) {
        // S1
        ParameterProfile p = profile;
        if (!p.d) {
            p.d = random_prime(p.bounds.d_min, p.bounds.d_max, rng);
            p.T = random_prime(p.bounds.T_min, 2 * p.bounds.T_min - 1, rng);
            p.D_factors = std::vector<PrimePower>{{random_prime(p.bounds.D_min, 2 * p.bounds.D_min - 1, rng), 1}};
            const Natural D = numeric::product(*p.D_factors);
            if (bit_length(2 * *p.d * *p.T * D) + p.cofactor_reserve_bits + 2 > m) continue;
            p.validate();
        }
        const Natural d = *p.d, T = *p.T, D = numeric::product(*p.D_factors);
        auto A = numeric::gen_coprime_sequence(n, p.coprime_bound, rng);
        const auto primes = numeric::first_primes(n / 2);
        std::vector<std::uint64_t> small;
        for (auto q : primes) {
            if (q < primes.back()) small.push_back(q);
        }
        std::vector<long> omega;
        for (std::size_t i = 0; i < n; ++i) {
            long v = static_cast<long>(5 + 2 * i);
            omega.push_back(rng.uniform(0, 1) ? v : -v);
        }

        // S2
        auto required = numeric::merge_lcm(numeric::factorize(d), numeric::factorize(T));
        required = numeric::merge_lcm(required, *p.D_factors);
        SmallPrimeChoice choice = choose_small_primes(small, required, m, p.cofactor_reserve_bits,
                                                      p.e_product_target, interp.e_budget);
        const auto all_required = numeric::merge_lcm(required, choice.part);
        FactoredModulus ctx;
        try {
            ctx = numeric::find_prime_with_divisors(m, all_required, rng, 200'000);
        } catch (const numeric::NumericError&) {
            if (profile.d) throw;
            continue;
        }
        const Natural& M = ctx.modulus;
        const Natural& Mbar = ctx.order;

        CommonParams common;
        common.n = n;
        common.T = T;
        common.ctx = ctx;
        common.interpretation = interp.name;
        const Natural s_inv_hi = Mbar - 1 < (Natural(1) << 16) ? Natural(Mbar - 1) : Natural(Natural(1) << 16);
        for (;;) {
            Natural s_inv = rng.between(3, s_inv_hi);
            if (gcd(s_inv, Mbar) != 1) continue;
            common.S = mod_inv_or_throw(s_inv, Mbar);
            if (common.S > 1) break;
        }
        const Natural half = Mbar / 2;
        const Natural sigma_floor = half > (Natural(1) << 40) ? Natural(half - (Natural(1) << 40)) : Natural(2);
        common.sigma = 0;
        for (Natural c = half; c >= sigma_floor; c -= 1) {
            if (numeric::is_probable_prime(c)) {
                common.sigma = c;
                break;
            }
        }
        if (common.sigma == 0) throw KeygenError("no prime sigma near (M-1)/2");

        // S3
        std::vector<Natural> w_factors;
        const auto& scope = interp.w_gcd == WGcdScope::dD ? *p.D_factors : ctx.factors;
        for (const auto& f : scope) {
            if (d % f.prime != 0) w_factors.push_back(f.prime);
        }
        if (w_factors.empty()) throw KeygenError("no factor available to share with W");
        const Natural dDT = d * D * T;

        for (int inner = 0; inner < 1000; ++inner) {
            const Natural& f = w_factors[rng.uniform(0, w_factors.size() - 1)];
            const Natural W = f * rng.between(1, (Mbar - 1) / f);
            // A W divisible by d makes d | WQ for every Q and signing can never finish.
            if (W <= 1 || W >= Mbar || gcd(W, d) != 1) continue;
            Natural delta = numeric::element_of_order(dDT, ctx, rng);
            if (delta <= 1 || delta >= Mbar || gcd(delta, Mbar) != 1) continue;

            // S4
            auto extras = derive_alpha_beta_hbar(common, A, W, delta, interp);
            if (extras.alpha <= 1 || extras.beta <= 1 || extras.h_bar == 0) continue;

            // S5
            std::vector<long> ell = omega;
            rng.shuffle(ell);

            // S6
            PublicKey pub;
            pub.alpha = extras.alpha;
            pub.beta = extras.beta;
            bool degenerate = false;
            for (std::size_t i = 0; i < n; ++i) {
                Natural c = mod_pow(mod(A.items[i] * signed_pow(W, ell[i], M), M), delta, M);
                degenerate |= c <= 1;
                pub.C.push_back(c);
            }
            if (degenerate) continue;

            PrivateKey priv{A, ell, W, delta, D, d, extras.h_bar};
            return KeyMaterial{pub, priv, common, p, choice};
        }
    }
    throw KeygenError("key generation failed for profile " + profile.name);
}

BitString pack_signature(const Signature& sig, std::size_t m) {
    BitString out = BitString::from_natural(sig.Q, m);
    out.append(BitString::from_natural(sig.U, m));
    return out;
}

Signature unpack_signature(const BitString& bits, std::size_t m) {
    if (bits.size() != 2 * m) throw std::invalid_argument("packed signature must have 2m bits");
    return {bits.slice(0, m).to_natural(), bits.slice(m, m).to_natural()};
}

Signature sign_digest(const PrivateKey& priv, const CommonParams& common, const BitString& digest,
                      const InterpretationConfig& interp, Rng& rng, SigningTranscript* transcript) {
    const std::size_t n = common.n;
    if (digest.size() != n) {
        throw std::invalid_argument("digest has " + std::to_string(digest.size()) + " bits, key expects " +
                                    std::to_string(n));
    }
    const Natural& M = common.M();
    const Natural& Mbar = common.order();
    const Natural& d = priv.d;
    const Natural& delta = priv.delta;
    const Natural& W = priv.W;

    SigningTranscript st;
    // S1
    st.b = digest;
    st.H = digest.to_natural();
    // S2
    Natural lever_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (digest[i]) lever_sum += priv.ell[i];
    }
    st.k_bar = mod(delta * lever_sum, Mbar);
    Natural a_prod = 1;
    if (interp.g0 == G0Form::per_item) {
        for (std::size_t i = 0; i < n; ++i) {
            if (digest[i]) a_prod = mod(a_prod * mod_inv_or_throw(priv.A.items[i], M), M);
        }
        st.G0 = mod_pow(a_prod, delta, M);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (digest[i]) a_prod = mod(a_prod * priv.A.items[i], M);
        }
        st.G0 = mod_pow(mod_inv_or_throw(a_prod, M), delta, M);
    }

    const Natural dT = d * common.T;
    const Natural delta_inv = mod_inv_or_throw(delta, Mbar);
    const Natural s_inv = mod_inv_or_throw(common.S, Mbar);
    const Natural dh_inv = mod_inv_or_throw(mod(delta * priv.h_bar, M), M);
    const Natural g0_inv = mod_inv_or_throw(st.G0, M);
    const Natural w_k = mod_pow(W, mod(st.k_bar - delta, Mbar), M);
    const std::uint64_t r_max = d.get_ui() << 16;

    for (st.outer_iterations = 1; st.outer_iterations <= kMaxOuterIterations; ++st.outer_iterations) {
        // S3
        st.a_bar = rng.between(2, Mbar - 1);
        if (st.a_bar % dT == 0) continue;
        st.Q = mod((st.a_bar * priv.D + W * st.H) * delta_inv, Mbar);
        if (st.Q <= 1) continue;
        const Natural wq = mod(W * st.Q, Mbar);
        if (wq % d == 0) continue;

        // S4
        st.R = mod(mod_pow(mod(st.Q * dh_inv, M), s_inv, M) * g0_inv, M);
        st.U_bar = mod_pow(mod(st.R * w_k, M), st.Q, M);
        st.g_bar = mod_pow(delta, mod(st.a_bar * priv.D, Mbar), M);
        st.xi = numeric::geom_sum(mod(delta * st.Q, Mbar), mod(st.H * W, Mbar), common.sigma, Mbar);
        const Natural wq_pow = mod_pow(wq, common.sigma - 1, Mbar);

        // S5, S6
        for (std::uint64_t draw = 0; draw < r_max; ++draw) {
            ++st.r_draws;
            st.r = rng.uniform(1, r_max);
            st.U = mod(st.U_bar * mod_pow(st.g_bar, st.r, M), M);
            if (st.U <= 1) continue;
            const Natural rus = mod(Natural(static_cast<unsigned long>(st.r)) * st.U * common.S, Mbar);
            if (mod(rus + st.xi, Mbar) % d == 0) continue;
            const bool divides = mod(wq_pow + st.xi + rus, Mbar) % d == 0;
            const bool done = interp.s6 == S6Exit::when_divides ? divides : !divides;
            if (done) {
                if (transcript) *transcript = st;
                return {st.Q, st.U};
            }
        }
    }
    st.outer_iterations = kMaxOuterIterations;
    if (transcript) *transcript = st;
    throw SigningError("signing retry budget exhausted after " + std::to_string(kMaxOuterIterations) +
                           " iterations",
                       st);
}

Signature sign(const PrivateKey& priv, const CommonParams& common, std::span<const std::uint8_t> message,
               const DigestFn& hash, const InterpretationConfig& interp, Rng& rng) {
    return sign_digest(priv, common, hash(message, common.n), interp, rng);
}

Verification verify_digest(const PublicKey& pub, const CommonParams& common, const BitString& digest,
                           const Signature& sig, const InterpretationConfig& interp) {
    Verification v;
    const Natural& M = common.M();
    if (digest.size() != common.n || pub.C.size() != common.n) {
        v.reason = "digest or key length does not match n";
        return v;
    }
    if (sig.Q <= 1 || sig.Q >= M || sig.U <= 1 || sig.U >= M) {
        v.reason = "Q or U outside (1, M)";
        return v;
    }
    const Natural E = exponent_modulus(common, interp);
    auto& t = v.transcript;
    // S1, S2
    t.H = digest.to_natural();
    t.G1_bar = 1;
    for (std::size_t i = 0; i < common.n; ++i) {
        if (digest[i]) t.G1_bar = mod(t.G1_bar * pub.C[i], M);
    }
    // S3
    const Natural u_exp = interp.u_exponent == UExponent::power ? mod_pow(sig.U, common.T, E)
                                                                : mod(sig.U * common.T, E);
    const Natural x_left = mod_pow(mod(pub.alpha * mod_inv_or_throw(sig.Q, M), M), mod(sig.Q * u_exp, E), M);
    const Natural x_right = mod_pow(pub.alpha, mod_pow(sig.Q, common.sigma, E), M);
    t.X = mod(x_left * x_right, M);
    const Natural y_base = mod(mod_pow(t.G1_bar, sig.Q, M) * mod_inv_or_throw(sig.U, M), M);
    const Natural y_left = mod_pow(y_base, mod(sig.U * common.S * common.T, E), M);
    const Natural b_exp = mod(t.H * mod_pow(sig.Q, common.sigma - 1, E) + mod_pow(t.H, common.sigma, E), E);
    t.Y = mod(y_left * mod_pow(pub.beta, b_exp, M), M);
    // S4
    v.accepted = t.X == t.Y;
    v.reason = v.accepted ? "X = Y" : "X != Y";
    return v;
}

Verification verify(const PublicKey& pub, const CommonParams& common, std::span<const std::uint8_t> message,
                    const Signature& sig, const DigestFn& hash, const InterpretationConfig& interp) {
    return verify_digest(pub, common, hash(message, common.n), sig, interp);
}

std::vector<Checkpoint> expand_verification(const KeyMaterial& keys, const SigningTranscript& st,
                                            const VerificationTranscript& vt, const Signature& sig,
                                            const InterpretationConfig& interp) {
    const auto& common = keys.common;
    const auto& pub = keys.pub;
    const auto& priv = keys.priv;
    const Natural& M = common.M();
    const Natural E = exponent_modulus(common, interp);
    const Natural& Q = sig.Q;
    const Natural& U = sig.U;
    std::vector<Checkpoint> out;

    // G1 seen by the verifier against G0^-1 W^k from the signer.
    out.push_back({"G1", vt.G1_bar,
                   mod(mod_inv_or_throw(st.G0, M) * mod_pow(priv.W, st.k_bar, M), M)});

    // Y-side base with the r-dependent factor removed, against the X-side base.
    const Natural g1q = mod_pow(vt.G1_bar, Q, M);
    out.push_back({"y-base", mod_pow(mod(g1q * mod_inv_or_throw(st.U_bar, M), M), common.S, M),
                   mod_pow(mod(pub.alpha * mod_inv_or_throw(Q, M), M), Q, M)});

    const Natural ust = mod(U * common.S * common.T, E);
    const Natural u_exp = interp.u_exponent == UExponent::power ? mod_pow(U, common.T, E) : mod(U * common.T, E);
    const Natural g_r = mod_pow(st.g_bar, mod(Natural(static_cast<unsigned long>(st.r)) * ust, E), M);
    const Natural y_left = mod_pow(mod(g1q * mod_inv_or_throw(U, M), M), ust, M);
    const Natural x_left = mod_pow(mod(pub.alpha * mod_inv_or_throw(Q, M), M), mod(Q * u_exp, E), M);
    out.push_back({"left-factor", mod(y_left * g_r, M), x_left});

    const Natural b_exp = mod(vt.H * mod_pow(Q, common.sigma - 1, E) + mod_pow(vt.H, common.sigma, E), E);
    const Natural x_right = mod_pow(pub.alpha, mod_pow(Q, common.sigma, E), M);
    const Natural y_right = mod_pow(pub.beta, b_exp, M);
    out.push_back({"right-factor", x_right, mod(mod_inv_or_throw(g_r, M) * y_right, M)});

    out.push_back({"verdict", mod(x_left * x_right, M), mod(y_left * y_right, M)});
    return out;
}

}  // namespace bfid::reesse
