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

#include "bfid/juna.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace bfid::juna {

using numeric::gcd;
using numeric::mod;
using numeric::mod_pow;

namespace {

std::size_t ceil_lg(const Natural& x) {
    return x <= 1 ? 0 : bit_length(x - 1);
}

std::vector<Natural> divisors(const std::vector<numeric::PrimePower>& factors) {
    std::vector<Natural> out{1};
    for (const auto& f : factors) {
        const std::size_t existing = out.size();
        Natural pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// n pairwise distinct signed levers with magnitudes from {5, 7, ..., 2q+3}.
std::vector<long> draw_levers(std::size_t n, const Natural& q_size, numeric::Rng& rng) {
    std::vector<long> out;
    out.reserve(n);
    if (q_size <= (1ul << 20)) {
        const auto q = q_size.get_ui();
        std::vector<long> magnitudes(q);
        for (unsigned long i = 0; i < q; ++i) magnitudes[i] = static_cast<long>(5 + 2 * i);
        rng.shuffle(magnitudes);
        for (std::size_t i = 0; i < n; ++i) out.push_back(magnitudes[i]);
    } else {
        std::set<unsigned long> seen;
        while (out.size() < n) {
            auto idx = rng.below(q_size).get_ui();
            if (!seen.insert(idx).second) continue;
            out.push_back(static_cast<long>(5 + 2 * idx));
        }
    }
    for (auto& v : out) {
        if (rng.uniform(0, 1) == 1) v = -v;
    }
    return out;
}

Natural signed_power(const Natural& base, long exponent, const Natural& modulus) {
    const Natural order = modulus - 1;
    Natural e = exponent >= 0 ? Natural(static_cast<unsigned long>(exponent))
                              : Natural(order - static_cast<unsigned long>(-exponent));
    return mod_pow(base, e, modulus);
}

}  // namespace

HashConfig HashConfig::paper(std::size_t m, std::size_t n) {
    HashConfig cfg;
    cfg.m = m;
    cfg.n = n;
    unsigned a_bits = 0;
    Natural q = n;
    switch (m) {
        case 80: a_bits = 10; break;
        case 96: a_bits = 12; break;
        case 112: a_bits = 14; break;
        case 128: a_bits = 16; q = Natural(1) << 12; break;
        case 232: a_bits = 32; q = Natural(1) << 32; break;
        default: throw std::invalid_argument("no published parameter row for m = " + std::to_string(m));
    }
    cfg.max_prime = numeric::prev_prime(Natural(1) << a_bits);
    cfg.q_size = q;
    cfg.validate();
    return cfg;
}

HashConfig HashConfig::toy_config(std::size_t m, std::size_t n, unsigned long max_prime, unsigned long q_size) {
    HashConfig cfg{m, n, max_prime, q_size, true};
    cfg.validate();
    return cfg;
}

void HashConfig::validate() const {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("message length n must be even and >= 2");
    if (q_size < n) throw std::invalid_argument("|Q| must be at least n");
    if (max_prime < 2) throw std::invalid_argument("maximal prime must be >= 2");
    Natural q5, p5;
    mpz_pow_ui(q5.get_mpz_t(), q_size.get_mpz_t(), 5);
    mpz_pow_ui(p5.get_mpz_t(), max_prime.get_mpz_t(), 5);
    if (2 * q5 * p5 < (Natural(1) << m)) {
        throw std::invalid_argument("2 |Q|^5 P^5 >= 2^m does not hold");
    }
    if (toy) return;
    if (m < 80 || m > 232) throw std::invalid_argument("m must lie in [80, 232]");
    if (n < m || n > 4096) throw std::invalid_argument("n must lie in [m, 4096]");
    const auto lg = ceil_lg(max_prime);
    if (lg < 10 || lg > 32) throw std::invalid_argument("ceil(lg P) must lie in [10, 32]");
    if (q_size > (Natural(1) << 32)) throw std::invalid_argument("|Q| must not exceed 2^32");
}

ShadowVector bit_shadow(const BitString& bits) {
    if (bits.empty() || bits.is_zero()) throw HashError("bit shadow needs a nonzero bit string");
    ShadowVector out{std::vector<std::uint32_t>(bits.size(), 0), bits};
    std::uint32_t zeros = 0;
    std::size_t leftmost = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!bits[i]) {
            ++zeros;
            continue;
        }
        if (i == zeros) leftmost = i;  // every earlier bit was zero
        out.values[i] = zeros + 1;
        zeros = 0;
    }
    out.values[leftmost] += zeros;
    return out;
}

std::vector<std::uint32_t> bit_long_shadow(const BitString& bits) {
    if (bits.size() % 2 != 0) throw HashError("long shadow needs an even bit length");
    auto shadow = bit_shadow(bits).values;
    const std::size_t half = bits.size() / 2;
    for (std::size_t i = 0; i < shadow.size(); ++i) {
        const std::size_t partner = i < half ? i + half : i - half;
        if (bits[partner]) shadow[i] *= 2;
    }
    return shadow;
}

HashInitValue hash_init(const HashConfig& config, numeric::Rng& rng) {
    config.validate();
    const std::size_t n = config.n;
    auto coprime = numeric::gen_coprime_sequence(n, config.max_prime, rng);
    const auto ctx = numeric::find_safe_prime(config.m, rng);
    const Natural& M = ctx.modulus;
    const Natural& Mbar = ctx.order;

    const std::size_t lg_p = ceil_lg(config.max_prime);
    const Natural f_limit = Natural(1) << lg_p;
    const Natural order_floor = config.m > lg_p ? Natural(Natural(1) << (config.m - lg_p)) : Natural(1);
    Natural F = 0;
    for (const auto& cand : divisors(ctx.factors)) {
        if (cand < f_limit && Mbar / cand >= order_floor) F = cand;
    }
    if (F == 0) throw HashError("no factor of M-1 leaves W a large enough order");

    HashInitValue iv{{}, M, config};
    Natural W, delta;
    std::vector<long> levers;
    for (;;) {
        W = mod_pow(numeric::find_generator(ctx, rng), F, M);
        if (W <= 1 || W >= Mbar) continue;
        if (numeric::element_order(W, ctx) < order_floor) throw HashError("W order check failed");
        do {
            delta = rng.between(2, Mbar - 1);
        } while (gcd(delta, Mbar) != 1);
        levers = draw_levers(n, config.q_size, rng);

        iv.C.assign(n, 0);
        bool degenerate = false;
        for (std::size_t i = 0; i < n; ++i) {
            Natural base = mod(coprime.items[i] * signed_power(W, levers[i], M), M);
            iv.C[i] = mod_pow(base, delta, M);
            degenerate |= iv.C[i] <= 1;
        }
        if (!degenerate) break;
    }

    // The private parameter must not outlive initialization.
    wipe(W);
    wipe(delta);
    for (auto& a : coprime.items) wipe(a);
    std::fill(levers.begin(), levers.end(), 0);
    return iv;
}

Natural hash_compress(const HashInitValue& iv, const BitString& message) {
    if (message.size() != iv.n()) {
        throw HashError("message has " + std::to_string(message.size()) + " bits, expected " +
                        std::to_string(iv.n()));
    }
    if (iv.C.size() != iv.n()) throw HashError("initial value is incomplete");
    const auto exps = bit_long_shadow(message);
    Natural d = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        d = mod(d * mod_pow(iv.C[i], exps[i], iv.M), iv.M);
    }
    return d;
}

std::string format_digest(const HashInitValue& iv, const Natural& digest) {
    return to_hex_padded(digest, (iv.m() + 3) / 4);
}

std::vector<AuditEntry> audit_init_value(const HashInitValue& iv) {
    std::vector<AuditEntry> out;
    auto add = [&](std::string cond, bool pass, std::string detail = {}) {
        out.push_back({std::move(cond), pass, std::move(detail)});
    };
    add("C has n entries", iv.C.size() == iv.n(),
        std::to_string(iv.C.size()) + " vs " + std::to_string(iv.n()));
    bool in_range = std::all_of(iv.C.begin(), iv.C.end(), [&](const Natural& c) { return c > 1 && c < iv.M; });
    add("every C_i in (1, M)", in_range);
    add("bit length of M is m", bit_length(iv.M) == iv.m(),
        std::to_string(bit_length(iv.M)) + " vs " + std::to_string(iv.m()));
    add("M is prime", numeric::is_probable_prime(iv.M));
    add("n is even", iv.n() % 2 == 0);

    const Natural half = (iv.M - 1) / 2;
    const Natural bound = 4 * Natural(static_cast<unsigned long>(iv.n())) * (2 * iv.config.q_size + 3);
    bool structure = numeric::is_probable_prime(half);
    std::string detail = structure ? "(M-1)/2 prime" : "";
    if (!structure && bound <= (1ul << 26)) {
        structure = true;
        for (auto p : numeric::small_primes_upto(bound.get_ui())) {
            if (half % p == 0) {
                structure = false;
                detail = "(M-1)/2 has prime factor " + std::to_string(p);
                break;
            }
        }
        if (structure) detail = "least prime factor of (M-1)/2 exceeds " + bound.get_str();
    }
    add("(M-1)/2 prime or its least prime factor > 4n(2|Q|+3)", structure, detail);
    return out;
}

void write_init_value(std::ostream& out, const HashInitValue& iv) {
    out << iv.m() << '\n' << iv.n() << '\n' << to_hex(iv.M) << '\n';
    for (const auto& c : iv.C) out << to_hex(c) << '\n';
}

HashInitValue read_init_value(std::istream& in) {
    HashInitValue iv;
    std::string line;
    auto next = [&](const char* what) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw HashError(std::string("initial value file ends before ") + what);
    };
    try {
        iv.config.m = std::stoul(next("m"));
        iv.config.n = std::stoul(next("n"));
        iv.M = from_hex(next("M"));
        for (std::size_t i = 0; i < iv.config.n; ++i) iv.C.push_back(from_hex(next("C_i")));
    } catch (const std::invalid_argument& e) {
        throw HashError(std::string("malformed initial value file: ") + e.what());
    }
    iv.config.q_size = static_cast<unsigned long>(iv.config.n);
    iv.config.max_prime = 0;
    iv.config.toy = iv.config.m < 80 || iv.config.n < iv.config.m;
    return iv;
}

}  // namespace bfid::juna
