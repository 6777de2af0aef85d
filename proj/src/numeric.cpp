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

#include "bfid/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bfid::numeric {

namespace {

constexpr int kMillerRabinRounds = 40;  // 4^-40 = 2^-80
constexpr std::uint64_t kTrialLimit = 1000;

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = small_primes_upto(kTrialLimit);
    return primes;
}

Natural pollard_brent(const Natural& n, Rng& rng) {
    if (n % 2 == 0) return 2;
    for (;;) {
        Natural y = rng.between(1, n - 1);
        Natural c = rng.between(1, n - 1);
        Natural g = 1, q = 1, x, ys;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](const Natural& v) { return mod(v * v + c, n); };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod(q * abs(Natural(x - y)), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Natural(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Natural& n, std::map<Natural, unsigned>& out, Rng& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Natural d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    return dist(engine_);
}

Natural Rng::random_bits(std::size_t bits) {
    Natural out = 0;
    std::size_t done = 0;
    while (done < bits) {
        std::uint64_t word = engine_();
        std::size_t take = std::min<std::size_t>(64, bits - done);
        if (take < 64) word &= (std::uint64_t{1} << take) - 1;
        out <<= take;
        Natural w;
        mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
        out += w;
        done += take;
    }
    return out;
}

Natural Rng::below(const Natural& bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be positive");
    const std::size_t bits = bit_length(bound - 1);
    if (bits == 0) return 0;
    for (;;) {
        Natural v = random_bits(bits);
        if (v < bound) return v;
    }
}

Natural Rng::between(const Natural& lo, const Natural& hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + below(hi - lo + 1);
}

bool FactoredModulus::valid(std::size_t expected_bits) const {
    if (modulus < 3 || order != modulus - 1) return false;
    if (expected_bits != 0 && bit_length(modulus) != expected_bits) return false;
    for (const auto& f : factors) {
        if (f.exponent == 0 || !is_probable_prime(f.prime)) return false;
    }
    return product(factors) == order && is_probable_prime(modulus);
}

Natural gcd(const Natural& a, const Natural& b) {
    Natural g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Natural lcm(const Natural& a, const Natural& b) {
    Natural l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Natural mod(const Natural& a, const Natural& m) {
    Natural r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Natural r;
    Natural b = mod(base, modulus);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

std::optional<Natural> mod_inv(const Natural& a, const Natural& modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    Natural r;
    Natural x = mod(a, modulus);
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0) return std::nullopt;
    return r;
}

Natural mod_inv_or_throw(const Natural& a, const Natural& modulus) {
    auto r = mod_inv(a, modulus);
    if (!r) throw NumericError("value " + to_hex(a) + " is not invertible modulo " + to_hex(modulus));
    return *r;
}

bool is_probable_prime(const Natural& n) {
    if (n < 2) return false;
    for (auto p : trial_primes()) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < kTrialLimit * kTrialLimit) return true;

    const Natural n1 = n - 1;
    Natural d = n1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Witnesses come from a fixed-seed stream so callers' generators are untouched.
    Rng witness(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(n.get_mpz_t()));
    for (int round = 0; round < kMillerRabinRounds; ++round) {
        Natural a = witness.between(2, n - 2);
        Natural x = mod_pow(a, d, n);
        if (x == 1 || x == n1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mod(x * x, n);
            if (x == n1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Natural next_prime(const Natural& n) {
    Natural c = n < 2 ? Natural(2) : Natural(n + 1);
    while (!is_probable_prime(c)) c += 1;
    return c;
}

Natural prev_prime(const Natural& n) {
    for (Natural c = n; c >= 2; c -= 1) {
        if (is_probable_prime(c)) return c;
    }
    return 0;
}

std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::uint64_t limit = 32;
    for (;;) {
        auto primes = small_primes_upto(limit);
        if (primes.size() >= count) {
            primes.resize(count);
            return primes;
        }
        limit *= 2;
    }
}

std::vector<PrimePower> factorize(const Natural& n) {
    if (n < 1) throw std::invalid_argument("factorize expects a positive value");
    std::map<Natural, unsigned> found;
    Natural rest = n;
    for (auto p : trial_primes()) {
        while (rest % p == 0) {
            found[Natural(p)] += 1;
            rest /= p;
        }
    }
    Rng rng(0x5eed);
    factor_into(rest, found, rng);
    std::vector<PrimePower> out;
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

Natural product(std::span<const PrimePower> factors) {
    Natural out = 1;
    for (const auto& f : factors) {
        Natural pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        out *= pe;
    }
    return out;
}

std::vector<PrimePower> merge_lcm(std::span<const PrimePower> a, std::span<const PrimePower> b) {
    std::map<Natural, unsigned> m;
    for (const auto& f : a) m[f.prime] = std::max(m[f.prime], f.exponent);
    for (const auto& f : b) m[f.prime] = std::max(m[f.prime], f.exponent);
    std::vector<PrimePower> out;
    for (auto& [p, e] : m) out.push_back({p, e});
    return out;
}

FactoredModulus find_prime_with_divisors(std::size_t bits, std::span<const PrimePower> required,
                                         Rng& rng, std::uint64_t max_attempts) {
    const PrimePower two{2, 1};
    const auto base_factors = merge_lcm(required, std::span(&two, 1));
    const Natural base = product(base_factors);
    if (bits < 4 || bit_length(base) + 2 > bits) {
        throw NumericError("required divisors (" + std::to_string(bit_length(base)) +
                           " bits with the factor 2) exceed the budget of a " + std::to_string(bits) +
                           "-bit modulus");
    }
    Natural lo_mod = Natural(1) << (bits - 1);
    Natural hi_mod = (Natural(1) << bits) - 1;
    // modulus = base * k + 1 over odd k
    Natural k_lo = (lo_mod - 1 + base - 1) / base;
    Natural k_hi = (hi_mod - 1) / base;
    if (k_lo % 2 == 0) k_lo += 1;
    if (k_hi % 2 == 0) k_hi -= 1;
    if (k_lo > k_hi) throw NumericError("no odd cofactor fits the modulus bit length");
    const Natural odd_count = (k_hi - k_lo) / 2 + 1;

    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Natural k = k_lo + 2 * rng.below(odd_count);
        Natural m = base * k + 1;
        if (!is_probable_prime(m)) continue;
        std::map<Natural, unsigned> all;
        for (const auto& f : base_factors) all[f.prime] += f.exponent;
        for (const auto& f : factorize(k)) all[f.prime] += f.exponent;
        FactoredModulus out{m, m - 1, {}};
        for (auto& [p, e] : all) out.factors.push_back({p, e});
        return out;
    }
    throw NumericError("prime search exhausted after " + std::to_string(max_attempts) + " attempts");
}

FactoredModulus find_safe_prime(std::size_t bits, Rng& rng, std::uint64_t max_attempts) {
    if (bits < 3) throw std::invalid_argument("safe prime needs at least 3 bits");
    const Natural lo = Natural(1) << (bits - 2);
    const Natural hi = (Natural(1) << (bits - 1)) - 1;
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Natural q = rng.between(lo, hi);
        if (q % 2 == 0) q += 1;
        if (q > hi) continue;
        const Natural p = 2 * q + 1;
        bool sieved = false;
        for (auto sp : trial_primes()) {
            if (sp >= q) break;
            if (q % sp == 0 || p % sp == 0) {
                sieved = true;
                break;
            }
        }
        if (sieved || !is_probable_prime(q) || !is_probable_prime(p)) continue;
        FactoredModulus out{p, p - 1, {{2, 1}, {q, 1}}};
        if (q == 2) out.factors = {{2, 2}};
        return out;
    }
    throw NumericError("safe prime search exhausted");
}

Natural element_order(const Natural& x, const FactoredModulus& ctx) {
    if (gcd(x, ctx.modulus) != 1) throw NumericError("element is not a unit");
    Natural t = ctx.order;
    for (const auto& f : ctx.factors) {
        for (unsigned i = 0; i < f.exponent; ++i) {
            if (t % f.prime != 0) break;
            Natural cand = t / f.prime;
            if (mod_pow(x, cand, ctx.modulus) != 1) break;
            t = cand;
        }
    }
    return t;
}

Natural find_generator(const FactoredModulus& ctx, Rng& rng, std::uint64_t max_attempts) {
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Natural g = rng.between(2, ctx.modulus - 1);
        bool ok = true;
        for (const auto& f : ctx.factors) {
            if (mod_pow(g, ctx.order / f.prime, ctx.modulus) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw NumericError("generator search exhausted");
}

Natural element_of_order(const Natural& t, const FactoredModulus& ctx, Rng& rng) {
    if (!ctx.divides_order(t)) throw NumericError("requested order does not divide modulus - 1");
    if (t == 1) return 1;
    Natural x = mod_pow(find_generator(ctx, rng), ctx.order / t, ctx.modulus);
    if (element_order(x, ctx) != t) throw NumericError("constructed element has the wrong order");
    return x;
}

Natural geom_sum(const Natural& a, const Natural& c, const Natural& count, const Natural& modulus) {
    if (count < 0) throw std::invalid_argument("negative term count");
    const Natural am = mod(a, modulus), cm = mod(c, modulus);
    Natural sum = 0, ak = 1, ck = 1;  // S(k), a^k, c^k with k the prefix of count's bits
    for (std::size_t i = bit_length(count); i-- > 0;) {
        sum = mod(sum * (ak + ck), modulus);
        ak = mod(ak * ak, modulus);
        ck = mod(ck * ck, modulus);
        if (mpz_tstbit(count.get_mpz_t(), i)) {
            sum = mod(am * sum + ck, modulus);
            ak = mod(ak * am, modulus);
            ck = mod(ck * cm, modulus);
        }
    }
    return mod(sum, modulus);
}

std::optional<Natural> geom_sum_closed(const Natural& a, const Natural& c, const Natural& count,
                                       const Natural& modulus) {
    if (count < 1) throw std::invalid_argument("term count must be positive");
    const Natural diff = mod(a - c, modulus);
    if (diff == 0) return mod(mod(count, modulus) * mod_pow(a, count - 1, modulus), modulus);
    auto inv = mod_inv(diff, modulus);
    if (!inv) return std::nullopt;
    return mod((mod_pow(a, count, modulus) - mod_pow(c, count, modulus)) * *inv, modulus);
}

bool CoprimeSequence::valid() const {
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] < 2 || items[i] > bound) return false;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (gcd(items[i], items[j]) != 1) return false;
        }
    }
    return true;
}

CoprimeSequence gen_coprime_sequence(std::size_t n, const Natural& max_prime, Rng& rng) {
    constexpr unsigned long kEnumerable = 1ul << 22;
    if (max_prime < 2) throw NumericError("maximal prime must be at least 2");

    if (max_prime <= kEnumerable) {
        const auto limit = max_prime.get_ui();
        const auto primes = small_primes_upto(limit);
        if (primes.size() < n) {
            throw NumericError("only " + std::to_string(primes.size()) + " primes <= " + std::to_string(limit) +
                               ", cannot draw " + std::to_string(n) + " pairwise coprime values");
        }
        std::vector<std::uint64_t> pool(limit - 1);
        for (std::uint64_t i = 0; i < pool.size(); ++i) pool[i] = i + 2;
        for (int restart = 0; restart < 100; ++restart) {
            rng.shuffle(pool);
            std::vector<std::uint64_t> picked;
            for (auto v : pool) {
                bool ok = std::all_of(picked.begin(), picked.end(),
                                      [&](std::uint64_t p) { return std::gcd(p, v) == 1; });
                if (ok) picked.push_back(v);
                if (picked.size() == n) break;
            }
            if (picked.size() == n) {
                CoprimeSequence out{{}, max_prime};
                for (auto v : picked) out.items.emplace_back(static_cast<unsigned long>(v));
                return out;
            }
        }
        // Greedy draws kept hitting composites; distinct primes always suffice.
        auto shuffled = primes;
        rng.shuffle(shuffled);
        CoprimeSequence out{{}, max_prime};
        for (std::size_t i = 0; i < n; ++i) out.items.emplace_back(static_cast<unsigned long>(shuffled[i]));
        return out;
    }

    CoprimeSequence out{{}, max_prime};
    Natural running = 1;
    for (std::uint64_t attempt = 0; out.items.size() < n; ++attempt) {
        if (attempt > 1'000'000) throw NumericError("coprime sequence search exhausted");
        Natural v = rng.between(2, max_prime);
        if (gcd(v, running) != 1) continue;
        running *= v;
        out.items.push_back(v);
    }
    return out;
}

}  // namespace bfid::numeric
