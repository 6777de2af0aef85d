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
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "bfid/bits.hpp"

namespace bfid::numeric {

/// Seeded generator; the only stateful object in the numeric layer.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    /// Uniform in [0, bound), bound > 0.
    Natural below(const Natural& bound);
    /// Uniform in [lo, hi].
    Natural between(const Natural& lo, const Natural& hi);
    /// Uniform with exactly `bits` random bits (top bit may be zero).
    Natural random_bits(std::size_t bits);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform(0, i - 1)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

struct PrimePower {
    Natural prime;
    unsigned exponent = 1;

    bool operator==(const PrimePower&) const = default;
};

/// A prime modulus with the complete factorization of modulus - 1.
struct FactoredModulus {
    Natural modulus;
    Natural order;  // modulus - 1
    std::vector<PrimePower> factors;

    /// Checks primality, bit length (when nonzero) and the factor product.
    bool valid(std::size_t expected_bits = 0) const;
    bool divides_order(const Natural& t) const { return t != 0 && order % t == 0; }
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);
Natural mod(const Natural& a, const Natural& m);
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);
std::optional<Natural> mod_inv(const Natural& a, const Natural& modulus);
/// mod_inv that throws NumericError when the inverse does not exist.
Natural mod_inv_or_throw(const Natural& a, const Natural& modulus);

/// Miller-Rabin with enough rounds for error below 2^-80.
bool is_probable_prime(const Natural& n);
Natural next_prime(const Natural& n);
/// Largest prime <= n, or 0 if none.
Natural prev_prime(const Natural& n);
std::vector<std::uint64_t> small_primes_upto(std::uint64_t limit);
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Complete factorization by trial division then Pollard rho.
std::vector<PrimePower> factorize(const Natural& n);
Natural product(std::span<const PrimePower> factors);
/// Merges by prime, keeping the largest exponent seen.
std::vector<PrimePower> merge_lcm(std::span<const PrimePower> a, std::span<const PrimePower> b);

/// Builds modulus-1 = 2 * lcm(required) * k over random odd k and returns the
/// first prime modulus of exactly `bits` bits.
FactoredModulus find_prime_with_divisors(std::size_t bits, std::span<const PrimePower> required,
                                         Rng& rng, std::uint64_t max_attempts = 1'000'000);

/// Prime p of exactly `bits` bits with (p-1)/2 prime.
FactoredModulus find_safe_prime(std::size_t bits, Rng& rng, std::uint64_t max_attempts = 10'000'000);

Natural element_order(const Natural& x, const FactoredModulus& ctx);
Natural find_generator(const FactoredModulus& ctx, Rng& rng, std::uint64_t max_attempts = 100'000);
Natural element_of_order(const Natural& t, const FactoredModulus& ctx, Rng& rng);

/// sum_{i=0}^{count-1} a^(count-1-i) c^i mod modulus, evaluated by doubling.
Natural geom_sum(const Natural& a, const Natural& c, const Natural& count, const Natural& modulus);
/// The same sum through (a^count - c^count)(a - c)^-1; absent when a - c is
/// not invertible. When a == c it is count * a^(count-1).
std::optional<Natural> geom_sum_closed(const Natural& a, const Natural& c, const Natural& count,
                                       const Natural& modulus);

struct CoprimeSequence {
    std::vector<Natural> items;
    Natural bound;

    bool valid() const;
};

CoprimeSequence gen_coprime_sequence(std::size_t n, const Natural& max_prime, Rng& rng);

}  // namespace bfid::numeric
