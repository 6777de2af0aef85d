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

#include <sstream>

#include "bfid/digest.hpp"
#include "bfid/juna.hpp"

using namespace bfid;
using namespace bfid::juna;

namespace {

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

// Each 1-bit's shadow is its cyclic distance back to the previous 1-bit.
std::vector<std::uint32_t> cyclic_shadow(const BitString& b) {
    const std::size_t n = b.size();
    std::vector<std::uint32_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!b[i]) continue;
        std::uint32_t dist = 1;
        while (!b[(i + n - dist) % n]) ++dist;
        out[i] = dist;
    }
    return out;
}

Natural product_oracle(const HashInitValue& iv, const std::vector<std::uint32_t>& exps) {
    Natural d = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        for (std::uint32_t k = 0; k < exps[i]; ++k) d = d * iv.C[i] % iv.M;
    }
    return d;
}

HashInitValue fixed_iv() {
    HashInitValue iv;
    iv.C = {2, 3, 5, 7, 11, 13, 17, 19};
    iv.M = 1000003;
    iv.config.m = 20;
    iv.config.n = 8;
    iv.config.toy = true;
    return iv;
}

}  // namespace

TEST(BitShadow, WorkedExamples) {
    const auto b = BitString::from_text("01010100");
    EXPECT_EQ(digits(bit_shadow(b).values), "04020200");
    EXPECT_EQ(digits(bit_long_shadow(b)), "08020400");
}

TEST(BitShadow, ExhaustiveEightBitAgainstCyclicOracle) {
    for (unsigned v = 1; v < 256; ++v) {
        const auto b = BitString::from_natural(v, 8);
        const auto s = bit_shadow(b).values;
        EXPECT_EQ(s, cyclic_shadow(b)) << b.to_text();
    }
}

TEST(BitShadow, SumAndZeroPreservation) {
    numeric::Rng rng(21);
    for (std::size_t n : {2u, 8u, 16u, 33u, 64u, 128u, 1000u}) {
        for (int t = 0; t < 200; ++t) {
            const auto b = random_nonzero(n, rng);
            const auto s = bit_shadow(b).values;
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                sum += s[i];
                EXPECT_EQ(s[i] == 0, !b[i]);
            }
            EXPECT_EQ(sum, n);
            EXPECT_EQ(s, cyclic_shadow(b));
        }
    }
}

TEST(BitShadow, RejectsZeroAndEmpty) {
    EXPECT_THROW(bit_shadow(BitString(8)), HashError);
    EXPECT_THROW(bit_shadow(BitString()), HashError);
    EXPECT_THROW(bit_long_shadow(BitString::from_text("101")), HashError);
}

TEST(BitLongShadow, PartnerOracle) {
    numeric::Rng rng(22);
    for (std::size_t n : {2u, 8u, 16u, 64u, 128u}) {
        for (int t = 0; t < 200; ++t) {
            const auto b = random_nonzero(n, rng);
            const auto base = cyclic_shadow(b);
            const auto ls = bit_long_shadow(b);
            for (std::size_t i = 0; i < n; ++i) {
                const bool partner = b[(i + n / 2) % n];
                EXPECT_EQ(ls[i], base[i] * (partner ? 2u : 1u));
            }
        }
    }
}

TEST(HashCompress, FixedValueAgainstProductOracle) {
    const auto iv = fixed_iv();
    // 01010100 -> long shadow 0,8,0,2,0,4,0,0 -> 3^8 * 7^2 * 13^4 mod 1000003
    const Natural expect = Natural(6561) * 49 * 28561 % 1000003;
    EXPECT_EQ(hash_compress(iv, BitString::from_text("01010100")), expect);
    for (unsigned v = 1; v < 256; ++v) {
        const auto b = BitString::from_natural(v, 8);
        EXPECT_EQ(hash_compress(iv, b), product_oracle(iv, bit_long_shadow(b)));
    }
}

TEST(HashCompress, ToyInitAgainstProductOracle) {
    numeric::Rng rng(23);
    const auto iv = hash_init(HashConfig::toy_config(20, 8, 31, 8), rng);
    ASSERT_EQ(iv.C.size(), 8u);
    EXPECT_EQ(bit_length(iv.M), 20u);
    for (int t = 0; t < 500; ++t) {
        const auto b = random_nonzero(8, rng);
        std::vector<std::uint32_t> exps(8);
        const auto base = cyclic_shadow(b);
        for (std::size_t i = 0; i < 8; ++i) exps[i] = base[i] * (b[(i + 4) % 8] ? 2 : 1);
        EXPECT_EQ(hash_compress(iv, b), product_oracle(iv, exps));
    }
}

TEST(HashCompress, Errors) {
    const auto iv = fixed_iv();
    EXPECT_THROW(hash_compress(iv, BitString::from_text("0101")), HashError);
    EXPECT_THROW(hash_compress(iv, BitString(8)), HashError);
}

TEST(HashConfig, Validation) {
    EXPECT_NO_THROW(HashConfig::paper(80, 80));
    EXPECT_THROW(HashConfig::paper(81, 81), std::invalid_argument);
    EXPECT_THROW(HashConfig::toy_config(20, 7, 31, 8), std::invalid_argument);
    EXPECT_THROW(HashConfig::toy_config(20, 8, 31, 4), std::invalid_argument);
    EXPECT_THROW(HashConfig::toy_config(80, 8, 3, 8), std::invalid_argument);
    EXPECT_THROW(HashConfig::paper(80, 64), std::invalid_argument);
}

TEST(HashInit, FileRoundTrip) {
    numeric::Rng rng(24);
    const auto iv = hash_init(HashConfig::toy_config(24, 16, 61, 16), rng);
    std::stringstream ss;
    write_init_value(ss, iv);
    const auto back = read_init_value(ss);
    EXPECT_EQ(back.M, iv.M);
    EXPECT_EQ(back.C, iv.C);
    EXPECT_EQ(back.m(), iv.m());
    EXPECT_EQ(back.n(), iv.n());
    const auto msg = random_nonzero(16, rng);
    EXPECT_EQ(hash_compress(back, msg), hash_compress(iv, msg));
    std::stringstream truncated("24\n16\nabc\n");
    EXPECT_THROW(read_init_value(truncated), HashError);
}

TEST(HashInit, PaperRowPassesAudit) {
    numeric::Rng rng(25);
    const auto iv = hash_init(HashConfig::paper(80, 80), rng);
    for (const auto& e : audit_init_value(iv)) EXPECT_TRUE(e.pass) << e.condition << ": " << e.detail;
    EXPECT_EQ(format_digest(iv, hash_compress(iv, random_nonzero(80, rng))).size(), 20u);
}

TEST(JunaDigest, LowBitsOfFullDigest) {
    numeric::Rng rng(26);
    auto iv = std::make_shared<const HashInitValue>(hash_init(HashConfig::toy_config(32, 32, 257, 32), rng));
    const auto fn = juna_digest(iv);
    for (const char* msg : {"", "a", "bfid", "a longer message of several words"}) {
        const Natural full = juna_message_digest(*iv, as_bytes(msg));
        const BitString low = fn(as_bytes(msg), 16);
        EXPECT_EQ(low.size(), 16u);
        EXPECT_EQ(low.to_natural(), full % 65536);
        EXPECT_EQ(fn(as_bytes(msg), 16), low);
    }
    EXPECT_NE(fn(as_bytes("x"), 32), fn(as_bytes("y"), 32));
}

TEST(ExpandSha256, LengthAndPrefix) {
    const auto a = expand_sha256(as_bytes("abc"), 300);
    const auto b = expand_sha256(as_bytes("abc"), 80);
    EXPECT_EQ(a.size(), 300u);
    EXPECT_EQ(a.slice(0, 80), b);
    // FIPS 180-2 test vector for "abc"
    const auto h = sha256(as_bytes("abc"));
    EXPECT_EQ(bytes_to_hex(h), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
