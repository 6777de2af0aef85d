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

#include <map>
#include <set>

#include "bfid/codec.hpp"

using namespace bfid;
using namespace bfid::codec;

namespace {

const reesse::KeyMaterial& key(int which) {
    static std::map<int, reesse::KeyMaterial> cache;
    auto it = cache.find(which);
    if (it == cache.end()) {
        numeric::Rng rng(50 + which);
        it = cache.emplace(which, reesse::keygen(reesse::ParameterProfile::toy32(),
                                                 reesse::InterpretationConfig::reconstructed(), rng))
                 .first;
    }
    return it->second;
}

ObjectProfile bottle(const std::string& lot) {
    ObjectProfile p;
    p.kind = ObjectKind::merchandise;
    p.subject_id = "acme";
    p.add("product", "wine").add("lot", lot);
    return p;
}

// Independent reader for the length-prefixed layout.
ObjectProfile deserialize(const std::vector<std::uint8_t>& bytes) {
    std::size_t pos = 0;
    auto get = [&]() {
        if (pos + 4 > bytes.size()) throw std::runtime_error("short");
        std::uint32_t n = 0;
        for (int i = 0; i < 4; ++i) n = (n << 8) | bytes[pos++];
        if (pos + n > bytes.size()) throw std::runtime_error("short");
        std::string s(bytes.begin() + static_cast<long>(pos), bytes.begin() + static_cast<long>(pos + n));
        pos += n;
        return s;
    };
    ObjectProfile p;
    p.kind = parse_object_kind(get());
    p.subject_id = get();
    const auto count = std::stoul(get());
    for (unsigned long i = 0; i < count; ++i) {
        auto k = get();
        auto v = get();
        p.attributes.emplace_back(std::move(k), std::move(v));
    }
    if (pos != bytes.size()) throw std::runtime_error("trailing bytes");
    return p;
}

std::string random_text(numeric::Rng& rng) {
    static const std::string pool("ab ,=:\"\0x1", 10);
    std::string s(rng.uniform(0, 4), ' ');
    for (auto& c : s) c = pool[rng.uniform(0, pool.size() - 1)];
    return s;
}

}  // namespace

TEST(Alphabet, ExcludesConfusableLetters) {
    EXPECT_EQ(kAlphabet.size(), 32u);
    for (char c : std::string("ILOU")) EXPECT_EQ(kAlphabet.find(c), std::string_view::npos);
    EXPECT_EQ(std::set<char>(kAlphabet.begin(), kAlphabet.end()).size(), 32u);
}

TEST(TextCodec, RoundTrip) {
    numeric::Rng rng(51);
    for (std::size_t len : {5u, 80u, 110u, 160u}) {
        for (int t = 0; t < 100; ++t) {
            BitString b(len);
            for (std::size_t i = 0; i < len; ++i) b.set(i, rng.uniform(0, 1));
            const auto text = encode_bits(b);
            EXPECT_EQ(text.size(), len / 5);
            EXPECT_EQ(decode_text(text), b);
        }
    }
    EXPECT_EQ(encode_bits(BitString(80)), std::string(16, '0'));
    EXPECT_EQ(encode_bits(BitString::from_text("0101011111")), "AZ");
    EXPECT_EQ(decode_text("az"), decode_text("AZ"));
    EXPECT_THROW(encode_bits(BitString(7)), std::invalid_argument);
}

TEST(TextCodec, ForeignSymbolPosition) {
    try {
        decode_text("0123I567");
        FAIL() << "expected DecodeError";
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.position, 4u);
    }
    EXPECT_THROW(decode_text("ABC-"), DecodeError);
}

TEST(TextCodec, FieldWidths) {
    EXPECT_EQ(field_bits(24), 80u);
    EXPECT_EQ(field_bits(80), 80u);
    EXPECT_EQ(field_bits(96), 100u);
    EXPECT_EQ(field_bits(110), 110u);
    BitString b(110);
    EXPECT_EQ(encode_bits(b).size(), 22u);
    EXPECT_TRUE(Bfid::from_bits(b).conforming());
    EXPECT_FALSE(Bfid::from_bits(BitString(160)).conforming());
}

TEST(Profile, KindsAndAttributes) {
    for (auto k : {ObjectKind::merchandise, ObjectKind::document, ObjectKind::program, ObjectKind::resident,
                   ObjectKind::passport, ObjectKind::host_interface, ObjectKind::login}) {
        EXPECT_EQ(parse_object_kind(to_string(k)), k);
    }
    EXPECT_THROW(parse_object_kind("car"), std::invalid_argument);
    auto p = bottle("7");
    EXPECT_EQ(p.get("lot"), "7");
    EXPECT_FALSE(p.get("vintage").has_value());
    EXPECT_THROW(p.add("lot", "8"), std::invalid_argument);
}

TEST(Profile, SerializationIsInjective) {
    numeric::Rng rng(52);
    for (int t = 0; t < 100000; ++t) {
        ObjectProfile p;
        p.kind = static_cast<ObjectKind>(rng.uniform(0, 6));
        p.subject_id = random_text(rng);
        const auto count = rng.uniform(0, 3);
        for (std::uint64_t i = 0; i < count; ++i) {
            p.attributes.emplace_back("k" + std::to_string(i) + random_text(rng), random_text(rng));
        }
        const auto bytes = serialize(p);
        const auto back = deserialize(bytes);
        ASSERT_EQ(back.kind, p.kind);
        ASSERT_EQ(back.subject_id, p.subject_id);
        ASSERT_EQ(back.attributes, p.attributes);
    }
}

TEST(Confection, EscrowAndFullLengths) {
    const auto& k = key(0);
    const auto interp = reesse::InterpretationConfig::reconstructed();
    numeric::Rng rng(53);
    const auto esc = confect_bfid(k.priv, k.common, bottle("1"), expand_sha256, Mode::escrow, interp, rng, "cellar");
    EXPECT_EQ(esc.bfid.text.size(), 16u);
    EXPECT_TRUE(esc.bfid.conforming());
    ASSERT_TRUE(esc.escrow.has_value());
    EXPECT_EQ(esc.escrow->source_info, "cellar");
    EXPECT_EQ(esc.escrow->U, esc.signature.U);
    const auto dec = decode_bfid(esc.bfid.text, k.common.m());
    EXPECT_EQ(dec.mode, Mode::escrow);
    EXPECT_EQ(dec.Q, esc.signature.Q);

    const auto full = confect_bfid(k.priv, k.common, bottle("1"), expand_sha256, Mode::full, interp, rng);
    EXPECT_EQ(full.bfid.text.size(), 32u);
    EXPECT_FALSE(full.bfid.conforming());
    EXPECT_FALSE(full.escrow.has_value());
    const auto fd = decode_bfid(full.bfid.text, k.common.m());
    EXPECT_EQ(fd.mode, Mode::full);
    EXPECT_EQ(fd.U, full.signature.U);
    EXPECT_THROW(decode_bfid("0000", k.common.m()), DecodeError);
}

TEST(Confection, VerifyAcceptsAndRequiresEscrow) {
    const auto& k = key(0);
    const auto interp = reesse::InterpretationConfig::reconstructed();
    numeric::Rng rng(54);
    const auto c = confect_bfid(k.priv, k.common, bottle("2"), expand_sha256, Mode::escrow, interp, rng);
    EXPECT_TRUE(verify_bfid(k.pub, k.common, bottle("2"), c.bfid.text, c.escrow->U, expand_sha256, interp).accepted);
    EXPECT_THROW(verify_bfid(k.pub, k.common, bottle("2"), c.bfid.text, std::nullopt, expand_sha256, interp),
                 std::invalid_argument);
    const auto f = confect_bfid(k.priv, k.common, bottle("2"), expand_sha256, Mode::full, interp, rng);
    EXPECT_TRUE(verify_bfid(k.pub, k.common, bottle("2"), f.bfid.text, std::nullopt, expand_sha256, interp).accepted);
}

TEST(Confection, DistinctPerCall) {
    const auto& k = key(0);
    const auto interp = reesse::InterpretationConfig::reconstructed();
    numeric::Rng rng(55);
    std::set<std::string> texts;
    for (int i = 0; i < 50; ++i) {
        texts.insert(confect_bfid(k.priv, k.common, bottle("3"), expand_sha256, Mode::full, interp, rng).bfid.text);
    }
    EXPECT_EQ(texts.size(), 50u);
}

TEST(Confection, TamperAndWrongKeyRejected) {
    const auto& k = key(0);
    const auto& other = key(1);
    const auto interp = reesse::InterpretationConfig::reconstructed();
    numeric::Rng rng(56);
    std::size_t rejected = 0, total = 0;
    for (int t = 0; t < 200; ++t) {
        const auto c = confect_bfid(k.priv, k.common, bottle(std::to_string(t)), expand_sha256, Mode::full, interp,
                                    rng);
        auto bits = c.bfid.bits;
        bits.flip(rng.uniform(0, bits.size() - 1));
        ++total;
        rejected += !verify_bfid(k.pub, k.common, bottle(std::to_string(t)), encode_bits(bits), std::nullopt,
                                 expand_sha256, interp)
                         .accepted;
        ++total;
        rejected += !verify_bfid(k.pub, k.common, bottle(std::to_string(t) + "x"), c.bfid.text, std::nullopt,
                                 expand_sha256, interp)
                         .accepted;
        ++total;
        rejected += !verify_bfid(other.pub, other.common, bottle(std::to_string(t)), c.bfid.text, std::nullopt,
                                 expand_sha256, interp)
                         .accepted;
    }
    EXPECT_GE(static_cast<double>(rejected), 0.95 * static_cast<double>(total));
}
