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

#include "bfid/codec.hpp"

#include <algorithm>
#include <array>

namespace bfid::codec {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {"merchandise", "document", "program", "resident",
                                                        "passport",    "host-interface", "login"};

int symbol_value(char c) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    const auto pos = kAlphabet.find(c);
    return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

void put_string(std::vector<std::uint8_t>& out, std::string_view s) {
    const auto n = static_cast<std::uint32_t>(s.size());
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(n >> shift));
    out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

std::string encode_bits(const BitString& bits) {
    if (bits.size() % 5 != 0) {
        throw std::invalid_argument("bit length " + std::to_string(bits.size()) + " is not a multiple of 5");
    }
    std::string out;
    out.reserve(bits.size() / 5);
    for (std::size_t i = 0; i < bits.size(); i += 5) {
        int v = 0;
        for (std::size_t j = 0; j < 5; ++j) v = (v << 1) | (bits[i + j] ? 1 : 0);
        out.push_back(kAlphabet[v]);
    }
    return out;
}

BitString decode_text(std::string_view text) {
    BitString out(text.size() * 5);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int v = symbol_value(text[i]);
        if (v < 0) {
            throw DecodeError("symbol '" + std::string(1, text[i]) + "' at position " + std::to_string(i) +
                                  " is not in the BFID alphabet",
                              i);
        }
        for (std::size_t j = 0; j < 5; ++j) out.set(i * 5 + j, (v >> (4 - j)) & 1);
    }
    return out;
}

std::string to_string(ObjectKind k) { return std::string(kKindNames[static_cast<std::size_t>(k)]); }

ObjectKind parse_object_kind(std::string_view s) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == s) return static_cast<ObjectKind>(i);
    }
    throw std::invalid_argument("unknown object kind '" + std::string(s) + "'");
}

ObjectProfile& ObjectProfile::add(std::string name, std::string value) {
    if (get(name)) throw std::invalid_argument("attribute '" + name + "' repeated");
    attributes.emplace_back(std::move(name), std::move(value));
    return *this;
}

std::optional<std::string> ObjectProfile::get(std::string_view name) const {
    for (const auto& [k, v] : attributes) {
        if (k == name) return v;
    }
    return std::nullopt;
}

std::vector<std::uint8_t> serialize(const ObjectProfile& profile) {
    std::vector<std::uint8_t> out;
    put_string(out, to_string(profile.kind));
    put_string(out, profile.subject_id);
    put_string(out, std::to_string(profile.attributes.size()));
    for (const auto& [k, v] : profile.attributes) {
        put_string(out, k);
        put_string(out, v);
    }
    return out;
}

std::size_t field_bits(std::size_t m) { return std::max<std::size_t>(80, (m + 4) / 5 * 5); }

Confection confect_bfid(const reesse::PrivateKey& priv, const reesse::CommonParams& common,
                        const ObjectProfile& profile, const DigestFn& hash, Mode mode,
                        const reesse::InterpretationConfig& interp, numeric::Rng& rng,
                        const std::string& source_info) {
    Confection c;
    c.mode = mode;
    const auto bytes = serialize(profile);
    c.digest = hash(bytes, common.n);
    c.signature = reesse::sign_digest(priv, common, c.digest, interp, rng);
    const std::size_t w = field_bits(common.m());
    BitString bits = BitString::from_natural(c.signature.Q, w);
    if (mode == Mode::full) {
        bits.append(BitString::from_natural(c.signature.U, w));
    } else {
        c.escrow = EscrowPayload{c.digest, c.signature.U, source_info};
    }
    c.bfid = Bfid::from_bits(bits);
    return c;
}

DecodedBfid decode_bfid(std::string_view text, std::size_t m) {
    const BitString bits = decode_text(text);
    const std::size_t w = field_bits(m);
    if (bits.size() == w) return {Mode::escrow, bits.to_natural(), std::nullopt};
    if (bits.size() == 2 * w) return {Mode::full, bits.slice(0, w).to_natural(), bits.slice(w, w).to_natural()};
    throw DecodeError("BFID of " + std::to_string(text.size()) + " symbols matches neither mode (" +
                          std::to_string(w / 5) + " or " + std::to_string(2 * w / 5) + ")",
                      text.size());
}

reesse::Verification verify_bfid_digest(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                                        const BitString& digest, std::string_view bfid,
                                        const std::optional<Natural>& escrowed_u,
                                        const reesse::InterpretationConfig& interp) {
    const DecodedBfid dec = decode_bfid(bfid, common.m());
    std::optional<Natural> u = dec.U;
    if (!u) {
        if (!escrowed_u) throw std::invalid_argument("escrow-mode BFID needs the escrowed U");
        u = escrowed_u;
    }
    return reesse::verify_digest(pub, common, digest, {dec.Q, *u}, interp);
}

reesse::Verification verify_bfid(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                                 const ObjectProfile& profile, std::string_view bfid,
                                 const std::optional<Natural>& escrowed_u, const DigestFn& hash,
                                 const reesse::InterpretationConfig& interp) {
    return verify_bfid_digest(pub, common, hash(serialize(profile), common.n), bfid, escrowed_u, interp);
}

}  // namespace bfid::codec
