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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfid/reesse.hpp"

/// BFID text encoding, object profiles, and the confect/verify flow.
namespace bfid::codec {

/// 0-9 then A-Z without I, L, O, U.
inline constexpr std::string_view kAlphabet = "0123456789ABCDEFGHJKMNPQRSTVWXYZ";

class DecodeError : public std::invalid_argument {
public:
    DecodeError(const std::string& what, std::size_t pos) : std::invalid_argument(what), position(pos) {}
    std::size_t position;
};

/// Big-endian 5-bit groups; the length must be a multiple of 5.
std::string encode_bits(const BitString& bits);
/// Accepts lowercase input. Throws DecodeError naming the first foreign symbol.
BitString decode_text(std::string_view text);

struct Bfid {
    std::string text;
    BitString bits;

    static Bfid from_bits(const BitString& bits) { return {encode_bits(bits), bits}; }
    static Bfid parse(std::string_view text) { return {encode_bits(decode_text(text)), decode_text(text)}; }
    /// 16 to 22 symbols.
    bool conforming() const { return text.size() >= 16 && text.size() <= 22; }
};

enum class ObjectKind { merchandise, document, program, resident, passport, host_interface, login };

std::string to_string(ObjectKind k);
ObjectKind parse_object_kind(std::string_view s);

struct ObjectProfile {
    ObjectKind kind = ObjectKind::merchandise;
    std::string subject_id;
    std::vector<std::pair<std::string, std::string>> attributes;

    /// Appends an attribute; throws std::invalid_argument on a repeated name.
    ObjectProfile& add(std::string name, std::string value);
    std::optional<std::string> get(std::string_view name) const;
};

/// Kind, subject, count, then name/value pairs, each string prefixed by its
/// 4-byte big-endian length.
std::vector<std::uint8_t> serialize(const ObjectProfile& profile);

enum class Mode { full, escrow };

/// Bits per encoded signature field: at least 80, rounded up to a multiple of 5.
std::size_t field_bits(std::size_t m);

struct EscrowPayload {
    BitString digest;
    Natural U;
    std::string source_info;
};

struct Confection {
    Bfid bfid;
    Mode mode = Mode::escrow;
    BitString digest;
    reesse::Signature signature;
    std::optional<EscrowPayload> escrow;
};

Confection confect_bfid(const reesse::PrivateKey& priv, const reesse::CommonParams& common,
                        const ObjectProfile& profile, const DigestFn& hash, Mode mode,
                        const reesse::InterpretationConfig& interp, numeric::Rng& rng,
                        const std::string& source_info = {});

/// Recovers Q (and U in full mode) from a BFID. The mode follows from its length.
struct DecodedBfid {
    Mode mode;
    Natural Q;
    std::optional<Natural> U;
};
DecodedBfid decode_bfid(std::string_view text, std::size_t m);

/// Verifies against an already computed digest. Escrow-mode BFIDs need the
/// escrowed U; throws std::invalid_argument when it is missing.
reesse::Verification verify_bfid_digest(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                                        const BitString& digest, std::string_view bfid,
                                        const std::optional<Natural>& escrowed_u,
                                        const reesse::InterpretationConfig& interp);

reesse::Verification verify_bfid(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                                 const ObjectProfile& profile, std::string_view bfid,
                                 const std::optional<Natural>& escrowed_u, const DigestFn& hash,
                                 const reesse::InterpretationConfig& interp);

}  // namespace bfid::codec
