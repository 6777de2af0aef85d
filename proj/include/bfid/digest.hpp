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

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "bfid/bits.hpp"
#include "bfid/juna.hpp"

namespace bfid {

/// Maps a message to exactly `nbits` digest bits b_1..b_n.
using DigestFn = std::function<BitString(std::span<const std::uint8_t> message, std::size_t nbits)>;

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

/// SHA-256 in counter mode, truncated to `nbits`.
BitString expand_sha256(std::span<const std::uint8_t> message, std::size_t nbits);

/// Message bits taken verbatim, zero-padded or truncated. Test use only.
DigestFn padding_digest();

/// Full m-bit Juna digest of an arbitrary message: SHA-256 pre-digest to
/// iv.n bits (an all-zero pre-digest gets its last bit set), then compression.
Natural juna_message_digest(const juna::HashInitValue& iv, std::span<const std::uint8_t> message);

/// Classical pre-digest to iv.n bits, Juna compression, low `nbits` bits of
/// the m-bit result. Requires nbits <= iv.m.
DigestFn juna_digest(std::shared_ptr<const juna::HashInitValue> iv);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace bfid
