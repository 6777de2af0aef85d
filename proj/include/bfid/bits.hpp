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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bfid {

using Natural = mpz_class;

/// A fixed-length bit string, index 0 is the most significant bit (b_1).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n) : bits_(n, 0) {}

    static BitString from_text(std::string_view text);
    static BitString from_natural(const Natural& value, std::size_t width);
    static BitString from_bytes(std::span<const std::uint8_t> bytes);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    bool is_zero() const;
    std::size_t popcount() const;

    /// Big-endian value of the bits.
    Natural to_natural() const;
    std::string to_text() const;

    BitString slice(std::size_t offset, std::size_t count) const;
    void append(const BitString& other);

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

std::size_t bit_length(const Natural& x);

/// Lowercase hex, no prefix. Zero renders as "0".
std::string to_hex(const Natural& x);
/// Lowercase hex left-padded with zeros to `digits`.
std::string to_hex_padded(const Natural& x, std::size_t digits);
/// Throws std::invalid_argument on anything but [0-9a-fA-F]+.
Natural from_hex(std::string_view text);

std::string bytes_to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> hex_to_bytes(std::string_view text);

/// Overwrites the limbs of a natural before releasing it.
void wipe(Natural& x);

}  // namespace bfid
