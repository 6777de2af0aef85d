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

#include "bfid/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfid {

BitString BitString::from_text(std::string_view text) {
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            out.bits_[i] = 1;
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string may contain only 0 and 1");
        }
    }
    return out;
}

BitString BitString::from_natural(const Natural& value, std::size_t width) {
    if (value < 0 || bit_length(value) > width) {
        throw std::invalid_argument("value does not fit in " + std::to_string(width) + " bits");
    }
    BitString out(width);
    for (std::size_t i = 0; i < width; ++i) {
        out.bits_[width - 1 - i] = mpz_tstbit(value.get_mpz_t(), i) ? 1 : 0;
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
    BitString out(bytes.size() * 8);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        for (int b = 0; b < 8; ++b) {
            out.bits_[i * 8 + b] = (bytes[i] >> (7 - b)) & 1;
        }
    }
    return out;
}

bool BitString::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::size_t BitString::popcount() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Natural BitString::to_natural() const {
    Natural out = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) mpz_setbit(out.get_mpz_t(), bits_.size() - 1 - i);
    }
    return out;
}

std::string BitString::to_text() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out[i] = '1';
    }
    return out;
}

BitString BitString::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > bits_.size()) throw std::out_of_range("bit slice out of range");
    BitString out(count);
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(offset), count, out.bits_.begin());
    return out;
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::size_t bit_length(const Natural& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::string to_hex(const Natural& x) {
    return x.get_str(16);
}

std::string to_hex_padded(const Natural& x, std::size_t digits) {
    std::string s = x.get_str(16);
    if (s.size() < digits) s.insert(0, digits - s.size(), '0');
    return s;
}

Natural from_hex(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty hex value");
    for (char c : text) {
        bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
        if (!ok) throw std::invalid_argument("bad hex digit in '" + std::string(text) + "'");
    }
    return Natural(std::string(text), 16);
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view text) {
    if (text.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::vector<std::uint8_t> out(text.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(nibble(text[2 * i]) << 4 | nibble(text[2 * i + 1]));
    }
    return out;
}

void wipe(Natural& x) {
    mpz_ptr z = x.get_mpz_t();
    const auto limbs = static_cast<mp_size_t>(z->_mp_alloc);
    if (limbs > 0) {
        mp_limb_t* p = mpz_limbs_modify(z, limbs);
        volatile mp_limb_t* vp = p;
        for (mp_size_t i = 0; i < limbs; ++i) vp[i] = 0;
    }
    x = 0;
}

}  // namespace bfid
