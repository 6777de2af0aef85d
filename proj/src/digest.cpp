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

#include "bfid/digest.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace bfid {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32) {
        throw std::runtime_error("SHA-256 failed");
    }
    return out;
}

BitString expand_sha256(std::span<const std::uint8_t> message, std::size_t nbits) {
    const auto seed = sha256(message);
    BitString out;
    for (std::uint32_t counter = 0; out.size() < nbits; ++counter) {
        std::vector<std::uint8_t> block(seed.begin(), seed.end());
        for (int s = 24; s >= 0; s -= 8) block.push_back(static_cast<std::uint8_t>(counter >> s));
        out.append(BitString::from_bytes(sha256(block)));
    }
    return out.slice(0, nbits);
}

DigestFn padding_digest() {
    return [](std::span<const std::uint8_t> message, std::size_t nbits) {
        BitString raw = BitString::from_bytes(message);
        if (raw.size() >= nbits) return raw.slice(0, nbits);
        raw.append(BitString(nbits - raw.size()));
        return raw;
    };
}

Natural juna_message_digest(const juna::HashInitValue& iv, std::span<const std::uint8_t> message) {
    BitString pre = expand_sha256(message, iv.n());
    if (pre.is_zero()) pre.set(pre.size() - 1, true);
    return juna::hash_compress(iv, pre);
}

DigestFn juna_digest(std::shared_ptr<const juna::HashInitValue> iv) {
    if (!iv) throw std::invalid_argument("missing initial value");
    return [iv](std::span<const std::uint8_t> message, std::size_t nbits) {
        if (nbits > iv->m()) {
            throw juna::HashError("digest of " + std::to_string(nbits) + " bits requested from an m = " +
                                  std::to_string(iv->m()) + " initial value");
        }
        const Natural d = juna_message_digest(*iv, message);
        const Natural low = d & ((Natural(1) << nbits) - 1);
        return BitString::from_natural(low, nbits);
    };
}

}  // namespace bfid
