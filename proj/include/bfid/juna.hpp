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
#include <iosfwd>
#include <string>
#include <vector>

#include "bfid/bits.hpp"
#include "bfid/numeric.hpp"

/// Juna non-iterative hash: bit shadows, one-time initialization and
/// compression d = prod C_i^(long shadow_i) mod M.
namespace bfid::juna {

struct HashConfig {
    std::size_t m = 80;         // modulus bit length
    std::size_t n = 80;         // message bit length
    Natural max_prime = 1021;   // largest element bound of the coprime set
    Natural q_size = 80;        // number of lever magnitudes, |Q|
    bool toy = false;           // outside the published parameter ranges

    /// Published rows: m in {80, 96, 112, 128, 232} with n >= m.
    static HashConfig paper(std::size_t m, std::size_t n);
    /// Small test-only configuration, marked non-conforming.
    static HashConfig toy_config(std::size_t m, std::size_t n, unsigned long max_prime, unsigned long q_size);

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const;
};

/// Public initial value. `config` carries only m and n when read from a file.
struct HashInitValue {
    std::vector<Natural> C;
    Natural M;
    HashConfig config;

    std::size_t m() const { return config.m; }
    std::size_t n() const { return config.n; }
};

struct ShadowVector {
    std::vector<std::uint32_t> values;
    BitString source;
};

class HashError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shadow of each 1-bit: one plus the zeros just before it; the leftmost
/// 1-bit also absorbs the zeros after the rightmost 1-bit. Sum equals n.
ShadowVector bit_shadow(const BitString& bits);

/// Shadow doubled when the bit n/2 positions away (cyclically by halves) is 1.
std::vector<std::uint32_t> bit_long_shadow(const BitString& bits);

HashInitValue hash_init(const HashConfig& config, numeric::Rng& rng);

Natural hash_compress(const HashInitValue& iv, const BitString& message);

/// ceil(m/4) lowercase hex digits.
std::string format_digest(const HashInitValue& iv, const Natural& digest);

struct AuditEntry {
    std::string condition;
    bool pass = false;
    std::string detail;
};

/// Re-checks the public invariants of an initial value.
std::vector<AuditEntry> audit_init_value(const HashInitValue& iv);

void write_init_value(std::ostream& out, const HashInitValue& iv);
HashInitValue read_init_value(std::istream& in);

}  // namespace bfid::juna
