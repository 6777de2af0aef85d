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
#include <string>

#include "bfid/codec.hpp"
#include "bfid/platform.hpp"

/// IPv6+ addresses with BFID interface identifiers, and dynamic passwords.
namespace bfid::netapps {

class AddressError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Widths of the routing and subnet fields; they share 40 bits.
struct Layout {
    unsigned routing_bits = 32;
    unsigned subnet_bits = 8;

    /// Throws AddressError unless 24 <= w_r <= 32, 8 <= w_s <= 16, w_r + w_s = 40.
    void validate() const;
    bool operator==(const Layout&) const = default;
};

inline constexpr std::size_t kInterfaceIdBits = 80;

struct Ipv6PlusAddress {
    unsigned nation_id = 0;  // 8 bits, calling-code style (86 for China)
    Natural routing;
    Natural subnet;
    BitString interface_id{kInterfaceIdBits};
    Layout layout;

    bool operator==(const Ipv6PlusAddress&) const = default;
};

/// nation | routing | subnet | interface id, big-endian, 128 bits.
Natural pack_address(const Ipv6PlusAddress& addr);
Ipv6PlusAddress parse_address(const Natural& value, const Layout& layout);

/// 32 hex digits followed by " layout=<w_r>,<w_s>".
std::string format_address(const Ipv6PlusAddress& addr);
Ipv6PlusAddress parse_address_text(const std::string& text);

struct InterfaceId {
    BitString bits;
    codec::Confection confection;  // escrow payload to register with the platform
};

/// Escrow-mode BFID over a host-interface profile; the 80 BFID bits become the
/// interface id. Needs m <= 80.
InterfaceId make_interface_id(const reesse::PrivateKey& admin, const reesse::CommonParams& common,
                              const codec::ObjectProfile& host, const DigestFn& hash,
                              const reesse::InterpretationConfig& interp, numeric::Rng& rng,
                              const std::string& source_info = {});

/// Asks the platform about the address's interface id. TransportError from the
/// client propagates; an ERR response throws std::runtime_error.
platform::Verdict validate_source_address(const Ipv6PlusAddress& addr, platform::VerifierClient& client);

struct LoginContext {
    std::string user;
    std::string date;
    std::string time;
    std::string machine;
};

codec::ObjectProfile login_profile(const LoginContext& ctx);

/// Full-mode BFID over the login profile.
std::string gen_dynamic_password(const reesse::PrivateKey& priv, const reesse::CommonParams& common,
                                 const LoginContext& ctx, const DigestFn& hash,
                                 const reesse::InterpretationConfig& interp, numeric::Rng& rng);

/// Throws codec::DecodeError on text that is not a full-mode BFID.
bool check_dynamic_password(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                            const LoginContext& ctx, const std::string& password, const DigestFn& hash,
                            const reesse::InterpretationConfig& interp);

}  // namespace bfid::netapps
