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

#include "bfid/netapps.hpp"

#include <sstream>

namespace bfid::netapps {

void Layout::validate() const {
    if (routing_bits < 24 || routing_bits > 32) throw AddressError("routing width must be 24..32");
    if (subnet_bits < 8 || subnet_bits > 16) throw AddressError("subnet width must be 8..16");
    if (routing_bits + subnet_bits != 40) {
        throw AddressError("routing + subnet widths must be 40, got " + std::to_string(routing_bits + subnet_bits));
    }
}

Natural pack_address(const Ipv6PlusAddress& a) {
    a.layout.validate();
    if (a.nation_id > 0xff) throw AddressError("nation id exceeds 8 bits");
    if (bit_length(a.routing) > a.layout.routing_bits) throw AddressError("routing field overflows its width");
    if (bit_length(a.subnet) > a.layout.subnet_bits) throw AddressError("subnet field overflows its width");
    if (a.interface_id.size() != kInterfaceIdBits) throw AddressError("interface id must be 80 bits");
    Natural v = a.nation_id;
    v = (v << a.layout.routing_bits) | a.routing;
    v = (v << a.layout.subnet_bits) | a.subnet;
    v = (v << kInterfaceIdBits) | a.interface_id.to_natural();
    return v;
}

Ipv6PlusAddress parse_address(const Natural& value, const Layout& layout) {
    layout.validate();
    if (value < 0 || bit_length(value) > 128) throw AddressError("address exceeds 128 bits");
    const BitString bits = BitString::from_natural(value, 128);
    Ipv6PlusAddress a;
    a.layout = layout;
    a.nation_id = static_cast<unsigned>(bits.slice(0, 8).to_natural().get_ui());
    a.routing = bits.slice(8, layout.routing_bits).to_natural();
    a.subnet = bits.slice(8 + layout.routing_bits, layout.subnet_bits).to_natural();
    a.interface_id = bits.slice(48, kInterfaceIdBits);
    return a;
}

std::string format_address(const Ipv6PlusAddress& a) {
    return to_hex_padded(pack_address(a), 32) + " layout=" + std::to_string(a.layout.routing_bits) + "," +
           std::to_string(a.layout.subnet_bits);
}

Ipv6PlusAddress parse_address_text(const std::string& text) {
    std::istringstream in(text);
    std::string hex, lay;
    if (!(in >> hex >> lay) || lay.rfind("layout=", 0) != 0) {
        throw AddressError("expected '<32 hex> layout=<w_r>,<w_s>'");
    }
    if (hex.size() != 32) throw AddressError("address must be 32 hex digits");
    const auto comma = lay.find(',');
    if (comma == std::string::npos) throw AddressError("layout must be <w_r>,<w_s>");
    Layout layout;
    try {
        layout.routing_bits = static_cast<unsigned>(std::stoul(lay.substr(7, comma - 7)));
        layout.subnet_bits = static_cast<unsigned>(std::stoul(lay.substr(comma + 1)));
        return parse_address(from_hex(hex), layout);
    } catch (const AddressError&) {
        throw;
    } catch (const std::exception&) {
        throw AddressError("malformed address text");
    }
}

InterfaceId make_interface_id(const reesse::PrivateKey& admin, const reesse::CommonParams& common,
                              const codec::ObjectProfile& host, const DigestFn& hash,
                              const reesse::InterpretationConfig& interp, numeric::Rng& rng,
                              const std::string& source_info) {
    if (host.kind != codec::ObjectKind::host_interface) {
        throw std::invalid_argument("interface ids need a host-interface profile");
    }
    if (codec::field_bits(common.m()) != kInterfaceIdBits) {
        throw std::invalid_argument("interface ids need m <= 80");
    }
    InterfaceId out;
    out.confection = codec::confect_bfid(admin, common, host, hash, codec::Mode::escrow, interp, rng, source_info);
    out.bits = out.confection.bfid.bits;
    return out;
}

platform::Verdict validate_source_address(const Ipv6PlusAddress& addr, platform::VerifierClient& client) {
    const std::string bfid = codec::encode_bits(addr.interface_id);
    const std::string resp = client.request("VERIFY " + bfid);
    if (resp.rfind("OK ACCEPT", 0) == 0) return platform::Verdict::accept;
    if (resp.rfind("OK REJECT", 0) == 0) return platform::Verdict::reject;
    if (resp.rfind("OK UNKNOWN", 0) == 0) return platform::Verdict::unknown;
    throw std::runtime_error("platform error: " + resp.substr(0, resp.find('\n')));
}

codec::ObjectProfile login_profile(const LoginContext& ctx) {
    codec::ObjectProfile p;
    p.kind = codec::ObjectKind::login;
    p.subject_id = ctx.user;
    p.add("user", ctx.user).add("date", ctx.date).add("time", ctx.time).add("machine", ctx.machine);
    return p;
}

std::string gen_dynamic_password(const reesse::PrivateKey& priv, const reesse::CommonParams& common,
                                 const LoginContext& ctx, const DigestFn& hash,
                                 const reesse::InterpretationConfig& interp, numeric::Rng& rng) {
    return codec::confect_bfid(priv, common, login_profile(ctx), hash, codec::Mode::full, interp, rng).bfid.text;
}

bool check_dynamic_password(const reesse::PublicKey& pub, const reesse::CommonParams& common,
                            const LoginContext& ctx, const std::string& password, const DigestFn& hash,
                            const reesse::InterpretationConfig& interp) {
    const auto dec = codec::decode_bfid(password, common.m());
    if (dec.mode != codec::Mode::full) {
        throw codec::DecodeError("dynamic password must be a full-mode BFID", 0);
    }
    return codec::verify_bfid(pub, common, login_profile(ctx), password, std::nullopt, hash, interp).accepted;
}

}  // namespace bfid::netapps
