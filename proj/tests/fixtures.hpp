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

#include <string>

#include "bfid/codec.hpp"
#include "bfid/keyfile.hpp"
#include "bfid/platform.hpp"
#include "bfid/reesse.hpp"

namespace bfid::testing {

/// A subject with a toy key that talks to a platform through signed frames.
struct Issuer {
    std::string id;
    reesse::KeyMaterial keys;
    numeric::Rng rng;

    Issuer(std::string subject, std::uint64_t seed, const std::string& profile = "toy32")
        : id(std::move(subject)),
          keys(make_keys(profile, seed)),
          rng(seed ^ 0x9e3779b97f4a7c15ull) {}

    static reesse::KeyMaterial make_keys(const std::string& profile, std::uint64_t seed) {
        numeric::Rng r(seed);
        return reesse::keygen(reesse::ParameterProfile::by_name(profile),
                              reesse::InterpretationConfig::reconstructed(), r);
    }

    reesse::InterpretationConfig interp() const { return reesse::InterpretationConfig::reconstructed(); }

    std::string register_frame() {
        const auto text = reesse::public_key_text(keys.pub, keys.common);
        return platform::signed_frame({"REGISTER_SUBJECT", id, bytes_to_hex(as_bytes(text))}, keys.priv,
                                      keys.common, rng);
    }

    codec::Confection confect(const codec::ObjectProfile& p, const std::string& source = "factory") {
        return codec::confect_bfid(keys.priv, keys.common, p, expand_sha256, codec::Mode::escrow, interp(), rng,
                                   source);
    }

    std::string register_id_frame(const codec::Confection& c) {
        return platform::signed_frame({"REGISTER_ID", c.bfid.text, id, to_hex(c.digest.to_natural()),
                                       to_hex(c.signature.U), c.escrow ? c.escrow->source_info : ""},
                                      keys.priv, keys.common, rng);
    }

    std::string event_frame(const std::string& bfid, const std::string& stage, const std::string& region,
                            std::uint64_t ts) {
        return platform::signed_frame({"EVENT", bfid, stage, region, std::to_string(ts)}, keys.priv, keys.common,
                                      rng);
    }
};

inline codec::ObjectProfile item(const std::string& serial) {
    codec::ObjectProfile p;
    p.kind = codec::ObjectKind::merchandise;
    p.subject_id = "acme";
    p.add("product", "tea").add("serial", serial);
    return p;
}

}  // namespace bfid::testing
