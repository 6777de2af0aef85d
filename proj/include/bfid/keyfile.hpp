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

#include <iosfwd>
#include <optional>
#include <string>

#include "bfid/reesse.hpp"

/// Line-oriented key and signature files: `[common]`, `[public]` and
/// `[private]` blocks of `name value` lines, big integers in lowercase hex.
namespace bfid::reesse {

class KeyFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct KeyFile {
    CommonParams common;
    std::optional<PublicKey> pub;
    std::optional<PrivateKey> priv;
};

void write_common(std::ostream& out, const CommonParams& common);
void write_public(std::ostream& out, const PublicKey& pub);
void write_private(std::ostream& out, const PrivateKey& priv);

/// [common] + [public]; the blob a registry stores.
std::string public_key_text(const PublicKey& pub, const CommonParams& common);
/// [common] + [private].
std::string private_key_text(const PrivateKey& priv, const CommonParams& common);

/// Parses any combination of blocks; [common] is mandatory.
KeyFile parse_key_text(const std::string& text);
KeyFile read_key_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

std::string signature_text(const Signature& sig);
Signature parse_signature_text(const std::string& text);

}  // namespace bfid::reesse
