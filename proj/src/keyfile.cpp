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

#include "bfid/keyfile.hpp"

#include <fstream>
#include <sstream>

namespace bfid::reesse {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw KeyFileError("key file line " + std::to_string(line) + ": " + what);
}

Natural hex_field(std::istringstream& ls, std::size_t line) {
    std::string v;
    if (!(ls >> v)) fail(line, "missing value");
    try {
        return from_hex(v);
    } catch (const std::invalid_argument&) {
        fail(line, "bad hex '" + v + "'");
    }
}

}  // namespace

void write_common(std::ostream& out, const CommonParams& c) {
    out << "[common]\n";
    out << "interp " << c.interpretation << '\n';
    out << "sigma " << to_hex(c.sigma) << '\n';
    out << "n " << c.n << '\n';
    out << "S " << to_hex(c.S) << '\n';
    out << "T " << to_hex(c.T) << '\n';
    out << "M " << to_hex(c.M()) << '\n';
    for (const auto& f : c.ctx.factors) out << "factor " << to_hex(f.prime) << ' ' << f.exponent << '\n';
}

void write_public(std::ostream& out, const PublicKey& pub) {
    out << "[public]\n";
    out << "alpha " << to_hex(pub.alpha) << '\n';
    out << "beta " << to_hex(pub.beta) << '\n';
    for (const auto& c : pub.C) out << "C " << to_hex(c) << '\n';
}

void write_private(std::ostream& out, const PrivateKey& priv) {
    out << "[private]\n";
    out << "bound " << to_hex(priv.A.bound) << '\n';
    for (const auto& a : priv.A.items) out << "A " << to_hex(a) << '\n';
    for (long l : priv.ell) out << "ell " << l << '\n';
    out << "W " << to_hex(priv.W) << '\n';
    out << "delta " << to_hex(priv.delta) << '\n';
    out << "D " << to_hex(priv.D) << '\n';
    out << "d " << to_hex(priv.d) << '\n';
    out << "h_bar " << to_hex(priv.h_bar) << '\n';
}

std::string public_key_text(const PublicKey& pub, const CommonParams& common) {
    std::ostringstream os;
    write_common(os, common);
    write_public(os, pub);
    return os.str();
}

std::string private_key_text(const PrivateKey& priv, const CommonParams& common) {
    std::ostringstream os;
    write_common(os, common);
    write_private(os, priv);
    return os.str();
}

KeyFile parse_key_text(const std::string& text) {
    KeyFile kf;
    std::istringstream in(text);
    std::string line, block;
    bool saw_common = false, saw_n = false;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            block = line;
            if (block == "[common]") {
                saw_common = true;
            } else if (block == "[public]") {
                kf.pub.emplace();
            } else if (block == "[private]") {
                kf.priv.emplace();
            } else {
                fail(no, "unknown block " + block);
            }
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (block == "[common]") {
            auto& c = kf.common;
            if (key == "interp") {
                ls >> c.interpretation;
            } else if (key == "sigma") {
                c.sigma = hex_field(ls, no);
            } else if (key == "n") {
                if (!(ls >> c.n)) fail(no, "bad n");
                saw_n = true;
            } else if (key == "S") {
                c.S = hex_field(ls, no);
            } else if (key == "T") {
                c.T = hex_field(ls, no);
            } else if (key == "M") {
                c.ctx.modulus = hex_field(ls, no);
                c.ctx.order = c.ctx.modulus - 1;
            } else if (key == "factor") {
                PrimePower f;
                f.prime = hex_field(ls, no);
                if (!(ls >> f.exponent)) fail(no, "bad exponent");
                c.ctx.factors.push_back(f);
            } else {
                fail(no, "unknown common field " + key);
            }
        } else if (block == "[public]") {
            auto& p = *kf.pub;
            if (key == "alpha") {
                p.alpha = hex_field(ls, no);
            } else if (key == "beta") {
                p.beta = hex_field(ls, no);
            } else if (key == "C") {
                p.C.push_back(hex_field(ls, no));
            } else {
                fail(no, "unknown public field " + key);
            }
        } else if (block == "[private]") {
            auto& p = *kf.priv;
            if (key == "bound") {
                p.A.bound = hex_field(ls, no);
            } else if (key == "A") {
                p.A.items.push_back(hex_field(ls, no));
            } else if (key == "ell") {
                long l;
                if (!(ls >> l)) fail(no, "bad ell");
                p.ell.push_back(l);
            } else if (key == "W") {
                p.W = hex_field(ls, no);
            } else if (key == "delta") {
                p.delta = hex_field(ls, no);
            } else if (key == "D") {
                p.D = hex_field(ls, no);
            } else if (key == "d") {
                p.d = hex_field(ls, no);
            } else if (key == "h_bar") {
                p.h_bar = hex_field(ls, no);
            } else {
                fail(no, "unknown private field " + key);
            }
        } else {
            fail(no, "field outside any block");
        }
    }
    if (!saw_common || !saw_n || kf.common.ctx.modulus < 3) throw KeyFileError("key file lacks a complete [common] block");
    if (kf.pub && kf.pub->C.size() != kf.common.n) throw KeyFileError("public block has wrong number of C values");
    if (kf.priv && (kf.priv->A.items.size() != kf.common.n || kf.priv->ell.size() != kf.common.n)) {
        throw KeyFileError("private block has wrong number of A or ell values");
    }
    return kf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

KeyFile read_key_file(const std::string& path) { return parse_key_text(read_text_file(path)); }

std::string signature_text(const Signature& sig) { return to_hex(sig.Q) + "\n" + to_hex(sig.U) + "\n"; }

Signature parse_signature_text(const std::string& text) {
    std::istringstream in(text);
    std::string q, u;
    if (!(in >> q >> u)) throw KeyFileError("signature file needs two hex lines");
    try {
        return {from_hex(q), from_hex(u)};
    } catch (const std::invalid_argument&) {
        throw KeyFileError("signature file has malformed hex");
    }
}

}  // namespace bfid::reesse
