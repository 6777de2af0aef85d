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

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "bfid/codec.hpp"
#include "bfid/digest.hpp"
#include "bfid/juna.hpp"
#include "bfid/keyfile.hpp"
#include "bfid/netapps.hpp"
#include "bfid/platform.hpp"
#include "bfid/reesse.hpp"

namespace {

using namespace bfid;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitTransport = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::uint64_t> seed;
    std::string endpoint = "127.0.0.1:7878";
    std::string key;
    std::string iv;
    std::string input;
    std::string output;
    std::string sig;
    std::string profile = "toy24";
    std::string interp = "reconstructed";
    std::string kind = "merchandise";
    std::string subject;
    std::vector<std::string> attrs;
    std::string mode = "escrow";
    std::string source;
    std::string bfid;
    std::string digest;
    std::string u;
    std::string region;
    std::optional<std::uint64_t> ts;
    std::string stage;
    std::optional<std::uint64_t> window;
    std::string id;
    std::string log;
    std::string listen = "127.0.0.1:7878";
    std::size_t threshold = 5;
    std::vector<std::string> profiles = {"toy24", "toy32"};
    std::vector<std::string> variants;
    std::size_t trials = 100;
    std::size_t hash_m = 80, hash_n = 80;
    unsigned long toy_prime = 0, toy_q = 0;
    unsigned nation = 86;
    std::string routing = "0", subnet = "0", iid;
    std::string layout = "32,8";
    std::string address;
    std::string user, date, time, machine, password;
    bool strict = false;
    bool reg = false;
};

numeric::Rng make_rng(const Options& o) {
    if (o.seed) return numeric::Rng(*o.seed);
    std::random_device rd;
    return numeric::Rng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
}

std::string resolve_key_path(const std::string& key, const char* suffix) {
    if (key.empty()) throw UsageError("--key is required");
    const std::string with = key + suffix;
    if (std::filesystem::exists(with)) return with;
    if (std::filesystem::exists(key)) return key;
    throw UsageError("no key file " + with + " or " + key);
}

reesse::KeyFile load_public(const std::string& key) {
    auto kf = reesse::read_key_file(resolve_key_path(key, ".pub"));
    if (!kf.pub) throw UsageError("key file has no [public] block");
    return kf;
}

reesse::KeyFile load_private(const std::string& key) {
    auto kf = reesse::read_key_file(resolve_key_path(key, ".sec"));
    if (!kf.priv) throw UsageError("key file has no [private] block");
    return kf;
}

reesse::InterpretationConfig interp_of(const reesse::CommonParams& c) {
    return reesse::InterpretationConfig::by_name(c.interpretation);
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    if (path.empty()) throw UsageError("--in is required");
    const std::string text = reesse::read_text_file(path);
    return {text.begin(), text.end()};
}

DigestFn digest_fn(const Options& o) {
    if (o.iv.empty()) return expand_sha256;
    std::ifstream in(o.iv);
    if (!in) throw UsageError("cannot read initial value " + o.iv);
    auto iv = std::make_shared<juna::HashInitValue>(juna::read_init_value(in));
    return juna_digest(iv);
}

codec::ObjectProfile build_profile(const Options& o) {
    codec::ObjectProfile p;
    p.kind = codec::parse_object_kind(o.kind);
    p.subject_id = o.subject;
    for (const auto& a : o.attrs) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw UsageError("attribute '" + a + "' must be name=value");
        p.add(a.substr(0, eq), a.substr(eq + 1));
    }
    return p;
}

std::string request(const Options& o, const std::string& line) {
    auto [host, port] = platform::parse_endpoint(o.endpoint);
    platform::TcpClient client(host, port);
    return client.request(line);
}

int print_response(const std::string& resp) {
    std::cout << resp;
    return resp.rfind("ERR", 0) == 0 ? kExitError : kExitOk;
}

netapps::Layout parse_layout(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--layout must be <w_r>,<w_s>");
    netapps::Layout l{static_cast<unsigned>(std::stoul(s.substr(0, comma))),
                      static_cast<unsigned>(std::stoul(s.substr(comma + 1)))};
    l.validate();
    return l;
}

BitString parse_iid(const std::string& s) {
    if (s.size() == 16) return codec::decode_text(s);
    const Natural v = from_hex(s);
    if (bit_length(v) > netapps::kInterfaceIdBits) throw UsageError("interface id exceeds 80 bits");
    return BitString::from_natural(v, netapps::kInterfaceIdBits);
}

int cmd_keygen(const Options& o) {
    if (o.output.empty()) throw UsageError("--out <prefix> is required");
    auto rng = make_rng(o);
    const auto profile = reesse::ParameterProfile::by_name(o.profile);
    const auto interp = reesse::InterpretationConfig::by_name(o.interp);
    const auto keys = reesse::keygen(profile, interp, rng);
    reesse::write_text_file(o.output + ".pub", reesse::public_key_text(keys.pub, keys.common));
    reesse::write_text_file(o.output + ".sec", reesse::private_key_text(keys.priv, keys.common));
    const auto audit = reesse::constraint_audit(keys.pub, keys.priv, keys.common, keys.profile, interp);
    std::cout << "profile " << profile.name << (profile.conforming() ? "" : " (non-conforming toy scale)")
              << "\ninterp " << interp.name << "\nM " << to_hex(keys.common.M()) << "\naudit " << audit.passed()
              << '/' << audit.items.size() << (keys.small_primes.relaxed ? " (prod e_i relaxed)" : "") << '\n';
    return audit.all_pass() ? kExitOk : kExitError;
}

int cmd_hash_init(const Options& o) {
    if (o.output.empty()) throw UsageError("--out is required");
    auto rng = make_rng(o);
    const auto cfg = o.toy_prime ? juna::HashConfig::toy_config(o.hash_m, o.hash_n, o.toy_prime, o.toy_q)
                                 : juna::HashConfig::paper(o.hash_m, o.hash_n);
    const auto iv = juna::hash_init(cfg, rng);
    std::ofstream out(o.output);
    juna::write_init_value(out, iv);
    if (!out) throw std::runtime_error("cannot write " + o.output);
    for (const auto& e : juna::audit_init_value(iv)) {
        std::cout << (e.pass ? "PASS " : "FAIL ") << e.condition << '\n';
    }
    return kExitOk;
}

int cmd_hash(const Options& o) {
    if (o.iv.empty()) throw UsageError("--iv is required");
    std::ifstream in(o.iv);
    if (!in) throw UsageError("cannot read initial value " + o.iv);
    const auto iv = juna::read_init_value(in);
    std::cout << juna::format_digest(iv, juna_message_digest(iv, read_bytes(o.input))) << '\n';
    return kExitOk;
}

int cmd_sign(const Options& o) {
    auto rng = make_rng(o);
    const auto kf = load_private(o.key);
    const auto sig = reesse::sign(*kf.priv, kf.common, read_bytes(o.input), digest_fn(o), interp_of(kf.common), rng);
    const std::string text = reesse::signature_text(sig);
    if (o.output.empty()) {
        std::cout << text;
    } else {
        reesse::write_text_file(o.output, text);
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    const auto kf = load_public(o.key);
    if (o.sig.empty()) throw UsageError("--sig is required");
    const auto sig = reesse::parse_signature_text(reesse::read_text_file(o.sig));
    const auto v = reesse::verify(*kf.pub, kf.common, read_bytes(o.input), sig, digest_fn(o), interp_of(kf.common));
    std::cout << (v.accepted ? "ACCEPT" : "REJECT") << ' ' << v.reason << '\n';
    return v.accepted ? kExitOk : kExitNegative;
}

int cmd_confect(const Options& o) {
    auto rng = make_rng(o);
    const auto kf = load_private(o.key);
    const auto profile = build_profile(o);
    if (o.mode != "escrow" && o.mode != "full") throw UsageError("--mode must be escrow or full");
    const auto mode = o.mode == "full" ? codec::Mode::full : codec::Mode::escrow;
    const auto c = codec::confect_bfid(*kf.priv, kf.common, profile, digest_fn(o), mode, interp_of(kf.common), rng,
                                       o.source);
    std::cout << "bfid " << c.bfid.text << (c.bfid.conforming() ? "" : " (non-conforming length)") << '\n';
    std::cout << "digest " << to_hex(c.digest.to_natural()) << '\n';
    std::cout << "u " << to_hex(c.signature.U) << '\n';
    if (o.reg) {
        if (mode != codec::Mode::escrow) throw UsageError("--register needs escrow mode");
        if (o.subject.empty()) throw UsageError("--register needs --subject");
        const auto frame = platform::signed_frame({"REGISTER_ID", c.bfid.text, o.subject, to_hex(c.digest.to_natural()),
                                                   to_hex(c.signature.U), o.source},
                                                  *kf.priv, kf.common, rng);
        return print_response(request(o, frame));
    }
    return kExitOk;
}

int cmd_check(const Options& o) {
    const auto kf = load_public(o.key);
    if (o.bfid.empty()) throw UsageError("--bfid is required");
    std::optional<Natural> u;
    if (!o.u.empty()) u = from_hex(o.u);
    const auto v = codec::verify_bfid(*kf.pub, kf.common, build_profile(o), o.bfid, u, digest_fn(o),
                                      interp_of(kf.common));
    std::cout << (v.accepted ? "ACCEPT" : "REJECT") << ' ' << v.reason << '\n';
    return v.accepted ? kExitOk : kExitNegative;
}

int cmd_probe(const Options& o) {
    auto rng = make_rng(o);
    std::vector<reesse::ParameterProfile> profiles;
    for (const auto& p : o.profiles) profiles.push_back(reesse::ParameterProfile::by_name(p));
    std::vector<reesse::InterpretationConfig> variants;
    if (o.variants.empty()) {
        variants = reesse::InterpretationConfig::probe_variants();
    } else {
        for (const auto& v : o.variants) variants.push_back(reesse::InterpretationConfig::by_name(v));
    }
    const auto report = reesse::roundtrip_probe(profiles, variants, o.trials, rng);
    std::ostringstream os;
    os << report.to_text();
    os << "# fully accepting:";
    for (const auto& v : report.fully_accepting_variants()) os << ' ' << v;
    os << '\n';
    if (o.output.empty()) {
        std::cout << os.str();
    } else {
        reesse::write_text_file(o.output, os.str());
    }
    return kExitOk;
}

int cmd_serve(const Options& o) {
    platform::PlatformConfig cfg;
    cfg.log_path = o.log;
    cfg.burst_threshold = o.threshold;
    if (o.window) cfg.default_window = *o.window;
    platform::Platform p(cfg);
    auto [host, port] = platform::parse_endpoint(o.listen);
    platform::Server server(p, host, port);
    std::cout << "listening on " << host << ':' << server.port() << " log=" << (o.log.empty() ? "-" : o.log)
              << " frames=" << p.log_size() << std::endl;
    server.serve_forever();
    return kExitOk;
}

int cmd_register_subject(const Options& o) {
    auto rng = make_rng(o);
    if (o.id.empty()) throw UsageError("--id is required");
    const auto pub = load_public(o.key);
    const auto sec = load_private(o.key);
    const std::string text = reesse::public_key_text(*pub.pub, pub.common);
    const auto frame = platform::signed_frame({"REGISTER_SUBJECT", o.id, bytes_to_hex(as_bytes(text))}, *sec.priv,
                                              sec.common, rng);
    return print_response(request(o, frame));
}

int cmd_register_id(const Options& o) {
    auto rng = make_rng(o);
    const auto sec = load_private(o.key);
    if (o.bfid.empty() || o.subject.empty() || o.digest.empty() || o.u.empty()) {
        throw UsageError("--bfid, --subject, --digest and --u are required");
    }
    const auto frame = platform::signed_frame({"REGISTER_ID", o.bfid, o.subject, o.digest, o.u, o.source},
                                              *sec.priv, sec.common, rng);
    return print_response(request(o, frame));
}

int cmd_query(const Options& o) {
    std::string line = "VERIFY " + o.bfid;
    if (!o.digest.empty()) line += " " + o.digest;
    if (!o.region.empty()) line += " region=" + o.region;
    if (o.ts) line += " ts=" + std::to_string(*o.ts);
    const std::string resp = request(o, line);
    const int rc = print_response(resp);
    if (rc == kExitOk && o.strict && resp.rfind("OK ACCEPT", 0) != 0) return kExitNegative;
    return rc;
}

int cmd_trace(const Options& o) { return print_response(request(o, "TRACE " + o.bfid)); }

int cmd_event(const Options& o) {
    auto rng = make_rng(o);
    const auto sec = load_private(o.key);
    if (!o.ts) throw UsageError("--ts is required");
    const auto frame = platform::signed_frame({"EVENT", o.bfid, o.stage, o.region, std::to_string(*o.ts)}, *sec.priv,
                                              sec.common, rng);
    return print_response(request(o, frame));
}

int cmd_scan(const Options& o) {
    return print_response(request(o, o.window ? "SCAN " + std::to_string(*o.window) : "SCAN"));
}

int cmd_ipv6_pack(const Options& o) {
    netapps::Ipv6PlusAddress a;
    a.nation_id = o.nation;
    a.layout = parse_layout(o.layout);
    a.routing = from_hex(o.routing);
    a.subnet = from_hex(o.subnet);
    a.interface_id = parse_iid(o.iid);
    std::cout << netapps::format_address(a) << '\n';
    return kExitOk;
}

int cmd_ipv6_parse(const Options& o) {
    const auto a = netapps::parse_address_text(o.address);
    std::cout << "nation " << a.nation_id << "\nrouting " << to_hex(a.routing) << "\nsubnet " << to_hex(a.subnet)
              << "\ninterface " << to_hex_padded(a.interface_id.to_natural(), 20) << "\nbfid "
              << codec::encode_bits(a.interface_id) << '\n';
    return kExitOk;
}

int cmd_ipv6_iid(const Options& o) {
    auto rng = make_rng(o);
    const auto kf = load_private(o.key);
    Options h = o;
    h.kind = "host-interface";
    const auto iid = netapps::make_interface_id(*kf.priv, kf.common, build_profile(h), digest_fn(o),
                                                interp_of(kf.common), rng, o.source);
    std::cout << "interface " << to_hex_padded(iid.bits.to_natural(), 20) << "\nbfid " << iid.confection.bfid.text
              << "\ndigest " << to_hex(iid.confection.digest.to_natural()) << "\nu "
              << to_hex(iid.confection.signature.U) << '\n';
    if (o.reg) {
        if (o.subject.empty()) throw UsageError("--register needs --subject");
        const auto frame = platform::signed_frame(
            {"REGISTER_ID", iid.confection.bfid.text, o.subject, to_hex(iid.confection.digest.to_natural()),
             to_hex(iid.confection.signature.U), o.source},
            *kf.priv, kf.common, rng);
        return print_response(request(o, frame));
    }
    return kExitOk;
}

int cmd_ipv6_validate(const Options& o) {
    const auto a = netapps::parse_address_text(o.address);
    auto [host, port] = platform::parse_endpoint(o.endpoint);
    platform::TcpClient client(host, port);
    const auto v = netapps::validate_source_address(a, client);
    std::cout << platform::to_string(v) << '\n';
    return o.strict && v != platform::Verdict::accept ? kExitNegative : kExitOk;
}

netapps::LoginContext login_of(const Options& o) { return {o.user, o.date, o.time, o.machine}; }

int cmd_dynpass_gen(const Options& o) {
    auto rng = make_rng(o);
    const auto kf = load_private(o.key);
    std::cout << netapps::gen_dynamic_password(*kf.priv, kf.common, login_of(o), digest_fn(o), interp_of(kf.common),
                                               rng)
              << '\n';
    return kExitOk;
}

int cmd_dynpass_check(const Options& o) {
    const auto kf = load_public(o.key);
    const bool ok = netapps::check_dynamic_password(*kf.pub, kf.common, login_of(o), o.password, digest_fn(o),
                                                    interp_of(kf.common));
    std::cout << (ok ? "ACCEPT" : "REJECT") << '\n';
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BFID toolkit: lightweight signatures, identities and the verification platform"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "RNG seed; makes output byte-reproducible");
    app.add_option("--platform", o.endpoint, "platform endpoint host:port");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, std::function<int(const Options&)> fn) {
        sub->callback([&action, &o, fn] { action = [&o, fn] { return fn(o); }; });
    };
    auto key_opt = [&](CLI::App* s) { s->add_option("--key", o.key, "key file or prefix")->required(); };
    auto iv_opt = [&](CLI::App* s) { s->add_option("--iv", o.iv, "Juna initial value; SHA-256 when absent"); };
    auto profile_opts = [&](CLI::App* s) {
        s->add_option("--kind", o.kind, "object kind");
        s->add_option("--subject", o.subject, "subject id");
        s->add_option("--attr", o.attrs, "attribute name=value (repeatable, ordered)");
    };

    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    keygen->add_option("--profile", o.profile, "toy24, toy32, paper80, paper96");
    keygen->add_option("--interp", o.interp, "interpretation variant");
    keygen->add_option("--out", o.output, "output prefix")->required();
    bind(keygen, cmd_keygen);

    auto* hinit = app.add_subcommand("hash-init", "create a Juna initial value");
    hinit->add_option("--m", o.hash_m);
    hinit->add_option("--n", o.hash_n);
    hinit->add_option("--toy-prime", o.toy_prime, "test-only maximal prime");
    hinit->add_option("--toy-q", o.toy_q, "test-only lever count");
    hinit->add_option("--out", o.output)->required();
    bind(hinit, cmd_hash_init);

    auto* hash = app.add_subcommand("hash", "Juna digest of a file");
    hash->add_option("--iv", o.iv)->required();
    hash->add_option("file", o.input)->required();
    bind(hash, cmd_hash);

    auto* sign = app.add_subcommand("sign", "sign a file");
    key_opt(sign);
    iv_opt(sign);
    sign->add_option("--in", o.input)->required();
    sign->add_option("--out", o.output);
    bind(sign, cmd_sign);

    auto* verify = app.add_subcommand("verify", "verify a file signature");
    key_opt(verify);
    iv_opt(verify);
    verify->add_option("--in", o.input)->required();
    verify->add_option("--sig", o.sig)->required();
    bind(verify, cmd_verify);

    auto* bfid = app.add_subcommand("bfid", "confect or check identities");
    bfid->require_subcommand(1);
    auto* confect = bfid->add_subcommand("confect", "sign an object profile into a BFID");
    key_opt(confect);
    iv_opt(confect);
    profile_opts(confect);
    confect->add_option("--mode", o.mode, "escrow or full");
    confect->add_option("--source", o.source, "source information stored with the escrow");
    confect->add_flag("--register", o.reg, "register the identity with the platform");
    bind(confect, cmd_confect);
    auto* check = bfid->add_subcommand("check", "verify a BFID against a profile");
    key_opt(check);
    iv_opt(check);
    profile_opts(check);
    check->add_option("--bfid", o.bfid)->required();
    check->add_option("--u", o.u, "escrowed U (hex) for escrow-mode BFIDs");
    bind(check, cmd_check);

    auto* probe = app.add_subcommand("probe", "round-trip prober over interpretation variants");
    probe->add_option("--profiles", o.profiles)->delimiter(',');
    probe->add_option("--variants", o.variants, "default: all known variants")->delimiter(',');
    probe->add_option("--trials", o.trials);
    probe->add_option("--out", o.output);
    bind(probe, cmd_probe);

    auto* serve = app.add_subcommand("serve", "run the verification platform");
    serve->add_option("--log", o.log, "append-only log file");
    serve->add_option("--listen", o.listen);
    serve->add_option("--threshold", o.threshold, "burst threshold");
    serve->add_option("--window", o.window, "default scan window");
    bind(serve, cmd_serve);

    auto* rs = app.add_subcommand("register-subject", "register a public key");
    key_opt(rs);
    rs->add_option("--id", o.id)->required();
    bind(rs, cmd_register_subject);

    auto* ri = app.add_subcommand("register-id", "register an escrowed identity");
    key_opt(ri);
    ri->add_option("--bfid", o.bfid)->required();
    ri->add_option("--subject", o.subject)->required();
    ri->add_option("--digest", o.digest)->required();
    ri->add_option("--u", o.u)->required();
    ri->add_option("--source", o.source);
    bind(ri, cmd_register_id);

    auto* query = app.add_subcommand("query", "ask the platform to verify a BFID");
    query->add_option("bfid", o.bfid)->required();
    query->add_option("--digest", o.digest);
    query->add_option("--region", o.region);
    query->add_option("--ts", o.ts);
    query->add_flag("--strict", o.strict, "exit 3 unless ACCEPT");
    bind(query, cmd_query);

    auto* trace = app.add_subcommand("trace", "list trace events");
    trace->add_option("bfid", o.bfid)->required();
    bind(trace, cmd_trace);

    auto* event = app.add_subcommand("event", "record a distribution event");
    key_opt(event);
    event->add_option("bfid", o.bfid)->required();
    event->add_option("stage", o.stage)->required();
    event->add_option("region", o.region)->required();
    event->add_option("--ts", o.ts)->required();
    bind(event, cmd_event);

    auto* scan = app.add_subcommand("scan", "run the fraud guard");
    scan->add_option("--window", o.window);
    bind(scan, cmd_scan);

    auto* ip = app.add_subcommand("ipv6plus", "IPv6+ addresses");
    ip->require_subcommand(1);
    auto* pack = ip->add_subcommand("pack", "assemble an address");
    pack->add_option("--nation", o.nation);
    pack->add_option("--routing", o.routing, "hex");
    pack->add_option("--subnet", o.subnet, "hex");
    pack->add_option("--iid", o.iid, "80-bit hex or 16-symbol BFID")->required();
    pack->add_option("--layout", o.layout, "w_r,w_s");
    bind(pack, cmd_ipv6_pack);
    auto* parse = ip->add_subcommand("parse", "split an address into fields");
    parse->add_option("address", o.address, "'<hex> layout=w_r,w_s'")->required();
    bind(parse, cmd_ipv6_parse);
    auto* iid = ip->add_subcommand("iid", "make a BFID interface id");
    key_opt(iid);
    iv_opt(iid);
    profile_opts(iid);
    iid->add_option("--source", o.source);
    iid->add_flag("--register", o.reg);
    bind(iid, cmd_ipv6_iid);
    auto* validate = ip->add_subcommand("validate", "check a source address with the platform");
    validate->add_option("address", o.address)->required();
    validate->add_flag("--strict", o.strict, "exit 3 unless ACCEPT");
    bind(validate, cmd_ipv6_validate);

    auto* dyn = app.add_subcommand("dynpass", "dynamic passwords");
    dyn->require_subcommand(1);
    auto login_opts = [&](CLI::App* s) {
        s->add_option("--user", o.user)->required();
        s->add_option("--date", o.date)->required();
        s->add_option("--time", o.time)->required();
        s->add_option("--machine", o.machine)->required();
    };
    auto* gen = dyn->add_subcommand("gen", "generate a login password");
    key_opt(gen);
    iv_opt(gen);
    login_opts(gen);
    bind(gen, cmd_dynpass_gen);
    auto* dcheck = dyn->add_subcommand("check", "check a login password");
    key_opt(dcheck);
    iv_opt(dcheck);
    login_opts(dcheck);
    dcheck->add_option("--password", o.password)->required();
    bind(dcheck, cmd_dynpass_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const platform::TransportError& e) {
        std::cerr << "transport: " << e.what() << '\n';
        return kExitTransport;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
