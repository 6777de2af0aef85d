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

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "bfid/platform.hpp"

namespace bfid::platform {

namespace {

void send_all(int fd, const std::string& data) {
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t w = ::send(fd, data.data() + off, data.size() - off, MSG_NOSIGNAL);
        if (w <= 0) throw TransportError("send failed: " + std::string(std::strerror(errno)));
        off += static_cast<std::size_t>(w);
    }
}

addrinfo* resolve(const std::string& host, std::uint16_t port, bool passive) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    if (passive) hints.ai_flags = AI_PASSIVE;
    addrinfo* res = nullptr;
    const std::string service = std::to_string(port);
    if (::getaddrinfo(host.empty() ? nullptr : host.c_str(), service.c_str(), &hints, &res) != 0 || !res) {
        throw TransportError("cannot resolve " + host);
    }
    return res;
}

}  // namespace

std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& endpoint) {
    const auto colon = endpoint.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("endpoint must be host:port");
    const std::string port = endpoint.substr(colon + 1);
    unsigned long p = 0;
    try {
        std::size_t used = 0;
        p = std::stoul(port, &used);
        if (used != port.size()) throw std::invalid_argument("port");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad port in endpoint '" + endpoint + "'");
    }
    if (p > 65535) throw std::invalid_argument("port out of range in '" + endpoint + "'");
    return {endpoint.substr(0, colon), static_cast<std::uint16_t>(p)};
}

TcpClient::TcpClient(const std::string& host, std::uint16_t port) {
    addrinfo* res = resolve(host, port, false);
    for (addrinfo* a = res; a; a = a->ai_next) {
        fd_ = ::socket(a->ai_family, a->ai_socktype | SOCK_CLOEXEC, a->ai_protocol);
        if (fd_ < 0) continue;
        if (::connect(fd_, a->ai_addr, a->ai_addrlen) == 0) break;
        ::close(fd_);
        fd_ = -1;
    }
    ::freeaddrinfo(res);
    if (fd_ < 0) throw TransportError("cannot connect to " + host + ":" + std::to_string(port));
}

TcpClient::~TcpClient() {
    if (fd_ >= 0) ::close(fd_);
}

std::string TcpClient::read_line() {
    for (;;) {
        const auto nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl + 1);
            buffer_.erase(0, nl + 1);
            return line;
        }
        char chunk[4096];
        const ssize_t r = ::recv(fd_, chunk, sizeof chunk, 0);
        if (r <= 0) throw TransportError("connection closed by platform");
        buffer_.append(chunk, static_cast<std::size_t>(r));
    }
}

std::string TcpClient::request(const std::string& line) {
    send_all(fd_, line + "\n");
    std::string out = read_line();
    const auto cmd = line.substr(0, line.find(' '));
    if ((cmd == "TRACE" || cmd == "SCAN") && out.rfind("OK ", 0) == 0) {
        const std::size_t n = std::stoul(out.substr(3));
        for (std::size_t i = 0; i < n; ++i) out += read_line();
    }
    return out;
}

Server::Server(Platform& platform, const std::string& host, std::uint16_t port) : platform_(platform) {
    addrinfo* res = resolve(host, port, true);
    listen_fd_ = ::socket(res->ai_family, res->ai_socktype | SOCK_CLOEXEC, res->ai_protocol);
    if (listen_fd_ < 0) {
        ::freeaddrinfo(res);
        throw TransportError("socket failed");
    }
    int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    const bool bound = ::bind(listen_fd_, res->ai_addr, res->ai_addrlen) == 0;
    ::freeaddrinfo(res);
    if (!bound || ::listen(listen_fd_, 64) != 0) {
        ::close(listen_fd_);
        throw TransportError("cannot listen on " + host + ":" + std::to_string(port));
    }
    sockaddr_in addr{};
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

Server::~Server() { stop(); }

void Server::start() {
    running_ = true;
    acceptor_ = std::thread([this] { accept_loop(); });
}

void Server::serve_forever() {
    start();
    if (acceptor_.joinable()) acceptor_.join();
}

void Server::stop() {
    if (listen_fd_ >= 0) {
        running_ = false;
        ::shutdown(listen_fd_, SHUT_RDWR);
        ::close(listen_fd_);
        listen_fd_ = -1;
    }
    if (acceptor_.joinable() && acceptor_.get_id() != std::this_thread::get_id()) acceptor_.join();
    std::vector<std::thread> threads;
    {
        std::lock_guard lock(clients_mu_);
        for (int fd : client_fds_) ::shutdown(fd, SHUT_RDWR);
        threads.swap(clients_);
    }
    for (auto& t : threads) {
        if (t.joinable()) t.join();
    }
}

void Server::accept_loop() {
    while (running_) {
        const int fd = ::accept4(listen_fd_, nullptr, nullptr, SOCK_CLOEXEC);
        if (fd < 0) {
            if (!running_) break;
            if (errno == EINTR || errno == ECONNABORTED) continue;
            break;
        }
        std::lock_guard lock(clients_mu_);
        client_fds_.push_back(fd);
        clients_.emplace_back([this, fd] { serve_client(fd); });
    }
}

void Server::serve_client(int fd) {
    std::string buffer;
    char chunk[4096];
    try {
        for (;;) {
            const ssize_t r = ::recv(fd, chunk, sizeof chunk, 0);
            if (r <= 0) break;
            buffer.append(chunk, static_cast<std::size_t>(r));
            std::size_t nl;
            while ((nl = buffer.find('\n')) != std::string::npos) {
                std::string line = buffer.substr(0, nl);
                buffer.erase(0, nl + 1);
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                send_all(fd, platform_.handle(line));
            }
        }
    } catch (const TransportError&) {
    }
    std::lock_guard lock(clients_mu_);
    std::erase(client_fds_, fd);
    ::close(fd);
}

}  // namespace bfid::platform
