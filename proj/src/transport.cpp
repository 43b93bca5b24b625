// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "geodns/errors.hpp"

namespace geodns {

namespace {

struct SocketGuard {
    int fd = -1;
    ~SocketGuard() {
        if (fd >= 0) ::close(fd);
    }
};

sockaddr_in resolve(const Endpoint& ep) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(ep.port);
    if (::inet_pton(AF_INET, ep.host.c_str(), &addr.sin_addr) == 1)
        return addr;
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_DGRAM;
    addrinfo* res = nullptr;
    if (::getaddrinfo(ep.host.c_str(), nullptr, &hints, &res) != 0 || !res)
        throw Timeout("cannot resolve host " + ep.host);
    addr.sin_addr = reinterpret_cast<sockaddr_in*>(res->ai_addr)->sin_addr;
    ::freeaddrinfo(res);
    return addr;
}

}  // namespace

Endpoint Endpoint::parse(std::string_view text) {
    Endpoint ep;
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos) {
        ep.host = std::string(text);
        return ep;
    }
    ep.host = std::string(text.substr(0, colon));
    unsigned port = 0;
    for (char c : text.substr(colon + 1)) {
        if (c < '0' || c > '9')
            throw SyntaxError("bad port in endpoint: " + std::string(text));
        port = port * 10 + static_cast<unsigned>(c - '0');
        if (port > 65535)
            throw SyntaxError("bad port in endpoint: " + std::string(text));
    }
    ep.port = static_cast<std::uint16_t>(port);
    if (ep.host.empty())
        throw SyntaxError("empty host in endpoint: " + std::string(text));
    return ep;
}

std::string Endpoint::to_string() const {
    return host + ":" + std::to_string(port);
}

Transport::Reply UdpTransport::exchange(
    std::span<const std::uint8_t> query, const Endpoint& ep,
    std::chrono::milliseconds timeout,
    const std::function<bool(std::span<const std::uint8_t>)>& accept) {
    using Clock = std::chrono::steady_clock;

    SocketGuard sock{::socket(AF_INET, SOCK_DGRAM, 0)};
    if (sock.fd < 0)
        throw Timeout("socket() failed");
    const sockaddr_in addr = resolve(ep);

    const auto start = Clock::now();
    const auto deadline = start + timeout;
    const ssize_t sent =
        ::sendto(sock.fd, query.data(), query.size(), 0,
                 reinterpret_cast<const sockaddr*>(&addr), sizeof addr);
    if (sent != static_cast<ssize_t>(query.size()))
        throw Timeout("sendto() failed to " + ep.to_string());

    std::vector<std::uint8_t> buf(65535);
    for (;;) {
        const auto now = Clock::now();
        if (now >= deadline)
            throw Timeout("no response from " + ep.to_string());
        const auto left =
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
        pollfd pfd{sock.fd, POLLIN, 0};
        const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()) + 1);
        if (rc <= 0)
            throw Timeout("no response from " + ep.to_string());
        const ssize_t n = ::recv(sock.fd, buf.data(), buf.size(), 0);
        if (n <= 0)
            continue;
        std::span<const std::uint8_t> datagram(buf.data(), static_cast<std::size_t>(n));
        if (!accept(datagram))
            continue;  // stray datagram, keep waiting
        Reply r;
        r.data.assign(datagram.begin(), datagram.end());
        r.elapsed = Clock::now() - start;
        return r;
    }
}

RoundtripResult query_roundtrip(Transport& transport, const Endpoint& ep,
                                const DnsMessage& query,
                                std::chrono::milliseconds timeout) {
    if (timeout <= std::chrono::milliseconds::zero())
        throw Timeout("timeout must be positive");
    const std::vector<std::uint8_t> wire = encode_message(query);
    const std::uint16_t want_id = query.id;
    auto accept = [want_id](std::span<const std::uint8_t> d) {
        return d.size() >= 2 &&
               (static_cast<std::uint16_t>(d[0]) << 8 | d[1]) == want_id;
    };
    const Transport::Reply reply = transport.exchange(wire, ep, timeout, accept);
    RoundtripResult out;
    out.response = decode_message(reply.data);
    out.elapsed = reply.elapsed;
    if (out.response.rcode != RcodeNoError)
        throw ServerFailure(out.response.rcode);
    return out;
}

}  // namespace geodns
