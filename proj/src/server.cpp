// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include "geodns/errors.hpp"
#include "geodns/loc.hpp"

namespace geodns {

DnsMessage build_response(const DnsMessage& query, const ServerConfig& cfg) {
    DnsMessage resp;
    resp.id = query.id;
    resp.is_response = true;
    resp.opcode = query.opcode;
    resp.recursion_desired = query.recursion_desired;
    resp.questions = query.questions;

    if (query.questions.size() != 1) {
        resp.rcode = RcodeFormErr;
        return resp;
    }
    const Question& q = query.questions.front();
    const ServiceTopology& t = cfg.topology;
    if (!(q.qname == t.service_name)) {
        resp.rcode = RcodeNxDomain;
        return resp;
    }

    resp.rcode = RcodeNoError;
    for (const EdgeInstance& e : t.edges)
        resp.answers.push_back(ResourceRecord::cname(t.service_name, 300, e.hostname));
    if (cfg.include_loc) {
        for (const Asa& a : t.areas) {
            const LocData loc = loc_from_geopoint(a.center, a.radius_m);
            resp.answers.push_back(ResourceRecord::loc(a.edge_hostname, a.ttl_s, loc));
        }
    }
    for (const EdgeInstance& e : t.edges)
        resp.additionals.push_back(ResourceRecord::a(e.hostname, 300, e.address));
    for (const CloudInstance& c : t.clouds)
        resp.additionals.push_back(ResourceRecord::a(c.hostname, 300, c.address));
    return resp;
}

AuthServer::AuthServer(ServerConfig cfg) : cfg_(std::move(cfg)) {
    // fail at startup, not per-request, if the full payload cannot fit
    DnsMessage probe = DnsMessage::query(0, cfg_.topology.service_name, RrType::A);
    encode_message(build_response(probe, cfg_));  // throws TooLarge

    fd_ = ::socket(AF_INET, SOCK_DGRAM, 0);
    if (fd_ < 0)
        throw BindError("socket() failed");
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(cfg_.port);
    if (::inet_pton(AF_INET, cfg_.bind_host.c_str(), &addr.sin_addr) != 1) {
        ::close(fd_);
        fd_ = -1;
        throw BindError("bad bind address: " + cfg_.bind_host);
    }
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        ::close(fd_);
        fd_ = -1;
        throw BindError("cannot bind " + cfg_.bind_host + ":" + std::to_string(cfg_.port));
    }
    sockaddr_in bound{};
    socklen_t len = sizeof bound;
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len);
    port_ = ntohs(bound.sin_port);

    thread_ = std::thread([this] { run(); });
}

AuthServer::~AuthServer() { stop(); }

void AuthServer::stop() {
    if (!thread_.joinable()) return;
    stopping_.store(true);
    thread_.join();
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

void AuthServer::run() {
    std::vector<std::uint8_t> buf(65535);
    while (!stopping_.load()) {
        pollfd pfd{fd_, POLLIN, 0};
        const int rc = ::poll(&pfd, 1, 50);
        if (rc <= 0)
            continue;
        sockaddr_in peer{};
        socklen_t peer_len = sizeof peer;
        const ssize_t n = ::recvfrom(fd_, buf.data(), buf.size(), 0,
                                     reinterpret_cast<sockaddr*>(&peer), &peer_len);
        if (n <= 0)
            continue;
        DnsMessage query;
        try {
            query = decode_message({buf.data(), static_cast<std::size_t>(n)});
        } catch (const Error&) {
            continue;  // undecodable datagram, no response
        }
        DnsMessage resp = build_response(query, cfg_);
        std::vector<std::uint8_t> wire;
        try {
            wire = encode_message(resp);
        } catch (const Error&) {
            continue;
        }
        ::sendto(fd_, wire.data(), wire.size(), 0,
                 reinterpret_cast<sockaddr*>(&peer), peer_len);
        if (cfg_.on_request) {
            const std::string qname = query.questions.empty()
                                          ? std::string("-")
                                          : query.questions.front().qname.to_string();
            cfg_.on_request(qname, resp.rcode);
        }
    }
}

}  // namespace geodns
