// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Hermetic authoritative server: answers every query for the configured
// service name with the combined CNAME + LOC + A payload, regardless of
// QTYPE. One request datagram in, at most one response datagram out.

#ifndef GEODNS_SERVER_HPP
#define GEODNS_SERVER_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>

#include "geodns/dns.hpp"
#include "geodns/topology.hpp"

namespace geodns {

struct ServerConfig {
    std::string bind_host = "127.0.0.1";
    std::uint16_t port = 5353;  // 0 picks an ephemeral port
    ServiceTopology topology;
    bool include_loc = true;
    /// Optional per-request hook (qname, rcode); must be thread-safe.
    std::function<void(const std::string&, int)> on_request;
};

/// Pure response assembly. For the configured service name the answer
/// section carries one CNAME per edge (edge order) then, when include_loc
/// is set, one LOC per area (area order, owner = its edge); the additional
/// section carries one A per edge and per cloud. Other names get NXDOMAIN;
/// a missing or multiple question gets FORMERR.
DnsMessage build_response(const DnsMessage& query, const ServerConfig& cfg);

class AuthServer {
public:
    /// Binds and starts the service thread. Throws BindError if the
    /// address is unavailable and TooLarge if the precomputed full
    /// response would not fit in one datagram.
    explicit AuthServer(ServerConfig cfg);
    ~AuthServer();

    AuthServer(const AuthServer&) = delete;
    AuthServer& operator=(const AuthServer&) = delete;

    std::uint16_t port() const { return port_; }
    void stop();

private:
    void run();

    ServerConfig cfg_;
    int fd_ = -1;
    std::uint16_t port_ = 0;
    std::atomic<bool> stopping_{false};
    std::thread thread_;
};

}  // namespace geodns

#endif
