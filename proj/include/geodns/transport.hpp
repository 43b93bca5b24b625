// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GEODNS_TRANSPORT_HPP
#define GEODNS_TRANSPORT_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geodns/dns.hpp"

namespace geodns {

struct Endpoint {
    std::string host;
    std::uint16_t port = 53;

    /// "host:port"; a bare host keeps the default port.
    static Endpoint parse(std::string_view text);
    std::string to_string() const;
};

/// One-shot datagram exchange. Sends the query exactly once, then waits for
/// a datagram satisfying `accept` until the deadline. Throws Timeout.
class Transport {
public:
    struct Reply {
        std::vector<std::uint8_t> data;
        std::chrono::nanoseconds elapsed{};  // send -> accepted receive, monotonic
    };

    virtual ~Transport() = default;
    virtual Reply exchange(std::span<const std::uint8_t> query, const Endpoint& ep,
                           std::chrono::milliseconds timeout,
                           const std::function<bool(std::span<const std::uint8_t>)>& accept) = 0;
};

class UdpTransport : public Transport {
public:
    Reply exchange(std::span<const std::uint8_t> query, const Endpoint& ep,
                   std::chrono::milliseconds timeout,
                   const std::function<bool(std::span<const std::uint8_t>)>& accept) override;
};

/// Test hook: counts datagrams handed to the wrapped transport.
class CountingTransport : public Transport {
public:
    explicit CountingTransport(Transport& inner) : inner_(inner) {}

    Reply exchange(std::span<const std::uint8_t> query, const Endpoint& ep,
                   std::chrono::milliseconds timeout,
                   const std::function<bool(std::span<const std::uint8_t>)>& accept) override {
        ++datagrams_sent_;
        return inner_.exchange(query, ep, timeout, accept);
    }

    std::size_t datagrams_sent() const { return datagrams_sent_; }

private:
    Transport& inner_;
    std::size_t datagrams_sent_ = 0;
};

struct RoundtripResult {
    DnsMessage response;
    std::chrono::nanoseconds elapsed{};
};

/// Send one query datagram and await the response with the matching id.
/// Mismatched ids are discarded; if none matches before the deadline the
/// call times out. A nonzero rcode surfaces as ServerFailure.
RoundtripResult query_roundtrip(Transport& transport, const Endpoint& ep,
                                const DnsMessage& query,
                                std::chrono::milliseconds timeout);

}  // namespace geodns

#endif
