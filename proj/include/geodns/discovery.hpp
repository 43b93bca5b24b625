// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Client side of the discovery workflow: one DNS query, extract the
// CNAME/A/LOC payload, run the first-match area scan and pick the edge
// instance, or fall back to a cloud instance.

#ifndef GEODNS_DISCOVERY_HPP
#define GEODNS_DISCOVERY_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geodns/dns.hpp"
#include "geodns/geodesy.hpp"
#include "geodns/transport.hpp"

namespace geodns {

/// Returns the last known position immediately; implementations must be
/// safe to read from concurrent contexts.
class PositionProvider {
public:
    virtual ~PositionProvider() = default;
    virtual GeoPoint position() = 0;
};

class FixedPositionProvider : public PositionProvider {
public:
    explicit FixedPositionProvider(GeoPoint p) : point_(p) {}
    GeoPoint position() override { return point_; }

private:
    GeoPoint point_;
};

/// Steps through a recorded trace, holding the final point once exhausted.
class ScriptedTraceProvider : public PositionProvider {
public:
    explicit ScriptedTraceProvider(std::vector<GeoPoint> trace);
    GeoPoint position() override;

private:
    std::vector<GeoPoint> trace_;
    std::size_t next_ = 0;
};

struct EdgeCandidate {
    DnsName hostname;
    Ipv4 address{};
    std::vector<AreaGeometry> areas;  // response order
};

struct CloudCandidate {
    DnsName hostname;
    Ipv4 address{};
};

struct ServiceAnnouncement {
    std::vector<EdgeCandidate> edge_candidates;    // CNAME order
    std::vector<CloudCandidate> cloud_candidates;  // response order
};

struct Timing {
    std::chrono::nanoseconds t_net{};
    std::chrono::nanoseconds t_area{};
    std::chrono::nanoseconds t_q{};  // always t_net + t_area
};

struct Selection {
    enum Kind { Edge, Cloud } kind = Cloud;
    DnsName hostname;
    Ipv4 address{};
    /// Index into the flattened area list (edge order, then that edge's
    /// area order); set only for Edge selections.
    std::optional<std::size_t> matched_area;
};

struct DiscoveryResult {
    Selection selection;
    Timing timing;
    ServiceAnnouncement announcement;
};

/// Group the response records into edge and cloud candidates. CNAME
/// targets fix the edge order; LOC records are matched to owners
/// case-insensitively; owners that carry an A record but neither LOC nor a
/// CNAME pointing at them become cloud candidates. Throws
/// IncompleteAnnouncement / EmptyAnnouncement.
ServiceAnnouncement extract_announcement(const DnsMessage& response);

struct SelectionOutcome {
    Selection selection;
    std::chrono::nanoseconds t_area{};
};

/// First-match over the flattened area list; a miss picks the first cloud
/// candidate. t_area covers only this computation. Throws NoFallback when
/// nothing matches and no cloud exists.
SelectionOutcome select_instance(const ServiceAnnouncement& a, const GeoPoint& user,
                                 const EllipsoidParams& params = {});

struct DiscoverOptions {
    std::chrono::milliseconds timeout{2000};
    EllipsoidParams params{};
    Transport* transport = nullptr;  // defaults to a fresh UdpTransport
    std::optional<std::uint16_t> query_id;  // random when unset
};

/// The full workflow: read the provider's position, one query round trip,
/// extract, select. Exactly one datagram leaves per call.
DiscoveryResult discover(const DnsName& service, PositionProvider& position,
                         const Endpoint& server, const DiscoverOptions& opts = {});

}  // namespace geodns

#endif
