// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/discovery.hpp"

#include <random>

#include "geodns/errors.hpp"

namespace geodns {

namespace {

bool contains_name(const std::vector<DnsName>& list, const DnsName& n) {
    for (const DnsName& x : list)
        if (x == n) return true;
    return false;
}

std::uint16_t random_query_id() {
    static thread_local std::mt19937 rng{std::random_device{}()};
    return static_cast<std::uint16_t>(rng() & 0xFFFF);
}

}  // namespace

ScriptedTraceProvider::ScriptedTraceProvider(std::vector<GeoPoint> trace)
    : trace_(std::move(trace)) {
    if (trace_.empty())
        throw RangeError("trace must not be empty");
}

GeoPoint ScriptedTraceProvider::position() {
    const GeoPoint p = trace_[next_];
    if (next_ + 1 < trace_.size()) ++next_;
    return p;
}

ServiceAnnouncement extract_announcement(const DnsMessage& response) {
    std::vector<const ResourceRecord*> records;
    for (const auto* section :
         {&response.answers, &response.authorities, &response.additionals})
        for (const ResourceRecord& rr : *section) records.push_back(&rr);

    // CNAME targets fix the edge order
    std::vector<DnsName> edge_order;
    for (const ResourceRecord* rr : records) {
        if (rr->rrtype != RrType::CNAME) continue;
        const DnsName& target = std::get<DnsName>(rr->rdata);
        if (!contains_name(edge_order, target)) edge_order.push_back(target);
    }
    // owners that carry LOC records, and any LOC+A owner the CNAMEs missed
    std::vector<DnsName> loc_owners;
    for (const ResourceRecord* rr : records) {
        if (rr->rrtype != RrType::LOC || !std::holds_alternative<LocData>(rr->rdata))
            continue;
        if (!contains_name(loc_owners, rr->owner)) loc_owners.push_back(rr->owner);
        if (!contains_name(edge_order, rr->owner)) edge_order.push_back(rr->owner);
    }

    auto find_a = [&](const DnsName& owner) -> const Ipv4* {
        for (const ResourceRecord* rr : records)
            if (rr->rrtype == RrType::A && rr->owner == owner)
                return &std::get<Ipv4>(rr->rdata);
        return nullptr;
    };

    ServiceAnnouncement out;
    for (const DnsName& owner : edge_order) {
        EdgeCandidate cand;
        cand.hostname = owner;
        for (const ResourceRecord* rr : records) {
            if (rr->rrtype == RrType::LOC && rr->owner == owner &&
                std::holds_alternative<LocData>(rr->rdata)) {
                const GeoArea area = loc_to_geopoint(std::get<LocData>(rr->rdata));
                cand.areas.push_back({area.point, area.radius_m});
            }
        }
        const Ipv4* addr = find_a(owner);
        if (!addr)
            throw IncompleteAnnouncement("no A record for " + owner.to_string());
        if (cand.areas.empty())
            throw IncompleteAnnouncement("no LOC records for edge candidate " +
                                         owner.to_string());
        cand.address = *addr;
        out.edge_candidates.push_back(std::move(cand));
    }

    // remaining A owners are cloud candidates, in response order
    for (const ResourceRecord* rr : records) {
        if (rr->rrtype != RrType::A) continue;
        if (contains_name(edge_order, rr->owner)) continue;
        if (contains_name(loc_owners, rr->owner)) continue;
        bool seen = false;
        for (const CloudCandidate& c : out.cloud_candidates)
            if (c.hostname == rr->owner) { seen = true; break; }
        if (!seen)
            out.cloud_candidates.push_back({rr->owner, std::get<Ipv4>(rr->rdata)});
    }

    if (out.edge_candidates.empty() && out.cloud_candidates.empty())
        throw EmptyAnnouncement("response carries no usable records");
    return out;
}

SelectionOutcome select_instance(const ServiceAnnouncement& a, const GeoPoint& user,
                                 const EllipsoidParams& params) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();

    SelectionOutcome out;
    std::size_t flat_index = 0;
    bool matched = false;
    for (const EdgeCandidate& cand : a.edge_candidates) {
        for (const AreaGeometry& area : cand.areas) {
            if (contains(area, user, params) == InsideOutside::Inside) {
                out.selection.kind = Selection::Edge;
                out.selection.hostname = cand.hostname;
                out.selection.address = cand.address;
                out.selection.matched_area = flat_index;
                matched = true;
                break;
            }
            ++flat_index;
        }
        if (matched) break;
    }
    out.t_area = Clock::now() - start;

    if (!matched) {
        if (a.cloud_candidates.empty())
            throw NoFallback("no area matched and no cloud candidate");
        out.selection.kind = Selection::Cloud;
        out.selection.hostname = a.cloud_candidates.front().hostname;
        out.selection.address = a.cloud_candidates.front().address;
        out.selection.matched_area = std::nullopt;
    }
    return out;
}

DiscoveryResult discover(const DnsName& service, PositionProvider& position,
                         const Endpoint& server, const DiscoverOptions& opts) {
    const GeoPoint user = position.position();

    UdpTransport default_transport;
    Transport& transport = opts.transport ? *opts.transport : default_transport;

    const std::uint16_t id = opts.query_id.value_or(random_query_id());
    const DnsMessage query = DnsMessage::query(id, service, RrType::A);
    const RoundtripResult rt = query_roundtrip(transport, server, query, opts.timeout);

    DiscoveryResult result;
    result.announcement = extract_announcement(rt.response);
    SelectionOutcome sel = select_instance(result.announcement, user, opts.params);
    result.selection = std::move(sel.selection);
    result.timing.t_net = rt.elapsed;
    result.timing.t_area = sel.t_area;
    result.timing.t_q = result.timing.t_net + result.timing.t_area;
    return result;
}

}  // namespace geodns
