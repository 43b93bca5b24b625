// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Service topology: edge/cloud instances and the ordered list of circular
// applicable service areas assigned to edges. Area order is significant --
// it is the first-match scan order everywhere downstream.

#ifndef GEODNS_TOPOLOGY_HPP
#define GEODNS_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geodns/dns.hpp"
#include "geodns/geodesy.hpp"

namespace geodns {

struct EdgeInstance {
    DnsName hostname;
    Ipv4 address{};
};

struct CloudInstance {
    DnsName hostname;
    Ipv4 address{};
};

struct Asa {
    std::string id;
    GeoPoint center;
    double radius_m = 0.0;
    DnsName edge_hostname;
    std::uint32_t ttl_s = 300;
};

struct ServiceTopology {
    DnsName service_name;
    std::vector<EdgeInstance> edges;
    std::vector<CloudInstance> clouds;
    std::vector<Asa> areas;
};

struct Violation {
    enum Kind {
        EdgeWithoutArea,
        DanglingEdgeReference,
        NoCloudFallback,
        NonPositiveRadius,
        DuplicateHostname,
    };
    Kind kind;
    std::string detail;

    std::string to_string() const;
};

/// Collects every constraint violation; an empty list means the topology
/// is valid. Violations are data, not exceptions.
std::vector<Violation> validate(const ServiceTopology& t);

/// Parse the config JSON document (schema in the README). Schema problems
/// throw ConfigError(path, reason); constraint checking is left to the
/// caller.
ServiceTopology parse_config(const std::string& json_text);

/// parse_config plus the validity gate: a well-formed document describing
/// an invalid topology throws InvalidTopology listing the violations.
ServiceTopology load_config(const std::string& json_text);

/// Canonical config document for a topology; load_config(emit_config(t))
/// reproduces t.
std::string emit_config(const ServiceTopology& t);

/// Master-file zone text: one CNAME per edge, one A per edge and cloud,
/// then one LOC line per area (owner = its edge) in area order. LOC SIZE
/// carries the area diameter (2 * radius).
std::string generate_zone(const ServiceTopology& t);

/// Seeded synthetic topology: n areas placed uniformly in a square of the
/// given extent around `origin`, all assigned to one edge, plus one cloud.
/// Identical inputs give an identical topology.
ServiceTopology synth_topology(int n_areas, double extent_km2, double radius_m,
                               std::uint64_t seed,
                               GeoPoint origin = {46.62, 14.31, 0.0});

}  // namespace geodns

#endif
