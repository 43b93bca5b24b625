// Shared fixture: two edges, eleven 500 m areas (4 on edge A, 7 on edge B),
// one cloud, around Klagenfurt.

#ifndef GEODNS_TESTS_DEMO_TOPO_HPP
#define GEODNS_TESTS_DEMO_TOPO_HPP

#include <string>

#include "geodns/topology.hpp"

namespace testfix {

inline geodns::ServiceTopology demo_topology() {
    using namespace geodns;
    ServiceTopology t;
    t.service_name = DnsName::from_string("myservice.test");
    t.edges.push_back({DnsName::from_string("edgea.myservice.test"), Ipv4{10, 0, 0, 1}});
    t.edges.push_back({DnsName::from_string("edgeb.myservice.test"), Ipv4{10, 0, 0, 2}});
    t.clouds.push_back({DnsName::from_string("cloud.myservice.test"), Ipv4{10, 1, 0, 1}});
    int id = 0;
    auto add = [&](double lat, double lon, const char* edge) {
        Asa a;
        a.id = "area-" + std::to_string(id++);
        a.center = {lat, lon, 0.0};
        a.radius_m = 500.0;
        a.edge_hostname = DnsName::from_string(edge);
        a.ttl_s = 300;
        t.areas.push_back(std::move(a));
    };
    // ~0.012 deg of latitude is ~1.3 km, so neighbouring areas don't overlap
    for (int i = 0; i < 4; ++i)
        add(46.56 + 0.012 * i, 14.25, "edgea.myservice.test");
    for (int i = 0; i < 7; ++i)
        add(46.56 + 0.012 * i, 14.40, "edgeb.myservice.test");
    return t;
}

inline std::string demo_config_json() {
    return geodns::emit_config(demo_topology());
}

}  // namespace testfix

#endif
