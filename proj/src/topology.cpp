// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/topology.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "geodns/errors.hpp"
#include "geodns/loc.hpp"

namespace geodns {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint32_t kDefaultTtl = 300;
constexpr double kMetersPerDegLat = 111132.0;

std::string lower_copy(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::EdgeWithoutArea: return "EdgeWithoutArea";
        case Violation::DanglingEdgeReference: return "DanglingEdgeReference";
        case Violation::NoCloudFallback: return "NoCloudFallback";
        case Violation::NonPositiveRadius: return "NonPositiveRadius";
        case Violation::DuplicateHostname: return "DuplicateHostname";
    }
    return "?";
}

std::string require_string(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key))
        throw ConfigError(path + "." + key, "missing field");
    if (!obj[key].is_string())
        throw ConfigError(path + "." + key, "expected a string");
    return obj[key].get<std::string>();
}

double require_number(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key))
        throw ConfigError(path + "." + key, "missing field");
    if (!obj[key].is_number())
        throw ConfigError(path + "." + key, "expected a number");
    return obj[key].get<double>();
}

DnsName parse_hostname(const std::string& text, const std::string& path) {
    try {
        return DnsName::from_string(text);
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
}

Ipv4 parse_address(const std::string& text, const std::string& path) {
    try {
        return ipv4_from_string(text);
    } catch (const Error& e) {
        throw ConfigError(path, e.what());
    }
}

}  // namespace

std::string Violation::to_string() const {
    return std::string(kind_name(kind)) + ": " + detail;
}

std::vector<Violation> validate(const ServiceTopology& t) {
    std::vector<Violation> out;

    std::set<std::string> seen;
    auto check_dup = [&](const DnsName& n) {
        const std::string key = lower_copy(n.to_string());
        if (!seen.insert(key).second)
            out.push_back({Violation::DuplicateHostname, n.to_string()});
    };
    for (const EdgeInstance& e : t.edges) check_dup(e.hostname);
    for (const CloudInstance& c : t.clouds) check_dup(c.hostname);

    if (t.clouds.empty())
        out.push_back({Violation::NoCloudFallback, t.service_name.to_string()});

    for (const EdgeInstance& e : t.edges) {
        bool has_area = false;
        for (const Asa& a : t.areas)
            if (a.edge_hostname == e.hostname) { has_area = true; break; }
        if (!has_area)
            out.push_back({Violation::EdgeWithoutArea, e.hostname.to_string()});
    }

    for (const Asa& a : t.areas) {
        bool known = false;
        for (const EdgeInstance& e : t.edges)
            if (a.edge_hostname == e.hostname) { known = true; break; }
        if (!known)
            out.push_back({Violation::DanglingEdgeReference,
                           a.id + " -> " + a.edge_hostname.to_string()});
        if (!(a.radius_m > 0.0))
            out.push_back({Violation::NonPositiveRadius, a.id});
    }
    return out;
}

ServiceTopology parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("$", e.what());
    }
    if (!doc.is_object())
        throw ConfigError("$", "top-level value must be an object");

    ServiceTopology t;
    t.service_name = parse_hostname(require_string(doc, "$", "service"), "$.service");

    auto get_list = [&](const char* key, bool required) -> json {
        if (!doc.contains(key)) {
            if (required) throw ConfigError(std::string("$.") + key, "missing field");
            return json::array();
        }
        if (!doc[key].is_array())
            throw ConfigError(std::string("$.") + key, "expected an array");
        return doc[key];
    };

    std::size_t i = 0;
    for (const json& e : get_list("edges", true)) {
        const std::string path = "$.edges[" + std::to_string(i++) + "]";
        if (!e.is_object()) throw ConfigError(path, "expected an object");
        EdgeInstance inst;
        inst.hostname = parse_hostname(require_string(e, path, "hostname"), path + ".hostname");
        inst.address = parse_address(require_string(e, path, "address"), path + ".address");
        t.edges.push_back(std::move(inst));
    }
    i = 0;
    for (const json& c : get_list("clouds", false)) {
        const std::string path = "$.clouds[" + std::to_string(i++) + "]";
        if (!c.is_object()) throw ConfigError(path, "expected an object");
        CloudInstance inst;
        inst.hostname = parse_hostname(require_string(c, path, "hostname"), path + ".hostname");
        inst.address = parse_address(require_string(c, path, "address"), path + ".address");
        t.clouds.push_back(std::move(inst));
    }
    i = 0;
    for (const json& a : get_list("areas", true)) {
        const std::string path = "$.areas[" + std::to_string(i++) + "]";
        if (!a.is_object()) throw ConfigError(path, "expected an object");
        Asa asa;
        asa.id = require_string(a, path, "id");
        asa.center.lat_deg = require_number(a, path, "lat_deg");
        asa.center.lon_deg = require_number(a, path, "lon_deg");
        asa.center.height_m = a.contains("height_m") ? require_number(a, path, "height_m") : 0.0;
        asa.radius_m = require_number(a, path, "radius_m");
        asa.edge_hostname = parse_hostname(require_string(a, path, "edge"), path + ".edge");
        if (a.contains("ttl_s")) {
            if (!a["ttl_s"].is_number_integer())
                throw ConfigError(path + ".ttl_s", "expected an integer");
            asa.ttl_s = a["ttl_s"].get<std::uint32_t>();
        } else {
            asa.ttl_s = kDefaultTtl;
        }
        if (!valid(asa.center))
            throw ConfigError(path, "center coordinates out of range");
        t.areas.push_back(std::move(asa));
    }

    return t;
}

ServiceTopology load_config(const std::string& json_text) {
    ServiceTopology t = parse_config(json_text);
    const std::vector<Violation> violations = validate(t);
    if (!violations.empty()) {
        std::string msg;
        for (const Violation& v : violations) {
            if (!msg.empty()) msg += "; ";
            msg += v.to_string();
        }
        throw InvalidTopology(msg);
    }
    return t;
}

std::string emit_config(const ServiceTopology& t) {
    json doc;
    doc["service"] = t.service_name.to_string();
    doc["edges"] = json::array();
    for (const EdgeInstance& e : t.edges)
        doc["edges"].push_back({{"hostname", e.hostname.to_string()},
                                {"address", ipv4_to_string(e.address)}});
    doc["clouds"] = json::array();
    for (const CloudInstance& c : t.clouds)
        doc["clouds"].push_back({{"hostname", c.hostname.to_string()},
                                 {"address", ipv4_to_string(c.address)}});
    doc["areas"] = json::array();
    for (const Asa& a : t.areas)
        doc["areas"].push_back({{"id", a.id},
                                {"lat_deg", a.center.lat_deg},
                                {"lon_deg", a.center.lon_deg},
                                {"height_m", a.center.height_m},
                                {"radius_m", a.radius_m},
                                {"edge", a.edge_hostname.to_string()},
                                {"ttl_s", a.ttl_s}});
    return doc.dump(2) + "\n";
}

std::string generate_zone(const ServiceTopology& t) {
    std::ostringstream out;
    for (const EdgeInstance& e : t.edges)
        out << t.service_name.to_string() << ' ' << kDefaultTtl << " IN CNAME "
            << e.hostname.to_string() << '\n';
    for (const EdgeInstance& e : t.edges)
        out << e.hostname.to_string() << ' ' << kDefaultTtl << " IN A "
            << ipv4_to_string(e.address) << '\n';
    for (const CloudInstance& c : t.clouds)
        out << c.hostname.to_string() << ' ' << kDefaultTtl << " IN A "
            << ipv4_to_string(c.address) << '\n';
    for (const Asa& a : t.areas) {
        const LocData loc = loc_from_geopoint(a.center, a.radius_m);
        out << a.edge_hostname.to_string() << ' ' << a.ttl_s << " IN LOC "
            << format_presentation(loc) << '\n';
    }
    return out.str();
}

ServiceTopology synth_topology(int n_areas, double extent_km2, double radius_m,
                               std::uint64_t seed, GeoPoint origin) {
    if (n_areas < 1)
        throw RangeError("n_areas must be >= 1");
    if (!(extent_km2 > 0.0))
        throw RangeError("extent_km2 must be positive");
    if (!(radius_m > 0.0))
        throw RangeError("radius_m must be positive");

    ServiceTopology t;
    t.service_name = DnsName::from_string("svc.geodns.test");
    t.edges.push_back({DnsName::from_string("edge1.svc.geodns.test"), Ipv4{10, 0, 0, 1}});
    t.clouds.push_back({DnsName::from_string("cloud.svc.geodns.test"), Ipv4{10, 0, 0, 2}});

    const double side_m = std::sqrt(extent_km2) * 1000.0;
    const double m_per_deg_lon =
        kMetersPerDegLat * std::cos(origin.lat_deg * 3.14159265358979323846 / 180.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-side_m / 2.0, side_m / 2.0);
    for (int i = 0; i < n_areas; ++i) {
        Asa a;
        char idbuf[16];
        std::snprintf(idbuf, sizeof idbuf, "area-%04d", i);
        a.id = idbuf;
        const double dy = offset(rng);
        const double dx = offset(rng);
        a.center.lat_deg = origin.lat_deg + dy / kMetersPerDegLat;
        a.center.lon_deg = origin.lon_deg + dx / m_per_deg_lon;
        a.center.height_m = origin.height_m;
        a.radius_m = radius_m;
        a.edge_hostname = t.edges.front().hostname;
        a.ttl_s = kDefaultTtl;
        t.areas.push_back(std::move(a));
    }
    return t;
}

}  // namespace geodns
