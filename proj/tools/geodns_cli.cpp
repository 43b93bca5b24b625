// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the core strictly through the C API in
// geodns.h. Exit codes: 0 success, 1 domain failure, 2 input/environment
// failure, 3 network timeout.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geodns.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

volatile std::sig_atomic_t g_interrupted = 0;

int exit_code_for(geodns_status st) {
    switch (st) {
        case GEODNS_OK:
            return kExitOk;
        case GEODNS_ERR_CONFIG:
        case GEODNS_ERR_BIND:
        case GEODNS_ERR_RANGE:
        case GEODNS_ERR_IO:
            return kExitInput;
        case GEODNS_ERR_TIMEOUT:
            return kExitTimeout;
        default:
            return kExitDomain;
    }
}

int report(geodns_status st) {
    if (st != GEODNS_OK)
        std::cerr << "error: " << geodns_last_error() << "\n";
    return exit_code_for(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return bool(out);
}

struct TopologyHandle {
    geodns_topology* t = nullptr;
    ~TopologyHandle() { geodns_topology_free(t); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { geodns_string_free(s); }
};

int load_topology(const std::string& config_path, TopologyHandle& out) {
    std::string text;
    if (!read_file(config_path, text)) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return kExitInput;
    }
    return report(geodns_topology_load(text.c_str(), &out.t));
}

std::string default_server() {
    const char* env = std::getenv("GEOLOC_DNS_SERVER");
    return env ? env : "";
}

struct EndpointArg {
    std::string host = "127.0.0.1";
    uint16_t port = 53;
};

bool split_endpoint(const std::string& text, EndpointArg& out) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos) {
        out.host = text;
        return !text.empty();
    }
    out.host = text.substr(0, colon);
    const std::string port = text.substr(colon + 1);
    if (out.host.empty() || port.empty()) return false;
    unsigned v = 0;
    for (char c : port) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > 65535) return false;
    }
    out.port = static_cast<uint16_t>(v);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Location-aware DNS service discovery toolkit"};
    app.require_subcommand(1);

    // validate
    std::string cfg_path;
    auto* validate = app.add_subcommand("validate", "Check a topology config");
    validate->add_option("--config", cfg_path, "Config JSON path")->required();

    // zonegen
    std::string zg_cfg, zg_out;
    auto* zonegen = app.add_subcommand("zonegen", "Emit master-file zone text");
    zonegen->add_option("--config", zg_cfg, "Config JSON path")->required();
    zonegen->add_option("--out", zg_out, "Output path (stdout when omitted)");

    // serve
    std::string sv_cfg, sv_bind = "127.0.0.1:5353";
    bool sv_no_loc = false;
    auto* serve = app.add_subcommand("serve", "Run the authoritative server");
    serve->add_option("--config", sv_cfg, "Config JSON path")->required();
    serve->add_option("--bind", sv_bind, "Bind address host:port");
    serve->add_flag("--no-loc", sv_no_loc, "Answer without LOC records");

    // discover
    std::string dc_service, dc_server = default_server();
    double dc_lat = 0, dc_lon = 0, dc_height = 0;
    int dc_timeout = 2000;
    auto* discover = app.add_subcommand("discover", "Select a service instance");
    discover->add_option("--service", dc_service, "Service name")->required();
    discover->add_option("--server", dc_server, "DNS server host:port");
    discover->add_option("--lat", dc_lat, "Latitude, decimal degrees")->required();
    discover->add_option("--lon", dc_lon, "Longitude, decimal degrees")->required();
    discover->add_option("--height", dc_height, "Ellipsoidal height, meters");
    discover->add_option("--timeout", dc_timeout, "Timeout, ms");

    // locate
    std::string lc_cfg;
    double lc_lat = 0, lc_lon = 0, lc_height = 0;
    auto* locate = app.add_subcommand("locate", "Local area lookup, no network");
    locate->add_option("--config", lc_cfg, "Config JSON path")->required();
    locate->add_option("--lat", lc_lat, "Latitude, decimal degrees")->required();
    locate->add_option("--lon", lc_lon, "Longitude, decimal degrees")->required();
    locate->add_option("--height", lc_height, "Ellipsoidal height, meters");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);

    std::string ba_lengths, ba_out = "bench-area";
    int ba_iterations = 100;
    uint64_t ba_seed = 42;
    auto* bench_area = bench->add_subcommand("area", "Area-scan latency sweep");
    bench_area->add_option("--lengths", ba_lengths, "Comma-separated list lengths");
    bench_area->add_option("--iterations", ba_iterations, "Iterations per length");
    bench_area->add_option("--seed", ba_seed, "RNG seed");
    bench_area->add_option("--out", ba_out, "Run directory for CSV output");

    std::string be_cfg, be_service, be_out = "bench-e2e";
    std::vector<std::string> be_servers;
    bool be_hermetic = false, be_public = false;
    int be_n = 100, be_delay = 3000, be_timeout = 2000;
    auto* bench_e2e = bench->add_subcommand("e2e", "End-to-end query latency");
    bench_e2e->add_flag("--hermetic", be_hermetic, "Local server, both LOC arms");
    bench_e2e->add_flag("--public", be_public,
                        "Add the four public resolver presets");
    bench_e2e->add_option("--config", be_cfg, "Config JSON (hermetic mode)");
    bench_e2e->add_option("--service", be_service, "Service name to query");
    bench_e2e->add_option("--server", be_servers,
                          "Target as label=host:port (repeatable)");
    bench_e2e->add_option("-n,--requests", be_n, "Requests per target");
    bench_e2e->add_option("--delay", be_delay, "Delay between requests, ms");
    bench_e2e->add_option("--timeout", be_timeout, "Per-request timeout, ms");
    bench_e2e->add_option("--out", be_out, "Run directory for CSV output");

    // synth
    int sy_areas = 400;
    double sy_extent = 20.0, sy_radius = 500.0;
    uint64_t sy_seed = 42;
    std::string sy_out;
    auto* synth = app.add_subcommand("synth", "Emit a synthetic topology config");
    synth->add_option("--areas", sy_areas, "Number of areas");
    synth->add_option("--extent", sy_extent, "Square extent, km^2");
    synth->add_option("--radius", sy_radius, "Area radius, meters");
    synth->add_option("--seed", sy_seed, "RNG seed");
    synth->add_option("--out", sy_out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    if (*validate) {
        std::string text;
        if (!read_file(cfg_path, text)) {
            std::cerr << "error: cannot read " << cfg_path << "\n";
            return kExitInput;
        }
        TopologyHandle topo;
        StringHandle violations;
        const geodns_status st =
            geodns_topology_check(text.c_str(), &topo.t, &violations.s);
        if (st != GEODNS_OK) return report(st);
        if (violations.s && *violations.s) {
            std::cout << violations.s;
            return kExitDomain;
        }
        return kExitOk;
    }

    if (*zonegen) {
        TopologyHandle topo;
        if (int rc = load_topology(zg_cfg, topo); rc != kExitOk) return rc;
        StringHandle zone;
        if (geodns_status st = geodns_topology_zone(topo.t, &zone.s); st != GEODNS_OK)
            return report(st);
        if (zg_out.empty()) {
            std::cout << zone.s;
        } else if (!write_file(zg_out, zone.s)) {
            std::cerr << "error: cannot write " << zg_out << "\n";
            return kExitInput;
        }
        return kExitOk;
    }

    if (*serve) {
        TopologyHandle topo;
        if (int rc = load_topology(sv_cfg, topo); rc != kExitOk) return rc;
        EndpointArg bind;
        if (!split_endpoint(sv_bind, bind)) {
            std::cerr << "error: bad bind address " << sv_bind << "\n";
            return kExitInput;
        }
        geodns_server* server = nullptr;
        const geodns_status st = geodns_server_start(
            topo.t, bind.host.c_str(), bind.port, sv_no_loc ? 0 : 1, 1, &server);
        if (st != GEODNS_OK) return report(st);
        std::cerr << "listening on " << bind.host << ":" << geodns_server_port(server)
                  << "\n";
        std::signal(SIGINT, [](int) { g_interrupted = 1; });
        std::signal(SIGTERM, [](int) { g_interrupted = 1; });
        while (!g_interrupted)
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
        geodns_server_stop(server);
        return kExitOk;
    }

    if (*discover) {
        if (dc_server.empty()) {
            std::cerr << "error: no server given (use --server or GEOLOC_DNS_SERVER)\n";
            return kExitInput;
        }
        EndpointArg ep;
        ep.port = 53;
        if (!split_endpoint(dc_server, ep)) {
            std::cerr << "error: bad server endpoint " << dc_server << "\n";
            return kExitInput;
        }
        StringHandle json;
        const geodns_status st =
            geodns_discover(dc_service.c_str(), ep.host.c_str(), ep.port, dc_lat,
                            dc_lon, dc_height, dc_timeout, &json.s);
        if (st != GEODNS_OK) return report(st);
        std::cout << json.s << "\n";
        return kExitOk;
    }

    if (*locate) {
        TopologyHandle topo;
        if (int rc = load_topology(lc_cfg, topo); rc != kExitOk) return rc;
        StringHandle json;
        const geodns_status st =
            geodns_locate(topo.t, lc_lat, lc_lon, lc_height, &json.s);
        if (st != GEODNS_OK) return report(st);
        const auto doc = nlohmann::json::parse(json.s);
        if (doc["matched"].get<bool>())
            std::cout << doc["area_id"].get<std::string>() << " "
                      << doc["edge"].get<std::string>() << "\n";
        else
            std::cout << "OUTSIDE\n";
        return kExitOk;
    }

    if (*bench_area) {
        StringHandle summary;
        const geodns_status st = geodns_bench_area(
            ba_lengths.empty() ? nullptr : ba_lengths.c_str(), ba_iterations,
            ba_seed, ba_out.c_str(), &summary.s);
        if (st != GEODNS_OK) return report(st);
        std::cout << summary.s;
        return kExitOk;
    }

    if (*bench_e2e) {
        StringHandle summary;
        geodns_status st;
        if (be_hermetic) {
            if (be_cfg.empty()) {
                std::cerr << "error: --hermetic requires --config\n";
                return kExitInput;
            }
            TopologyHandle topo;
            if (int rc = load_topology(be_cfg, topo); rc != kExitOk) return rc;
            st = geodns_bench_e2e_hermetic(topo.t, be_n, be_delay, be_out.c_str(),
                                           &summary.s);
        } else {
            std::vector<std::string> servers = be_servers;
            if (be_public) {
                servers.push_back("opendns=208.67.222.222:53");
                servers.push_back("cloudflare=1.1.1.1:53");
                servers.push_back("google=8.8.8.8:53");
                servers.push_back("quad9=9.9.9.9:53");
            }
            if (servers.empty() && !default_server().empty())
                servers.push_back(default_server());
            if (servers.empty() || be_service.empty()) {
                std::cerr << "error: need --service and at least one --server "
                             "(or --hermetic/--public)\n";
                return kExitInput;
            }
            std::string joined;
            for (const std::string& s : servers) {
                if (!joined.empty()) joined += ',';
                joined += s;
            }
            st = geodns_bench_e2e(joined.c_str(), be_service.c_str(), be_n, be_delay,
                                  be_timeout, be_out.c_str(), &summary.s);
        }
        if (st != GEODNS_OK) return report(st);
        std::cout << summary.s;
        return kExitOk;
    }

    if (*synth) {
        TopologyHandle topo;
        if (geodns_status st =
                geodns_topology_synth(sy_areas, sy_extent, sy_radius, sy_seed, &topo.t);
            st != GEODNS_OK)
            return report(st);
        StringHandle json;
        if (geodns_status st = geodns_topology_config(topo.t, &json.s); st != GEODNS_OK)
            return report(st);
        if (sy_out.empty()) {
            std::cout << json.s;
        } else if (!write_file(sy_out, json.s)) {
            std::cerr << "error: cannot write " << sy_out << "\n";
            return kExitInput;
        }
        return kExitOk;
    }

    return kExitInput;
}
