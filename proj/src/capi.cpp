// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// extern-C surface over the C++ core. Exceptions stop here; callers see
// status codes plus a thread-local error string.

#include "geodns.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "geodns/bench.hpp"
#include "geodns/discovery.hpp"
#include "geodns/errors.hpp"
#include "geodns/server.hpp"
#include "geodns/topology.hpp"

using nlohmann::ordered_json;

struct geodns_topology {
    geodns::ServiceTopology topo;
};

struct geodns_server {
    geodns::AuthServer* server;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

geodns_status fail(geodns_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

template <typename Fn>
geodns_status guarded(Fn&& fn) {
    using namespace geodns;
    try {
        return fn();
    } catch (const ConfigError& e) {
        return fail(GEODNS_ERR_CONFIG, e.what());
    } catch (const InvalidTopology& e) {
        return fail(GEODNS_ERR_INVALID_TOPOLOGY, e.what());
    } catch (const BindError& e) {
        return fail(GEODNS_ERR_BIND, e.what());
    } catch (const Timeout& e) {
        return fail(GEODNS_ERR_TIMEOUT, e.what());
    } catch (const ServerFailure& e) {
        return fail(GEODNS_ERR_DISCOVERY, e.what());
    } catch (const NoFallback& e) {
        return fail(GEODNS_ERR_DISCOVERY, e.what());
    } catch (const EmptyAnnouncement& e) {
        return fail(GEODNS_ERR_DISCOVERY, e.what());
    } catch (const IncompleteAnnouncement& e) {
        return fail(GEODNS_ERR_DISCOVERY, e.what());
    } catch (const InsufficientData& e) {
        return fail(GEODNS_ERR_INSUFFICIENT_DATA, e.what());
    } catch (const RangeError& e) {
        return fail(GEODNS_ERR_RANGE, e.what());
    } catch (const SyntaxError& e) {
        return fail(GEODNS_ERR_RANGE, e.what());
    } catch (const Error& e) {
        return fail(GEODNS_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(GEODNS_ERR_INTERNAL, e.what());
    }
}

std::vector<int> parse_lengths(const char* csv) {
    std::vector<int> out;
    if (!csv || !*csv) return out;
    int value = 0;
    bool have = false;
    for (const char* p = csv;; ++p) {
        const char c = *p;
        if (c >= '0' && c <= '9') {
            value = value * 10 + (c - '0');
            have = true;
        } else if (c == ',' || c == '\0') {
            if (!have) throw geodns::RangeError("bad lengths list");
            out.push_back(value);
            value = 0;
            have = false;
            if (c == '\0') break;
        } else {
            throw geodns::RangeError(std::string("bad character in lengths list: ") + c);
        }
    }
    return out;
}

ordered_json selection_json(const geodns::DiscoveryResult& r) {
    ordered_json j;
    j["selection"] = r.selection.kind == geodns::Selection::Edge ? "edge" : "cloud";
    j["hostname"] = r.selection.hostname.to_string();
    j["address"] = geodns::ipv4_to_string(r.selection.address);
    if (r.selection.matched_area)
        j["matched_area"] = *r.selection.matched_area;
    else
        j["matched_area"] = nullptr;
    j["t_net_ms"] = std::chrono::duration<double, std::milli>(r.timing.t_net).count();
    j["t_area_ms"] = std::chrono::duration<double, std::milli>(r.timing.t_area).count();
    j["t_q_ms"] = std::chrono::duration<double, std::milli>(r.timing.t_q).count();
    return j;
}

}  // namespace

extern "C" {

const char* geodns_last_error(void) { return g_last_error.c_str(); }

void geodns_string_free(char* s) { std::free(s); }

geodns_status geodns_topology_load(const char* json_text, geodns_topology** out) {
    if (!json_text || !out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        auto* handle = new geodns_topology{geodns::load_config(json_text)};
        *out = handle;
        return GEODNS_OK;
    });
}

geodns_status geodns_topology_check(const char* json_text, geodns_topology** out,
                                    char** violations_out) {
    if (!json_text || !out || !violations_out)
        return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        geodns::ServiceTopology topo = geodns::parse_config(json_text);
        std::string text;
        for (const geodns::Violation& v : geodns::validate(topo))
            text += v.to_string() + "\n";
        *out = new geodns_topology{std::move(topo)};
        *violations_out = dup_string(text);
        return GEODNS_OK;
    });
}

geodns_status geodns_topology_synth(int n_areas, double extent_km2, double radius_m,
                                    uint64_t seed, geodns_topology** out) {
    if (!out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        *out = new geodns_topology{
            geodns::synth_topology(n_areas, extent_km2, radius_m, seed)};
        return GEODNS_OK;
    });
}

geodns_status geodns_topology_zone(const geodns_topology* t, char** zone_out) {
    if (!t || !zone_out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        *zone_out = dup_string(geodns::generate_zone(t->topo));
        return GEODNS_OK;
    });
}

geodns_status geodns_topology_config(const geodns_topology* t, char** json_out) {
    if (!t || !json_out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        *json_out = dup_string(geodns::emit_config(t->topo));
        return GEODNS_OK;
    });
}

geodns_status geodns_locate(const geodns_topology* t, double lat_deg, double lon_deg,
                            double height_m, char** json_out) {
    if (!t || !json_out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        const geodns::GeoPoint user{lat_deg, lon_deg, height_m};
        if (!geodns::valid(user))
            throw geodns::RangeError("coordinates out of range");
        std::vector<geodns::AreaGeometry> areas;
        for (const geodns::Asa& a : t->topo.areas)
            areas.push_back({a.center, a.radius_m});
        const auto hit = geodns::locate_first(user, areas);
        ordered_json j;
        j["matched"] = hit.has_value();
        if (hit) {
            j["area_id"] = t->topo.areas[*hit].id;
            j["edge"] = t->topo.areas[*hit].edge_hostname.to_string();
        } else {
            j["area_id"] = nullptr;
            j["edge"] = nullptr;
        }
        *json_out = dup_string(j.dump());
        return GEODNS_OK;
    });
}

void geodns_topology_free(geodns_topology* t) { delete t; }

geodns_status geodns_server_start(const geodns_topology* t, const char* bind_host,
                                  uint16_t port, int include_loc, int log_requests,
                                  geodns_server** out) {
    if (!t || !out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        geodns::ServerConfig cfg;
        cfg.bind_host = bind_host ? bind_host : "127.0.0.1";
        cfg.port = port;
        cfg.topology = t->topo;
        cfg.include_loc = include_loc != 0;
        if (log_requests) {
            cfg.on_request = [](const std::string& qname, int rcode) {
                const auto now = std::chrono::system_clock::now().time_since_epoch();
                const auto ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
                std::fprintf(stderr, "%lld %s rcode=%d\n",
                             static_cast<long long>(ms), qname.c_str(), rcode);
            };
        }
        auto* server = new geodns::AuthServer(std::move(cfg));
        *out = new geodns_server{server};
        return GEODNS_OK;
    });
}

uint16_t geodns_server_port(const geodns_server* s) {
    return s ? s->server->port() : 0;
}

void geodns_server_stop(geodns_server* s) {
    if (!s) return;
    delete s->server;
    delete s;
}

geodns_status geodns_discover(const char* service, const char* server_host,
                              uint16_t server_port, double lat_deg, double lon_deg,
                              double height_m, int timeout_ms, char** json_out) {
    if (!service || !server_host || !json_out)
        return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        const geodns::GeoPoint user{lat_deg, lon_deg, height_m};
        if (!geodns::valid(user))
            throw geodns::RangeError("coordinates out of range");
        geodns::FixedPositionProvider provider(user);
        geodns::DiscoverOptions opts;
        opts.timeout = std::chrono::milliseconds(timeout_ms > 0 ? timeout_ms : 2000);
        const geodns::DiscoveryResult r =
            geodns::discover(geodns::DnsName::from_string(service), provider,
                             {server_host, server_port}, opts);
        *json_out = dup_string(selection_json(r).dump());
        return GEODNS_OK;
    });
}

geodns_status geodns_bench_area(const char* lengths_csv, int iterations, uint64_t seed,
                                const char* run_dir, char** summary_out) {
    if (!summary_out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        geodns::AreaBenchConfig cfg;
        cfg.lengths = parse_lengths(lengths_csv);
        if (iterations > 0) cfg.iterations = iterations;
        cfg.seed = seed;
        const geodns::AreaBenchResult r = geodns::bench_area(cfg);
        if (run_dir && *run_dir) geodns::write_area_run(run_dir, r);
        *summary_out = dup_string(geodns::area_csv(r.rows));
        return GEODNS_OK;
    });
}

geodns_status geodns_bench_e2e_hermetic(const geodns_topology* t, int n, int delay_ms,
                                        const char* run_dir, char** summary_out) {
    if (!t || !summary_out) return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        const geodns::E2EBenchResult r = geodns::bench_e2e_hermetic(
            t->topo, n, std::chrono::milliseconds(delay_ms));
        if (run_dir && *run_dir) geodns::write_e2e_run(run_dir, r);
        *summary_out = dup_string(geodns::e2e_csv(r.rows));
        return GEODNS_OK;
    });
}

geodns_status geodns_bench_e2e(const char* servers, const char* service, int n,
                               int delay_ms, int timeout_ms, const char* run_dir,
                               char** summary_out) {
    if (!servers || !service || !summary_out)
        return fail(GEODNS_ERR_RANGE, "null argument");
    return guarded([&] {
        std::vector<geodns::E2ETarget> targets;
        std::string entry;
        const std::string list = servers;
        std::size_t start = 0;
        while (start <= list.size()) {
            const std::size_t comma = list.find(',', start);
            entry = list.substr(start, comma == std::string::npos ? std::string::npos
                                                                  : comma - start);
            if (!entry.empty()) {
                const std::size_t eq = entry.find('=');
                geodns::E2ETarget t2;
                if (eq == std::string::npos) {
                    t2.label = entry;
                    t2.endpoint = geodns::Endpoint::parse(entry);
                } else {
                    t2.label = entry.substr(0, eq);
                    t2.endpoint = geodns::Endpoint::parse(entry.substr(eq + 1));
                }
                targets.push_back(std::move(t2));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (targets.empty())
            throw geodns::RangeError("no benchmark targets given");
        const geodns::E2EBenchResult r = geodns::bench_e2e(
            targets, geodns::DnsName::from_string(service), n,
            std::chrono::milliseconds(delay_ms),
            std::chrono::milliseconds(timeout_ms > 0 ? timeout_ms : 2000));
        if (run_dir && *run_dir) geodns::write_e2e_run(run_dir, r);
        *summary_out = dup_string(geodns::e2e_csv(r.rows));
        return GEODNS_OK;
    });
}

}  // extern "C"
