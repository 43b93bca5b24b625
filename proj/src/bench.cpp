// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "geodns/errors.hpp"
#include "geodns/server.hpp"

namespace geodns {

namespace {

constexpr double kMetersPerDegLat = 111132.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::vector<int> default_lengths() {
    std::vector<int> out;
    for (int l = 25; l <= 400; l += 25) out.push_back(l);
    return out;
}

void write_raw(const std::filesystem::path& path, const std::vector<double>& samples) {
    std::ofstream out(path);
    for (double s : samples) out << fmt(s) << '\n';
}

}  // namespace

StatRow aggregate(const std::vector<double>& samples_ms) {
    if (samples_ms.size() < 2)
        throw InsufficientData("need at least 2 samples, got " +
                               std::to_string(samples_ms.size()));
    const std::size_t n = samples_ms.size();
    std::vector<double> sorted = samples_ms;
    std::sort(sorted.begin(), sorted.end());

    StatRow row;
    double sum = 0.0;
    for (double s : sorted) sum += s;
    row.mean_ms = sum / static_cast<double>(n);
    row.median_ms = (n % 2 == 1) ? sorted[n / 2]
                                 : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    row.max_ms = sorted.back();
    double ss = 0.0;
    for (double s : sorted) {
        const double d = s - row.mean_ms;
        ss += d * d;
    }
    row.stddev_ms = std::sqrt(ss / static_cast<double>(n - 1));
    const std::size_t rank = static_cast<std::size_t>(
        std::ceil(0.9 * static_cast<double>(n)));  // nearest-rank, 1-based
    row.p90_ms = sorted[rank - 1];
    return row;
}

AreaBenchResult bench_area(const AreaBenchConfig& cfg) {
    using Clock = std::chrono::steady_clock;

    const std::vector<int> lengths =
        cfg.lengths.empty() ? default_lengths() : cfg.lengths;
    int pool = cfg.pool_areas;
    for (int l : lengths) pool = std::max(pool, l);

    const GeoPoint origin{46.62, 14.31, 0.0};
    const ServiceTopology topo =
        synth_topology(pool, cfg.extent_km2, cfg.radius_m, cfg.seed, origin);
    std::vector<AreaGeometry> areas;
    areas.reserve(topo.areas.size());
    for (const Asa& a : topo.areas) areas.push_back({a.center, a.radius_m});

    const double side_m = std::sqrt(cfg.extent_km2) * 1000.0;
    const double m_per_deg_lon =
        kMetersPerDegLat * std::cos(origin.lat_deg * 3.14159265358979323846 / 180.0);

    AreaBenchResult result;
    for (int length : lengths) {
        std::span<const AreaGeometry> view(areas.data(),
                                           static_cast<std::size_t>(length));
        std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL +
                            static_cast<std::uint64_t>(length));
        std::uniform_real_distribution<double> offset(-side_m / 2.0, side_m / 2.0);
        auto next_user = [&]() -> GeoPoint {
            return {origin.lat_deg + offset(rng) / kMetersPerDegLat,
                    origin.lon_deg + offset(rng) / m_per_deg_lon, origin.height_m};
        };

        for (int i = 0; i < cfg.warmup; ++i) {
            const GeoPoint u = next_user();
            (void)locate_first(u, view);
        }
        std::vector<double> samples;
        samples.reserve(static_cast<std::size_t>(cfg.iterations));
        for (int i = 0; i < cfg.iterations; ++i) {
            const GeoPoint u = next_user();
            const auto t0 = Clock::now();
            volatile bool hit = locate_first(u, view).has_value();
            const auto t1 = Clock::now();
            (void)hit;
            samples.push_back(
                std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        StatRow row = aggregate(samples);
        row.list_length = length;
        result.rows.push_back(row);
        result.raw_ms.push_back(std::move(samples));
    }
    return result;
}

E2EBenchResult bench_e2e(const std::vector<E2ETarget>& targets, const DnsName& service,
                         int n, std::chrono::milliseconds delay,
                         std::chrono::milliseconds timeout) {
    E2EBenchResult result;
    UdpTransport transport;
    std::mt19937 id_rng(0xC0FFEE);

    for (const E2ETarget& target : targets) {
        auto one_query = [&]() {
            const auto id = static_cast<std::uint16_t>(id_rng() & 0xFFFF);
            const DnsMessage q = DnsMessage::query(id, service, RrType::A);
            return query_roundtrip(transport, target.endpoint, q, timeout);
        };
        for (int i = 0; i < 5; ++i) {  // warmup, untimed
            try { one_query(); } catch (const Error&) {}
        }
        std::vector<double> samples;
        int failures = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && delay.count() > 0) std::this_thread::sleep_for(delay);
            try {
                const RoundtripResult rt = one_query();
                samples.push_back(
                    std::chrono::duration<double, std::milli>(rt.elapsed).count());
            } catch (const Error&) {
                ++failures;
            }
        }
        StatRow stats = aggregate(samples);  // throws InsufficientData when too few succeed
        E2ERow row;
        row.server_label = target.label;
        row.with_loc = target.with_loc;
        row.n = static_cast<int>(samples.size());
        row.failures = failures;
        row.mean_ms = stats.mean_ms;
        row.stddev_ms = stats.stddev_ms;
        row.max_ms = stats.max_ms;
        result.rows.push_back(std::move(row));
        result.raw_ms.push_back(std::move(samples));
    }
    return result;
}

E2EBenchResult bench_e2e_hermetic(const ServiceTopology& topology, int n,
                                  std::chrono::milliseconds delay) {
    E2EBenchResult result;
    for (bool with_loc : {true, false}) {
        ServerConfig cfg;
        cfg.port = 0;
        cfg.topology = topology;
        cfg.include_loc = with_loc;
        AuthServer server(std::move(cfg));
        const E2ETarget target{"hermetic", {"127.0.0.1", server.port()}, with_loc};
        E2EBenchResult part = bench_e2e({target}, topology.service_name, n, delay);
        result.rows.push_back(std::move(part.rows.front()));
        result.raw_ms.push_back(std::move(part.raw_ms.front()));
    }
    return result;
}

std::string area_csv(const std::vector<StatRow>& rows) {
    std::string out = "list_length,mean_ms,median_ms,max_ms,stddev_ms,p90_ms\n";
    for (const StatRow& r : rows) {
        out += std::to_string(r.list_length) + ',' + fmt(r.mean_ms) + ',' +
               fmt(r.median_ms) + ',' + fmt(r.max_ms) + ',' + fmt(r.stddev_ms) +
               ',' + fmt(r.p90_ms) + '\n';
    }
    return out;
}

std::string e2e_csv(const std::vector<E2ERow>& rows) {
    std::string out = "server,with_loc,n,failures,mean_ms,stddev_ms,max_ms\n";
    for (const E2ERow& r : rows) {
        out += r.server_label + ',' + (r.with_loc ? "true" : "false") + ',' +
               std::to_string(r.n) + ',' + std::to_string(r.failures) + ',' +
               fmt(r.mean_ms) + ',' + fmt(r.stddev_ms) + ',' + fmt(r.max_ms) + '\n';
    }
    return out;
}

void write_area_run(const std::string& run_dir, const AreaBenchResult& r) {
    const std::filesystem::path dir(run_dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "summary.csv") << area_csv(r.rows);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "raw_area_%03d.csv", r.rows[i].list_length);
        write_raw(dir / name, r.raw_ms[i]);
    }
}

void write_e2e_run(const std::string& run_dir, const E2EBenchResult& r) {
    const std::filesystem::path dir(run_dir);
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "summary.csv") << e2e_csv(r.rows);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        std::string name = "raw_" + r.rows[i].server_label +
                           (r.rows[i].with_loc ? "_loc" : "_noloc") + ".csv";
        write_raw(dir / name, r.raw_ms[i]);
    }
}

}  // namespace geodns
