// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark harness: area-scan latency over growing LOC list lengths, and
// end-to-end query latency with/without LOC payload. Raw samples are kept
// alongside every summary so outliers stay inspectable.

#ifndef GEODNS_BENCH_HPP
#define GEODNS_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "geodns/topology.hpp"
#include "geodns/transport.hpp"

namespace geodns {

struct StatRow {
    int list_length = 0;
    double mean_ms = 0.0;
    double median_ms = 0.0;
    double max_ms = 0.0;
    double stddev_ms = 0.0;  // sample (n-1) convention
    double p90_ms = 0.0;     // nearest-rank
};

struct E2ERow {
    std::string server_label;
    bool with_loc = false;
    int n = 0;  // successful samples
    int failures = 0;
    double mean_ms = 0.0;
    double stddev_ms = 0.0;
    double max_ms = 0.0;
};

/// mean / median (midpoint) / max / sample stddev / nearest-rank p90.
/// Throws InsufficientData below 2 samples. list_length is left at 0.
StatRow aggregate(const std::vector<double>& samples_ms);

struct AreaBenchConfig {
    std::vector<int> lengths;  // empty -> 25,50,...,400
    int iterations = 100;
    std::uint64_t seed = 42;
    int pool_areas = 400;
    double extent_km2 = 20.0;
    double radius_m = 50.0;
    int warmup = 5;
};

struct AreaBenchResult {
    std::vector<StatRow> rows;
    std::vector<std::vector<double>> raw_ms;  // one vector per row
};

/// Times the first-match scan (T_area only) for each list length against a
/// seeded synthetic area pool, one seeded random user position per
/// iteration. Single-threaded.
AreaBenchResult bench_area(const AreaBenchConfig& cfg);

struct E2ETarget {
    std::string label;
    Endpoint endpoint;
    bool with_loc = false;
};

struct E2EBenchResult {
    std::vector<E2ERow> rows;
    std::vector<std::vector<double>> raw_ms;
};

/// n query round trips per target, spaced by delay; timeouts are counted
/// as failures and excluded from the statistics.
E2EBenchResult bench_e2e(const std::vector<E2ETarget>& targets, const DnsName& service,
                         int n, std::chrono::milliseconds delay,
                         std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));

/// Hermetic arm pair: spins up a local authoritative server with LOC
/// records enabled and disabled and benchmarks both.
E2EBenchResult bench_e2e_hermetic(const ServiceTopology& topology, int n,
                                  std::chrono::milliseconds delay);

std::string area_csv(const std::vector<StatRow>& rows);
std::string e2e_csv(const std::vector<E2ERow>& rows);

/// Writes summary.csv plus raw_<config>.csv files under run_dir.
void write_area_run(const std::string& run_dir, const AreaBenchResult& r);
void write_e2e_run(const std::string& run_dir, const E2EBenchResult& r);

}  // namespace geodns

#endif
