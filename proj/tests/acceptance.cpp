// Acceptance gate. Each check prints exactly one PASS/FAIL line; the exit
// status is nonzero when any check fails. Runs without a network.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "demo_topo.hpp"
#include "geodns/bench.hpp"
#include "geodns/discovery.hpp"
#include "geodns/dns.hpp"
#include "geodns/errors.hpp"
#include "geodns/geodesy.hpp"
#include "geodns/loc.hpp"
#include "geodns/server.hpp"
#include "geodns/topology.hpp"
#include "oracle.hpp"

using namespace geodns;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail = "") {
    if (ok) {
        std::printf("PASS: %s%s%s\n", name, detail.empty() ? "" : " -- ",
                    detail.c_str());
    } else {
        std::printf("FAIL: %s%s%s\n", name, detail.empty() ? "" : " -- ",
                    detail.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

std::uint32_t be32(const std::array<std::uint8_t, 16>& w, std::size_t off) {
    return (std::uint32_t(w[off]) << 24) | (std::uint32_t(w[off + 1]) << 16) |
           (std::uint32_t(w[off + 2]) << 8) | std::uint32_t(w[off + 3]);
}

LocData random_loc(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> lat(-kMaxLatMas, kMaxLatMas);
    std::uniform_int_distribution<std::int64_t> lon(-kMaxLonMas, kMaxLonMas);
    std::uniform_int_distribution<std::uint32_t> alt;
    std::uniform_int_distribution<std::uint64_t> size(0, 9000000000ULL);
    LocData d;
    d.lat_mas = lat(rng);
    d.lon_mas = lon(rng);
    d.alt_cm = alt(rng);
    // snap sizes to values the exponent-mantissa byte can represent
    d.size_cm = decode_precision(encode_precision(size(rng)));
    d.hp_cm = decode_precision(encode_precision(size(rng)));
    d.vp_cm = decode_precision(encode_precision(size(rng)));
    return d;
}

// ---- 1: reference record encodes to the published wire integers ---------

void check_golden_vector() {
    const LocData d = parse_presentation("28 43 0.0 N 128 12 0.0 W 200.00m 20m 10m 10m");
    const auto w = encode_wire(d);
    const bool ok = w[0] == 0 && w[1] == 0x23 && w[2] == 0x13 && w[3] == 0x13 &&
                    be32(w, 4) == 2250863648u && be32(w, 8) == 1685963648u &&
                    be32(w, 12) == 10020000u && decode_wire(w) == d;
    report("reference LOC record wire image", ok);
}

// ---- 2: codec round-trips and decoder robustness ------------------------

void check_roundtrips() {
    std::mt19937_64 rng(11);
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
        const LocData d = random_loc(rng);
        ok = decode_wire(encode_wire(d)) == d &&
             parse_presentation(format_presentation(d)) == d;
    }

    std::mt19937_64 mrng(12);
    std::uniform_int_distribution<int> nrec(0, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<std::uint32_t> word;
    bool mok = true;
    for (int i = 0; i < 1000 && mok; ++i) {
        DnsMessage m;
        m.id = static_cast<std::uint16_t>(word(mrng));
        m.is_response = pick(mrng) != 0;
        m.questions.push_back({DnsName::from_string("svc.example"),
                               static_cast<std::uint16_t>(RrType::A), kClassIn});
        const int n = nrec(mrng);
        for (int r = 0; r < n; ++r) {
            const std::string owner = "h" + std::to_string(r) + ".svc.example";
            switch (pick(mrng)) {
                case 0:
                    m.answers.push_back(ResourceRecord::a(
                        DnsName::from_string(owner), 60,
                        Ipv4{1, 2, 3, static_cast<std::uint8_t>(r)}));
                    break;
                case 1:
                    m.answers.push_back(ResourceRecord::cname(
                        DnsName::from_string(owner), 60,
                        DnsName::from_string("edge.svc.example")));
                    break;
                default:
                    m.answers.push_back(ResourceRecord::loc(
                        DnsName::from_string(owner), 60, random_loc(mrng)));
            }
        }
        const auto wire = encode_message(m);
        mok = encode_message(decode_message(wire)) == wire;
    }

    // fuzz: mutated/truncated/noise buffers must throw or decode, never crash
    std::mt19937_64 frng(13);
    const DnsMessage base = DnsMessage::query(7, DnsName::from_string("svc.example"),
                                              RrType::LOC);
    const std::vector<std::uint8_t> seed = encode_message(base);
    std::uniform_int_distribution<int> mode(0, 2);
    std::uniform_int_distribution<std::size_t> cut(0, seed.size());
    std::uniform_int_distribution<int> byte(0, 255);
    long decoded = 0, rejected = 0;
    for (int i = 0; i < 100000; ++i) {
        std::vector<std::uint8_t> buf;
        switch (mode(frng)) {
            case 0: {
                std::uniform_int_distribution<std::size_t> len(0, 64);
                buf.resize(len(frng));
                for (auto& b : buf) b = static_cast<std::uint8_t>(byte(frng));
                break;
            }
            case 1:
                buf.assign(seed.begin(), seed.begin() + static_cast<long>(cut(frng)));
                break;
            default:
                buf = seed;
                if (!buf.empty())
                    buf[cut(frng) % buf.size()] ^=
                        static_cast<std::uint8_t>(1 << (byte(frng) % 8));
        }
        try {
            (void)decode_message(buf);
            ++decoded;
        } catch (const Error&) {
            ++rejected;
        }
    }
    report("codec round trips (10^4 LOC, 10^3 DNS) and 10^5 fuzz iterations",
           ok && mok && decoded + rejected == 100000,
           std::to_string(decoded) + " fuzz inputs decoded, " +
               std::to_string(rejected) + " rejected");
}

// ---- 3: planar geometry matches an independent long-double model --------

void check_geodesy_oracle() {
    bool ok = prime_vertical_radius(0.0) == 6378137.0;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> lat(-89.0, 89.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    std::uniform_real_distribution<double> h(0.0, 2000.0);
    std::uniform_real_distribution<double> rad(10.0, 5000.0);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    int checked = 0;
    for (int i = 0; i < 1000 && ok; ++i) {
        const GeoPoint c{lat(rng), lon(rng), h(rng)};
        const GeoPoint u{c.lat_deg + jitter(rng), c.lon_deg + jitter(rng), h(rng)};
        const double r = rad(rng);
        const long double d = oracle::plane_distance(c.lat_deg, c.lon_deg, c.height_m,
                                                     u.lat_deg, u.lon_deg, u.height_m);
        if (std::fabs(static_cast<double>(d) - r) < 1.0) continue;  // knife edge
        ++checked;
        const bool expect = d <= r;
        ok = contains(AreaGeometry{c, r}, u) ==
             (expect ? InsideOutside::Inside : InsideOutside::Outside);
    }
    report("area membership agrees with the long-double model", ok && checked > 500,
           std::to_string(checked) + " decisive points");
}

// ---- 4: topology gate and zone generation -------------------------------

void check_topology_gate() {
    const ServiceTopology good = testfix::demo_topology();
    bool ok = validate(good).empty();

    ServiceTopology bad = good;
    bad.edges.push_back({DnsName::from_string("idle.myservice.test"), Ipv4{10, 0, 0, 9}});
    bad.clouds.clear();
    bad.areas[0].radius_m = -1.0;
    const auto vs = validate(bad);
    auto has = [&](Violation::Kind k) {
        return std::any_of(vs.begin(), vs.end(),
                           [&](const Violation& v) { return v.kind == k; });
    };
    ok = ok && has(Violation::EdgeWithoutArea) && has(Violation::NoCloudFallback) &&
         has(Violation::NonPositiveRadius);
    bool gated = false;
    try {
        (void)load_config(emit_config(bad));
    } catch (const InvalidTopology&) {
        gated = true;
    }

    const std::string zone = generate_zone(load_config(testfix::demo_config_json()));
    int loc_lines = 0;
    for (std::size_t at = zone.find(" IN LOC "); at != std::string::npos;
         at = zone.find(" IN LOC ", at + 1))
        ++loc_lines;
    ok = ok && gated && loc_lines == 11;
    report("topology constraints enforced, zone carries one LOC per area", ok,
           std::to_string(loc_lines) + " LOC lines");
}

// ---- 5 and 6: hermetic end-to-end discovery -----------------------------

void check_end_to_end() {
    const ServiceTopology topo = testfix::demo_topology();
    ServerConfig cfg;
    cfg.port = 0;
    cfg.topology = topo;
    AuthServer server(std::move(cfg));
    const Endpoint ep{"127.0.0.1", server.port()};

    std::vector<AreaGeometry> flat;
    for (const Asa& a : topo.areas) flat.push_back({a.center, a.radius_m});

    UdpTransport udp;
    CountingTransport counting(udp);
    DiscoverOptions opts;
    opts.transport = &counting;

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lat(46.54, 46.66);
    std::uniform_real_distribution<double> lon(14.23, 14.42);
    bool selection_ok = true;
    bool timing_ok = true;
    int edges = 0, clouds = 0;
    for (int i = 0; i < 50; ++i) {
        GeoPoint u{lat(rng), lon(rng), 0.0};
        if (i < 11) u = topo.areas[static_cast<std::size_t>(i)].center;  // hits too
        FixedPositionProvider provider(u);
        const std::uint64_t before = counting.datagrams_sent();
        const DiscoveryResult r = discover(topo.service_name, provider, ep, opts);
        if (counting.datagrams_sent() != before + 1) selection_ok = false;
        if (r.timing.t_q != r.timing.t_net + r.timing.t_area) timing_ok = false;

        std::optional<std::size_t> expect;
        for (std::size_t j = 0; j < flat.size(); ++j) {
            if (oracle::inside(flat[j].center.lat_deg, flat[j].center.lon_deg,
                               flat[j].center.height_m, u.lat_deg, u.lon_deg,
                               u.height_m, flat[j].radius_m)) {
                expect = j;
                break;
            }
        }
        if (expect) {
            ++edges;
            if (r.selection.kind != Selection::Edge ||
                r.selection.matched_area != expect ||
                r.selection.hostname != topo.areas[*expect].edge_hostname)
                selection_ok = false;
        } else {
            ++clouds;
            if (r.selection.kind != Selection::Cloud ||
                r.selection.hostname != topo.clouds[0].hostname)
                selection_ok = false;
        }
    }
    report("50 hermetic discoveries, one datagram each, oracle-checked selection",
           selection_ok,
           std::to_string(edges) + " edge hits, " + std::to_string(clouds) +
               " cloud fallbacks");
    report("query time equals network time plus area-scan time exactly", timing_ok);
}

// ---- 7 and 8: area-scan benchmark ---------------------------------------

void check_bench() {
    AreaBenchConfig cfg;  // defaults: 25..400 step 25, 100 iterations
    const AreaBenchResult r = bench_area(cfg);
    bool shape_ok = r.rows.size() == 16;
    bool stats_ok = true;
    for (std::size_t i = 0; i < r.rows.size() && shape_ok; ++i) {
        const std::vector<double>& s = r.raw_ms[i];
        if (s.size() != 100) { stats_ok = false; break; }
        std::vector<double> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        double sum = 0.0;
        for (double v : s) sum += v;
        const double mean = sum / 100.0;
        double ss = 0.0;
        for (double v : s) ss += (v - mean) * (v - mean);
        const double stddev = std::sqrt(ss / 99.0);
        const double median = (sorted[49] + sorted[50]) / 2.0;
        const double p90 = sorted[89];  // ceil(0.9*100) = 90th, 1-based
        const StatRow& row = r.rows[i];
        if (std::fabs(row.mean_ms - mean) > 1e-12 ||
            std::fabs(row.stddev_ms - stddev) > 1e-12 || row.median_ms != median ||
            row.max_ms != sorted.back() || row.p90_ms != p90)
            stats_ok = false;
    }
    report("area benchmark sweep: 16 rows, summaries match raw samples",
           shape_ok && stats_ok);

    const double mean100 = r.rows[3].mean_ms;  // length 100
    const double ratio = r.rows[15].mean_ms / r.rows[0].mean_ms;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "mean@100 = %.6f ms, mean@400 / mean@25 = %.2f", mean100, ratio);
    report("scan latency: sub-millisecond at length 100 and growing with length",
           shape_ok && mean100 < 1.0 && r.rows[15].mean_ms > r.rows[0].mean_ms,
           detail);
}

// ---- 9: first-match is a pure function of list order --------------------

void check_determinism() {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> lat(46.5, 46.7);
    std::uniform_real_distribution<double> lon(14.2, 14.5);
    std::uniform_real_distribution<double> rad(50.0, 2000.0);
    std::uniform_int_distribution<std::size_t> count(1, 40);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        std::vector<AreaGeometry> areas(count(rng));
        for (AreaGeometry& a : areas)
            a = {{lat(rng), lon(rng), 0.0}, rad(rng)};
        const GeoPoint u{lat(rng), lon(rng), 0.0};
        const auto first = locate_first(u, areas);

        std::vector<AreaGeometry> copy = areas;
        std::shuffle(copy.begin(), copy.end(), rng);
        (void)locate_first(u, copy);  // scanning a permutation has no side effects
        copy = areas;                 // restore the original order
        ok = locate_first(u, copy) == first && locate_first(u, areas) == first;
    }
    report("10^3 repeated scans: same list order, same match", ok);
}

}  // namespace

int main() {
    check_golden_vector();
    check_roundtrips();
    check_geodesy_oracle();
    check_topology_gate();
    check_end_to_end();
    check_bench();
    check_determinism();
    if (g_failures == 0) {
        std::printf("all acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
}
