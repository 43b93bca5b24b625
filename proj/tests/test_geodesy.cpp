#include <doctest.h>

#include <random>

#include "geodns/geodesy.hpp"
#include "oracle.hpp"

using namespace geodns;

TEST_CASE("prime vertical radius at the equator is exactly a") {
    CHECK(prime_vertical_radius(0.0) == 6378137.0);
}

TEST_CASE("prime vertical radius at the pole") {
    // frozen from the extended-precision oracle
    CHECK(prime_vertical_radius(90.0) == doctest::Approx(6379027.6513045732).epsilon(1e-12));
    CHECK(prime_vertical_radius(90.0) >= 6378137.0);
}

TEST_CASE("prime vertical radius is even in latitude") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> lat(0.0, 90.0);
    for (int i = 0; i < 200; ++i) {
        const double phi = lat(rng);
        CHECK(prime_vertical_radius(phi) == prime_vertical_radius(-phi));
    }
}

TEST_CASE("cartesian conversion at reference points") {
    const PlanePoint origin = to_cartesian({0.0, 0.0, 0.0});
    CHECK(origin.x_m == doctest::Approx(6378137.0));
    CHECK(origin.y_m == doctest::Approx(0.0).epsilon(1e-6));

    const PlanePoint east = to_cartesian({0.0, 90.0, 0.0});
    CHECK(east.x_m == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(east.y_m == doctest::Approx(6378137.0));

    // 28 43 N, 128 12 W -- frozen from the oracle
    const PlanePoint p = to_cartesian({28.0 + 43.0 / 60.0, -128.2, 0.0});
    CHECK(p.x_m == doctest::Approx(-3459282.2507487659).epsilon(1e-12));
    CHECK(p.y_m == doctest::Approx(-4395963.6101292605).epsilon(1e-12));
}

TEST_CASE("negating longitude negates y and preserves x") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> lat(-89.0, 89.0);
    std::uniform_real_distribution<double> lon(0.0, 180.0);
    for (int i = 0; i < 200; ++i) {
        const GeoPoint p{lat(rng), lon(rng), 100.0};
        const GeoPoint m{p.lat_deg, -p.lon_deg, p.height_m};
        const PlanePoint a = to_cartesian(p);
        const PlanePoint b = to_cartesian(m);
        CHECK(a.x_m == b.x_m);
        CHECK(a.y_m == -b.y_m);
    }
}

TEST_CASE("contains at the center and near the boundary") {
    const AreaGeometry area{{46.62, 14.31, 0.0}, 500.0};
    CHECK(contains(area, {46.62, 14.31, 0.0}) == InsideOutside::Inside);
    // 0.02 deg of longitude at this latitude is ~1529 m (oracle)
    CHECK(contains(area, {46.62, 14.33, 0.0}) == InsideOutside::Outside);
    // 0.002 deg is ~153 m
    CHECK(contains(area, {46.62, 14.312, 0.0}) == InsideOutside::Inside);
}

TEST_CASE("boundary distance exactly r is inside") {
    // center and user on the equator at the same longitude offsets give an
    // exact planar distance of |dx|
    const AreaGeometry area{{0.0, 0.0, 0.0}, 0.0 + 6378137.0};
    // degenerate but exact: user at the y axis, distance sqrt(2)*a > a is outside
    CHECK(contains(area, {0.0, 90.0, 0.0}) == InsideOutside::Outside);
    // distance 0 with any positive radius
    const AreaGeometry tiny{{10.0, 10.0, 0.0}, 1e-9};
    CHECK(contains(tiny, {10.0, 10.0, 0.0}) == InsideOutside::Inside);
}

TEST_CASE("contains is monotone in radius") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> lat(-60.0, 60.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    std::uniform_real_distribution<double> rad(1.0, 10000.0);
    for (int i = 0; i < 300; ++i) {
        const GeoPoint c{lat(rng), lon(rng), 0.0};
        const GeoPoint u{c.lat_deg + 0.001, c.lon_deg + 0.001, 0.0};
        const double r = rad(rng);
        if (contains({c, r}, u) == InsideOutside::Inside)
            CHECK(contains({c, r * 2.0}, u) == InsideOutside::Inside);
    }
}

TEST_CASE("inside verdict is symmetric in user and center") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> lat(-60.0, 60.0);
    std::uniform_real_distribution<double> lon(-180.0, 180.0);
    std::uniform_real_distribution<double> d(-0.01, 0.01);
    std::uniform_real_distribution<double> rad(1.0, 10000.0);
    for (int i = 0; i < 300; ++i) {
        const GeoPoint a{lat(rng), lon(rng), 0.0};
        const GeoPoint b{a.lat_deg + d(rng), a.lon_deg + d(rng), 0.0};
        const double r = rad(rng);
        CHECK(contains({a, r}, b) == contains({b, r}, a));
    }
}

TEST_CASE("locate_first") {
    const EllipsoidParams params;
    const GeoPoint user{46.62, 14.31, 0.0};

    SUBCASE("empty list") {
        CHECK(locate_first(user, {}) == std::nullopt);
    }
    SUBCASE("first-match on overlap") {
        std::vector<AreaGeometry> areas{{user, 1000.0}, {user, 2000.0}};
        CHECK(locate_first(user, areas) == 0);
    }
    SUBCASE("hit at index 3 of 5") {
        std::vector<AreaGeometry> areas;
        for (int i = 0; i < 5; ++i)
            areas.push_back({{10.0 + i, 10.0, 0.0}, 100.0});
        areas[3].center = user;
        const auto hit = locate_first(user, areas);
        REQUIRE(hit.has_value());
        CHECK(*hit == 3);
        // brute-force: every lower index is outside, the hit is inside
        for (std::size_t i = 0; i < *hit; ++i)
            CHECK(contains(areas[i], user, params) == InsideOutside::Outside);
        CHECK(contains(areas[*hit], user, params) == InsideOutside::Inside);
    }
}

TEST_CASE("oracle equivalence on random triples") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> lat(-60.0, 60.0);
    std::uniform_real_distribution<double> lon(-179.0, 179.0);
    std::uniform_real_distribution<double> delta(-0.1, 0.1);
    std::uniform_real_distribution<double> radius(1.0, 10000.0);

    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const GeoPoint c{lat(rng), lon(rng), 0.0};
        const GeoPoint u{c.lat_deg + delta(rng), c.lon_deg + delta(rng), 0.0};
        const double r = radius(rng);
        const long double d = oracle::plane_distance(c.lat_deg, c.lon_deg, 0.0L,
                                                     u.lat_deg, u.lon_deg, 0.0L);
        if (std::abs(static_cast<double>(d) - r) < 1.0)
            continue;  // too close to the boundary to classify robustly
        ++checked;
        const bool expect = d <= r;
        CHECK((contains({c, r}, u) == InsideOutside::Inside) == expect);
    }
    CHECK(checked > 500);
}
