// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/geodesy.hpp"

#include <cmath>

namespace geodns {

namespace {
constexpr double kDegToRad = 3.141592653589793238462643383279502884 / 180.0;
}

bool valid(const GeoPoint& p) {
    return std::isfinite(p.lat_deg) && p.lat_deg >= -90.0 && p.lat_deg <= 90.0 &&
           std::isfinite(p.lon_deg) && p.lon_deg >= -180.0 && p.lon_deg <= 180.0 &&
           std::isfinite(p.height_m);
}

double prime_vertical_radius(double lat_deg, const EllipsoidParams& params) {
    const double s = std::sin(lat_deg * kDegToRad);
    const double e = params.eccentricity;
    return params.semi_major_m / std::sqrt(1.0 - e * e * s * s);
}

PlanePoint to_cartesian(const GeoPoint& p, const EllipsoidParams& params) {
    const double phi = p.lat_deg * kDegToRad;
    const double lambda = p.lon_deg * kDegToRad;
    const double n = prime_vertical_radius(p.lat_deg, params);
    const double rho = (n + p.height_m) * std::cos(phi);
    return {rho * std::cos(lambda), rho * std::sin(lambda)};
}

InsideOutside contains(const AreaGeometry& area, const GeoPoint& user,
                       const EllipsoidParams& params) {
    const PlanePoint u = to_cartesian(user, params);
    const PlanePoint c = to_cartesian(area.center, params);
    const double dx = u.x_m - c.x_m;
    const double dy = u.y_m - c.y_m;
    const double dist = std::sqrt(dx * dx + dy * dy);
    return dist <= area.radius_m ? InsideOutside::Inside : InsideOutside::Outside;
}

std::optional<std::size_t> locate_first(const GeoPoint& user,
                                        std::span<const AreaGeometry> areas,
                                        const EllipsoidParams& params) {
    for (std::size_t i = 0; i < areas.size(); ++i) {
        if (contains(areas[i], user, params) == InsideOutside::Inside)
            return i;
    }
    return std::nullopt;
}

}  // namespace geodns
