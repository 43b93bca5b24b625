// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GEODNS_GEODESY_HPP
#define GEODNS_GEODESY_HPP

#include <cstddef>
#include <optional>
#include <span>

namespace geodns {

/// A WGS-84 position: latitude/longitude in decimal degrees, ellipsoidal
/// height in meters.
struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    double height_m = 0.0;
};

/// Ellipsoid parameters for the planar projection. Defaults follow the
/// source material: a = 6378137 m, e = 0.01671. Note that 0.01671 is not
/// the standard WGS-84 first eccentricity (~0.0818); it is kept as the
/// default for reproducibility and can be overridden here.
struct EllipsoidParams {
    double semi_major_m = 6378137.0;
    double eccentricity = 0.01671;
};

struct PlanePoint {
    double x_m = 0.0;
    double y_m = 0.0;
};

/// Circular service area: center point plus radius in meters (radius > 0).
struct AreaGeometry {
    GeoPoint center;
    double radius_m = 0.0;
};

enum class InsideOutside { Inside, Outside };

/// Radius of curvature in the prime vertical:
/// N = a / sqrt(1 - e^2 sin^2(phi)).
double prime_vertical_radius(double lat_deg, const EllipsoidParams& params = {});

/// Planar projection x = (N+h) cos(phi) cos(lambda), y = (N+h) cos(phi) sin(lambda).
/// Only (x, y) are produced; there is no z, so latitudes phi and -phi map
/// to the same plane point. Documented limitation, not corrected here.
PlanePoint to_cartesian(const GeoPoint& p, const EllipsoidParams& params = {});

/// Planar distance test against the area radius. A point exactly on the
/// boundary (distance == r) is Inside.
InsideOutside contains(const AreaGeometry& area, const GeoPoint& user,
                       const EllipsoidParams& params = {});

/// First-match scan: returns the lowest index whose area contains the user,
/// in exactly the given list order, stopping at the first hit.
std::optional<std::size_t> locate_first(const GeoPoint& user,
                                        std::span<const AreaGeometry> areas,
                                        const EllipsoidParams& params = {});

bool valid(const GeoPoint& p);

}  // namespace geodns

#endif
