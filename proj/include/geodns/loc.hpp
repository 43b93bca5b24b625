// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// RFC 1876 LOC resource record codec: 16-byte wire RDATA and master-file
// presentation format.

#ifndef GEODNS_LOC_HPP
#define GEODNS_LOC_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "geodns/geodesy.hpp"

namespace geodns {

/// Geographic payload of one LOC record.
///
/// Angles are stored in signed thousandths of an arcsecond (north/east
/// positive). Altitude is stored in centimeters above a base of -100000 m,
/// i.e. alt_cm = (altitude_m + 100000) * 100. Size and the two precision
/// values are centimeters and must be representable as mantissa*10^exponent
/// with mantissa, exponent in [0,9].
struct LocData {
    std::int64_t lat_mas = 0;
    std::int64_t lon_mas = 0;
    std::uint32_t alt_cm = 0;
    std::uint64_t size_cm = 0;
    std::uint64_t hp_cm = 0;
    std::uint64_t vp_cm = 0;

    bool operator==(const LocData&) const = default;
};

inline constexpr std::int64_t kMaxLatMas = 90LL * 3600 * 1000;
inline constexpr std::int64_t kMaxLonMas = 180LL * 3600 * 1000;

/// Presentation-format defaults (RFC 1876): size 1 m, horizontal precision
/// 10000 m, vertical precision 10 m.
inline constexpr std::uint64_t kDefaultSizeCm = 100;
inline constexpr std::uint64_t kDefaultHpCm = 1000000;
inline constexpr std::uint64_t kDefaultVpCm = 1000;

/// Encode a centimeter count into the RFC 1876 exponent/mantissa byte
/// (mantissa in the high nibble). Truncates to the largest representable
/// value <= cm so that an area's reach is never overstated.
std::uint8_t encode_precision(std::uint64_t cm);

/// Decode an exponent/mantissa byte to centimeters. Throws MalformedField
/// if either nibble exceeds 9.
std::uint64_t decode_precision(std::uint8_t b);

/// 16-byte big-endian RDATA, version 0.
std::array<std::uint8_t, 16> encode_wire(const LocData& d);

/// Throws MalformedRecord on wrong length, UnsupportedVersion if the
/// version byte is nonzero (callers should skip such records, not abort).
LocData decode_wire(std::span<const std::uint8_t> bytes);

/// Master-file LOC syntax:
///   d [m [s]] {N|S} d [m [s]] {E|W} alt[m] [size[m] [hp[m] [vp[m]]]]
/// Omitted minutes/seconds are zero; omitted size/hp/vp take the RFC
/// defaults. Throws SyntaxError naming the offending token.
LocData parse_presentation(std::string_view text);

/// Canonical presentation: full D M S (seconds to 3 decimals), hemisphere
/// letters, altitude with 2 decimals, all of size/hp/vp printed with "m".
/// parse_presentation(format_presentation(d)) == d.
std::string format_presentation(const LocData& d);

struct GeoArea {
    GeoPoint point;
    double radius_m;
};

/// Interpret a LOC record as an area: the stored SIZE is a sphere diameter,
/// so the usable radius is half of it.
GeoArea loc_to_geopoint(const LocData& d);

/// Build a LocData from an area center and radius (SIZE = 2 * radius).
/// Angles round to the nearest thousandth of an arcsecond; size/hp/vp go
/// through the precision encoder.
LocData loc_from_geopoint(const GeoPoint& center, double radius_m,
                          std::uint64_t hp_cm = 1000, std::uint64_t vp_cm = 1000);

}  // namespace geodns

#endif
