// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/loc.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "geodns/errors.hpp"

namespace geodns {

namespace {

constexpr std::int64_t kAngleOffset = 1LL << 31;  // 2^31
constexpr std::uint64_t kMaxPrecisionCm = 9'000'000'000ULL;  // 9 * 10^9

void check_valid(const LocData& d) {
    if (d.lat_mas < -kMaxLatMas || d.lat_mas > kMaxLatMas)
        throw RangeError("latitude out of range: " + std::to_string(d.lat_mas) + " mas");
    if (d.lon_mas < -kMaxLonMas || d.lon_mas > kMaxLonMas)
        throw RangeError("longitude out of range: " + std::to_string(d.lon_mas) + " mas");
    for (std::uint64_t v : {d.size_cm, d.hp_cm, d.vp_cm}) {
        if (decode_precision(encode_precision(v)) != v)
            throw RangeError("size/precision not representable: " + std::to_string(v) + " cm");
    }
}

void put_u32(std::uint8_t* p, std::uint32_t v) {
    p[0] = static_cast<std::uint8_t>(v >> 24);
    p[1] = static_cast<std::uint8_t>(v >> 16);
    p[2] = static_cast<std::uint8_t>(v >> 8);
    p[3] = static_cast<std::uint8_t>(v);
}

std::uint32_t get_u32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

// "28 43 0.000 N" for mas = 103380000, letters ('N','S') or ('E','W')
void format_angle(std::ostringstream& out, std::int64_t mas, char pos, char neg) {
    const char hemi = mas < 0 ? neg : pos;
    std::uint64_t v = mas < 0 ? static_cast<std::uint64_t>(-mas)
                              : static_cast<std::uint64_t>(mas);
    const std::uint64_t deg = v / 3'600'000;
    v %= 3'600'000;
    const std::uint64_t min = v / 60'000;
    v %= 60'000;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%llu %llu %llu.%03llu %c",
                  static_cast<unsigned long long>(deg),
                  static_cast<unsigned long long>(min),
                  static_cast<unsigned long long>(v / 1000),
                  static_cast<unsigned long long>(v % 1000), hemi);
    out << buf;
}

// centimeters -> meter string, trailing zeros trimmed: 2000 -> "20m",
// 90 -> "0.9m", 5 -> "0.05m"
void format_size(std::ostringstream& out, std::uint64_t cm) {
    char buf[40];
    if (cm % 100 == 0)
        std::snprintf(buf, sizeof buf, "%llum", static_cast<unsigned long long>(cm / 100));
    else if (cm % 10 == 0)
        std::snprintf(buf, sizeof buf, "%llu.%llum",
                      static_cast<unsigned long long>(cm / 100),
                      static_cast<unsigned long long>((cm / 10) % 10));
    else
        std::snprintf(buf, sizeof buf, "%llu.%02llum",
                      static_cast<unsigned long long>(cm / 100),
                      static_cast<unsigned long long>(cm % 100));
    out << buf;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

bool parse_number(const std::string& tok, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

// integer token only (degrees and minutes)
bool parse_uint(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    out = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
        if (out > 1'000'000) return false;
    }
    return true;
}

struct TokenCursor {
    const std::vector<std::string>& tokens;
    std::size_t pos = 0;

    bool done() const { return pos >= tokens.size(); }
    const std::string& peek() const {
        if (done()) throw SyntaxError("unexpected end of input");
        return tokens[pos];
    }
    const std::string& take() {
        const std::string& t = peek();
        ++pos;
        return t;
    }
};

std::int64_t parse_angle(TokenCursor& cur, char pos_hemi, char neg_hemi,
                         std::uint64_t max_deg) {
    std::uint64_t deg = 0, min = 0;
    double sec = 0.0;
    if (!parse_uint(cur.peek(), deg) || deg > max_deg)
        throw SyntaxError("bad degrees token: " + cur.peek());
    cur.take();

    int sign = 0;
    auto hemi = [&](const std::string& t) -> bool {
        if (t.size() != 1) return false;
        if (t[0] == pos_hemi) { sign = 1; return true; }
        if (t[0] == neg_hemi) { sign = -1; return true; }
        return false;
    };

    if (!hemi(cur.peek())) {
        if (!parse_uint(cur.peek(), min) || min >= 60)
            throw SyntaxError("bad minutes token: " + cur.peek());
        cur.take();
        if (!hemi(cur.peek())) {
            if (!parse_number(cur.peek(), sec) || sec < 0.0 || sec >= 60.0)
                throw SyntaxError("bad seconds token: " + cur.peek());
            cur.take();
            if (!hemi(cur.peek()))
                throw SyntaxError("bad hemisphere token: " + cur.peek());
        }
    }
    cur.take();  // hemisphere letter

    const std::int64_t mas =
        static_cast<std::int64_t>(deg) * 3'600'000 +
        static_cast<std::int64_t>(min) * 60'000 +
        static_cast<std::int64_t>(std::llround(sec * 1000.0));
    const std::int64_t limit = static_cast<std::int64_t>(max_deg) * 3'600'000;
    if (mas > limit)
        throw SyntaxError("angle out of range: " + std::to_string(mas) + " mas");
    return sign * mas;
}

// meter value with optional trailing 'm'
double parse_meters(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && (t.back() == 'm' || t.back() == 'M')) t.pop_back();
    double v = 0.0;
    if (!parse_number(t, v))
        throw SyntaxError("bad meter token: " + tok);
    return v;
}

std::uint64_t meters_to_size_cm(double m, const std::string& tok) {
    if (m < 0.0 || m * 100.0 > static_cast<double>(kMaxPrecisionCm))
        throw SyntaxError("size out of range: " + tok);
    const std::uint64_t cm = static_cast<std::uint64_t>(std::llround(m * 100.0));
    return decode_precision(encode_precision(cm));
}

}  // namespace

std::uint8_t encode_precision(std::uint64_t cm) {
    if (cm > kMaxPrecisionCm)
        throw RangeError("precision above 9e9 cm: " + std::to_string(cm));
    if (cm == 0) return 0x00;
    unsigned exponent = 0;
    std::uint64_t scale = 1;
    while (cm / scale >= 10) {
        scale *= 10;
        ++exponent;
    }
    const unsigned mantissa = static_cast<unsigned>(cm / scale);
    return static_cast<std::uint8_t>((mantissa << 4) | exponent);
}

std::uint64_t decode_precision(std::uint8_t b) {
    const unsigned mantissa = b >> 4;
    const unsigned exponent = b & 0x0F;
    if (mantissa > 9)
        throw MalformedField("mantissa nibble > 9");
    if (exponent > 9)
        throw MalformedField("exponent nibble > 9");
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < exponent; ++i) scale *= 10;
    return mantissa * scale;
}

std::array<std::uint8_t, 16> encode_wire(const LocData& d) {
    check_valid(d);
    std::array<std::uint8_t, 16> out{};
    out[0] = 0;  // VERSION
    out[1] = encode_precision(d.size_cm);
    out[2] = encode_precision(d.hp_cm);
    out[3] = encode_precision(d.vp_cm);
    put_u32(&out[4], static_cast<std::uint32_t>(kAngleOffset + d.lat_mas));
    put_u32(&out[8], static_cast<std::uint32_t>(kAngleOffset + d.lon_mas));
    put_u32(&out[12], d.alt_cm);
    return out;
}

LocData decode_wire(std::span<const std::uint8_t> bytes) {
    if (bytes.empty())
        throw MalformedRecord("empty LOC RDATA");
    if (bytes[0] != 0)
        throw UnsupportedVersion("LOC version " + std::to_string(bytes[0]));
    if (bytes.size() != 16)
        throw MalformedRecord("LOC RDATA length " + std::to_string(bytes.size()));
    LocData d;
    d.size_cm = decode_precision(bytes[1]);
    d.hp_cm = decode_precision(bytes[2]);
    d.vp_cm = decode_precision(bytes[3]);
    d.lat_mas = static_cast<std::int64_t>(get_u32(&bytes[4])) - kAngleOffset;
    d.lon_mas = static_cast<std::int64_t>(get_u32(&bytes[8])) - kAngleOffset;
    d.alt_cm = get_u32(&bytes[12]);
    if (d.lat_mas < -kMaxLatMas || d.lat_mas > kMaxLatMas ||
        d.lon_mas < -kMaxLonMas || d.lon_mas > kMaxLonMas)
        throw MalformedRecord("LOC angle out of range");
    return d;
}

LocData parse_presentation(std::string_view text) {
    const std::vector<std::string> tokens = tokenize(text);
    TokenCursor cur{tokens};
    LocData d;
    d.lat_mas = parse_angle(cur, 'N', 'S', 90);
    d.lon_mas = parse_angle(cur, 'E', 'W', 180);

    const std::string alt_tok = cur.take();
    const double alt_m = parse_meters(alt_tok);
    const double alt_cm = (alt_m + 100000.0) * 100.0;
    if (alt_cm < 0.0 || alt_cm > static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
        throw SyntaxError("altitude out of range: " + alt_tok);
    d.alt_cm = static_cast<std::uint32_t>(std::llround(alt_cm));

    d.size_cm = kDefaultSizeCm;
    d.hp_cm = kDefaultHpCm;
    d.vp_cm = kDefaultVpCm;
    std::uint64_t* fields[] = {&d.size_cm, &d.hp_cm, &d.vp_cm};
    for (std::uint64_t* field : fields) {
        if (cur.done()) break;
        const std::string tok = cur.take();
        *field = meters_to_size_cm(parse_meters(tok), tok);
    }
    if (!cur.done())
        throw SyntaxError("trailing token: " + cur.peek());
    return d;
}

std::string format_presentation(const LocData& d) {
    std::ostringstream out;
    format_angle(out, d.lat_mas, 'N', 'S');
    out << ' ';
    format_angle(out, d.lon_mas, 'E', 'W');
    const double alt_m = static_cast<double>(d.alt_cm) / 100.0 - 100000.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, " %.2fm ", alt_m);
    out << buf;
    format_size(out, d.size_cm);
    out << ' ';
    format_size(out, d.hp_cm);
    out << ' ';
    format_size(out, d.vp_cm);
    return out.str();
}

GeoArea loc_to_geopoint(const LocData& d) {
    GeoArea a;
    a.point.lat_deg = static_cast<double>(d.lat_mas) / 3'600'000.0;
    a.point.lon_deg = static_cast<double>(d.lon_mas) / 3'600'000.0;
    a.point.height_m = static_cast<double>(d.alt_cm) / 100.0 - 100000.0;
    a.radius_m = (static_cast<double>(d.size_cm) / 100.0) / 2.0;
    return a;
}

LocData loc_from_geopoint(const GeoPoint& center, double radius_m,
                          std::uint64_t hp_cm, std::uint64_t vp_cm) {
    LocData d;
    d.lat_mas = std::llround(center.lat_deg * 3'600'000.0);
    d.lon_mas = std::llround(center.lon_deg * 3'600'000.0);
    const double alt_cm = (center.height_m + 100000.0) * 100.0;
    if (alt_cm < 0.0 || alt_cm > static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
        throw RangeError("altitude out of range");
    d.alt_cm = static_cast<std::uint32_t>(std::llround(alt_cm));
    if (radius_m <= 0.0)
        throw RangeError("radius must be positive");
    const auto size_cm = static_cast<std::uint64_t>(std::llround(radius_m * 2.0 * 100.0));
    d.size_cm = decode_precision(encode_precision(size_cm));
    d.hp_cm = decode_precision(encode_precision(hp_cm));
    d.vp_cm = decode_precision(encode_precision(vp_cm));
    return d;
}

}  // namespace geodns
