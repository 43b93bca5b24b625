// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal DNS message codec: header, question and the three record
// sections, with typed RDATA for A, CNAME and LOC. Enough for a single
// UDP query/response exchange; no EDNS0, no TCP, no recursion.

#ifndef GEODNS_DNS_HPP
#define GEODNS_DNS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geodns/loc.hpp"

namespace geodns {

/// A domain name as an ordered list of labels. Comparison is
/// case-insensitive; the original case bytes are preserved.
class DnsName {
public:
    DnsName() = default;
    explicit DnsName(std::vector<std::string> labels);

    /// Parse dotted notation ("edgea.myservice.com", trailing dot allowed).
    static DnsName from_string(std::string_view text);

    const std::vector<std::string>& labels() const { return labels_; }
    std::string to_string() const;

    bool equals(const DnsName& other) const;
    bool operator==(const DnsName& other) const { return equals(other); }

private:
    std::vector<std::string> labels_;
};

enum class RrType : std::uint16_t {
    A = 1,
    CNAME = 5,
    LOC = 29,
};

inline constexpr std::uint16_t kClassIn = 1;

using Ipv4 = std::array<std::uint8_t, 4>;

std::string ipv4_to_string(const Ipv4& a);
Ipv4 ipv4_from_string(std::string_view s);  // throws SyntaxError

/// RDATA payload; OpaqueRdata keeps unknown types intact so higher layers
/// can skip them without losing bytes on re-encode.
struct OpaqueRdata {
    std::uint16_t rrtype = 0;
    std::vector<std::uint8_t> bytes;
    bool operator==(const OpaqueRdata&) const = default;
};

using Rdata = std::variant<Ipv4, DnsName, LocData, OpaqueRdata>;

struct ResourceRecord {
    DnsName owner;
    RrType rrtype = RrType::A;
    std::uint32_t ttl = 0;
    Rdata rdata;

    static ResourceRecord a(DnsName owner, std::uint32_t ttl, Ipv4 addr);
    static ResourceRecord cname(DnsName owner, std::uint32_t ttl, DnsName target);
    static ResourceRecord loc(DnsName owner, std::uint32_t ttl, LocData data);
};

struct Question {
    DnsName qname;
    std::uint16_t qtype = 1;
    std::uint16_t qclass = kClassIn;
};

enum Rcode : std::uint8_t {
    RcodeNoError = 0,
    RcodeFormErr = 1,
    RcodeServFail = 2,
    RcodeNxDomain = 3,
};

struct DnsMessage {
    std::uint16_t id = 0;
    bool is_response = false;
    std::uint8_t opcode = 0;
    bool recursion_desired = false;
    std::uint8_t rcode = RcodeNoError;
    std::vector<Question> questions;
    std::vector<ResourceRecord> answers;
    std::vector<ResourceRecord> authorities;
    std::vector<ResourceRecord> additionals;

    static DnsMessage query(std::uint16_t id, DnsName qname, RrType qtype);
};

/// Serialize without name compression; multi-byte fields big-endian.
/// Throws TooLarge past 65535 bytes.
std::vector<std::uint8_t> encode_message(const DnsMessage& m);

/// Parse a wire message. Accepts compression pointers (public resolvers
/// emit them); guards against pointer loops. Unknown RR types come back as
/// OpaqueRdata. Throws Truncated / MalformedName / MalformedMessage.
DnsMessage decode_message(std::span<const std::uint8_t> bytes);

}  // namespace geodns

#endif
