// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#include "geodns/dns.hpp"

#include <cctype>
#include <cstdio>

#include "geodns/errors.hpp"

namespace geodns {

namespace {

constexpr std::size_t kMaxMessage = 65535;
constexpr std::size_t kMaxNameWire = 255;
constexpr int kMaxPointerJumps = 64;

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

struct Writer {
    std::vector<std::uint8_t> out;

    void u8(std::uint8_t v) { out.push_back(v); }
    void u16(std::uint16_t v) {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        u16(static_cast<std::uint16_t>(v >> 16));
        u16(static_cast<std::uint16_t>(v));
    }
    void bytes(std::span<const std::uint8_t> b) {
        out.insert(out.end(), b.begin(), b.end());
    }
    void name(const DnsName& n) {
        for (const std::string& label : n.labels()) {
            u8(static_cast<std::uint8_t>(label.size()));
            for (char c : label) u8(static_cast<std::uint8_t>(c));
        }
        u8(0);
    }
};

struct Reader {
    std::span<const std::uint8_t> data;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos >= data.size()) throw Truncated("unexpected end of message");
        return data[pos++];
    }
    std::uint16_t u16() { return static_cast<std::uint16_t>(u8() << 8 | u8()); }
    std::uint32_t u32() {
        std::uint32_t hi = u16();
        return hi << 16 | u16();
    }
    std::span<const std::uint8_t> bytes(std::size_t n) {
        if (data.size() - pos < n)
            throw MalformedMessage("field extends past end of message");
        auto s = data.subspan(pos, n);
        pos += n;
        return s;
    }

    DnsName name() {
        std::vector<std::string> labels;
        std::size_t at = pos;
        std::size_t wire_len = 0;
        int jumps = 0;
        bool jumped = false;
        for (;;) {
            if (at >= data.size()) throw Truncated("name runs past end of message");
            const std::uint8_t len = data[at];
            if ((len & 0xC0) == 0xC0) {
                if (at + 1 >= data.size()) throw Truncated("pointer runs past end");
                const std::size_t target =
                    (static_cast<std::size_t>(len & 0x3F) << 8) | data[at + 1];
                if (!jumped) pos = at + 2;
                jumped = true;
                if (++jumps > kMaxPointerJumps)
                    throw MalformedName("compression pointer loop");
                if (target >= data.size())
                    throw MalformedName("compression pointer out of bounds");
                at = target;
                continue;
            }
            if (len & 0xC0)
                throw MalformedName("reserved label type");
            if (len == 0) {
                if (!jumped) pos = at + 1;
                return DnsName(std::move(labels));
            }
            if (at + 1 + len > data.size())
                throw Truncated("label runs past end of message");
            wire_len += len + 1;
            if (wire_len + 1 > kMaxNameWire)
                throw MalformedName("name exceeds 255 bytes");
            labels.emplace_back(reinterpret_cast<const char*>(&data[at + 1]), len);
            at += 1 + len;
        }
    }
};

void write_rr(Writer& w, const ResourceRecord& rr) {
    w.name(rr.owner);
    std::uint16_t type_code;
    std::vector<std::uint8_t> rdata;
    if (const auto* a = std::get_if<Ipv4>(&rr.rdata)) {
        type_code = static_cast<std::uint16_t>(RrType::A);
        rdata.assign(a->begin(), a->end());
    } else if (const auto* n = std::get_if<DnsName>(&rr.rdata)) {
        type_code = static_cast<std::uint16_t>(RrType::CNAME);
        Writer nw;
        nw.name(*n);
        rdata = std::move(nw.out);
    } else if (const auto* l = std::get_if<LocData>(&rr.rdata)) {
        type_code = static_cast<std::uint16_t>(RrType::LOC);
        const auto wire = encode_wire(*l);
        rdata.assign(wire.begin(), wire.end());
    } else {
        const auto& o = std::get<OpaqueRdata>(rr.rdata);
        type_code = o.rrtype;
        rdata = o.bytes;
    }
    w.u16(type_code);
    w.u16(kClassIn);
    w.u32(rr.ttl);
    w.u16(static_cast<std::uint16_t>(rdata.size()));
    w.bytes(rdata);
}

ResourceRecord read_rr(Reader& r) {
    ResourceRecord rr;
    rr.owner = r.name();
    const std::uint16_t type_code = r.u16();
    r.u16();  // class, assumed IN
    rr.ttl = r.u32();
    const std::uint16_t rdlen = r.u16();
    const std::size_t rdata_start = r.pos;
    switch (static_cast<RrType>(type_code)) {
        case RrType::A: {
            if (rdlen != 4) throw MalformedMessage("A RDATA length != 4");
            auto b = r.bytes(4);
            Ipv4 a{b[0], b[1], b[2], b[3]};
            rr.rrtype = RrType::A;
            rr.rdata = a;
            break;
        }
        case RrType::CNAME: {
            if (r.data.size() - r.pos < rdlen)
                throw MalformedMessage("CNAME RDATA past end of message");
            rr.rrtype = RrType::CNAME;
            rr.rdata = r.name();
            if (r.pos != rdata_start + rdlen)
                throw MalformedMessage("CNAME RDATA length mismatch");
            break;
        }
        case RrType::LOC: {
            auto b = r.bytes(rdlen);
            rr.rrtype = RrType::LOC;
            try {
                rr.rdata = decode_wire(b);
            } catch (const UnsupportedVersion&) {
                // unknown LOC versions are skipped, not fatal
                rr.rdata = OpaqueRdata{type_code, {b.begin(), b.end()}};
            }
            break;
        }
        default: {
            auto b = r.bytes(rdlen);
            rr.rrtype = static_cast<RrType>(type_code);
            rr.rdata = OpaqueRdata{type_code, {b.begin(), b.end()}};
            break;
        }
    }
    return rr;
}

}  // namespace

DnsName::DnsName(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::size_t total = 1;
    for (const std::string& l : labels_) {
        if (l.empty() || l.size() > 63)
            throw MalformedName("label length must be 1..63: '" + l + "'");
        total += l.size() + 1;
    }
    if (total > kMaxNameWire)
        throw MalformedName("encoded name exceeds 255 bytes");
}

DnsName DnsName::from_string(std::string_view text) {
    std::vector<std::string> labels;
    std::string cur;
    for (char c : text) {
        if (c == '.') {
            if (cur.empty())
                throw MalformedName("empty label in name: " + std::string(text));
            labels.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) labels.push_back(std::move(cur));
    return DnsName(std::move(labels));
}

std::string DnsName::to_string() const {
    std::string out;
    for (const std::string& l : labels_) {
        if (!out.empty()) out.push_back('.');
        out += l;
    }
    return out;
}

bool DnsName::equals(const DnsName& other) const {
    if (labels_.size() != other.labels_.size()) return false;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const std::string& a = labels_[i];
        const std::string& b = other.labels_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (lower(a[j]) != lower(b[j])) return false;
    }
    return true;
}

std::string ipv4_to_string(const Ipv4& a) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u.%u.%u.%u", a[0], a[1], a[2], a[3]);
    return buf;
}

Ipv4 ipv4_from_string(std::string_view s) {
    Ipv4 out{};
    unsigned v = 0;
    int octet = 0;
    bool have_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (!have_digit || octet >= 3)
                throw SyntaxError("bad IPv4 address: " + std::string(s));
            out[octet++] = static_cast<std::uint8_t>(v);
            v = 0;
            have_digit = false;
        } else if (c >= '0' && c <= '9') {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > 255) throw SyntaxError("bad IPv4 address: " + std::string(s));
            have_digit = true;
        } else {
            throw SyntaxError("bad IPv4 address: " + std::string(s));
        }
    }
    if (!have_digit || octet != 3)
        throw SyntaxError("bad IPv4 address: " + std::string(s));
    out[3] = static_cast<std::uint8_t>(v);
    return out;
}

ResourceRecord ResourceRecord::a(DnsName owner, std::uint32_t ttl, Ipv4 addr) {
    return {std::move(owner), RrType::A, ttl, addr};
}
ResourceRecord ResourceRecord::cname(DnsName owner, std::uint32_t ttl, DnsName target) {
    return {std::move(owner), RrType::CNAME, ttl, std::move(target)};
}
ResourceRecord ResourceRecord::loc(DnsName owner, std::uint32_t ttl, LocData data) {
    return {std::move(owner), RrType::LOC, ttl, data};
}

DnsMessage DnsMessage::query(std::uint16_t id, DnsName qname, RrType qtype) {
    DnsMessage m;
    m.id = id;
    m.recursion_desired = true;
    m.questions.push_back({std::move(qname), static_cast<std::uint16_t>(qtype), kClassIn});
    return m;
}

std::vector<std::uint8_t> encode_message(const DnsMessage& m) {
    Writer w;
    w.u16(m.id);
    std::uint16_t flags = 0;
    if (m.is_response) flags |= 0x8000;
    flags |= static_cast<std::uint16_t>((m.opcode & 0x0F) << 11);
    if (m.recursion_desired) flags |= 0x0100;
    flags |= static_cast<std::uint16_t>(m.rcode & 0x0F);
    w.u16(flags);
    w.u16(static_cast<std::uint16_t>(m.questions.size()));
    w.u16(static_cast<std::uint16_t>(m.answers.size()));
    w.u16(static_cast<std::uint16_t>(m.authorities.size()));
    w.u16(static_cast<std::uint16_t>(m.additionals.size()));
    for (const Question& q : m.questions) {
        w.name(q.qname);
        w.u16(q.qtype);
        w.u16(q.qclass);
    }
    for (const ResourceRecord& rr : m.answers) write_rr(w, rr);
    for (const ResourceRecord& rr : m.authorities) write_rr(w, rr);
    for (const ResourceRecord& rr : m.additionals) write_rr(w, rr);
    if (w.out.size() > kMaxMessage)
        throw TooLarge("message is " + std::to_string(w.out.size()) + " bytes");
    return w.out;
}

DnsMessage decode_message(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 12)
        throw Truncated("message shorter than header");
    Reader r{bytes};
    DnsMessage m;
    m.id = r.u16();
    const std::uint16_t flags = r.u16();
    m.is_response = flags & 0x8000;
    m.opcode = static_cast<std::uint8_t>((flags >> 11) & 0x0F);
    m.recursion_desired = flags & 0x0100;
    m.rcode = static_cast<std::uint8_t>(flags & 0x0F);
    const std::uint16_t qd = r.u16();
    const std::uint16_t an = r.u16();
    const std::uint16_t ns = r.u16();
    const std::uint16_t ar = r.u16();
    for (std::uint16_t i = 0; i < qd; ++i) {
        Question q;
        q.qname = r.name();
        q.qtype = r.u16();
        q.qclass = r.u16();
        m.questions.push_back(std::move(q));
    }
    for (std::uint16_t i = 0; i < an; ++i) m.answers.push_back(read_rr(r));
    for (std::uint16_t i = 0; i < ns; ++i) m.authorities.push_back(read_rr(r));
    for (std::uint16_t i = 0; i < ar; ++i) m.additionals.push_back(read_rr(r));
    return m;
}

}  // namespace geodns
