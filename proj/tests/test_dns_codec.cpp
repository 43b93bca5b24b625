#include <doctest.h>

#include <random>

#include "geodns/dns.hpp"
#include "geodns/errors.hpp"

using namespace geodns;

namespace {

bool rr_equal(const ResourceRecord& a, const ResourceRecord& b) {
    return a.owner == b.owner && a.rrtype == b.rrtype && a.ttl == b.ttl &&
           a.rdata == b.rdata;
}

bool message_equal(const DnsMessage& a, const DnsMessage& b) {
    if (a.id != b.id || a.is_response != b.is_response || a.rcode != b.rcode)
        return false;
    if (a.questions.size() != b.questions.size() ||
        a.answers.size() != b.answers.size() ||
        a.authorities.size() != b.authorities.size() ||
        a.additionals.size() != b.additionals.size())
        return false;
    for (std::size_t i = 0; i < a.questions.size(); ++i)
        if (!(a.questions[i].qname == b.questions[i].qname) ||
            a.questions[i].qtype != b.questions[i].qtype)
            return false;
    auto section = [](const std::vector<ResourceRecord>& x,
                      const std::vector<ResourceRecord>& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!rr_equal(x[i], y[i])) return false;
        return true;
    };
    return section(a.answers, b.answers) && section(a.authorities, b.authorities) &&
           section(a.additionals, b.additionals);
}

DnsName random_name(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_labels(1, 4);
    std::uniform_int_distribution<int> label_len(1, 12);
    std::uniform_int_distribution<int> ch(0, 25);
    std::vector<std::string> labels;
    const int n = n_labels(rng);
    for (int i = 0; i < n; ++i) {
        std::string label;
        const int len = label_len(rng);
        for (int j = 0; j < len; ++j)
            label.push_back(static_cast<char>((rng() % 2 ? 'a' : 'A') + ch(rng)));
        labels.push_back(std::move(label));
    }
    return DnsName(std::move(labels));
}

DnsMessage random_message(std::mt19937_64& rng) {
    DnsMessage m;
    m.id = static_cast<std::uint16_t>(rng());
    m.is_response = rng() % 2;
    m.recursion_desired = rng() % 2;
    m.rcode = static_cast<std::uint8_t>(rng() % 4);
    m.questions.push_back({random_name(rng), 1, kClassIn});
    std::uniform_int_distribution<int> count(0, 4);
    auto random_rr = [&]() -> ResourceRecord {
        switch (rng() % 3) {
            case 0:
                return ResourceRecord::a(random_name(rng),
                                         static_cast<std::uint32_t>(rng() % 86400),
                                         Ipv4{static_cast<std::uint8_t>(rng()),
                                              static_cast<std::uint8_t>(rng()),
                                              static_cast<std::uint8_t>(rng()),
                                              static_cast<std::uint8_t>(rng())});
            case 1:
                return ResourceRecord::cname(random_name(rng),
                                             static_cast<std::uint32_t>(rng() % 86400),
                                             random_name(rng));
            default: {
                LocData d;
                d.lat_mas = static_cast<std::int64_t>(rng() % (2 * kMaxLatMas)) - kMaxLatMas;
                d.lon_mas = static_cast<std::int64_t>(rng() % (2 * kMaxLonMas)) - kMaxLonMas;
                d.alt_cm = static_cast<std::uint32_t>(rng());
                d.size_cm = decode_precision(static_cast<std::uint8_t>(
                    ((rng() % 10) << 4) | (rng() % 10)));
                d.hp_cm = decode_precision(static_cast<std::uint8_t>(
                    ((rng() % 10) << 4) | (rng() % 10)));
                d.vp_cm = decode_precision(static_cast<std::uint8_t>(
                    ((rng() % 10) << 4) | (rng() % 10)));
                return ResourceRecord::loc(random_name(rng),
                                           static_cast<std::uint32_t>(rng() % 86400), d);
            }
        }
    };
    for (int i = count(rng); i > 0; --i) m.answers.push_back(random_rr());
    for (int i = count(rng) / 2; i > 0; --i) m.authorities.push_back(random_rr());
    for (int i = count(rng); i > 0; --i) m.additionals.push_back(random_rr());
    return m;
}

}  // namespace

TEST_CASE("name handling") {
    const DnsName n = DnsName::from_string("EdgeA.MyService.com");
    CHECK(n.to_string() == "EdgeA.MyService.com");  // case bytes preserved
    CHECK(n == DnsName::from_string("edgea.myservice.COM"));
    CHECK_FALSE(n == DnsName::from_string("edgeb.myservice.com"));
    CHECK(DnsName::from_string("a.b.") == DnsName::from_string("a.b"));
    CHECK_THROWS_AS(DnsName::from_string("a..b"), MalformedName);
    CHECK_THROWS_AS(
        DnsName({std::string(64, 'x')}), MalformedName);
}

TEST_CASE("query wire layout") {
    const DnsMessage q =
        DnsMessage::query(0x1234, DnsName::from_string("edgea.myservice.com"),
                          RrType::LOC);
    const auto wire = encode_message(q);
    // hand-assembled: header + QNAME + QTYPE/QCLASS
    const std::vector<std::uint8_t> expected = {
        0x12, 0x34, 0x01, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        5, 'e', 'd', 'g', 'e', 'a',
        9, 'm', 'y', 's', 'e', 'r', 'v', 'i', 'c', 'e',
        3, 'c', 'o', 'm', 0,
        0x00, 0x1D,  // LOC
        0x00, 0x01};
    CHECK(wire == expected);
}

TEST_CASE("answer count consistency") {
    DnsMessage m = DnsMessage::query(7, DnsName::from_string("x.test"), RrType::A);
    m.is_response = true;
    m.answers.push_back(
        ResourceRecord::a(DnsName::from_string("x.test"), 60, Ipv4{1, 2, 3, 4}));
    const auto wire = encode_message(m);
    CHECK(wire[6] == 0);
    CHECK(wire[7] == 1);  // ANCOUNT
    const DnsMessage back = decode_message(wire);
    CHECK(back.answers.size() == 1);
}

TEST_CASE("round-trip property") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 1000; ++i) {
        const DnsMessage m = random_message(rng);
        CHECK(message_equal(decode_message(encode_message(m)), m));
    }
}

TEST_CASE("compression pointers are decoded") {
    // header + question "a.b" + one CNAME answer whose owner points back at
    // the question name
    std::vector<std::uint8_t> wire = {
        0x00, 0x01, 0x80, 0x00, 0x00, 0x01, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00,
        1, 'a', 1, 'b', 0,        // qname at offset 12
        0x00, 0x01, 0x00, 0x01,   // A IN
        0xC0, 0x0C,               // owner -> offset 12
        0x00, 0x05, 0x00, 0x01,   // CNAME IN
        0x00, 0x00, 0x00, 0x3C,   // ttl 60
        0x00, 0x02, 0xC0, 0x0E};  // rdata: pointer to "b"
    const DnsMessage m = decode_message(wire);
    REQUIRE(m.answers.size() == 1);
    CHECK(m.answers[0].owner == DnsName::from_string("a.b"));
    CHECK(std::get<DnsName>(m.answers[0].rdata) == DnsName::from_string("b"));
}

TEST_CASE("pointer loop is rejected") {
    std::vector<std::uint8_t> wire = {
        0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
        0xC0, 0x0C,  // name pointing at itself
        0x00, 0x01, 0x00, 0x01};
    CHECK_THROWS_AS(decode_message(wire), MalformedName);
}

TEST_CASE("truncated input") {
    const DnsMessage q = DnsMessage::query(1, DnsName::from_string("x.y"), RrType::A);
    const auto wire = encode_message(q);
    CHECK_THROWS_AS(decode_message(std::span(wire.data(), 11)), Truncated);
    CHECK_THROWS_AS(decode_message(std::span(wire.data(), wire.size() - 2)), Error);
}

TEST_CASE("unknown rrtypes survive opaquely") {
    std::mt19937_64 rng(8);
    DnsMessage m = DnsMessage::query(9, DnsName::from_string("x.y"), RrType::A);
    m.is_response = true;
    ResourceRecord txt;
    txt.owner = DnsName::from_string("x.y");
    txt.rrtype = static_cast<RrType>(16);
    txt.ttl = 60;
    txt.rdata = OpaqueRdata{16, {4, 't', 'e', 'x', 't'}};
    m.answers.push_back(txt);
    const DnsMessage back = decode_message(encode_message(m));
    REQUIRE(back.answers.size() == 1);
    CHECK(std::get<OpaqueRdata>(back.answers[0].rdata).bytes ==
          std::vector<std::uint8_t>{4, 't', 'e', 'x', 't'});
}

TEST_CASE("decoder fuzz never crashes or over-reads") {
    std::mt19937_64 rng(0xFEED);
    std::vector<std::uint8_t> base;
    {
        DnsMessage m = random_message(rng);
        base = encode_message(m);
    }
    int errors = 0;
    for (int i = 0; i < 100000; ++i) {
        std::vector<std::uint8_t> bytes;
        switch (i % 3) {
            case 0: {  // pure noise
                const std::size_t len = rng() % 64;
                bytes.resize(len);
                for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
                break;
            }
            case 1: {  // truncation of a valid message
                bytes.assign(base.begin(),
                             base.begin() + static_cast<long>(rng() % (base.size() + 1)));
                break;
            }
            default: {  // bit flips in a valid message
                bytes = base;
                for (int k = 0; k < 4; ++k)
                    bytes[rng() % bytes.size()] ^= static_cast<std::uint8_t>(rng());
                break;
            }
        }
        try {
            (void)decode_message(bytes);
        } catch (const Error&) {
            ++errors;
        }
    }
    CHECK(errors > 0);
}
