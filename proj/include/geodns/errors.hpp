// geodns -- location-aware DNS service discovery
// Copyright (c) 2026 the geodns authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GEODNS_ERRORS_HPP
#define GEODNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geodns {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// loc-codec
struct RangeError : Error { using Error::Error; };
struct MalformedField : Error { using Error::Error; };
struct MalformedRecord : Error { using Error::Error; };
struct UnsupportedVersion : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };

// dns-codec
struct TooLarge : Error { using Error::Error; };
struct Truncated : Error { using Error::Error; };
struct MalformedName : Error { using Error::Error; };
struct MalformedMessage : Error { using Error::Error; };
struct Timeout : Error { using Error::Error; };
struct ServerFailure : Error {
    explicit ServerFailure(int rcode_)
        : Error("server returned rcode " + std::to_string(rcode_)), rcode(rcode_) {}
    int rcode;
};

// topology / config
struct ConfigError : Error {
    ConfigError(const std::string& path, const std::string& reason)
        : Error(path + ": " + reason), path(path), reason(reason) {}
    std::string path;
    std::string reason;
};
struct InvalidTopology : Error { using Error::Error; };

// server
struct BindError : Error { using Error::Error; };

// discovery
struct IncompleteAnnouncement : Error { using Error::Error; };
struct EmptyAnnouncement : Error { using Error::Error; };
struct NoFallback : Error { using Error::Error; };

// bench
struct InsufficientData : Error { using Error::Error; };

}  // namespace geodns

#endif
