#include "decentran/bytes.hpp"

#include "decentran/errors.hpp"

#include <algorithm>

namespace decentran {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::MalformedKey: return "malformed-key";
    case Errc::MalformedProof: return "malformed-proof";
    case Errc::RotationTooEarly: return "rotation-too-early";
    case Errc::StaleIdentity: return "stale-identity";
    case Errc::ChainBreak: return "chain-break";
    case Errc::UnknownNode: return "unknown-node";
    case Errc::Backpressure: return "backpressure";
    case Errc::UnsupportedTier: return "unsupported-tier";
    case Errc::RelayUnreachable: return "relay-unreachable";
    case Errc::UnregisteredIdentity: return "unregistered-identity";
    case Errc::AddressPoolExhausted: return "address-pool-exhausted";
    case Errc::ConfigInvalid: return "config-invalid";
    case Errc::CommitTimeout: return "commit-timeout";
    case Errc::UnauthenticatedAttach: return "unauthenticated-attach";
    case Errc::CodecError: return "codec-error";
    case Errc::IoError: return "io-error";
    }
    return "unknown-error";
}

std::string to_hex(const Bytes& data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
    if (c >= 'A' && c <= 'F') return 10 + (c - 'A');
    return -1;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0)
        fail(Errc::InvalidArgument, "hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            fail(Errc::InvalidArgument, "invalid hex digit");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

bool contains_bytes(const Bytes& haystack, const Bytes& needle) {
    if (needle.empty()) return true;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
}

Bytes concat(const Bytes& a, const Bytes& b) {
    Bytes out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace decentran
