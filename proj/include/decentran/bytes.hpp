#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace decentran {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& data);
Bytes from_hex(std::string_view hex);

inline Bytes str_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

// Contiguous byte-substring search, used by the privacy scans.
bool contains_bytes(const Bytes& haystack, const Bytes& needle);

Bytes concat(const Bytes& a, const Bytes& b);

} // namespace decentran
