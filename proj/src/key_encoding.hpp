#pragma once

#include <span>
#include <string>

#include "pvanish/partition.hpp"

namespace pvanish::detail {

// Injective byte encoding: parts below 255 take one byte, larger ones a 0xFF
// marker plus eight raw bytes. A zero byte separates sequences.
inline void append_parts(std::string& key, std::span<const Part> parts) {
  for (Part x : parts) {
    if (x > 0 && x < 255) {
      key.push_back(static_cast<char>(x));
    } else {
      key.push_back(static_cast<char>(0xFF));
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((static_cast<std::uint64_t>(x) >> (8 * b)) & 0xFF));
    }
  }
  key.push_back('\0');
}

}  // namespace pvanish::detail
