#pragma once

#include <cstdint>
#include <string_view>

namespace orr {

// 64-bit FNV-1a; used for graph ids and orientation fingerprints.
class Fnv1a {
 public:
  void add_bytes(const void* data, std::size_t len) noexcept {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(std::uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) {
      unsigned char b = static_cast<unsigned char>(v >> (8 * i));
      add_bytes(&b, 1);
    }
  }
  void add(std::string_view s) noexcept {
    add(s.size());
    add_bytes(s.data(), s.size());
  }
  std::uint64_t value() const noexcept { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace orr
