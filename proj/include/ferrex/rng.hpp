#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ferrex {

// splitmix64 finalizer; used both for hashing and for deriving independent
// rng substreams from (seed, stream index) so parallel and serial execution
// see the same draws.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix64(seed, stream));
}

// FNV-1a, for stable content hashes (event ids, manifest checksums).
constexpr std::uint64_t fnv1a(std::string_view data,
                              std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ferrex
