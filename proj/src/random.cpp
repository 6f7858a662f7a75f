#include "biasham/random.hpp"

#include "biasham/error.hpp"

namespace biasham {

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_hash(std::uint64_t master, std::string_view label,
                          std::uint64_t index) noexcept {
  return mix64(mix64(mix64(master) ^ fnv1a64(label)) ^ index);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::invalid_argument, "empty range");
  // Reject the low sliver so every residue class is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Seed Seed::child(std::string_view label, std::uint64_t index) const {
  std::string path = label_ + "/" + std::string(label);
  const std::uint64_t derived = stream_hash(master_, path, index);
  return Seed(derived, std::move(path));
}

}  // namespace biasham
