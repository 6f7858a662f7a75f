#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace biasham {

/// 64-bit FNV-1a of a label.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// splitmix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Published stream derivation: identical (master, label, index) triples give
/// the same value everywhere.
std::uint64_t stream_hash(std::uint64_t master, std::string_view label,
                          std::uint64_t index) noexcept;

/// Portable generator. std::mt19937_64 is fully specified by the standard,
/// the standard distributions are not, so bounded and real draws are done
/// here by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// A named random stream rooted at a master value.
class Seed {
 public:
  explicit Seed(std::uint64_t master, std::string label = "root")
      : master_(master), label_(std::move(label)) {}

  std::uint64_t master() const noexcept { return master_; }
  const std::string& label() const noexcept { return label_; }

  /// Generator for draw stream `index` of this seed.
  Rng rng(std::uint64_t index = 0) const { return Rng(stream_hash(master_, label_, index)); }

  /// Independent sub-stream labelled "<label>/<child label>", whose master
  /// is the stream_hash of this seed's master, that label and index.
  Seed child(std::string_view label, std::uint64_t index = 0) const;

 private:
  std::uint64_t master_;
  std::string label_;
};

}  // namespace biasham
