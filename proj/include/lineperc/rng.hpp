#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace lineperc {

// Counter-based random bits. Every Bernoulli draw of the model is keyed by
// (master seed, replica, axis, absolute plane coordinates), so a draw can be
// recomputed at any time from any thread and nested or translated windows
// stay consistent without storing anything.

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

inline std::uint64_t hash_feed(std::uint64_t h, std::uint64_t word) {
  return mix64(h ^ (word + kGolden));
}

struct SeedSpec {
  std::uint64_t master = 0;
  std::uint64_t replica = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Maps a 64-bit hash to [0,1) with 53 random bits.
constexpr double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline std::uint64_t counter_hash(const SeedSpec& seed, std::uint64_t axis,
                                  std::span<const std::int64_t> coords) {
  std::uint64_t h = mix64(seed.master ^ kGolden);
  h = hash_feed(h, seed.replica);
  h = hash_feed(h, axis);
  for (std::int64_t c : coords) h = hash_feed(h, static_cast<std::uint64_t>(c));
  return h;
}

// Uniform draw attached to one site of the hyperplane field with that axis.
inline double plane_uniform(const SeedSpec& seed, int axis,
                            std::span<const std::int64_t> coords) {
  return to_unit(counter_hash(seed, static_cast<std::uint64_t>(axis), coords));
}

inline bool plane_open(const SeedSpec& seed, int axis,
                       std::span<const std::int64_t> coords, double p) {
  return plane_uniform(seed, axis, coords) < p;
}

// Sequential splitmix64 stream, used where instance generation needs a plain
// portable RNG (fixtures, random fields in property suites).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(mix64(seed ^ kGolden)) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  double next_unit() { return to_unit(next_u64()); }

  bool next_bernoulli(double p) { return next_unit() < p; }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace lineperc
