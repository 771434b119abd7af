#pragma once

#include <cstdint>

namespace had {

/// Splittable counter-based random stream.
///
/// Every draw is `mix(key + counter * kGamma)` where `mix` is the SplitMix64
/// finalizer, so a stream is fully described by (key, counter) and the output
/// is identical on every platform. `split(tag)` derives an independent child
/// stream whose key depends only on the parent key and the tag, never on how
/// many values the parent has produced. All randomness in the library flows
/// from one user seed through `split` chains.
class SeedStream {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SeedStream(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    ++counter_;
    return mix(key_ + counter_ * kGamma);
  }

  /// Uniform in [0, bound); bound > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  SeedStream split(std::uint64_t tag) const {
    SeedStream child(0);
    child.key_ = mix(key_ ^ mix(tag + 0x3c6ef372fe94f82bULL));
    return child;
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Fixed child-stream tags so that separate purposes never share draws.
namespace stream {
inline constexpr std::uint64_t kPrime = 1;
inline constexpr std::uint64_t kTrials = 2;
inline constexpr std::uint64_t kDims = 3;
inline constexpr std::uint64_t kHedge = 4;
inline constexpr std::uint64_t kTwist = 5;
inline constexpr std::uint64_t kBinomial = 6;
inline constexpr std::uint64_t kSample = 7;
inline constexpr std::uint64_t kCheck = 8;
}  // namespace stream

}  // namespace had
