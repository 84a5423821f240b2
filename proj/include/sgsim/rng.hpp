#pragma once

#include <cstdint>
#include <initializer_list>

namespace sgsim {

// Counter-based deterministic RNG built on the splitmix64 mixer.
//
// All randomness in the engine flows through streams derived from a master
// seed and an index path (experiment tag, drop index, block index, ...).
// Work items pull their own streams by index, so results are independent of
// scheduling and worker count. Not cryptographic.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Derives an independent stream for master + path. Order-sensitive.
  static Rng derive(std::uint64_t master, std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();
  double uniform(double lo, double hi);

  // Unit-mean exponential (inverse CDF).
  double exponential();

  bool bernoulli(double p);

  // Poisson sampling: sequential inversion below mean 10, PTRS above.
  // Valid for mean in [0, ~1e8].
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t state_;
};

// splitmix64 finalizer, exposed for seed-path hashing and tests.
std::uint64_t mix64(std::uint64_t z);

// Experiment stream tags (arbitrary distinct constants).
namespace tag {
inline constexpr std::uint64_t kMedianPositions = 0x11;
inline constexpr std::uint64_t kMedianSamples = 0x12;
inline constexpr std::uint64_t kMgf = 0x21;
inline constexpr std::uint64_t kDensityCampaign = 0x31;
inline constexpr std::uint64_t kNetDrop = 0x41;
inline constexpr std::uint64_t kNetMeasure = 0x42;
inline constexpr std::uint64_t kNetEval = 0x43;
inline constexpr std::uint64_t kGeneric = 0x51;
}  // namespace tag

}  // namespace sgsim
