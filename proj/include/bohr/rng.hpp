#pragma once

#include <cstdint>
#include <random>

namespace bohr {

/// Counter-style seed derivation: the stream for (master, stream, index) is
/// independent of the order in which samples are drawn, so parallel sweeps
/// reproduce serial ones exactly.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// mt19937_64 keyed by a 64-bit seed, with a portable mapping to [0, 1).
/// (std::uniform_real_distribution is implementation-defined, so it is not used.)
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed);

  double uniform();  // [0, 1), 53 random bits
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bohr
