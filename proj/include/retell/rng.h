#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace retell {

// Deterministic random stream. std::mt19937_64 is fully specified by the
// standard; the distributions are not, so the conversions live here and the
// output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, keys...), e.g. one per sentence and param.
  static Rng derive(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

  // Uniform in [0, 1).
  double uniform();

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace retell
