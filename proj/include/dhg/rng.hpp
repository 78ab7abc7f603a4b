#ifndef DHG_RNG_HPP
#define DHG_RNG_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace dhg {

// All randomized code in this library draws from std::mt19937_64 (the 64-bit
// Mersenne Twister, fully specified by the C++ standard) through the two
// helpers below. Distributions from <random> are never used because their
// output is implementation-defined; these helpers make every seeded result
// reproducible across compilers and platforms. This generator choice is part
// of the output contract and must not change.

// Uniform integer in [0, bound) by rejection sampling (unbiased).
inline std::uint64_t bounded_uint64(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return r % bound;
}

// Fisher-Yates shuffle of 1..n written into perm.
inline void random_permutation(std::mt19937_64& gen, int n, std::vector<int>& perm) {
  perm.resize(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(bounded_uint64(gen, static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
}

}  // namespace dhg

#endif  // DHG_RNG_HPP
