#pragma once

#include <cstdint>
#include <vector>

#include "dhg/restriction.hpp"

namespace dhg {

// Exact per-player payoff vector; values[i-1] belongs to player i.
struct Allocation {
  std::vector<Rational> values;

  Rational total() const {
    Rational r;
    for (const Rational& x : values) r += x;
    return r;
  }
  bool operator==(const Allocation&) const = default;
};

// Shapley value from a dense worth table indexed by coalition mask.
Allocation shapley_from_table(int n, const std::vector<Rational>& worth);

// Exact Shapley value; materializes the game, so n <= 16.
Allocation shapley(const TUGame& g);

// Shapley value of the restricted game (requires a built cache).
Allocation shapley(const RestrictedGame& rg);

// Shapley value of the hypergraph-restricted game: builds the restricted
// worth table and applies the Shapley formula to it. n <= 16.
Allocation myerson(const DirectedHypergraph& h, const TUGame& g, Semantics sem);

// Sampled approximation via random player orderings. Marginals accumulate
// exactly; the single rounding happens in the final division per player.
struct McEstimate {
  std::vector<double> values;  // values[i-1] belongs to player i
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

McEstimate shapley_monte_carlo(const TUGame& g, std::uint64_t samples, std::uint64_t seed);
McEstimate myerson_monte_carlo(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace dhg
