#pragma once

#include <optional>
#include <vector>

#include "dhg/game.hpp"
#include "dhg/hypergraph.hpp"

namespace dhg {

// A base game played through a directed hypergraph: the worth of a coalition
// is the sum of base worths over the coalition's connectedness blocks. Under
// strong semantics the blocks are the mutual-reachability classes of the
// induced subgraph; under weak semantics direction is ignored.
class RestrictedGame {
 public:
  RestrictedGame(DirectedHypergraph h, TUGame base, Semantics sem);

  const DirectedHypergraph& hypergraph() const { return h_; }
  const TUGame& base() const { return base_; }
  Semantics semantics() const { return sem_; }
  int player_count() const { return base_.player_count(); }

  // Worth of S in the restricted game; computes blocks on the fly.
  Rational restricted_worth(Coalition s) const;

  // Precomputes the full 2^n worth table (n <= 16). Idempotent.
  void build_cache();
  bool cache_built() const { return !cache_.empty(); }
  // Dense table indexed by coalition mask; throws if the cache is not built.
  const std::vector<Rational>& cache() const;

 private:
  DirectedHypergraph h_;
  TUGame base_;
  Semantics sem_;
  ComponentSolver solver_;
  std::vector<Rational> cache_;
};

// Outcome of testing whether restricted worths split across the blocks of the
// whole player set: for every coalition S, is the restricted worth of S the
// sum of restricted worths of S intersected with each block of N?
struct DecompositionResult {
  bool holds = true;
  std::optional<Coalition> failing;  // lowest-mask failing S, if any
  Rational lhs;                      // restricted worth of the failing S
  Rational rhs;                      // sum over the intersections
};

// Requires a built cache.
DecompositionResult decomposition_check(const RestrictedGame& rg);

}  // namespace dhg
