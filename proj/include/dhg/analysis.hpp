#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dhg/rng.hpp"
#include "dhg/values.hpp"

namespace dhg {

// One structured counterexample. Fields are present as the kind requires:
//   component_efficiency: coalition, lhs = payoff sum, rhs = base worth
//   fairness:             edge, player (tail), player_other (head),
//                         lhs = tail delta, rhs = head delta
//   stability / safety:   edge, player, lhs = payoff with the edge,
//                         rhs = payoff without it
//   bridge_not_safe:      edge, player, lhs/rhs as for safety
//   safe_not_bridge:      edge, lhs = block count with the edge,
//                         rhs = block count without it (equal partitions)
// `edge` is the 1-based original edge id. `relation` is the comparison that
// was found violated ("!=" means lhs and rhs should have been equal; "<"
// means lhs should have been >= rhs).
struct Witness {
  std::string kind;
  std::optional<int> edge;
  std::optional<PlayerId> player;
  std::optional<PlayerId> player_other;
  std::optional<Coalition> coalition;
  Rational lhs;
  Rational rhs;
  std::string relation;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Per-edge verdict pair from the bridge/safety comparison.
struct EdgeAgreement {
  int edge = 0;  // 1-based original edge id
  bool bridge = false;
  bool safe = false;

  friend bool operator==(const EdgeAgreement&, const EdgeAgreement&) = default;
};

// Outcome of one property check over one instance. A fails verdict always
// carries at least one witness; witnesses appear in lexicographic order of
// (edge id, player, coalition mask). The fingerprint is filled by the layer
// that owns the serialized instance (CLI or test harness).
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<int> edge;  // set for per-edge properties (stability, safety)
  std::vector<Witness> witnesses;
  std::vector<EdgeAgreement> agreement;  // only for the theorem comparison
  std::string fingerprint;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

// For each block T of the component partition of the full player set,
// compares the players' total payoff with the base worth of T. Reports every
// violating block.
PropertyReport check_component_efficiency(const DirectedHypergraph& h, const TUGame& g,
                                          Semantics sem);

// For every edge e, every tail player i and head player j, compares the payoff
// change of i and j caused by deleting e. Reports every violating triple.
PropertyReport check_fairness(const DirectedHypergraph& h, const TUGame& g, Semantics sem);

// Does any player of edge `edge_index` (0-based position) gain from its
// deletion? Witnesses are the gaining incident players.
PropertyReport check_stability(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                               int edge_index);

// Same comparison over all players, not just the edge's own.
PropertyReport check_safety(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                            int edge_index);

// Thrown by verify_bridge_safety_theorem when the game is not convex; carries
// the violating coalition pair.
struct NotConvexError {
  GameCheckWitness witness;
};

// For every edge, evaluates both sides of the bridge/safety equivalence and
// reports agreement. Requires a convex game (throws NotConvexError otherwise).
// Disagreeing edges produce witnesses: a gaining player for a bridge that is
// not safe, the unchanged partition for a safe non-bridge.
PropertyReport verify_bridge_safety_theorem(const DirectedHypergraph& h, const TUGame& g,
                                            Semantics sem);

// Re-evaluates a witness against the instance from scratch. True iff the
// recorded violation still holds exactly (values and relation both match).
bool reverify_witness(const Witness& w, const DirectedHypergraph& h, const TUGame& g,
                      Semantics sem);

// Deterministic random hypergraph: edgeCount edges, tail and head sizes
// uniform in [1, tailMax] and [1, headMax], members uniform without
// replacement.
DirectedHypergraph random_hypergraph(int n, int edge_count, int tail_max, int head_max,
                                     std::uint64_t seed);
DirectedHypergraph random_hypergraph(int n, int edge_count, int tail_max, int head_max,
                                     std::mt19937_64& gen);

}  // namespace dhg
