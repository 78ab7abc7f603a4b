#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately use different algorithms: permutation averages instead
// of the subset formula, Floyd-Warshall closure instead of frontier search,
// explicit simple-path enumeration instead of deletion probing. Slow is fine.

#include <optional>
#include <vector>

#include "dhg/io.hpp"

namespace oracle {

// Shapley value as the plain average of marginal vectors over all n!
// orderings. n <= 8.
dhg::Allocation shapley_permutation(const dhg::TUGame& g);

// Component blocks of s, via an explicit adjacency matrix and transitive
// closure; sorted by smallest member.
std::vector<std::vector<int>> components(const dhg::DirectedHypergraph& h, dhg::Coalition s,
                                         dhg::Semantics sem);

// All simple paths from s to t as player sets (each includes s and t),
// found by depth-first enumeration over the arc expansion.
std::vector<std::vector<int>> simple_paths(const dhg::DirectedHypergraph& h, int s, int t);

bool exists_path(const dhg::DirectedHypergraph& h, int s, int t);

// Players shared by every simple path from s to t; empty optional when no
// path exists.
std::optional<std::vector<int>> critical_players(const dhg::DirectedHypergraph& h, int s, int t);

// Restricted worth computed through the component oracle.
dhg::Rational restricted_worth(const dhg::DirectedHypergraph& h, const dhg::TUGame& g,
                               dhg::Semantics sem, dhg::Coalition s);

// Myerson value as the permutation average over oracle restricted worths.
// n <= 8.
dhg::Allocation myerson_permutation(const dhg::DirectedHypergraph& h, const dhg::TUGame& g,
                                    dhg::Semantics sem);

}  // namespace oracle
