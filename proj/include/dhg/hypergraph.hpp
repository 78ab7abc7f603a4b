#ifndef DHG_HYPERGRAPH_HPP
#define DHG_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dhg/coalition.hpp"

namespace dhg {

// How connectivity is read off a directed hypergraph.
//   strong: mutual reachability along directed paths, where each hyperedge
//           contributes the arcs tail x head.
//   weak:   direction ignored; a hyperedge links all of tail | head.
enum class Semantics { strong, weak };

// A directional relation between two non-empty player sets.
struct DirectedHyperedge {
  Coalition tail;  // A_e
  Coalition head;  // B_e
  Coalition span() const { return tail | head; }
  friend bool operator==(const DirectedHyperedge&, const DirectedHyperedge&) = default;
};

// Directed hypergraph over players 1..n. Duplicate edges are permitted and
// edge identity is positional: each edge carries a stable id, preserved by
// without_edge() so deletion experiments can report original edge numbers.
// The ground set is {1..n} for graphs built directly and shrinks under
// induced(); component computations partition the ground set.
class DirectedHypergraph {
 public:
  DirectedHypergraph(int n, std::vector<DirectedHyperedge> edges);

  int player_count() const { return n_; }
  Coalition ground() const { return ground_; }
  const std::vector<DirectedHyperedge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const DirectedHyperedge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
  // 1-based original identity of the edge currently at `index`
  int edge_id(int index) const { return ids_.at(static_cast<std::size_t>(index)); }

  DirectedHypergraph without_edge(int index) const;
  DirectedHypergraph induced(Coalition s) const;

  friend bool operator==(const DirectedHypergraph&, const DirectedHypergraph&) = default;

 private:
  DirectedHypergraph(int n, Coalition ground, std::vector<DirectedHyperedge> edges,
                     std::vector<int> ids);
  int n_;
  Coalition ground_;
  std::vector<DirectedHyperedge> edges_;
  std::vector<int> ids_;  // 1-based
};

// Disjoint non-empty blocks covering `ground`, sorted by lowest member.
struct Partition {
  Coalition ground;
  std::vector<Coalition> blocks;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// true iff every block of `finer` is contained in a block of `coarser`
bool refines(const Partition& finer, const Partition& coarser);

// Ordered player pairs (a,b) with a in A_e, b in B_e for some edge e, a != b,
// deduplicated and sorted. Reachability on this digraph coincides with
// reachability along hypergraph paths: a path consumes one tail player and
// one head player per edge, so each hop is exactly one such arc.
std::vector<std::pair<PlayerId, PlayerId>> arc_expansion(const DirectedHypergraph& h);

// true iff a directed path (at least one edge) leads from s to t. s == t is
// rejected; self-connectivity is a convention of the component ops, not a
// path question.
bool exists_path(const DirectedHypergraph& h, PlayerId s, PlayerId t);

// { t : exists_path(s,t) } | {s}
Coalition reachable_set(const DirectedHypergraph& h, PlayerId s);

// Players lying on every path from s to t; that is {s,t} plus every player
// whose removal from the arc expansion disconnects t from s. Empty optional
// when no path exists at all.
std::optional<Coalition> critical_players(const DirectedHypergraph& h, PlayerId s, PlayerId t);

Partition strong_components(const DirectedHypergraph& h, Semantics sem = Semantics::strong);

// strong_components of induced(s), i.e. using only edges fully inside s;
// partitions s.
Partition components_of_subset(const DirectedHypergraph& h, Coalition s, Semantics sem);

// true iff deleting the edge strictly refines the component partition
bool is_bridge(const DirectedHypergraph& h, int edge_index, Semantics sem);

// Repeated component queries against one hypergraph, allocation-free per
// call. Precomputes per-edge span masks; blocks_of(S) appends the component
// blocks of S (edges fully inside S only) to `out` in ascending order of
// lowest member. This is the kernel behind components_of_subset and the
// restricted-game cache build.
class ComponentSolver {
 public:
  ComponentSolver(const DirectedHypergraph& h, Semantics sem);
  void blocks_of(std::uint64_t s, std::vector<std::uint64_t>& out) const;
  int player_count() const { return n_; }

 private:
  int n_;
  Semantics sem_;
  struct EdgeMasks {
    std::uint64_t tail, head, span;
  };
  std::vector<EdgeMasks> edges_;
};

}  // namespace dhg

#endif  // DHG_HYPERGRAPH_HPP
