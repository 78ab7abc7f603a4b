#include "dhg/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace dhg {

namespace {

void validate_edge(const DirectedHyperedge& e, Coalition ground, int n) {
  if (e.tail.empty()) throw std::invalid_argument("hyperedge tail must be non-empty");
  if (e.head.empty()) throw std::invalid_argument("hyperedge head must be non-empty");
  if (!e.span().subset_of(Coalition::full(n)) || !e.span().subset_of(ground))
    throw std::invalid_argument("hyperedge players out of range");
}

void check_player(const DirectedHypergraph& h, PlayerId p) {
  if (p < 1 || p > h.player_count()) throw std::out_of_range("player index out of range");
}

// Forward reach of `start` (a mask) over out-neighbour masks, restricted to
// `allowed`. Includes the start players.
std::uint64_t reach(const std::array<std::uint64_t, kMaxPlayers>& out, std::uint64_t start,
                    std::uint64_t allowed) {
  std::uint64_t seen = start & allowed;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= out[static_cast<std::size_t>(std::countr_zero(m))];
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

DirectedHypergraph::DirectedHypergraph(int n, std::vector<DirectedHyperedge> edges)
    : n_(n), ground_(Coalition::full(n)), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count must be in 1..64");
  for (const auto& e : edges_) validate_edge(e, ground_, n_);
  ids_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) ids_[i] = static_cast<int>(i) + 1;
}

DirectedHypergraph::DirectedHypergraph(int n, Coalition ground,
                                       std::vector<DirectedHyperedge> edges, std::vector<int> ids)
    : n_(n), ground_(ground), edges_(std::move(edges)), ids_(std::move(ids)) {}

DirectedHypergraph DirectedHypergraph::without_edge(int index) const {
  if (index < 0 || index >= edge_count()) throw std::out_of_range("edge index out of range");
  auto edges = edges_;
  auto ids = ids_;
  edges.erase(edges.begin() + index);
  ids.erase(ids.begin() + index);
  return DirectedHypergraph(n_, ground_, std::move(edges), std::move(ids));
}

DirectedHypergraph DirectedHypergraph::induced(Coalition s) const {
  if (!s.subset_of(Coalition::full(n_))) throw std::invalid_argument("subset out of range");
  const Coalition new_ground = s & ground_;
  std::vector<DirectedHyperedge> edges;
  std::vector<int> ids;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].span().subset_of(new_ground)) {
      edges.push_back(edges_[i]);
      ids.push_back(ids_[i]);
    }
  }
  return DirectedHypergraph(n_, new_ground, std::move(edges), std::move(ids));
}

bool refines(const Partition& finer, const Partition& coarser) {
  if (finer.ground != coarser.ground) return false;
  for (const Coalition& b : finer.blocks) {
    bool inside = false;
    for (const Coalition& c : coarser.blocks)
      if (b.subset_of(c)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

std::vector<std::pair<PlayerId, PlayerId>> arc_expansion(const DirectedHypergraph& h) {
  std::vector<std::pair<PlayerId, PlayerId>> arcs;
  for (const auto& e : h.edges())
    for (PlayerId a : e.tail.players())
      for (PlayerId b : e.head.players())
        if (a != b) arcs.emplace_back(a, b);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

namespace {

// out[v-1] = arc successors of v, over arcs inside `allowed`
void build_out_masks(const DirectedHypergraph& h, std::uint64_t allowed,
                     std::array<std::uint64_t, kMaxPlayers>& out) {
  out.fill(0);
  for (const auto& e : h.edges()) {
    const std::uint64_t tails = e.tail.mask() & allowed;
    const std::uint64_t heads = e.head.mask() & allowed;
    for (std::uint64_t m = tails; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      out[static_cast<std::size_t>(v)] |= heads & ~(std::uint64_t{1} << v);
    }
  }
}

}  // namespace

bool exists_path(const DirectedHypergraph& h, PlayerId s, PlayerId t) {
  check_player(h, s);
  check_player(h, t);
  if (s == t) throw std::invalid_argument("exists_path requires s != t");
  std::array<std::uint64_t, kMaxPlayers> out;
  build_out_masks(h, h.ground().mask(), out);
  const std::uint64_t from = reach(out, Coalition::single(s).mask(), h.ground().mask());
  return (from & Coalition::single(t).mask()) != 0;
}

Coalition reachable_set(const DirectedHypergraph& h, PlayerId s) {
  check_player(h, s);
  std::array<std::uint64_t, kMaxPlayers> out;
  build_out_masks(h, h.ground().mask(), out);
  const std::uint64_t allowed = h.ground().mask() | Coalition::single(s).mask();
  return Coalition::from_mask(reach(out, Coalition::single(s).mask(), allowed));
}

std::optional<Coalition> critical_players(const DirectedHypergraph& h, PlayerId s, PlayerId t) {
  check_player(h, s);
  check_player(h, t);
  if (s == t) throw std::invalid_argument("critical_players requires s != t");
  std::array<std::uint64_t, kMaxPlayers> out;
  build_out_masks(h, h.ground().mask(), out);
  const std::uint64_t sm = Coalition::single(s).mask();
  const std::uint64_t tm = Coalition::single(t).mask();
  if ((reach(out, sm, h.ground().mask()) & tm) == 0) return std::nullopt;
  Coalition critical = Coalition::single(s) | Coalition::single(t);
  const std::uint64_t rest = h.ground().mask() & ~critical.mask();
  for (std::uint64_t m = rest; m; m &= m - 1) {
    const std::uint64_t vbit = m & ~(m - 1);
    // drop v from the digraph; s->t dead means v lies on every path
    if ((reach(out, sm, h.ground().mask() & ~vbit) & tm) == 0)
      critical = critical | Coalition::from_mask(vbit);
  }
  return critical;
}

ComponentSolver::ComponentSolver(const DirectedHypergraph& h, Semantics sem)
    : n_(h.player_count()), sem_(sem) {
  edges_.reserve(h.edges().size());
  const std::uint64_t g = h.ground().mask();
  for (const auto& e : h.edges())
    edges_.push_back({e.tail.mask() & g, e.head.mask() & g, e.span().mask() & g});
}

void ComponentSolver::blocks_of(std::uint64_t s, std::vector<std::uint64_t>& out) const {
  std::array<std::uint64_t, kMaxPlayers> adj;
  adj.fill(0);
  if (sem_ == Semantics::strong) {
    std::array<std::uint64_t, kMaxPlayers> radj;
    radj.fill(0);
    for (const auto& e : edges_) {
      if ((e.span & ~s) != 0) continue;  // edge not fully inside s
      for (std::uint64_t m = e.tail; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        adj[static_cast<std::size_t>(v)] |= e.head & ~(std::uint64_t{1} << v);
      }
      for (std::uint64_t m = e.head; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        radj[static_cast<std::size_t>(v)] |= e.tail & ~(std::uint64_t{1} << v);
      }
    }
    std::uint64_t todo = s;
    while (todo) {
      const std::uint64_t vbit = todo & ~(todo - 1);
      const std::uint64_t fwd = reach(adj, vbit, s);
      const std::uint64_t bwd = reach(radj, vbit, s);
      const std::uint64_t block = fwd & bwd;
      out.push_back(block);
      todo &= ~block;
    }
  } else {
    for (const auto& e : edges_) {
      if ((e.span & ~s) != 0) continue;
      for (std::uint64_t m = e.span; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        adj[static_cast<std::size_t>(v)] |= e.span & ~(std::uint64_t{1} << v);
      }
    }
    std::uint64_t todo = s;
    while (todo) {
      const std::uint64_t vbit = todo & ~(todo - 1);
      const std::uint64_t block = reach(adj, vbit, s);
      out.push_back(block);
      todo &= ~block;
    }
  }
}

namespace {

Partition make_partition(Coalition ground, const std::vector<std::uint64_t>& raw) {
  Partition p;
  p.ground = ground;
  p.blocks.reserve(raw.size());
  for (std::uint64_t b : raw) p.blocks.push_back(Coalition::from_mask(b));
#ifndef NDEBUG
  std::uint64_t seen = 0;
  for (const Coalition& b : p.blocks) {
    assert(!b.empty());
    assert((seen & b.mask()) == 0);
    seen |= b.mask();
  }
  assert(seen == ground.mask());
#endif
  return p;
}

}  // namespace

Partition strong_components(const DirectedHypergraph& h, Semantics sem) {
  ComponentSolver solver(h, sem);
  std::vector<std::uint64_t> raw;
  solver.blocks_of(h.ground().mask(), raw);
  return make_partition(h.ground(), raw);
}

Partition components_of_subset(const DirectedHypergraph& h, Coalition s, Semantics sem) {
  if (!s.subset_of(Coalition::full(h.player_count())))
    throw std::invalid_argument("subset out of range");
  ComponentSolver solver(h, sem);
  std::vector<std::uint64_t> raw;
  solver.blocks_of(s.mask() & h.ground().mask(), raw);
  return make_partition(s & h.ground(), raw);
}

bool is_bridge(const DirectedHypergraph& h, int edge_index, Semantics sem) {
  if (edge_index < 0 || edge_index >= h.edge_count())
    throw std::out_of_range("edge index out of range");
  const Partition before = strong_components(h, sem);
  const Partition after = strong_components(h.without_edge(edge_index), sem);
  assert(refines(after, before));
  return after != before;
}

}  // namespace dhg
