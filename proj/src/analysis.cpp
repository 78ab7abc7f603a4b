#include "dhg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dhg {

namespace {

void check_edge_index(const DirectedHypergraph& h, int edge_index) {
  if (edge_index < 0 || edge_index >= h.edge_count())
    throw std::out_of_range("edge index out of range");
}

// Payoff comparison for one edge deletion: for each player in `who`, a
// witness if the payoff without the edge exceeds the payoff with it.
void gain_witnesses(const DirectedHypergraph& h, int edge_index, const Allocation& with,
                    const Allocation& without, Coalition who, const std::string& kind,
                    std::vector<Witness>& out) {
  for (PlayerId k : who.players()) {
    const Rational& lhs = with.values[static_cast<std::size_t>(k - 1)];
    const Rational& rhs = without.values[static_cast<std::size_t>(k - 1)];
    if (lhs < rhs) {
      Witness w;
      w.kind = kind;
      w.edge = h.edge_id(edge_index);
      w.player = k;
      w.lhs = lhs;
      w.rhs = rhs;
      w.relation = "<";
      out.push_back(std::move(w));
    }
  }
}

}  // namespace

PropertyReport check_component_efficiency(const DirectedHypergraph& h, const TUGame& g,
                                          Semantics sem) {
  PropertyReport report;
  report.property = "component_efficiency";
  const Allocation mu = myerson(h, g, sem);
  const Partition blocks = strong_components(h, sem);
  for (const Coalition& t : blocks.blocks) {
    Rational sum;
    for (PlayerId i : t.players()) sum += mu.values[static_cast<std::size_t>(i - 1)];
    Rational worth = g.worth(t);
    if (sum != worth) {
      Witness w;
      w.kind = "component_efficiency";
      w.coalition = t;
      w.lhs = std::move(sum);
      w.rhs = std::move(worth);
      w.relation = "!=";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

PropertyReport check_fairness(const DirectedHypergraph& h, const TUGame& g, Semantics sem) {
  PropertyReport report;
  report.property = "fairness";
  const Allocation mu = myerson(h, g, sem);
  for (int e = 0; e < h.edge_count(); ++e) {
    const Allocation del = myerson(h.without_edge(e), g, sem);
    for (PlayerId i : h.edge(e).tail.players()) {
      Rational di = mu.values[static_cast<std::size_t>(i - 1)] -
                    del.values[static_cast<std::size_t>(i - 1)];
      for (PlayerId j : h.edge(e).head.players()) {
        Rational dj = mu.values[static_cast<std::size_t>(j - 1)] -
                      del.values[static_cast<std::size_t>(j - 1)];
        if (di != dj) {
          Witness w;
          w.kind = "fairness";
          w.edge = h.edge_id(e);
          w.player = i;
          w.player_other = j;
          w.lhs = di;
          w.rhs = std::move(dj);
          w.relation = "!=";
          report.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

PropertyReport check_stability(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                               int edge_index) {
  check_edge_index(h, edge_index);
  PropertyReport report;
  report.property = "stability";
  report.edge = h.edge_id(edge_index);
  const Allocation with = myerson(h, g, sem);
  const Allocation without = myerson(h.without_edge(edge_index), g, sem);
  gain_witnesses(h, edge_index, with, without, h.edge(edge_index).span(), "stability",
                 report.witnesses);
  report.holds = report.witnesses.empty();
  return report;
}

PropertyReport check_safety(const DirectedHypergraph& h, const TUGame& g, Semantics sem,
                            int edge_index) {
  check_edge_index(h, edge_index);
  PropertyReport report;
  report.property = "safety";
  report.edge = h.edge_id(edge_index);
  const Allocation with = myerson(h, g, sem);
  const Allocation without = myerson(h.without_edge(edge_index), g, sem);
  gain_witnesses(h, edge_index, with, without, h.ground(), "safety", report.witnesses);
  report.holds = report.witnesses.empty();
  return report;
}

PropertyReport verify_bridge_safety_theorem(const DirectedHypergraph& h, const TUGame& g,
                                            Semantics sem) {
  if (GameCheckResult conv = is_convex(g); !conv.ok) throw NotConvexError{*conv.witness};

  PropertyReport report;
  report.property = "bridge_safety_theorem";
  const Allocation with = myerson(h, g, sem);
  const Partition before = strong_components(h, sem);
  for (int e = 0; e < h.edge_count(); ++e) {
    const DirectedHypergraph deleted = h.without_edge(e);
    const Allocation without = myerson(deleted, g, sem);

    std::vector<Witness> gains;
    gain_witnesses(h, e, with, without, h.ground(), "bridge_not_safe", gains);
    const bool safe = gains.empty();
    const bool bridge = is_bridge(h, e, sem);
    report.agreement.push_back({h.edge_id(e), bridge, safe});

    if (bridge && !safe) {
      for (Witness& w : gains) report.witnesses.push_back(std::move(w));
    } else if (safe && !bridge) {
      Witness w;
      w.kind = "safe_not_bridge";
      w.edge = h.edge_id(e);
      w.lhs = Rational(static_cast<long>(before.blocks.size()));
      w.rhs = Rational(static_cast<long>(strong_components(deleted, sem).blocks.size()));
      w.relation = "==";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

bool reverify_witness(const Witness& w, const DirectedHypergraph& h, const TUGame& g,
                      Semantics sem) {
  // map a recorded 1-based edge id back to its current position
  const auto edge_position = [&](int id) -> std::optional<int> {
    for (int e = 0; e < h.edge_count(); ++e)
      if (h.edge_id(e) == id) return e;
    return std::nullopt;
  };

  if (w.kind == "component_efficiency") {
    if (!w.coalition) return false;
    const Allocation mu = myerson(h, g, sem);
    const Partition blocks = strong_components(h, sem);
    if (std::find(blocks.blocks.begin(), blocks.blocks.end(), *w.coalition) ==
        blocks.blocks.end())
      return false;
    Rational sum;
    for (PlayerId i : w.coalition->players()) sum += mu.values[static_cast<std::size_t>(i - 1)];
    return sum == w.lhs && g.worth(*w.coalition) == w.rhs && w.lhs != w.rhs;
  }

  if (w.kind == "fairness") {
    if (!w.edge || !w.player || !w.player_other) return false;
    const auto e = edge_position(*w.edge);
    if (!e) return false;
    if (!h.edge(*e).tail.contains(*w.player) || !h.edge(*e).head.contains(*w.player_other))
      return false;
    const Allocation mu = myerson(h, g, sem);
    const Allocation del = myerson(h.without_edge(*e), g, sem);
    const auto delta = [&](PlayerId p) {
      return mu.values[static_cast<std::size_t>(p - 1)] -
             del.values[static_cast<std::size_t>(p - 1)];
    };
    return delta(*w.player) == w.lhs && delta(*w.player_other) == w.rhs && w.lhs != w.rhs;
  }

  if (w.kind == "stability" || w.kind == "safety" || w.kind == "bridge_not_safe") {
    if (!w.edge || !w.player) return false;
    const auto e = edge_position(*w.edge);
    if (!e) return false;
    if (w.kind == "stability" && !h.edge(*e).span().contains(*w.player)) return false;
    if (w.kind == "bridge_not_safe" && !is_bridge(h, *e, sem)) return false;
    const Allocation mu = myerson(h, g, sem);
    const Allocation del = myerson(h.without_edge(*e), g, sem);
    const std::size_t k = static_cast<std::size_t>(*w.player - 1);
    return mu.values[k] == w.lhs && del.values[k] == w.rhs && w.lhs < w.rhs;
  }

  if (w.kind == "safe_not_bridge") {
    if (!w.edge) return false;
    const auto e = edge_position(*w.edge);
    if (!e) return false;
    if (is_bridge(h, *e, sem)) return false;
    const Allocation mu = myerson(h, g, sem);
    const Allocation del = myerson(h.without_edge(*e), g, sem);
    for (std::size_t k = 0; k < mu.values.size(); ++k)
      if (mu.values[k] < del.values[k]) return false;  // not safe after all
    const auto blocks = [&](const DirectedHypergraph& hh) {
      return Rational(static_cast<long>(strong_components(hh, sem).blocks.size()));
    };
    return blocks(h) == w.lhs && blocks(h.without_edge(*e)) == w.rhs && w.lhs == w.rhs;
  }

  return false;
}

DirectedHypergraph random_hypergraph(int n, int edge_count, int tail_max, int head_max,
                                     std::mt19937_64& gen) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("player count must be in 1..64");
  if (edge_count < 0) throw std::invalid_argument("edge count must be >= 0");
  if (tail_max < 1 || tail_max > n || head_max < 1 || head_max > n)
    throw std::invalid_argument("side size bounds must be in 1..n");

  const auto random_side = [&](int max_size) {
    const int size = 1 + static_cast<int>(bounded_uint64(gen, static_cast<std::uint64_t>(max_size)));
    std::uint64_t mask = 0;
    while (std::popcount(mask) < size) {
      const int p = static_cast<int>(bounded_uint64(gen, static_cast<std::uint64_t>(n)));
      mask |= std::uint64_t{1} << p;
    }
    return Coalition::from_mask(mask);
  };

  std::vector<DirectedHyperedge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count));
  for (int e = 0; e < edge_count; ++e) {
    Coalition tail = random_side(tail_max);
    Coalition head = random_side(head_max);
    edges.push_back({tail, head});
  }
  return DirectedHypergraph(n, std::move(edges));
}

DirectedHypergraph random_hypergraph(int n, int edge_count, int tail_max, int head_max,
                                     std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_hypergraph(n, edge_count, tail_max, head_max, gen);
}

}  // namespace dhg
