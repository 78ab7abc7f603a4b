#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhg/analysis.hpp"

namespace dhg {

// One problem instance: players and edges, the base game, and which
// connectivity reading applies.
struct Instance {
  DirectedHypergraph hypergraph;
  TUGame game;
  Semantics semantics = Semantics::strong;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Raised on malformed documents; the message starts with a path into the
// document, e.g. "$.edges[0].tail: must not be empty".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Document format (all rationals accepted as integers or "p/q" strings):
//   {
//     "players": 5,
//     "edges": [{"tail": [1], "head": [2]}, ...],
//     "game": {"type": "cardinality_power", "k": 1},
//     "semantics": "strong"            // optional, default strong
//   }
// Game types: "table" (worth: 2^n entries, index = coalition mask),
// "cardinality_power" (k), "additive" (weights), "unanimity" (coalition),
// "random_supermodular" (terms, seed, eps).
Instance parse_instance(const std::string& text);

// Canonical serialization: sorted keys, rationals as "p/q" strings, two-space
// indent, trailing newline. parse_instance(emit_instance(x)) == x.
std::string emit_instance(const Instance& inst);

// FNV-1a 64-bit hash of the canonical serialization, 16 hex digits.
std::string instance_fingerprint(const Instance& inst);

// Canonical report/allocation serializations used by the CLI and the test
// harness. `semantics` records the reading the numbers were computed under.
std::string emit_allocation(const Allocation& a, const std::string& method,
                            const Instance& inst, bool with_semantics);
std::string emit_report(const PropertyReport& r, const Instance& inst);
std::string emit_estimate(const McEstimate& e, const Instance& inst);

// Full command-line interface against explicit streams. `args` excludes the
// program name. Returns the process exit code: 0 success, 1 failed
// verification verdict, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dhg
