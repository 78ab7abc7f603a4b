#include <doctest.h>

#include <string>

#include "dhg/io.hpp"

using namespace dhg;

namespace {

const char* kExampleDoc = R"({
  "players": 5,
  "edges": [
    {"tail": [1], "head": [2]},
    {"tail": [2], "head": [1]},
    {"tail": [2, 3], "head": [4]},
    {"tail": [3, 4, 5], "head": [1]}
  ],
  "game": {"type": "cardinality_power", "k": 1}
})";

void check_rejects(const std::string& text, const std::string& expected_prefix) {
  CAPTURE(text);
  CAPTURE(expected_prefix);
  try {
    parse_instance(text);
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.substr(0, expected_prefix.size()) == expected_prefix);
  }
}

}  // namespace

TEST_CASE("the example document parses") {
  const Instance inst = parse_instance(kExampleDoc);
  CHECK(inst.hypergraph.player_count() == 5);
  REQUIRE(inst.hypergraph.edge_count() == 4);
  CHECK(inst.hypergraph.edge(2).tail == Coalition::of({2, 3}));
  CHECK(inst.hypergraph.edge(3).head == Coalition::of({1}));
  CHECK(inst.semantics == Semantics::strong);  // default
  CHECK(inst.game.worth(Coalition::of({2, 4})) == Rational(2));
}

TEST_CASE("semantics field and all game types parse") {
  const Instance weak = parse_instance(
      R"({"players": 2, "edges": [], "game": {"type": "additive", "weights": [1, "1/2"]},
          "semantics": "weak"})");
  CHECK(weak.semantics == Semantics::weak);
  CHECK(weak.game.worth(Coalition::of({2})) == Rational(1, 2));

  const Instance table = parse_instance(
      R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [0, 1, 1, "5/2"]}})");
  CHECK(table.game.worth(Coalition::full(2)) == Rational(5, 2));

  const Instance unan = parse_instance(
      R"({"players": 3, "edges": [], "game": {"type": "unanimity", "coalition": [1, 3]}})");
  CHECK(unan.game.worth(Coalition::of({1, 3})) == Rational(1));

  const Instance rsm = parse_instance(
      R"({"players": 4, "edges": [],
          "game": {"type": "random_supermodular", "terms": 3, "seed": 11, "eps": "1/10"}})");
  CHECK(rsm.game == random_supermodular_game(4, 3, 11, Rational(1, 10)));
}

TEST_CASE("bad documents are rejected with a document path") {
  check_rejects("{", "$: malformed JSON");
  check_rejects("[]", "$: must be an object");
  check_rejects(R"({"edges": [], "game": {"type": "cardinality_power", "k": 1}})",
                "$.players: missing");
  check_rejects(R"({"players": 0, "edges": [], "game": {"type": "cardinality_power", "k": 1}})",
                "$.players: out of range");
  check_rejects(
      R"({"players": 2, "edges": [{"tail": [], "head": [1]}], "game": {"type": "cardinality_power", "k": 1}})",
      "$.edges[0].tail: must not be empty");
  check_rejects(
      R"({"players": 2, "edges": [{"tail": [1], "head": [3]}], "game": {"type": "cardinality_power", "k": 1}})",
      "$.edges[0].head[0]: out of range");
  check_rejects(
      R"({"players": 2, "edges": [{"tail": [1]}], "game": {"type": "cardinality_power", "k": 1}})",
      "$.edges[0].head: missing");
  check_rejects(R"({"players": 2, "edges": [], "game": {"type": "mystery"}})",
                "$.game.type: unknown game type");
  check_rejects(R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [0, 1]}})",
                "$.game.worth: needs exactly 2^players = 4 entries");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [1, 1, 1, 1]}})",
      "$.game.worth[0]: the empty coalition must have worth 0");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [0, 0.5, 1, 1]}})",
      "$.game.worth[1]: floating point numbers are not accepted");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [0, "x", 1, 1]}})",
      "$.game.worth[1]:");
  check_rejects(R"({"players": 2, "edges": [], "game": {"type": "additive", "weights": [1]}})",
                "$.game.weights: needs exactly one weight per player");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "cardinality_power", "k": 1}, "semantics": "sideways"})",
      "$.semantics: must be \"strong\" or \"weak\"");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "cardinality_power", "k": 1}, "surprise": 1})",
      "$.surprise: unknown field");
  check_rejects(
      R"({"players": 2, "edges": [], "game": {"type": "random_supermodular", "terms": 1, "seed": -4}})",
      "$.game.seed: must be >= 0");
}

TEST_CASE("serialization round-trips through parsing") {
  const Instance parsed = parse_instance(kExampleDoc);
  const std::string emitted = emit_instance(parsed);
  const Instance again = parse_instance(emitted);
  CHECK(again == parsed);
  CHECK(emit_instance(again) == emitted);

  // every game type survives the trip
  for (const char* doc : {
           R"({"players": 2, "edges": [], "game": {"type": "table", "worth": [0, 1, "1/3", "5/2"]}})",
           R"({"players": 3, "edges": [{"tail": [1, 2], "head": [3]}], "game": {"type": "additive", "weights": [1, 2, "7/3"]}, "semantics": "weak"})",
           R"({"players": 3, "edges": [], "game": {"type": "unanimity", "coalition": [2, 3]}})",
           R"({"players": 4, "edges": [], "game": {"type": "random_supermodular", "terms": 2, "seed": 5, "eps": 0}})",
       }) {
    CAPTURE(doc);
    const Instance a = parse_instance(doc);
    const Instance b = parse_instance(emit_instance(a));
    CHECK(a == b);
    CHECK(emit_instance(a) == emit_instance(b));
  }
}

TEST_CASE("duplicate players in a list collapse to a set") {
  const Instance inst = parse_instance(
      R"({"players": 3, "edges": [{"tail": [1, 1], "head": [2]}], "game": {"type": "cardinality_power", "k": 1}})");
  CHECK(inst.hypergraph.edge(0).tail == Coalition::of({1}));
}

TEST_CASE("fingerprints identify instances") {
  const Instance a = parse_instance(kExampleDoc);
  Instance b = parse_instance(kExampleDoc);
  CHECK(instance_fingerprint(a) == instance_fingerprint(b));
  CHECK(instance_fingerprint(a).size() == 16);
  b.semantics = Semantics::weak;
  CHECK(instance_fingerprint(a) != instance_fingerprint(b));
}

TEST_CASE("allocations serialize with p/q payoffs") {
  const Instance inst = parse_instance(kExampleDoc);
  Allocation a;
  a.values = {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
  const std::string text = emit_allocation(a, "myerson", inst, true);
  CHECK(text.find("\"1/1\"") != std::string::npos);
  CHECK(text.find("\"total\": \"5/1\"") != std::string::npos);
  CHECK(text.find("\"method\": \"myerson\"") != std::string::npos);
  CHECK(text.find("\"semantics\": \"strong\"") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("failing reports always carry witnesses") {
  const Instance inst = parse_instance(kExampleDoc);
  TUGame squares = TUGame::cardinality_power(5, 2);
  const PropertyReport r =
      check_component_efficiency(inst.hypergraph, squares, Semantics::strong);
  REQUIRE_FALSE(r.holds);
  const std::string text = emit_report(r, inst);
  CHECK(text.find("\"verdict\": \"fails\"") != std::string::npos);
  CHECK(text.find("\"witnesses\"") != std::string::npos);
  CHECK(text.find("\"37/5\"") != std::string::npos);
}
