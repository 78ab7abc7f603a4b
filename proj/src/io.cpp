#include "dhg/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dhg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

Rational parse_rational(const json& j, const std::string& path) {
  if (j.is_number_float())
    fail(path, "floating point numbers are not accepted; use an integer or a \"p/q\" string");
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return Rational::from_string(j.dump());
  }
  if (j.is_string()) {
    try {
      return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  fail(path, "must be an integer or a \"p/q\" string");
}

int parse_int(const json& j, const std::string& path, long lo, long hi) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    fail(path, "must be an integer");
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(hi)) fail(path, "out of range");
    if (static_cast<long>(u) < lo) fail(path, "out of range");
    return static_cast<int>(u);
  }
  const auto v = j.get<std::int64_t>();
  if (v < lo || v > hi) fail(path, "out of range");
  return static_cast<int>(v);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) fail(path + "." + key, "unknown field");
  }
}

Coalition parse_player_list(const json& j, const std::string& path, int n, bool allow_empty) {
  if (!j.is_array()) fail(path, "must be an array of players");
  if (!allow_empty && j.empty()) fail(path, "must not be empty");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int p =
        parse_int(j[i], path + "[" + std::to_string(i) + "]", 1, static_cast<long>(n));
    mask |= std::uint64_t{1} << (p - 1);
  }
  return Coalition::from_mask(mask);
}

TUGame parse_game(const json& j, int n) {
  const std::string path = "$.game";
  if (!j.is_object()) fail(path, "must be an object");
  if (!j.contains("type") || !j["type"].is_string()) fail(path + ".type", "missing game type");
  const std::string type = j["type"].get<std::string>();

  if (type == "table") {
    check_keys(j, path, {"type", "worth"});
    if (n > kDenseTableLimit) fail("$.players", "table games support at most 16 players");
    if (!j.contains("worth") || !j["worth"].is_array()) fail(path + ".worth", "missing array");
    const json& w = j["worth"];
    const std::size_t expected = std::size_t{1} << n;
    if (w.size() != expected)
      fail(path + ".worth", "needs exactly 2^players = " + std::to_string(expected) + " entries");
    std::vector<Rational> worth(expected);
    for (std::size_t i = 0; i < expected; ++i)
      worth[i] = parse_rational(w[i], path + ".worth[" + std::to_string(i) + "]");
    if (!worth[0].is_zero()) fail(path + ".worth[0]", "the empty coalition must have worth 0");
    return TUGame::table(n, std::move(worth));
  }
  if (type == "cardinality_power") {
    check_keys(j, path, {"type", "k"});
    if (!j.contains("k")) fail(path + ".k", "missing");
    return TUGame::cardinality_power(n, parse_int(j["k"], path + ".k", 1, 16));
  }
  if (type == "additive") {
    check_keys(j, path, {"type", "weights"});
    if (!j.contains("weights") || !j["weights"].is_array())
      fail(path + ".weights", "missing array");
    const json& w = j["weights"];
    if (w.size() != static_cast<std::size_t>(n))
      fail(path + ".weights", "needs exactly one weight per player");
    std::vector<Rational> weights(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      weights[i] = parse_rational(w[i], path + ".weights[" + std::to_string(i) + "]");
    return TUGame::additive(std::move(weights));
  }
  if (type == "unanimity") {
    check_keys(j, path, {"type", "coalition"});
    if (!j.contains("coalition")) fail(path + ".coalition", "missing");
    return TUGame::unanimity(n, parse_player_list(j["coalition"], path + ".coalition", n, false));
  }
  if (type == "random_supermodular") {
    check_keys(j, path, {"type", "terms", "seed", "eps"});
    if (!j.contains("terms")) fail(path + ".terms", "missing");
    if (!j.contains("seed")) fail(path + ".seed", "missing");
    const int terms = parse_int(j["terms"], path + ".terms", 0, 4096);
    if (!j["seed"].is_number_integer() && !j["seed"].is_number_unsigned())
      fail(path + ".seed", "must be an integer");
    if (!j["seed"].is_number_unsigned() && j["seed"].get<std::int64_t>() < 0)
      fail(path + ".seed", "must be >= 0");
    const auto seed = j["seed"].get<std::uint64_t>();
    Rational eps;
    if (j.contains("eps")) {
      eps = parse_rational(j["eps"], path + ".eps");
      if (eps.sign() < 0) fail(path + ".eps", "must be >= 0");
    }
    try {
      return random_supermodular_game(n, terms, seed, eps);
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path + ".type", "unknown game type \"" + type + "\"");
}

json rational_json(const Rational& r) { return json(r.str()); }

json coalition_json(const Coalition& c) {
  json arr = json::array();
  for (PlayerId p : c.players()) arr.push_back(p);
  return arr;
}

json game_json(const TUGame& g) {
  struct Visitor {
    json operator()(const TableGame& t) const {
      json w = json::array();
      for (const Rational& r : t.worth) w.push_back(rational_json(r));
      return json{{"type", "table"}, {"worth", std::move(w)}};
    }
    json operator()(const CardinalityPowerGame& c) const {
      return json{{"type", "cardinality_power"}, {"k", c.k}};
    }
    json operator()(const AdditiveGame& a) const {
      json w = json::array();
      for (const Rational& r : a.weights) w.push_back(rational_json(r));
      return json{{"type", "additive"}, {"weights", std::move(w)}};
    }
    json operator()(const UnanimityGame& u) const {
      return json{{"type", "unanimity"}, {"coalition", coalition_json(u.required)}};
    }
    json operator()(const RandomSupermodularGame& r) const {
      return json{{"type", "random_supermodular"},
                  {"terms", r.terms},
                  {"seed", r.seed},
                  {"eps", rational_json(r.eps)}};
    }
  };
  return std::visit(Visitor{}, g.kind());
}

const char* semantics_name(Semantics sem) {
  return sem == Semantics::strong ? "strong" : "weak";
}

json instance_json(const Instance& inst) {
  json edges = json::array();
  for (const DirectedHyperedge& e : inst.hypergraph.edges())
    edges.push_back(json{{"tail", coalition_json(e.tail)}, {"head", coalition_json(e.head)}});
  return json{{"players", inst.hypergraph.player_count()},
              {"edges", std::move(edges)},
              {"game", game_json(inst.game)},
              {"semantics", semantics_name(inst.semantics)}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json witness_json(const Witness& w) {
  json j{{"kind", w.kind},
         {"lhs", rational_json(w.lhs)},
         {"rhs", rational_json(w.rhs)},
         {"relation", w.relation}};
  if (w.edge) j["edge"] = *w.edge;
  if (w.player) j["player"] = *w.player;
  if (w.player_other) j["player_other"] = *w.player_other;
  if (w.coalition) j["coalition"] = coalition_json(*w.coalition);
  return j;
}

json report_json(const PropertyReport& r, const Instance& inst) {
  json witnesses = json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(witness_json(w));
  json j{{"kind", "report"},
         {"property", r.property},
         {"semantics", semantics_name(inst.semantics)},
         {"verdict", r.holds ? "holds" : "fails"},
         {"witnesses", std::move(witnesses)},
         {"fingerprint", instance_fingerprint(inst)}};
  if (r.edge) j["edge"] = *r.edge;
  if (!r.agreement.empty()) {
    json agreement = json::array();
    for (const EdgeAgreement& a : r.agreement)
      agreement.push_back(json{{"edge", a.edge}, {"bridge", a.bridge}, {"safe", a.safe}});
    j["agreement"] = std::move(agreement);
  }
  return j;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "must be an object");
  check_keys(doc, "$", {"players", "edges", "game", "semantics"});

  if (!doc.contains("players")) fail("$.players", "missing");
  const int n = parse_int(doc["players"], "$.players", 1, kMaxPlayers);

  if (!doc.contains("edges") || !doc["edges"].is_array())
    fail("$.edges", "missing array");
  std::vector<DirectedHyperedge> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const json& e = doc["edges"][i];
    if (!e.is_object()) fail(path, "must be an object with tail and head");
    check_keys(e, path, {"tail", "head"});
    if (!e.contains("tail")) fail(path + ".tail", "missing");
    if (!e.contains("head")) fail(path + ".head", "missing");
    edges.push_back({parse_player_list(e["tail"], path + ".tail", n, false),
                     parse_player_list(e["head"], path + ".head", n, false)});
  }

  if (!doc.contains("game")) fail("$.game", "missing");
  TUGame game = parse_game(doc["game"], n);

  Semantics sem = Semantics::strong;
  if (doc.contains("semantics")) {
    if (!doc["semantics"].is_string()) fail("$.semantics", "must be \"strong\" or \"weak\"");
    const std::string s = doc["semantics"].get<std::string>();
    if (s == "strong")
      sem = Semantics::strong;
    else if (s == "weak")
      sem = Semantics::weak;
    else
      fail("$.semantics", "must be \"strong\" or \"weak\"");
  }

  return Instance{DirectedHypergraph(n, std::move(edges)), std::move(game), sem};
}

std::string emit_instance(const Instance& inst) { return dump_canonical(instance_json(inst)); }

std::string instance_fingerprint(const Instance& inst) {
  const std::string text = emit_instance(inst);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

std::string emit_allocation(const Allocation& a, const std::string& method, const Instance& inst,
                            bool with_semantics) {
  json payoffs = json::array();
  for (const Rational& r : a.values) payoffs.push_back(rational_json(r));
  json j{{"kind", "allocation"},
         {"method", method},
         {"players", static_cast<int>(a.values.size())},
         {"payoffs", std::move(payoffs)},
         {"total", rational_json(a.total())},
         {"fingerprint", instance_fingerprint(inst)}};
  if (with_semantics) j["semantics"] = semantics_name(inst.semantics);
  return dump_canonical(j);
}

std::string emit_report(const PropertyReport& r, const Instance& inst) {
  return dump_canonical(report_json(r, inst));
}

std::string emit_estimate(const McEstimate& e, const Instance& inst) {
  json payoffs = json::array();
  for (double v : e.values) payoffs.push_back(v);
  return dump_canonical(json{{"kind", "estimate"},
                             {"method", "myerson"},
                             {"payoffs", std::move(payoffs)},
                             {"samples", e.samples},
                             {"seed", e.seed},
                             {"semantics", semantics_name(inst.semantics)},
                             {"fingerprint", instance_fingerprint(inst)}});
}

namespace {

// ---------- CLI ----------

struct CliError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{2, "cannot open input file: " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string set_notation(const Coalition& c) {
  std::string s = "{";
  bool first = true;
  for (PlayerId p : c.players()) {
    if (!first) s += ", ";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

void print_allocation_table(std::ostream& out, const Allocation& a) {
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out << "player " << (i + 1) << ": " << a.values[i].str_short() << " (= "
        << a.values[i].to_double() << ")\n";
  out << "total: " << a.total().str_short() << "\n";
}

void print_witness_table(std::ostream& out, const Witness& w) {
  out << "  witness " << w.kind;
  if (w.edge) out << " edge=" << *w.edge;
  if (w.player) out << " player=" << *w.player;
  if (w.player_other) out << " player_other=" << *w.player_other;
  if (w.coalition) out << " coalition=" << set_notation(*w.coalition);
  out << " lhs=" << w.lhs.str_short() << " " << w.relation << " rhs=" << w.rhs.str_short()
      << "\n";
}

void print_report_table(std::ostream& out, const PropertyReport& r) {
  out << "property: " << r.property;
  if (r.edge) out << " (edge " << *r.edge << ")";
  out << "\nverdict: " << (r.holds ? "holds" : "fails") << "\n";
  for (const EdgeAgreement& a : r.agreement)
    out << "  edge " << a.edge << ": bridge=" << (a.bridge ? "yes" : "no")
        << " safe=" << (a.safe ? "yes" : "no") << "\n";
  for (const Witness& w : r.witnesses) print_witness_table(out, w);
}

void require_exact_limit(const Instance& inst) {
  if (inst.hypergraph.player_count() > kDenseTableLimit)
    throw CliError{2, "exact computation supports at most 16 players; use estimate"};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Myerson and Shapley values for games on directed hypergraphs"};
  app.require_subcommand(1);

  std::string input_path;
  app.add_option("--input", input_path, "instance file, '-' or absent for stdin");
  std::string semantics_flag;
  app.add_option("--semantics", semantics_flag, "connectivity reading, overrides the document")
      ->check(CLI::IsMember({"strong", "weak"}));
  bool want_json = false;
  bool want_table = false;
  auto* json_opt = app.add_flag("--json", want_json, "canonical JSON output (default)");
  app.add_flag("--table", want_table, "human-readable output")->excludes(json_opt);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for generate and estimate");

  auto* cmd_components = app.add_subcommand("components", "component partition of all players");
  auto* cmd_bridges = app.add_subcommand("bridges", "bridge status of every edge");
  auto* cmd_critical =
      app.add_subcommand("critical", "players every path from one player to another uses");
  int from_player = 0;
  int to_player = 0;
  cmd_critical->add_option("--from", from_player, "path source")->required();
  cmd_critical->add_option("--to", to_player, "path target")->required();
  auto* cmd_myerson = app.add_subcommand("myerson", "exact hypergraph-restricted Shapley value");
  auto* cmd_shapley = app.add_subcommand("shapley", "exact Shapley value of the base game");
  auto* cmd_stability =
      app.add_subcommand("stability", "do the edge's own players lose by its deletion");
  auto* cmd_safety = app.add_subcommand("safety", "does any player gain by the edge's deletion");
  int edge_id = 0;
  cmd_stability->add_option("--edge", edge_id, "1-based edge id")->required();
  cmd_safety->add_option("--edge", edge_id, "1-based edge id")->required();
  auto* cmd_axioms =
      app.add_subcommand("verify-axioms", "component efficiency and fairness checks");
  auto* cmd_theorem =
      app.add_subcommand("verify-theorem", "bridge/safety equivalence on a convex game");
  auto* cmd_generate = app.add_subcommand("generate", "write a random instance document");
  int gen_players = 5;
  int gen_edges = 4;
  int gen_tail_max = 2;
  int gen_head_max = 2;
  int gen_terms = 3;
  std::string gen_game = "random_supermodular";
  std::string gen_eps = "1/10";
  long gen_max_value = 8;
  cmd_generate->add_option("--players", gen_players, "number of players");
  cmd_generate->add_option("--edges", gen_edges, "number of edges");
  cmd_generate->add_option("--tail-max", gen_tail_max, "largest tail size");
  cmd_generate->add_option("--head-max", gen_head_max, "largest head size");
  cmd_generate->add_option("--game", gen_game, "random_supermodular or table")
      ->check(CLI::IsMember({"random_supermodular", "table"}));
  cmd_generate->add_option("--terms", gen_terms, "unanimity terms for random_supermodular");
  cmd_generate->add_option("--eps", gen_eps, "strictness margin for random_supermodular");
  cmd_generate->add_option("--max-value", gen_max_value, "largest worth for table games");
  auto* cmd_estimate = app.add_subcommand("estimate", "sampled Myerson value");
  std::uint64_t samples = 100000;
  cmd_estimate->add_option("--samples", samples, "number of sampled orderings");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_generate->parsed()) {
      std::mt19937_64 gen(seed);
      const std::uint64_t hseed = gen();
      const std::uint64_t gseed = gen();
      DirectedHypergraph h =
          random_hypergraph(gen_players, gen_edges, gen_tail_max, gen_head_max, hseed);
      TUGame g = gen_game == "table"
                     ? random_table_game(gen_players, gseed, gen_max_value)
                     : random_supermodular_game(gen_players, gen_terms, gseed,
                                                Rational::from_string(gen_eps));
      const Semantics sem = semantics_flag == "weak" ? Semantics::weak : Semantics::strong;
      out << emit_instance(Instance{std::move(h), std::move(g), sem});
      return 0;
    }

    Instance inst = parse_instance(read_input(input_path, in));
    if (semantics_flag == "strong") inst.semantics = Semantics::strong;
    if (semantics_flag == "weak") inst.semantics = Semantics::weak;
    const DirectedHypergraph& h = inst.hypergraph;
    const Semantics sem = inst.semantics;

    if (cmd_components->parsed()) {
      const Partition part = strong_components(h, sem);
      if (want_table) {
        for (std::size_t i = 0; i < part.blocks.size(); ++i)
          out << "component " << (i + 1) << ": " << set_notation(part.blocks[i]) << "\n";
      } else {
        json blocks = json::array();
        for (const Coalition& b : part.blocks) blocks.push_back(coalition_json(b));
        out << dump_canonical(json{{"kind", "components"},
                                   {"semantics", semantics_name(sem)},
                                   {"blocks", std::move(blocks)},
                                   {"fingerprint", instance_fingerprint(inst)}});
      }
      return 0;
    }

    if (cmd_bridges->parsed()) {
      if (want_table) {
        for (int e = 0; e < h.edge_count(); ++e)
          out << "edge " << h.edge_id(e) << ": "
              << (is_bridge(h, e, sem) ? "bridge" : "not a bridge") << "\n";
      } else {
        json edges = json::array();
        for (int e = 0; e < h.edge_count(); ++e)
          edges.push_back(json{{"edge", h.edge_id(e)}, {"bridge", is_bridge(h, e, sem)}});
        out << dump_canonical(json{{"kind", "bridges"},
                                   {"semantics", semantics_name(sem)},
                                   {"edges", std::move(edges)},
                                   {"fingerprint", instance_fingerprint(inst)}});
      }
      return 0;
    }

    if (cmd_critical->parsed()) {
      const int n = h.player_count();
      if (from_player < 1 || from_player > n) throw CliError{2, "--from out of range"};
      if (to_player < 1 || to_player > n) throw CliError{2, "--to out of range"};
      if (from_player == to_player)
        throw CliError{2, "--from and --to must be different players"};
      const std::optional<Coalition> crit = critical_players(h, from_player, to_player);
      if (want_table) {
        if (crit)
          out << "path from " << from_player << " to " << to_player
              << ": exists\ncritical players: " << set_notation(*crit) << "\n";
        else
          out << "path from " << from_player << " to " << to_player << ": none\n";
      } else {
        json j{{"kind", "critical"},
               {"from", from_player},
               {"to", to_player},
               {"exists_path", crit.has_value()},
               {"players", crit ? coalition_json(*crit) : json()},
               {"fingerprint", instance_fingerprint(inst)}};
        out << dump_canonical(j);
      }
      return 0;
    }

    if (cmd_myerson->parsed() || cmd_shapley->parsed()) {
      require_exact_limit(inst);
      const bool restricted = cmd_myerson->parsed();
      const Allocation a = restricted ? myerson(h, inst.game, sem) : shapley(inst.game);
      if (want_table)
        print_allocation_table(out, a);
      else
        out << emit_allocation(a, restricted ? "myerson" : "shapley", inst, restricted);
      return 0;
    }

    if (cmd_stability->parsed() || cmd_safety->parsed()) {
      require_exact_limit(inst);
      if (edge_id < 1 || edge_id > h.edge_count())
        throw CliError{2, "--edge must be a 1-based edge id in 1.." +
                              std::to_string(h.edge_count())};
      const int index = edge_id - 1;
      const PropertyReport r = cmd_stability->parsed()
                                   ? check_stability(h, inst.game, sem, index)
                                   : check_safety(h, inst.game, sem, index);
      if (want_table)
        print_report_table(out, r);
      else
        out << emit_report(r, inst);
      return 0;
    }

    if (cmd_axioms->parsed()) {
      require_exact_limit(inst);
      const PropertyReport ce = check_component_efficiency(h, inst.game, sem);
      const PropertyReport fair = check_fairness(h, inst.game, sem);
      const bool holds = ce.holds && fair.holds;
      if (want_table) {
        print_report_table(out, ce);
        print_report_table(out, fair);
        out << "axioms: " << (holds ? "holds" : "fails") << "\n";
      } else {
        out << dump_canonical(json{{"kind", "axioms"},
                                   {"semantics", semantics_name(sem)},
                                   {"verdict", holds ? "holds" : "fails"},
                                   {"reports", json::array({report_json(ce, inst),
                                                            report_json(fair, inst)})},
                                   {"fingerprint", instance_fingerprint(inst)}});
      }
      return holds ? 0 : 1;
    }

    if (cmd_theorem->parsed()) {
      require_exact_limit(inst);
      PropertyReport r;
      try {
        r = verify_bridge_safety_theorem(h, inst.game, sem);
      } catch (const NotConvexError& e) {
        throw CliError{2, "the game is not convex: for S=" + set_notation(e.witness.s) +
                              " T=" + set_notation(e.witness.t) + " the combined worth " +
                              e.witness.lhs.str_short() + " falls below " +
                              e.witness.rhs.str_short()};
      }
      if (want_table)
        print_report_table(out, r);
      else
        out << emit_report(r, inst);
      return r.holds ? 0 : 1;
    }

    if (cmd_estimate->parsed()) {
      if (samples == 0) throw CliError{2, "--samples must be at least 1"};
      const McEstimate e = myerson_monte_carlo(h, inst.game, sem, samples, seed);
      if (want_table) {
        for (std::size_t i = 0; i < e.values.size(); ++i)
          out << "player " << (i + 1) << ": " << e.values[i] << "\n";
        out << "samples: " << e.samples << " seed: " << e.seed << "\n";
      } else {
        out << emit_estimate(e, inst);
      }
      return 0;
    }

    err << "no subcommand selected\n";
    return 2;
  } catch (const CliError& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace dhg
