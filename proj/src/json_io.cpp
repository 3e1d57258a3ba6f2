#include "linorbit/json_io.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "linorbit/errors.hpp"
#include "overloaded.hpp"

namespace linorbit {
namespace {

using detail::Overloaded;

std::size_t from_wire(const Json& j) {
  const auto v = j.get<std::int64_t>();
  if (v < 1) throw ParseError("indices are 1-based; got " + std::to_string(v));
  return static_cast<std::size_t>(v - 1);
}

Json to_wire(std::size_t i) { return static_cast<std::uint64_t>(i) + 1; }

Json index_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(to_wire(i));
  return out;
}

std::vector<std::size_t> index_list_from(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(from_wire(x));
  return out;
}

Json pair_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({to_wire(e.u), to_wire(e.v)});
  return out;
}

std::vector<Edge> pair_list_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("edges are [u, v] pairs");
    out.push_back({from_wire(p[0]), from_wire(p[1])});
  }
  return out;
}

Json bigint_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(bigint_to_json(x));
  return out;
}

std::vector<BigInt> bigint_list_from(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

Json graph_json(const UGraph& g) {
  Json out;
  out["num_vertices"] = g.num_vertices;
  out["edges"] = pair_list(g.edges);
  if (g.weighted()) out["weights"] = bigint_list(g.weights);
  return out;
}

UGraph graph_from(const Json& j) {
  UGraph g;
  g.num_vertices = j.at("num_vertices").get<std::size_t>();
  g.edges = pair_list_from(j.at("edges"));
  if (j.contains("weights")) g.weights = bigint_list_from(j.at("weights"));
  return g;
}

Json digraph_json(const DiGraph& g) {
  Json out;
  out["num_vertices"] = g.num_vertices;
  out["arcs"] = pair_list(g.arcs);
  return out;
}

DiGraph digraph_from(const Json& j) {
  return {j.at("num_vertices").get<std::size_t>(), pair_list_from(j.at("arcs"))};
}

Json family_json(const SetFamily& f) {
  Json out;
  out["universe_size"] = f.universe_size;
  Json sets = Json::array();
  for (const auto& s : f.sets) sets.push_back(index_list(s));
  out["sets"] = std::move(sets);
  return out;
}

SetFamily family_from(const Json& j) {
  SetFamily f;
  f.universe_size = j.at("universe_size").get<std::size_t>();
  for (const auto& s : j.at("sets")) f.sets.push_back(index_list_from(s));
  return f;
}

Json cnf_json(const CnfFormula& f) {
  Json out;
  out["num_vars"] = f.num_vars;
  out["clauses"] = f.clauses;
  return out;
}

CnfFormula cnf_from(const Json& j) {
  CnfFormula f;
  f.num_vars = j.at("num_vars").get<std::size_t>();
  f.clauses = j.at("clauses").get<std::vector<std::vector<Literal>>>();
  return f;
}

Json with(Json base, const char* key, Json value) {
  base[key] = std::move(value);
  return base;
}

Json payload_json(const Problem& p) {
  return std::visit(
      Overloaded{
          [](const Sat& x) { return cnf_json(x.formula); },
          [](const ThreeSat& x) { return cnf_json(x.formula); },
          [](const ZeroOneIp& x) { return to_json(x.program); },
          [](const Clique& x) { return with(graph_json(x.graph), "k", x.k); },
          [](const SetPacking& x) { return with(family_json(x.family), "l", x.l); },
          [](const NodeCover& x) { return with(graph_json(x.graph), "l", x.l); },
          [](const SetCovering& x) { return with(family_json(x.family), "k", x.k); },
          [](const FeedbackNodeSet& x) { return with(digraph_json(x.graph), "k", x.k); },
          [](const FeedbackArcSet& x) { return with(digraph_json(x.graph), "k", x.k); },
          [](const DirectedHcp& x) { return digraph_json(x.graph); },
          [](const UndirectedHcp& x) { return graph_json(x.graph); },
          [](const ChromaticNumber& x) { return with(graph_json(x.graph), "k", x.k); },
          [](const CliqueCover& x) {
            return with(with(graph_json(x.graph), "l", x.l), "complemented", x.complemented);
          },
          [](const ExactCover& x) { return family_json(x.family); },
          [](const HittingSet& x) { return family_json(x.family); },
          [](const SteinerTree& x) {
            return with(with(graph_json(x.graph), "terminals", index_list(x.terminals)), "k",
                        bigint_to_json(x.k));
          },
          [](const ThreeDimMatching& x) {
            Json out;
            out["t_size"] = x.family.t_size;
            Json triples = Json::array();
            for (const Triple& t : x.family.triples) {
              triples.push_back({to_wire(t[0]), to_wire(t[1]), to_wire(t[2])});
            }
            out["triples"] = std::move(triples);
            return out;
          },
          [](const Knapsack& x) {
            Json out;
            out["values"] = bigint_list(x.values);
            out["target"] = bigint_to_json(x.target);
            return out;
          },
          [](const JobSequencing&) { return Json::object(); },
          [](const Partition& x) {
            Json out;
            out["values"] = bigint_list(x.values);
            return out;
          },
          [](const MaxCut& x) { return with(graph_json(x.graph), "W", bigint_to_json(x.W)); },
      },
      p);
}

Problem payload_from(ProblemKind kind, const Json& j) {
  switch (kind) {
    case ProblemKind::kSat: return Sat{cnf_from(j)};
    case ProblemKind::kThreeSat: return ThreeSat{cnf_from(j)};
    case ProblemKind::kIp01: return ZeroOneIp{program_from_json(j)};
    case ProblemKind::kClique: return Clique{graph_from(j), j.at("k").get<std::size_t>()};
    case ProblemKind::kSetPacking: return SetPacking{family_from(j), j.at("l").get<std::size_t>()};
    case ProblemKind::kNodeCover: return NodeCover{graph_from(j), j.at("l").get<std::size_t>()};
    case ProblemKind::kSetCovering: return SetCovering{family_from(j), j.at("k").get<std::size_t>()};
    case ProblemKind::kFeedbackNodeSet:
      return FeedbackNodeSet{digraph_from(j), j.at("k").get<std::size_t>()};
    case ProblemKind::kFeedbackArcSet:
      return FeedbackArcSet{digraph_from(j), j.at("k").get<std::size_t>()};
    case ProblemKind::kDhcp: return DirectedHcp{digraph_from(j)};
    case ProblemKind::kHcp: return UndirectedHcp{graph_from(j)};
    case ProblemKind::kChromaticNumber:
      return ChromaticNumber{graph_from(j), j.at("k").get<std::size_t>()};
    case ProblemKind::kCliqueCover:
      return CliqueCover{graph_from(j), j.at("l").get<std::size_t>(),
                         j.value("complemented", false)};
    case ProblemKind::kExactCover: return ExactCover{family_from(j)};
    case ProblemKind::kHittingSet: return HittingSet{family_from(j)};
    case ProblemKind::kSteinerTree:
      return SteinerTree{graph_from(j), index_list_from(j.at("terminals")),
                         bigint_from_json(j.at("k"))};
    case ProblemKind::kThreeDimMatching: {
      ThreeDimMatching x;
      x.family.t_size = j.at("t_size").get<std::size_t>();
      for (const auto& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("triples are [a, b, c]");
        x.family.triples.push_back({from_wire(t[0]), from_wire(t[1]), from_wire(t[2])});
      }
      return x;
    }
    case ProblemKind::kKnapsack:
      return Knapsack{bigint_list_from(j.at("values")), bigint_from_json(j.at("target"))};
    case ProblemKind::kJobSequencing: return JobSequencing{};
    case ProblemKind::kPartition: return Partition{bigint_list_from(j.at("values"))};
    case ProblemKind::kMaxCut: return MaxCut{graph_from(j), bigint_from_json(j.at("W"))};
  }
  throw ParseError("unknown kind");
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json bigint_to_json(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("'" + s + "' is not an integer");
    }
    return BigInt(s);
  }
  throw ParseError("expected an integer");
}

Json to_json(const Problem& p) {
  Json out;
  out["kind"] = std::string(tag(kind_of(p)));
  out["payload"] = payload_json(p);
  return out;
}

Problem problem_from_json(const Json& j) {
  Problem p = guarded([&] {
    const ProblemKind kind = parse_kind(j.at("kind").get<std::string>());
    return payload_from(kind, j.contains("payload") ? j.at("payload") : Json::object());
  });
  validate(p);
  return p;
}

Json to_json(const Certificate& c) {
  Json out;
  out["kind"] = std::string(tag(c.kind));
  std::visit(Overloaded{
                 [&](const TruthAssignment& w) {
                   Json a = Json::array();
                   for (bool b : w.values) a.push_back(b);
                   out["assignment"] = std::move(a);
                 },
                 [&](const BinaryVector& w) { out["values"] = w.values; },
                 [&](const IndexSet& w) { out["indices"] = index_list(w.indices); },
                 [&](const CycleOrder& w) { out["cycle"] = index_list(w.vertices); },
                 [&](const RootedTree& w) {
                   out["root"] = to_wire(w.root);
                   out["edges"] = index_list(w.edges);
                 },
                 [&](const Coloring& w) { out["colors"] = index_list(w.colors); },
                 [&](const CliquePartition& w) {
                   Json parts = Json::array();
                   for (const auto& part : w.cliques) parts.push_back(index_list(part));
                   out["cliques"] = std::move(parts);
                 },
             },
             c.witness);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  return guarded([&] {
    Certificate c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    switch (witness_type(c.kind)) {
      case WitnessType::kTruthAssignment: {
        TruthAssignment a;
        for (const auto& b : j.at("assignment")) a.values.push_back(b.get<bool>());
        c.witness = std::move(a);
        break;
      }
      case WitnessType::kBinaryVector: {
        BinaryVector v;
        for (const auto& b : j.at("values")) {
          const auto x = b.get<int>();
          if (x != 0 && x != 1) throw ParseError("binary vector entries must be 0 or 1");
          v.values.push_back(static_cast<std::uint8_t>(x));
        }
        c.witness = std::move(v);
        break;
      }
      case WitnessType::kIndexSet: c.witness = IndexSet{index_list_from(j.at("indices"))}; break;
      case WitnessType::kCycleOrder: c.witness = CycleOrder{index_list_from(j.at("cycle"))}; break;
      case WitnessType::kRootedTree:
        c.witness = RootedTree{from_wire(j.at("root")), index_list_from(j.at("edges"))};
        break;
      case WitnessType::kColoring: c.witness = Coloring{index_list_from(j.at("colors"))}; break;
      case WitnessType::kCliquePartition: {
        CliquePartition cp;
        for (const auto& part : j.at("cliques")) cp.cliques.push_back(index_list_from(part));
        c.witness = std::move(cp);
        break;
      }
    }
    return c;
  });
}

Json to_json(const BinaryProgram& p) {
  Json vars = Json::array();
  for (const auto& v : p.variables()) vars.push_back(v.str());
  Json rows = Json::array();
  for (const auto& row : p.rows()) {
    Json terms = Json::array();
    for (const Term& t : row.terms) terms.push_back({to_wire(t.var), bigint_to_json(t.coef)});
    Json r;
    r["terms"] = std::move(terms);
    r["rel"] = std::string(relation_symbol(row.rel));
    r["rhs"] = bigint_to_json(row.rhs);
    if (row.slack_bound) r["slack_bound"] = bigint_to_json(*row.slack_bound);
    rows.push_back(std::move(r));
  }
  Json out;
  out["variables"] = std::move(vars);
  out["rows"] = std::move(rows);
  return out;
}

BinaryProgram program_from_json(const Json& j) {
  return guarded([&] {
    BinaryProgram p;
    for (const auto& v : j.at("variables")) p.add_variable(parse_variable_tag(v.get<std::string>()));
    for (const auto& r : j.at("rows")) {
      std::vector<Term> terms;
      for (const auto& t : r.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw ParseError("terms are [variable, coefficient]");
        terms.push_back({from_wire(t[0]), bigint_from_json(t[1])});
      }
      std::optional<BigInt> slack;
      if (r.contains("slack_bound")) slack = bigint_from_json(r.at("slack_bound"));
      p.add_row(std::move(terms), parse_relation(r.at("rel").get<std::string>()),
                bigint_from_json(r.at("rhs")), std::move(slack));
    }
    p.check();
    return p;
  });
}

Json to_json(const GeneratorSpec& s) {
  Json out;
  out["kind"] = std::string(tag(s.kind));
  out["seed"] = s.seed;
  out["size"] = s.size;
  out["secondary"] = s.secondary;
  out["density"] = s.density;
  out["max_clause"] = s.max_clause;
  out["max_weight"] = s.max_weight;
  out["connected"] = s.connected;
  if (s.param) out["param"] = *s.param;
  return out;
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  return guarded([&] {
    GeneratorSpec s;
    s.kind = parse_kind(j.at("kind").get<std::string>());
    s.seed = j.value("seed", s.seed);
    s.size = j.value("size", s.size);
    s.secondary = j.value("secondary", s.secondary);
    s.density = j.value("density", s.density);
    s.max_clause = j.value("max_clause", s.max_clause);
    s.max_weight = j.value("max_weight", s.max_weight);
    s.connected = j.value("connected", s.connected);
    if (j.contains("param")) s.param = j.at("param").get<std::uint64_t>();
    return s;
  });
}

Json to_json(const GrowthReport& r) {
  Json out;
  out["reduction"] = r.reduction;
  out["claim"] = {{"alpha", r.claim.alpha}, {"beta", r.claim.beta}};
  out["linear_claim"] = r.linear_claim;
  Json pairs = Json::array();
  for (const SizePair& p : r.pairs) {
    Json e;
    e["scale"] = p.scale;
    e["seed"] = p.seed;
    e["in_elements"] = p.in_elements;
    e["out_elements"] = p.out_elements;
    e["in_bits"] = p.in_bits;
    e["out_bits"] = p.out_bits;
    pairs.push_back(std::move(e));
  }
  out["pairs"] = std::move(pairs);
  out["max_ratio"] = r.max_ratio;
  out["max_bits_ratio"] = r.max_bits_ratio;
  out["fitted_slope"] = r.fitted_slope;
  Json formulas = Json::array();
  for (const FormulaTally& f : r.formulas) {
    formulas.push_back({{"name", f.name}, {"passed", f.passed}, {"total", f.total}});
  }
  out["formulas"] = std::move(formulas);
  out["violations"] = r.violations;
  out["bound_holds"] = r.bound_holds;
  out["formulas_hold"] = r.formulas_hold;
  out["pass"] = r.pass();
  return out;
}

Problem parse_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<Literal> clause;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> f.num_vars >> declared) || fmt != "cnf") {
        throw ParseError("malformed DIMACS header: " + line);
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        clause.push_back(static_cast<Literal>(lit));
      }
    }
    if (!ls.eof()) throw ParseError("non-integer token in DIMACS body: " + line);
  }
  if (!clause.empty()) f.clauses.push_back(std::move(clause));
  if (!header) throw ParseError("missing 'p cnf' header");
  if (f.clauses.size() != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  Problem p = Sat{std::move(f)};
  validate(p);
  return p;
}

Problem parse_edge_list(std::istream& in, ProblemKind kind, std::optional<std::uint64_t> param,
                        std::optional<std::size_t> vertices) {
  const bool weighted = kind == ProblemKind::kMaxCut;
  switch (kind) {
    case ProblemKind::kClique:
    case ProblemKind::kNodeCover:
    case ProblemKind::kFeedbackNodeSet:
    case ProblemKind::kFeedbackArcSet:
    case ProblemKind::kDhcp:
    case ProblemKind::kHcp:
    case ProblemKind::kChromaticNumber:
    case ProblemKind::kCliqueCover:
    case ProblemKind::kMaxCut:
      break;
    default:
      throw ParseError("edge lists cannot describe a " + std::string(tag(kind)) + " instance");
  }
  const bool needs_param = kind != ProblemKind::kDhcp && kind != ProblemKind::kHcp;
  if (needs_param && !param) {
    throw ParseError(std::string(tag(kind)) + " needs its scalar parameter (--param)");
  }
  std::vector<Edge> edges;
  std::vector<BigInt> weights;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first == "c") continue;
    ls.clear();
    ls.str(line);
    std::vector<std::string> cols;
    for (std::string tok; ls >> tok;) cols.push_back(tok);
    if (cols.size() != (weighted ? 3u : 2u)) {
      throw ParseError(std::string(weighted ? "expected 'u v w'" : "expected 'u v'") +
                       " but got: " + line);
    }
    std::size_t u = 0;
    std::size_t v = 0;
    try {
      u = std::stoull(cols[0]);
      v = std::stoull(cols[1]);
    } catch (const std::exception&) {
      throw ParseError("non-integer vertex in: " + line);
    }
    if (u == 0 || v == 0) throw ParseError("edge-list vertices are 1-based: " + line);
    edges.push_back({u - 1, v - 1});
    n = std::max({n, u, v});
    if (weighted) weights.push_back(bigint_from_json(Json(cols[2])));
  }
  if (vertices) {
    if (*vertices < n) throw ParseError("--vertices is smaller than the largest vertex index");
    n = *vertices;
  }
  const std::size_t k = param ? static_cast<std::size_t>(*param) : 0;
  Problem p;
  const UGraph g{n, edges, weights};
  const DiGraph d{n, edges};
  switch (kind) {
    case ProblemKind::kClique: p = Clique{g, k}; break;
    case ProblemKind::kNodeCover: p = NodeCover{g, k}; break;
    case ProblemKind::kFeedbackNodeSet: p = FeedbackNodeSet{d, k}; break;
    case ProblemKind::kFeedbackArcSet: p = FeedbackArcSet{d, k}; break;
    case ProblemKind::kDhcp: p = DirectedHcp{d}; break;
    case ProblemKind::kHcp: p = UndirectedHcp{g}; break;
    case ProblemKind::kChromaticNumber: p = ChromaticNumber{g, k}; break;
    case ProblemKind::kCliqueCover: p = CliqueCover{g, k, false}; break;
    default: p = MaxCut{g, BigInt(*param)}; break;
  }
  validate(p);
  return p;
}

Json chain_manifest(const std::vector<std::string>& ids) { return ids; }

std::vector<std::string> chain_from_manifest(const Json& j) {
  if (!j.is_array()) throw ParseError("a chain manifest is a JSON list of reduction ids");
  std::vector<std::string> ids;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("a chain manifest is a JSON list of reduction ids");
    ids.push_back(x.get<std::string>());
  }
  return ids;
}

}  // namespace linorbit
