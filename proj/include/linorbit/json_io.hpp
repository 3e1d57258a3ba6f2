#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linorbit/genlab.hpp"
#include "linorbit/growth.hpp"
#include "linorbit/instances.hpp"

namespace linorbit {

using Json = nlohmann::ordered_json;

// Envelope {"kind": <tag>, "payload": {...}}. Indices are 1-based on the wire.
Json to_json(const Problem& p);
Problem problem_from_json(const Json& j);  // validates; throws ParseError / InvalidInstance

// {"kind": <tag>, <field>: ...} with field assignment / values / indices /
// cycle / (root, edges) / colors / cliques.
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const BinaryProgram& p);
BinaryProgram program_from_json(const Json& j);

Json to_json(const GeneratorSpec& s);
GeneratorSpec generator_spec_from_json(const Json& j);

Json to_json(const GrowthReport& r);

// Numbers that fit in 64 bits are JSON integers, larger ones decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

// DIMACS CNF ("p cnf V C", 0-terminated clauses, "c" comments) -> sat.
Problem parse_dimacs(std::istream& in);

// "u v [w]" per line, 1-based, '#' or 'c' comments. The vertex count is the
// largest index seen unless `vertices` is given. `param` supplies the kind's
// scalar (k, l or W); the weight column is required exactly for max_cut and
// steiner_tree (whose terminals cannot come from an edge list, so it is
// rejected).
Problem parse_edge_list(std::istream& in, ProblemKind kind, std::optional<std::uint64_t> param,
                        std::optional<std::size_t> vertices);

Json chain_manifest(const std::vector<std::string>& ids);
std::vector<std::string> chain_from_manifest(const Json& j);

}  // namespace linorbit
