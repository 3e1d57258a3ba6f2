#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linorbit/bigint.hpp"

namespace linorbit {

// Semantic origin of a 0-1 variable, e.g. {"x", {1, 2}} for the edge (1,2)
// variable or {"s", {row, level}} for a slack. Rendered as "x[1,2]".
struct VariableTag {
  std::string family;
  std::vector<std::int64_t> index;

  std::string str() const;
  friend bool operator==(const VariableTag&, const VariableTag&) = default;
};

// Parses the rendering produced by VariableTag::str(). Throws ParseError.
VariableTag parse_variable_tag(const std::string& text);

enum class Relation : std::uint8_t { kEq, kLe, kGe };

std::string_view relation_symbol(Relation rel);
Relation parse_relation(std::string_view text);

struct Term {
  std::size_t var = 0;
  BigInt coef;

  friend bool operator==(const Term&, const Term&) = default;
};

struct ConstraintRow {
  std::vector<Term> terms;
  Relation rel = Relation::kEq;
  BigInt rhs;
  // Largest |LHS - RHS| reached by any assignment feasible for the whole
  // program. Required on inequality rows before equality conversion.
  std::optional<BigInt> slack_bound;

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

class BinaryProgram {
 public:
  std::size_t add_variable(VariableTag tag);

  // Merges repeated variables, drops zero coefficients and sorts terms by
  // variable index. Throws InvalidInstance on an undeclared variable.
  void add_row(std::vector<Term> terms, Relation rel, BigInt rhs,
               std::optional<BigInt> slack_bound = std::nullopt);
  void add_row(ConstraintRow row);

  std::size_t num_variables() const { return vars_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<VariableTag>& variables() const { return vars_; }
  const std::vector<ConstraintRow>& rows() const { return rows_; }

  std::size_t nonzeros() const;
  bool is_equality_form() const;

  // Throws InvalidInstance when a stored invariant does not hold (used after
  // deserialisation, where rows bypass add_row normalisation).
  void check() const;

  friend bool operator==(const BinaryProgram&, const BinaryProgram&) = default;

 private:
  std::vector<VariableTag> vars_;
  std::vector<ConstraintRow> rows_;
};

BigInt row_lhs(const ConstraintRow& row, std::span<const std::uint8_t> x);
bool row_satisfied(const ConstraintRow& row, std::span<const std::uint8_t> x);

// True iff x has one 0/1 entry per variable and satisfies every row.
bool satisfies(const BinaryProgram& program, std::span<const std::uint8_t> x);

// Largest gap the row alone can show among its own satisfying assignments,
// clamped at zero. A valid (if loose) slack bound for any row.
BigInt row_local_slack_bound(const ConstraintRow& row);

// Rewrites every inequality row as an equality by appending
// ceil(log2(g + 1)) binary slack (<=) or surplus (>=) variables with
// coefficients +/-2^(j-1). Slack variables follow all original variables,
// tagged {"s", {row + 1, j}}. Throws ContractViolation when an inequality
// row has no slack bound and InvalidInstance when the bound is negative.
BinaryProgram to_equality_form(const BinaryProgram& program);

enum class SizeMode : std::uint8_t { kElement, kBits };

// Element mode: nonzero coefficients plus RHS entries. Bits mode: the
// binary encoding length of every coefficient and RHS value.
std::uint64_t ip_size(const BinaryProgram& program, SizeMode mode);

// One row per line: "1*x[1,2] -1*v[1] >= -1".
std::string dump_text(const BinaryProgram& program);

}  // namespace linorbit
