#include "linorbit/binary_program.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "linorbit/errors.hpp"

namespace linorbit {

std::string VariableTag::str() const {
  std::string out = family;
  if (!index.empty()) {
    out += '[';
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(index[i]);
    }
    out += ']';
  }
  return out;
}

VariableTag parse_variable_tag(const std::string& text) {
  VariableTag tag;
  const auto open = text.find('[');
  if (open == std::string::npos) {
    tag.family = text;
    return tag;
  }
  if (text.back() != ']') throw ParseError("malformed variable tag '" + text + "'");
  tag.family = text.substr(0, open);
  std::string_view body(text.data() + open + 1, text.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto part = body.substr(0, comma);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("malformed variable tag '" + text + "'");
    }
    tag.index.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return tag;
}

std::string_view relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::kEq: return "=";
    case Relation::kLe: return "<=";
    case Relation::kGe: return ">=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "=" || text == "==") return Relation::kEq;
  if (text == "<=") return Relation::kLe;
  if (text == ">=") return Relation::kGe;
  throw ParseError("unknown relation '" + std::string(text) + "'");
}

std::size_t BinaryProgram::add_variable(VariableTag tag) {
  vars_.push_back(std::move(tag));
  return vars_.size() - 1;
}

void BinaryProgram::add_row(std::vector<Term> terms, Relation rel, BigInt rhs,
                            std::optional<BigInt> slack_bound) {
  for (const Term& t : terms) {
    if (t.var >= vars_.size()) throw InvalidInstance("row references an undeclared variable");
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  rows_.push_back({std::move(merged), rel, std::move(rhs), std::move(slack_bound)});
}

void BinaryProgram::add_row(ConstraintRow row) {
  add_row(std::move(row.terms), row.rel, std::move(row.rhs), std::move(row.slack_bound));
}

std::size_t BinaryProgram::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.terms.size();
  return n;
}

bool BinaryProgram::is_equality_form() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const ConstraintRow& r) { return r.rel == Relation::kEq; });
}

void BinaryProgram::check() const {
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.terms.size(); ++i) {
      const Term& t = row.terms[i];
      if (t.var >= vars_.size()) throw InvalidInstance("row references an undeclared variable");
      if (t.coef == 0) throw InvalidInstance("zero coefficient stored");
      if (i > 0 && row.terms[i - 1].var >= t.var) {
        throw InvalidInstance("row terms must name distinct variables in increasing order");
      }
    }
    if (row.slack_bound && *row.slack_bound < 0) throw InvalidInstance("negative slack bound");
  }
}

BigInt row_lhs(const ConstraintRow& row, std::span<const std::uint8_t> x) {
  BigInt lhs = 0;
  for (const Term& t : row.terms) {
    if (x[t.var]) lhs += t.coef;
  }
  return lhs;
}

bool row_satisfied(const ConstraintRow& row, std::span<const std::uint8_t> x) {
  const BigInt lhs = row_lhs(row, x);
  switch (row.rel) {
    case Relation::kEq: return lhs == row.rhs;
    case Relation::kLe: return lhs <= row.rhs;
    case Relation::kGe: return lhs >= row.rhs;
  }
  return false;
}

bool satisfies(const BinaryProgram& program, std::span<const std::uint8_t> x) {
  if (x.size() != program.num_variables()) return false;
  for (std::uint8_t v : x) {
    if (v > 1) return false;
  }
  for (const auto& row : program.rows()) {
    if (!row_satisfied(row, x)) return false;
  }
  return true;
}

BigInt row_local_slack_bound(const ConstraintRow& row) {
  BigInt lo = 0;
  BigInt hi = 0;
  for (const Term& t : row.terms) {
    if (t.coef < 0) {
      lo += t.coef;
    } else {
      hi += t.coef;
    }
  }
  BigInt gap = 0;
  if (row.rel == Relation::kLe) gap = row.rhs - lo;
  if (row.rel == Relation::kGe) gap = hi - row.rhs;
  return gap < 0 ? BigInt(0) : gap;
}

BinaryProgram to_equality_form(const BinaryProgram& program) {
  BinaryProgram out;
  for (const auto& tag : program.variables()) out.add_variable(tag);
  std::vector<ConstraintRow> rows;
  rows.reserve(program.num_rows());
  for (std::size_t r = 0; r < program.num_rows(); ++r) {
    ConstraintRow row = program.rows()[r];
    if (row.rel != Relation::kEq) {
      if (!row.slack_bound) {
        throw ContractViolation("inequality row " + std::to_string(r + 1) +
                                " has no slack bound");
      }
      if (*row.slack_bound < 0) {
        throw InvalidInstance("row " + std::to_string(r + 1) + " has a negative slack bound");
      }
      const std::size_t width = slack_width(*row.slack_bound);
      const int sign = row.rel == Relation::kLe ? 1 : -1;
      BigInt weight = 1;
      for (std::size_t j = 1; j <= width; ++j) {
        const std::size_t s = out.add_variable(
            {"s", {static_cast<std::int64_t>(r + 1), static_cast<std::int64_t>(j)}});
        row.terms.push_back({s, weight * sign});
        weight <<= 1;
      }
      row.rel = Relation::kEq;
      row.slack_bound.reset();
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) out.add_row(std::move(row));
  return out;
}

std::uint64_t ip_size(const BinaryProgram& program, SizeMode mode) {
  if (mode == SizeMode::kElement) return program.nonzeros() + program.num_rows();
  std::uint64_t bits = 0;
  for (const auto& row : program.rows()) {
    for (const Term& t : row.terms) bits += bit_length(t.coef);
    bits += bit_length(row.rhs);
  }
  return bits;
}

std::string dump_text(const BinaryProgram& program) {
  std::ostringstream out;
  for (const auto& row : program.rows()) {
    bool first = true;
    for (const Term& t : row.terms) {
      if (!first) out << ' ';
      first = false;
      out << t.coef << '*' << program.variables()[t.var].str();
    }
    if (first) out << '0';
    out << ' ' << relation_symbol(row.rel) << ' ' << row.rhs << '\n';
  }
  return out.str();
}

}  // namespace linorbit
