#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/catalogue.hpp"
#include "lscat/maps.hpp"

namespace lscat {

class ParseError : public std::runtime_error {
  public:
    enum class Kind { syntax, duplicate, invalid_value, missing_field, unknown_name, conflict, invalid_ring };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }

  private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

std::string_view to_string(ParseError::Kind kind);

// EXPR := term ('+' term)* ; term := '0' | '1' | factor ('*' factor)* ;
// factor := ID | ID '^' INT. Whitespace is ignored.
struct Factor {
    std::string name;
    unsigned exponent = 1;

    bool operator==(const Factor&) const = default;
};

struct ExprTerm {
    bool zero = false;
    std::vector<Factor> factors;  // empty and !zero: the unit

    bool operator==(const ExprTerm&) const = default;
};

struct Expr {
    std::vector<ExprTerm> terms;

    bool operator==(const Expr&) const = default;
};

/// Errors carry `line` and a column offset by `column`.
Expr parse_expr(std::string_view text, std::size_t line = 0, std::size_t column = 1);
std::string format_expr(const Expr& e);

/// Value of `e` as a coefficient vector over `table` = as_table(ring). Names
/// are generators for presentations and basis labels for tables.
/// Throws std::out_of_range on unknown names.
BitVec evaluate(const Expr& e, const Ring& ring, const MultiplicationTable& table);
BitVec evaluate(const Expr& e, const Ring& ring);

bool is_identifier(std::string_view s);

SpaceRecord parse_space(std::string_view text);
std::string serialize_space(const SpaceRecord& r);

struct MapFile {
    std::string name;
    std::string domain;  // M
    std::string range;   // N
    int degree = 1;
    std::vector<std::pair<std::string, Expr>> sends;
    std::vector<std::size_t> send_lines;
};

MapFile parse_map(std::string_view text);
std::string serialize_map(const MapFile& m);

/// f*: H*(range) -> H*(domain). Throws ParseError (unknown names, at the
/// offending send line) or std::invalid_argument (missing ring data).
RingHomSpec resolve_map(const MapFile& m, const SpaceRecord& domain, const SpaceRecord& range);

}  // namespace lscat
