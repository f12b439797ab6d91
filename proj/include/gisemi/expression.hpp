#ifndef GISEMI_EXPRESSION_HPP_
#define GISEMI_EXPRESSION_HPP_

#include <string_view>
#include <variant>
#include <vector>

#include "gisemi/gis_element.hpp"

namespace gisemi {

  struct ZeroLiteral {
    friend bool operator==(ZeroLiteral, ZeroLiteral) = default;
  };

  using ExpressionToken = std::variant<ZeroLiteral, GisGenerator>;

  // Whitespace separated tokens: a vertex id, an edge id, an edge id with the
  // suffix ^-1, or the literal 0. Throws ParseError (line 1, column of the
  // token) on an unknown identifier, a malformed suffix or empty input.
  std::vector<ExpressionToken> parse_expression(Graph const& g, std::string_view text);

  // Product of the tokens; any 0 token makes the result zero.
  GisElement evaluate_expression(Graph const& g, std::vector<ExpressionToken> const& tokens);

  inline GisElement parse_element(Graph const& g, std::string_view text) {
    return evaluate_expression(g, parse_expression(g, text));
  }

}  // namespace gisemi

#endif  // GISEMI_EXPRESSION_HPP_
