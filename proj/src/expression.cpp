#include "gisemi/expression.hpp"

#include <cctype>
#include <string>

#include "gisemi/errors.hpp"

namespace gisemi {

  std::vector<ExpressionToken> parse_expression(Graph const& g, std::string_view text) {
    constexpr std::string_view   inverse_suffix = "^-1";
    std::vector<ExpressionToken> tokens;
    std::size_t                  line = 1, line_start = 0;
    std::size_t                  i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        if (text[i] == '\n') {
          ++line;
          line_start = i + 1;
        }
        ++i;
        continue;
      }
      std::size_t begin = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::string_view token  = text.substr(begin, i - begin);
      std::size_t      column = begin - line_start + 1;

      if (token == "0") {
        tokens.emplace_back(ZeroLiteral{});
        continue;
      }
      auto caret = token.find('^');
      if (caret != std::string_view::npos) {
        if (token.substr(caret) != inverse_suffix) {
          throw ParseError("malformed inverse suffix in '" + std::string(token) + "'", line,
                           column + caret);
        }
        auto name = token.substr(0, caret);
        auto e    = g.find_edge(name);
        if (!e) {
          throw ParseError("unknown edge " + std::string(name), line, column);
        }
        tokens.emplace_back(GisGenerator::edge_inverse(*e));
      } else if (auto v = g.find_vertex(token)) {
        tokens.emplace_back(GisGenerator::vertex(*v));
      } else if (auto e = g.find_edge(token)) {
        tokens.emplace_back(GisGenerator::edge(*e));
      } else {
        throw ParseError("unknown identifier " + std::string(token), line, column);
      }
    }
    if (tokens.empty()) {
      throw ParseError("empty expression", line, text.size() - line_start + 1);
    }
    return tokens;
  }

  GisElement evaluate_expression(Graph const& g, std::vector<ExpressionToken> const& tokens) {
    std::vector<GisGenerator> word;
    for (auto const& t : tokens) {
      if (std::holds_alternative<ZeroLiteral>(t)) {
        return GisElement::zero();
      }
      word.push_back(std::get<GisGenerator>(t));
    }
    return reduce_word(g, word);
  }

}  // namespace gisemi
