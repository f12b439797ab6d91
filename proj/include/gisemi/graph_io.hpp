#ifndef GISEMI_GRAPH_IO_HPP_
#define GISEMI_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "gisemi/graph.hpp"

namespace gisemi {

  // Graph documents look like
  //
  //   {"vertices": ["v1", "v2"],
  //    "edges": [{"id": "e", "src": "v1", "dst": "v2"}]}
  //
  // Syntax errors raise ParseError with the line and column of the offending
  // character; structural problems raise InputError.
  Graph parse_graph_json(std::string_view text, std::string label = {});
  Graph load_graph_file(std::filesystem::path const& file);

  std::string graph_to_json(Graph const& g);

}  // namespace gisemi

#endif  // GISEMI_GRAPH_IO_HPP_
