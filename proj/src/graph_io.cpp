#include "gisemi/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gisemi/errors.hpp"

namespace gisemi {

  namespace {
    using nlohmann::json;

    std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      return {line, column};
    }

    std::string string_field(json const& obj, char const* key, char const* where) {
      auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        throw InputError(std::string(where) + ": missing string field '" + key + "'");
      }
      return it->get<std::string>();
    }
  }  // namespace

  Graph parse_graph_json(std::string_view text, std::string label) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      // byte is 1-based and points just past the offending character
      auto [line, column] =
          line_column(text, e.byte == 0 ? 0 : static_cast<std::size_t>(e.byte - 1));
      throw ParseError("malformed graph document", line, column);
    }
    if (!doc.is_object()) {
      throw InputError("graph document must be an object");
    }
    GraphDescription raw;
    auto             vertices = doc.find("vertices");
    if (vertices == doc.end() || !vertices->is_array()) {
      throw InputError("graph document: 'vertices' must be a list of strings");
    }
    for (auto const& v : *vertices) {
      if (!v.is_string()) {
        throw InputError("graph document: 'vertices' must be a list of strings");
      }
      raw.vertices.push_back(v.get<std::string>());
    }
    auto edges = doc.find("edges");
    if (edges != doc.end()) {
      if (!edges->is_array()) {
        throw InputError("graph document: 'edges' must be a list");
      }
      for (auto const& e : *edges) {
        if (!e.is_object()) {
          throw InputError("graph document: each edge must be an object");
        }
        raw.edges.push_back({string_field(e, "id", "edge"), string_field(e, "src", "edge"),
                             string_field(e, "dst", "edge")});
      }
    }
    return Graph::validate(raw, std::move(label));
  }

  Graph load_graph_file(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw InputError("cannot open graph file " + file.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_json(buf.str(), file.filename().string());
  }

  std::string graph_to_json(Graph const& g) {
    auto d   = g.describe();
    json doc = {{"vertices", d.vertices}, {"edges", json::array()}};
    for (auto const& e : d.edges) {
      doc["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
    }
    return doc.dump();
  }

}  // namespace gisemi
