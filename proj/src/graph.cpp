#include "gisemi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gisemi/errors.hpp"

namespace gisemi {

  namespace {
    void check_identifier(std::string const& id) {
      if (id.empty()) {
        throw InputError("empty identifier");
      }
      if (id == "0") {
        throw InputError("reserved identifier 0");
      }
      for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '^') {
          throw InputError("invalid identifier " + id);
        }
      }
    }

    std::string padded(std::size_t i, std::size_t count) {
      std::string s     = std::to_string(i);
      std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
      return std::string(width - s.size(), '0') + s;
    }
  }  // namespace

  Graph Graph::validate(GraphDescription const& raw, std::string label) {
    // Vertex and edge identifiers share the expression grammar's token
    // space, so a clash between the two is also a duplicate.
    std::set<std::string> seen;
    for (auto const& v : raw.vertices) {
      check_identifier(v);
      if (!seen.insert(v).second) {
        throw InputError("duplicate identifier " + v);
      }
    }
    std::set<std::string> vertex_set(raw.vertices.begin(), raw.vertices.end());
    for (auto const& e : raw.edges) {
      check_identifier(e.id);
      if (!seen.insert(e.id).second) {
        throw InputError("duplicate identifier " + e.id);
      }
      for (auto const* end : {&e.src, &e.dst}) {
        if (!vertex_set.contains(*end)) {
          throw InputError("dangling endpoint " + *end);
        }
      }
    }

    Graph g;
    g._label        = std::move(label);
    g._vertex_names = raw.vertices;
    std::sort(g._vertex_names.begin(), g._vertex_names.end());
    auto vertex_of = [&g](std::string const& name) {
      auto it = std::lower_bound(g._vertex_names.begin(), g._vertex_names.end(), name);
      return VertexId{static_cast<std::uint32_t>(it - g._vertex_names.begin())};
    };
    for (auto const& e : raw.edges) {
      g._edges.push_back({e.id, vertex_of(e.src), vertex_of(e.dst)});
    }
    std::sort(g._edges.begin(), g._edges.end(),
              [](auto const& a, auto const& b) { return a.name < b.name; });
    g._out.resize(g._vertex_names.size());
    for (std::uint32_t i = 0; i < g._edges.size(); ++i) {
      g._out[g._edges[i].src.index].push_back(EdgeId{i});
    }
    return g;
  }

  std::string const& Graph::vertex_name(VertexId v) const {
    return _vertex_names.at(v.index);
  }

  std::string const& Graph::edge_name(EdgeId e) const {
    return _edges.at(e.index).name;
  }

  VertexId Graph::source(EdgeId e) const {
    return _edges.at(e.index).src;
  }

  VertexId Graph::range(EdgeId e) const {
    return _edges.at(e.index).dst;
  }

  std::span<EdgeId const> Graph::out_edges(VertexId v) const {
    return _out.at(v.index);
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = std::lower_bound(_vertex_names.begin(), _vertex_names.end(), name);
    if (it == _vertex_names.end() || *it != name) {
      return std::nullopt;
    }
    return VertexId{static_cast<std::uint32_t>(it - _vertex_names.begin())};
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = std::lower_bound(_edges.begin(), _edges.end(), name,
                               [](EdgeRecord const& r, std::string_view n) { return r.name < n; });
    if (it == _edges.end() || it->name != name) {
      return std::nullopt;
    }
    return EdgeId{static_cast<std::uint32_t>(it - _edges.begin())};
  }

  std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> result(_vertex_names.size());
    for (std::uint32_t i = 0; i < result.size(); ++i) {
      result[i] = VertexId{i};
    }
    return result;
  }

  std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> result(_edges.size());
    for (std::uint32_t i = 0; i < result.size(); ++i) {
      result[i] = EdgeId{i};
    }
    return result;
  }

  GraphDescription Graph::describe() const {
    GraphDescription d;
    d.vertices = _vertex_names;
    for (auto const& e : _edges) {
      d.edges.push_back({e.name, _vertex_names[e.src.index], _vertex_names[e.dst.index]});
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_path(Graph const& g, Path const& p) {
    if (p.start().index >= g.vertex_count()) {
      return false;
    }
    VertexId at = p.start();
    for (EdgeId e : p.edges()) {
      if (e.index >= g.edge_count() || g.source(e) != at) {
        return false;
      }
      at = g.range(e);
    }
    return true;
  }

  Path make_path(Graph const& g, VertexId start, std::vector<EdgeId> edges) {
    Path p(start, std::move(edges));
    if (!is_valid_path(g, p)) {
      throw InputError("edges do not form a path");
    }
    return p;
  }

  Path parse_path(Graph const& g, std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
      tokens.push_back(t);
    }
    if (tokens.empty()) {
      throw InputError("empty path");
    }
    if (tokens.size() == 1) {
      if (auto v = g.find_vertex(tokens[0])) {
        return Path(*v);
      }
    }
    std::vector<EdgeId> edges;
    for (auto const& t : tokens) {
      auto e = g.find_edge(t);
      if (!e) {
        throw InputError("unknown identifier " + t);
      }
      edges.push_back(*e);
    }
    VertexId start = g.source(edges.front());
    return make_path(g, start, std::move(edges));
  }

  VertexId path_range(Graph const& g, Path const& p) {
    return p.is_vertex() ? p.start() : g.range(p.edges().back());
  }

  std::optional<Path> concat(Graph const& g, Path const& p, Path const& q) {
    if (path_range(g, p) != q.start()) {
      return std::nullopt;
    }
    std::vector<EdgeId> edges;
    edges.reserve(p.length() + q.length());
    edges.insert(edges.end(), p.edges().begin(), p.edges().end());
    edges.insert(edges.end(), q.edges().begin(), q.edges().end());
    return Path(p.start(), std::move(edges));
  }

  std::optional<Path> strip_prefix(Graph const& g, Path const& p, Path const& q) {
    if (p.start() != q.start() || p.length() > q.length()
        || !std::equal(p.edges().begin(), p.edges().end(), q.edges().begin())) {
      return std::nullopt;
    }
    return Path(path_range(g, p),
                std::vector<EdgeId>(q.edges().begin() + p.length(), q.edges().end()));
  }

  bool path_leq(Graph const& g, Path const& a, Path const& b) {
    return strip_prefix(g, b, a).has_value();
  }

  std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_len) {
    std::vector<Path> result;
    for (VertexId v : g.vertices()) {
      result.emplace_back(v);
    }
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t layer_end = result.size();
      if (layer_begin == layer_end) {
        break;
      }
      std::vector<Path> next;
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        Path const& p = result[i];
        for (EdgeId e : g.out_edges(path_range(g, p))) {
          std::vector<EdgeId> edges = p.edges();
          edges.push_back(e);
          VertexId start = p.is_vertex() ? g.source(e) : p.start();
          next.emplace_back(start, std::move(edges));
        }
      }
      std::sort(next.begin(), next.end());
      layer_begin = layer_end;
      std::move(next.begin(), next.end(), std::back_inserter(result));
    }
    return result;
  }

  std::string format_path(Graph const& g, Path const& p) {
    if (p.is_vertex()) {
      return g.vertex_name(p.start());
    }
    std::string out;
    for (EdgeId e : p.edges()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += g.edge_name(e);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in graphs
  ////////////////////////////////////////////////////////////////////////

  Graph parallel_edges_graph() {
    return Graph::validate({{"v1", "v2"}, {{"e", "v1", "v2"}, {"f", "v1", "v2"}}}, "g1");
  }

  Graph rose_graph(std::size_t loops) {
    GraphDescription d;
    d.vertices = {"v"};
    for (std::size_t i = 0; i < loops; ++i) {
      d.edges.push_back({"p" + padded(i, loops), "v", "v"});
    }
    return Graph::validate(d, "rose:" + std::to_string(loops));
  }

  Graph ladder_graph(std::size_t rungs) {
    GraphDescription d;
    for (std::size_t n = 1; n <= rungs; ++n) {
      auto odd  = std::to_string(2 * n - 1);
      auto even = std::to_string(2 * n);
      d.vertices.push_back(odd);
      d.vertices.push_back(even);
      d.edges.push_back({"(" + odd + "," + even + ")", odd, even});
    }
    return Graph::validate(d, "ladder:" + std::to_string(rungs));
  }

  Graph builtin_graph(std::string_view name) {
    auto count_after = [&](std::string_view prefix) -> std::optional<std::size_t> {
      if (!name.starts_with(prefix)) {
        return std::nullopt;
      }
      auto digits = name.substr(prefix.size());
      if (digits.empty() || digits.size() > 6
          || !std::all_of(digits.begin(), digits.end(),
                          [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InputError("bad builtin graph size in " + std::string(name));
      }
      return std::stoul(std::string(digits));
    };
    if (name == "g1") {
      return parallel_edges_graph();
    }
    if (auto k = count_after("rose:")) {
      return rose_graph(*k);
    }
    if (auto n = count_after("ladder:")) {
      return ladder_graph(*n);
    }
    throw InputError("unknown builtin graph " + std::string(name));
  }

}  // namespace gisemi
