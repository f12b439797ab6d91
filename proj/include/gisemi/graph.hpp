#ifndef GISEMI_GRAPH_HPP_
#define GISEMI_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gisemi {

  // Vertices and edges are referred to by their position in the graph's
  // identifier-sorted tables, so comparing ids compares identifiers
  // lexicographically.
  struct VertexId {
    std::uint32_t index = 0;

    auto operator<=>(VertexId const&) const = default;
  };

  struct EdgeId {
    std::uint32_t index = 0;

    auto operator<=>(EdgeId const&) const = default;
  };

  struct RawEdge {
    std::string id;
    std::string src;
    std::string dst;
  };

  // Unvalidated graph as read from a file or built by hand.
  struct GraphDescription {
    std::vector<std::string> vertices;
    std::vector<RawEdge>     edges;
  };

  // Finite directed multigraph. Immutable once validated.
  class Graph {
   public:
    // Throws InputError naming the offending identifier on a dangling edge
    // endpoint, a duplicate identifier, or an identifier that cannot be
    // written in the expression grammar.
    static Graph validate(GraphDescription const& raw, std::string label = {});

    std::size_t vertex_count() const noexcept {
      return _vertex_names.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }

    std::string const& vertex_name(VertexId v) const;
    std::string const& edge_name(EdgeId e) const;

    VertexId source(EdgeId e) const;
    VertexId range(EdgeId e) const;

    // Edges leaving v, sorted by identifier.
    std::span<EdgeId const> out_edges(VertexId v) const;

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId>   edges() const;

    // Short human-readable origin, e.g. "rose:2" or a file name.
    std::string const& label() const noexcept {
      return _label;
    }

    GraphDescription describe() const;

   private:
    struct EdgeRecord {
      std::string name;
      VertexId    src;
      VertexId    dst;
    };

    std::string                      _label;
    std::vector<std::string>         _vertex_names;
    std::vector<EdgeRecord>          _edges;
    std::vector<std::vector<EdgeId>> _out;
  };

  // A start vertex plus a composable edge sequence. A vertex is the path of
  // length zero starting at it.
  class Path {
   public:
    Path() = default;
    explicit Path(VertexId start, std::vector<EdgeId> edges = {})
        : _start(start), _edges(std::move(edges)) {}

    VertexId start() const noexcept {
      return _start;
    }
    std::vector<EdgeId> const& edges() const noexcept {
      return _edges;
    }
    std::size_t length() const noexcept {
      return _edges.size();
    }
    bool is_vertex() const noexcept {
      return _edges.empty();
    }

    friend bool operator==(Path const&, Path const&)  = default;
    friend auto operator<=>(Path const&, Path const&) = default;

   private:
    VertexId            _start;
    std::vector<EdgeId> _edges;
  };

  // Checked constructor; throws InputError if the edges do not compose.
  Path make_path(Graph const& g, VertexId start, std::vector<EdgeId> edges);
  // Path from a whitespace separated list of edge names, or a single vertex
  // name for a length-zero path.
  Path parse_path(Graph const& g, std::string_view text);

  bool is_valid_path(Graph const& g, Path const& p);

  inline VertexId path_source(Path const& p) noexcept {
    return p.start();
  }
  VertexId path_range(Graph const& g, Path const& p);

  // Defined iff path_range(p) == path_source(q).
  std::optional<Path> concat(Graph const& g, Path const& p, Path const& q);

  // The k with q == concat(p, k), if p is a prefix of q.
  std::optional<Path> strip_prefix(Graph const& g, Path const& p, Path const& q);

  // a <= b iff b is a prefix of a.
  bool path_leq(Graph const& g, Path const& a, Path const& b);

  // Every path of length <= max_len, ordered by length and then by
  // (start, edges) in identifier order.
  std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_len);

  // Vertex name for a length-zero path, otherwise the edge names separated
  // by single spaces.
  std::string format_path(Graph const& g, Path const& p);

  // The graph with vertices v1, v2 and two parallel edges e, f: v1 -> v2.
  Graph parallel_edges_graph();
  // One vertex "v" with k loops p0, ..., p{k-1}.
  Graph rose_graph(std::size_t loops);
  // Vertices 1..2N and one edge (2n-1,2n): 2n-1 -> 2n per rung.
  Graph ladder_graph(std::size_t rungs);

  // Parses "rose:K", "ladder:N" or "g1". Throws InputError otherwise.
  Graph builtin_graph(std::string_view name);

}  // namespace gisemi

#endif  // GISEMI_GRAPH_HPP_
