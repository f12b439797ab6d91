#include "gisemi/gis_element.hpp"

#include <algorithm>

#include "gisemi/errors.hpp"

namespace gisemi {

  GisElement GisElement::make(Graph const& g, Path u, Path v) {
    if (!is_valid_path(g, u) || !is_valid_path(g, v)) {
      throw InputError("element built from an invalid path");
    }
    if (path_range(g, u) != path_range(g, v)) {
      throw InputError("paths " + format_path(g, u) + " and " + format_path(g, v)
                       + " have different ranges");
    }
    return GisElement(std::move(u), std::move(v));
  }

  GisElement GisElement::from_path(Graph const& g, Path a) {
    Path r(path_range(g, a));
    return make(g, std::move(a), std::move(r));
  }

  GisElement gis_multiply(Graph const& g, GisElement const& lhs, GisElement const& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
      return GisElement::zero();
    }
    Path const& a = lhs.u();
    Path const& b = lhs.v();
    Path const& c = rhs.u();
    Path const& d = rhs.v();
    if (auto c1 = strip_prefix(g, b, c)) {
      return GisElement(*concat(g, a, *c1), d);
    }
    if (auto b1 = strip_prefix(g, c, b)) {
      return GisElement(a, *concat(g, d, *b1));
    }
    return GisElement::zero();
  }

  GisElement gis_invert(GisElement const& x) {
    if (x.is_zero()) {
      return x;
    }
    return GisElement(x.v(), x.u());
  }

  GisElement generator_to_element(Graph const& g, GisGenerator gen) {
    using Kind = GisGenerator::Kind;
    if (gen.kind == Kind::vertex) {
      if (gen.index >= g.vertex_count()) {
        throw InputError("unknown vertex #" + std::to_string(gen.index));
      }
      return GisElement::idempotent(Path(VertexId{gen.index}));
    }
    if (gen.index >= g.edge_count()) {
      throw InputError("unknown edge #" + std::to_string(gen.index));
    }
    EdgeId e{gen.index};
    Path   edge(g.source(e), {e});
    Path   end(g.range(e));
    if (gen.kind == Kind::edge) {
      return GisElement::make(g, std::move(edge), std::move(end));
    }
    return GisElement::make(g, std::move(end), std::move(edge));
  }

  GisElement reduce_word(Graph const& g, std::span<GisGenerator const> word) {
    if (word.empty()) {
      throw InputError("empty word");
    }
    GisElement acc = generator_to_element(g, word.front());
    for (auto const& gen : word.subspan(1)) {
      acc = gis_multiply(g, acc, generator_to_element(g, gen));
    }
    return acc;
  }

  bool is_idempotent(GisElement const& x) {
    return x.is_zero() || x.u() == x.v();
  }

  GisElement phi(GisElement const& x) {
    return x.is_zero() ? x : GisElement::idempotent(x.u());
  }

  GisElement psi(GisElement const& x) {
    return x.is_zero() ? x : GisElement::idempotent(x.v());
  }

  std::pair<GisElement, GisElement> h_pair(GisElement const& x) {
    return {phi(x), psi(x)};
  }

  std::vector<GisElement> enumerate_elements(Graph const& g,
                                             std::size_t  max_len,
                                             bool         include_zero) {
    std::vector<GisElement> result;
    if (include_zero) {
      result.push_back(GisElement::zero());
    }
    auto                  paths = enumerate_paths(g, max_len);
    std::vector<VertexId> ranges;
    ranges.reserve(paths.size());
    for (auto const& p : paths) {
      ranges.push_back(path_range(g, p));
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (ranges[i] == ranges[j]) {
          order.emplace_back(i, j);
        }
      }
    }
    for (auto [i, j] : order) {
      result.push_back(GisElement::make(g, paths[i], paths[j]));
    }
    return result;
  }

  std::string format_element(Graph const& g, GisElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    if (x.u().is_vertex() && x.v().is_vertex()) {
      return g.vertex_name(x.u().start());
    }
    std::string out;
    auto        append = [&out](std::string const& token) {
      if (!out.empty()) {
        out += ' ';
      }
      out += token;
    };
    for (EdgeId e : x.u().edges()) {
      append(g.edge_name(e));
    }
    auto const& inv = x.v().edges();
    for (auto it = inv.rbegin(); it != inv.rend(); ++it) {
      append(g.edge_name(*it) + "^-1");
    }
    return out;
  }

}  // namespace gisemi
