#include "oracles.hpp"

#include <algorithm>

namespace oracle {

  using gisemi::EdgeId;
  using gisemi::VertexId;
  using Kind = GisGenerator::Kind;

  std::vector<std::vector<GisGenerator>> generator_words(Graph const& g, std::size_t length) {
    std::vector<GisGenerator> alphabet;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      alphabet.push_back({Kind::vertex, v});
    }
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      alphabet.push_back({Kind::edge, e});
      alphabet.push_back({Kind::edge_inverse, e});
    }
    std::vector<std::vector<GisGenerator>> result{{}};
    for (std::size_t k = 0; k < length; ++k) {
      std::vector<std::vector<GisGenerator>> next;
      for (auto const& w : result) {
        for (auto const& a : alphabet) {
          next.push_back(w);
          next.back().push_back(a);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  namespace {
    enum class Step { keep, replace, annihilate };

    // Rewrites the adjacent pair (x, y) in place into `out`.
    Step rewrite_pair(Graph const& g, GisGenerator x, GisGenerator y, GisGenerator& out) {
      auto src     = [&g](std::uint32_t e) { return g.source(EdgeId{e}).index; };
      auto rng     = [&g](std::uint32_t e) { return g.range(EdgeId{e}).index; };
      auto keep_if = [&out](bool ok, GisGenerator r) {
        out = r;
        return ok ? Step::replace : Step::annihilate;
      };
      switch (x.kind) {
        case Kind::vertex:
          switch (y.kind) {
            case Kind::vertex:
              return keep_if(x.index == y.index, x);
            case Kind::edge:
              return keep_if(src(y.index) == x.index, y);
            case Kind::edge_inverse:
              return keep_if(rng(y.index) == x.index, y);
          }
          break;
        case Kind::edge:
          switch (y.kind) {
            case Kind::vertex:
              return keep_if(rng(x.index) == y.index, x);
            case Kind::edge:
              return rng(x.index) == src(y.index) ? Step::keep : Step::annihilate;
            case Kind::edge_inverse:
              return rng(x.index) == rng(y.index) ? Step::keep : Step::annihilate;
          }
          break;
        case Kind::edge_inverse:
          switch (y.kind) {
            case Kind::vertex:
              return keep_if(src(x.index) == y.index, x);
            case Kind::edge:
              return keep_if(x.index == y.index, {Kind::vertex, rng(x.index)});
            case Kind::edge_inverse:
              return src(x.index) == rng(y.index) ? Step::keep : Step::annihilate;
          }
          break;
      }
      return Step::keep;
    }
  }  // namespace

  GisElement rewrite_word(Graph const& g, std::vector<GisGenerator> word) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        GisGenerator out;
        Step         s = rewrite_pair(g, word[i], word[i + 1], out);
        if (s == Step::annihilate) {
          return GisElement::zero();
        }
        if (s == Step::replace) {
          word[i] = out;
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          changed = true;
          break;
        }
      }
    }
    if (word.size() == 1 && word[0].kind == Kind::vertex) {
      Path v(VertexId{word[0].index});
      return GisElement::make(g, v, v);
    }
    std::vector<EdgeId> u_edges;
    std::vector<EdgeId> v_edges;
    for (auto const& x : word) {
      if (x.kind == Kind::edge) {
        u_edges.push_back(EdgeId{x.index});
      } else {
        v_edges.insert(v_edges.begin(), EdgeId{x.index});
      }
    }
    VertexId top     = u_edges.empty() ? g.range(v_edges.back()) : g.range(u_edges.back());
    VertexId u_start = u_edges.empty() ? top : g.source(u_edges.front());
    VertexId v_start = v_edges.empty() ? top : g.source(v_edges.front());
    return GisElement::make(g, gisemi::make_path(g, u_start, u_edges),
                            gisemi::make_path(g, v_start, v_edges));
  }

  std::size_t count_paths(Graph const& g, std::size_t max_len) {
    // ending[w] = number of paths of the current length ending at w.
    std::vector<std::size_t> ending(g.vertex_count(), 1);
    std::size_t              total = g.vertex_count();
    for (std::size_t k = 1; k <= max_len; ++k) {
      std::vector<std::size_t> next(g.vertex_count(), 0);
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        next[g.range(EdgeId{e}).index] += ending[g.source(EdgeId{e}).index];
      }
      ending = std::move(next);
      for (auto c : ending) {
        total += c;
      }
    }
    return total;
  }

  std::size_t count_elements(Graph const& g, std::size_t max_len) {
    std::vector<std::size_t> ending(g.vertex_count(), 1);
    std::vector<std::size_t> upto(g.vertex_count(), 1);
    for (std::size_t k = 1; k <= max_len; ++k) {
      std::vector<std::size_t> next(g.vertex_count(), 0);
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        next[g.range(EdgeId{e}).index] += ending[g.source(EdgeId{e}).index];
      }
      ending = std::move(next);
      for (std::size_t w = 0; w < upto.size(); ++w) {
        upto[w] += ending[w];
      }
    }
    std::size_t total = 0;
    for (auto c : upto) {
      total += c * c;
    }
    return total;
  }

  std::optional<Path> act(Graph const& g, GisElement const& x, Path const& p) {
    if (x.is_zero()) {
      return std::nullopt;
    }
    auto const& b = x.v();
    if (b.start() != p.start() || b.length() > p.length()
        || !std::equal(b.edges().begin(), b.edges().end(), p.edges().begin())) {
      return std::nullopt;
    }
    std::vector<EdgeId> edges = x.u().edges();
    edges.insert(edges.end(), p.edges().begin() + static_cast<std::ptrdiff_t>(b.length()),
                 p.edges().end());
    return gisemi::make_path(g, x.u().start(), edges);
  }

  std::optional<Word> act(PolyElement const& x, Word const& w) {
    if (x.is_zero()) {
      return std::nullopt;
    }
    auto const& b = x.y();
    if (b.size() > w.size() || !std::equal(b.begin(), b.end(), w.begin())) {
      return std::nullopt;
    }
    Word out = x.x();
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(b.size()), w.end());
    return out;
  }

  std::optional<Word> act(std::vector<PolyLetter> const& letters, Word const& w) {
    std::optional<Word> cur = w;
    for (auto it = letters.rbegin(); it != letters.rend() && cur; ++it) {
      if (!it->inverse) {
        cur->insert(cur->begin(), it->index);
      } else if (!cur->empty() && cur->front() == it->index) {
        cur->erase(cur->begin());
      } else {
        cur.reset();
      }
    }
    return cur;
  }

  std::vector<Word> words(std::uint32_t arity, std::size_t max_len) {
    std::vector<Word> result{{}};
    std::vector<Word> layer{{}};
    for (std::size_t k = 0; k < max_len; ++k) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (std::uint32_t i = 0; i < arity; ++i) {
          next.push_back(w);
          next.back().push_back(i);
        }
      }
      result.insert(result.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return result;
  }

  std::vector<std::vector<PolyLetter>> letter_words(std::uint32_t arity, std::size_t length) {
    std::vector<std::vector<PolyLetter>> result{{}};
    for (std::size_t k = 0; k < length; ++k) {
      std::vector<std::vector<PolyLetter>> next;
      for (auto const& w : result) {
        for (std::uint32_t i = 0; i < arity; ++i) {
          for (bool inv : {false, true}) {
            next.push_back(w);
            next.back().push_back({i, inv});
          }
        }
      }
      result = std::move(next);
    }
    return result;
  }

  Bicyclic bicyclic_from_letters(std::vector<PolyLetter> const& letters) {
    Bicyclic r;
    for (auto const& l : letters) {
      if (l.inverse) {
        ++r.b;  // p
      } else if (r.b > 0) {
        --r.b;  // pq = 1
      } else {
        ++r.a;  // q
      }
    }
    return r;
  }

}  // namespace oracle
