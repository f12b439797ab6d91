#include "gisemi/embedding.hpp"

#include <map>
#include <set>

#include "gisemi/errors.hpp"

namespace gisemi {

  void EmbeddingSpec::validate() const {
    if (vertex_index.size() != graph.vertex_count() || edge_index.size() != graph.edge_count()) {
      throw InputError("embedding maps must cover every vertex and edge");
    }
    auto check = [this](std::vector<std::uint32_t> const& map, char const* what) {
      std::set<std::uint32_t> seen;
      for (auto i : map) {
        if (i >= arity) {
          throw InputError(std::string(what) + " index " + std::to_string(i) + " not below arity "
                           + std::to_string(arity));
        }
        if (!seen.insert(i).second) {
          throw InputError(std::string(what) + " map is not injective at " + std::to_string(i));
        }
      }
    };
    check(vertex_index, "vertex");
    check(edge_index, "edge");
  }

  EmbeddingSpec default_spec(Graph const& g) {
    EmbeddingSpec spec{g, {}, {}, g.vertex_count() + g.edge_count()};
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
      spec.vertex_index.push_back(i);
    }
    for (std::uint32_t j = 0; j < g.edge_count(); ++j) {
      spec.edge_index.push_back(static_cast<std::uint32_t>(g.vertex_count()) + j);
    }
    return spec;
  }

  PolyElement embed_generator(EmbeddingSpec const& spec, GisGenerator gen) {
    auto const& g  = spec.graph;
    auto        gv = [&spec](VertexId v) { return spec.vertex_index.at(v.index); };
    switch (gen.kind) {
      case GisGenerator::Kind::vertex:
        if (gen.index >= g.vertex_count()) {
          throw InputError("unknown vertex #" + std::to_string(gen.index));
        }
        return PolyElement::make({gv(VertexId{gen.index})}, {gv(VertexId{gen.index})});
      case GisGenerator::Kind::edge:
      case GisGenerator::Kind::edge_inverse: {
        if (gen.index >= g.edge_count()) {
          throw InputError("unknown edge #" + std::to_string(gen.index));
        }
        EdgeId      e{gen.index};
        PolyElement image =
            PolyElement::make({gv(g.source(e)), spec.edge_index[e.index]}, {gv(g.range(e))});
        return gen.kind == GisGenerator::Kind::edge ? image : poly_invert(image);
      }
    }
    return PolyElement::zero();
  }

  PolyElement embed_element(EmbeddingSpec const& spec, GisElement const& x) {
    if (x.is_zero()) {
      return PolyElement::zero();
    }
    auto encode = [&spec](Path const& p) {
      Word w{spec.vertex_index.at(p.start().index)};
      for (EdgeId e : p.edges()) {
        w.push_back(spec.edge_index.at(e.index));
      }
      return w;
    };
    return PolyElement::make(encode(x.u()), encode(x.v()));
  }

  PolyElement embed_element_oracle(EmbeddingSpec const& spec, GisElement const& x) {
    if (x.is_zero()) {
      return PolyElement::zero();
    }
    if (x.u().is_vertex() && x.v().is_vertex()) {
      return embed_generator(spec, GisGenerator::vertex(x.u().start()));
    }
    std::vector<PolyElement> factors;
    for (EdgeId e : x.u().edges()) {
      factors.push_back(embed_generator(spec, GisGenerator::edge(e)));
    }
    auto const& v = x.v().edges();
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      factors.push_back(embed_generator(spec, GisGenerator::edge_inverse(*it)));
    }
    PolyElement acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) {
      acc = poly_multiply(acc, factors[k]);
    }
    return acc;
  }

  PolyElement embed_countable_into_p2(EmbeddingSpec const& spec, GisElement const& x) {
    return embed_omega_into_p2(embed_element(spec, x));
  }

  PolyElement rose_element_to_poly(Graph const& g, GisElement const& x) {
    if (g.vertex_count() != 1) {
      throw InputError("rose isomorphism needs a one-vertex graph");
    }
    if (x.is_zero()) {
      return PolyElement::zero();
    }
    auto word = [](Path const& p) {
      Word w;
      for (EdgeId e : p.edges()) {
        w.push_back(e.index);
      }
      return w;
    };
    return PolyElement::make(word(x.u()), word(x.v()));
  }

  int product_case(Graph const& g, GisElement const& lhs, GisElement const& rhs) {
    if (auto u = strip_prefix(g, lhs.v(), rhs.u())) {
      return u->is_vertex() ? 3 : 1;
    }
    if (strip_prefix(g, rhs.u(), lhs.v())) {
      return 2;
    }
    return 4;
  }

  void EmbeddingReport::merge(EmbeddingReport const& other) {
    elements_checked += other.elements_checked;
    pairs_checked += other.pairs_checked;
    for (std::size_t k = 0; k < case_histogram.size(); ++k) {
      case_histogram[k] += other.case_histogram[k];
    }
    if (!other.passed) {
      passed = false;
      if (!counterexample) {
        counterexample = other.counterexample;
      }
    }
  }

  EmbeddingReport verify_embedding(EmbeddingSpec const& spec, std::size_t max_len) {
    spec.validate();
    Graph const&    g = spec.graph;
    EmbeddingReport report;
    report.graph = g.label();
    report.arity = spec.arity;
    report.bound = max_len;

    auto fail = [&report](std::string what) {
      if (report.passed) {
        report.passed         = false;
        report.counterexample = std::move(what);
      }
    };
    auto show = [&g](GisElement const& x) { return format_element(g, x); };

    auto                               elements = enumerate_elements(g, max_len);
    std::vector<PolyElement>           images;
    std::map<PolyElement, std::size_t> seen;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      auto const& x     = elements[i];
      PolyElement image = embed_element(spec, x);
      images.push_back(image);
      ++report.elements_checked;

      if (!x.is_zero() && image.is_zero()) {
        fail("F(" + show(x) + ") = 0");
      }
      if (auto [it, fresh] = seen.emplace(image, i); !fresh) {
        fail("F(" + show(elements[it->second]) + ") = F(" + show(x) + ") = " + format_poly(image));
      }
      if (auto oracle = embed_element_oracle(spec, x); oracle != image) {
        fail("closed form " + format_poly(image) + " differs from generator product "
             + format_poly(oracle) + " at " + show(x));
      }
      if (auto inv = embed_element(spec, gis_invert(x)); inv != poly_invert(image)) {
        fail("F(x^-1) = " + format_poly(inv) + " but F(x)^-1 = " + format_poly(poly_invert(image))
             + " at x = " + show(x));
      }
      if (!x.is_zero()
          && (image.x().size() != x.u().length() + 1 || image.y().size() != x.v().length() + 1)) {
        fail("word-length law fails at " + show(x));
      }
    }

    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto const& x = elements[i];
        auto const& y = elements[j];
        ++report.pairs_checked;
        if (!x.is_zero() && !y.is_zero()) {
          ++report.case_histogram[static_cast<std::size_t>(product_case(g, x, y) - 1)];
        }
        auto lhs = embed_element(spec, gis_multiply(g, x, y));
        auto rhs = poly_multiply(images[i], images[j]);
        if (lhs != rhs) {
          fail("x = " + show(x) + ", y = " + show(y) + ": F(xy) = " + format_poly(lhs)
               + ", F(x)F(y) = " + format_poly(rhs));
        }
      }
    }
    return report;
  }

}  // namespace gisemi
