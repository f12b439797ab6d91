#ifndef GISEMI_EMBEDDING_HPP_
#define GISEMI_EMBEDDING_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gisemi/gis_element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/polycyclic.hpp"

namespace gisemi {

  // The data fixing the embedding F: G(E) -> P_arity. vertex_index and
  // edge_index are indexed by VertexId/EdgeId and play the roles of the two
  // injections into the positive generators.
  struct EmbeddingSpec {
    Graph                      graph;
    std::vector<std::uint32_t> vertex_index;
    std::vector<std::uint32_t> edge_index;
    std::size_t                arity = 0;

    // Throws InputError unless both maps are injective, total and below
    // arity.
    void validate() const;
  };

  // Vertex i -> i, edge j -> |E0| + j, arity |E0| + |E1|.
  EmbeddingSpec default_spec(Graph const& g);

  // F(a) = g(a) g(a)^-1, F(e) = g(s(e)) h(e) g(r(e))^-1, F(e^-1) = F(e)^-1.
  PolyElement embed_generator(EmbeddingSpec const& spec, GisGenerator gen);

  // Closed form: uv^-1 -> [g(s(u)) h(u_1) ... h(u_n)][g(s(v)) h(v_1) ...]^-1.
  PolyElement embed_element(EmbeddingSpec const& spec, GisElement const& x);

  // Product F(u_1) ... F(u_n) F(v_m^-1) ... F(v_1^-1) evaluated with
  // poly_multiply; F(a) when u and v are both the vertex a.
  PolyElement embed_element_oracle(EmbeddingSpec const& spec, GisElement const& x);

  // embed_omega_into_p2 after embed_element.
  PolyElement embed_countable_into_p2(EmbeddingSpec const& spec, GisElement const& x);

  // On a one-vertex graph, the isomorphism G(E) -> P_|E1| sending the j-th
  // loop to p_j. Throws InputError on graphs with more than one vertex.
  PolyElement rose_element_to_poly(Graph const& g, GisElement const& x);

  // Which branch of the product ab^-1 . cd^-1 applies for nonzero operands:
  // 1 when c = bu with |u| > 0, 2 when b = cv with |v| > 0, 3 when b = c,
  // 4 when the product is zero.
  int product_case(Graph const& g, GisElement const& lhs, GisElement const& rhs);

  struct EmbeddingReport {
    std::string                graph;
    std::size_t                arity            = 0;
    std::size_t                bound            = 0;
    std::size_t                elements_checked = 0;
    std::size_t                pairs_checked    = 0;
    std::array<std::size_t, 4> case_histogram{};
    bool                       passed = true;
    std::optional<std::string> counterexample;

    // Combines sweeps over disjoint pair ranges; keeps the first
    // counterexample.
    void merge(EmbeddingReport const& other);

    bool all_cases_hit() const {
      for (auto n : case_histogram) {
        if (n == 0) {
          return false;
        }
      }
      return true;
    }
  };

  // Exhaustive check over elements with |u|, |v| <= max_len: F(x) != 0 for
  // x != 0, injectivity, F(xy) = F(x)F(y), F(x^-1) = F(x)^-1, closed form
  // equal to the generator product, and the word-length law.
  EmbeddingReport verify_embedding(EmbeddingSpec const& spec, std::size_t max_len);

}  // namespace gisemi

#endif  // GISEMI_EMBEDDING_HPP_
