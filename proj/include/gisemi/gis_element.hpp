#ifndef GISEMI_GIS_ELEMENT_HPP_
#define GISEMI_GIS_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gisemi/graph.hpp"

namespace gisemi {

  // An element of the graph inverse semigroup G(E): either zero or uv^-1 in
  // normal form, with r(u) = r(v). Normal forms are unique, so equality is
  // structural.
  class GisElement {
   public:
    // Zero.
    GisElement() = default;

    static GisElement zero() {
      return GisElement();
    }

    // Throws InputError unless u and v are paths of g with a common range.
    static GisElement make(Graph const& g, Path u, Path v);

    // The idempotent uu^-1.
    static GisElement idempotent(Path u) {
      Path v = u;
      return GisElement(std::move(u), std::move(v));
    }

    // A path a viewed as the element a r(a)^-1.
    static GisElement from_path(Graph const& g, Path a);

    bool is_zero() const noexcept {
      return !_pair.has_value();
    }

    // Precondition: !is_zero().
    Path const& u() const {
      return _pair->first;
    }
    Path const& v() const {
      return _pair->second;
    }

    friend bool operator==(GisElement const&, GisElement const&)  = default;
    friend auto operator<=>(GisElement const&, GisElement const&) = default;

   private:
    friend GisElement gis_multiply(Graph const&, GisElement const&, GisElement const&);
    friend GisElement gis_invert(GisElement const&);

    GisElement(Path u, Path v) : _pair(std::in_place, std::move(u), std::move(v)) {}

    std::optional<std::pair<Path, Path>> _pair;
  };

  struct GisGenerator {
    enum class Kind : std::uint8_t { vertex, edge, edge_inverse };

    Kind          kind  = Kind::vertex;
    std::uint32_t index = 0;

    static GisGenerator vertex(VertexId v) {
      return {Kind::vertex, v.index};
    }
    static GisGenerator edge(EdgeId e) {
      return {Kind::edge, e.index};
    }
    static GisGenerator edge_inverse(EdgeId e) {
      return {Kind::edge_inverse, e.index};
    }

    friend bool operator==(GisGenerator const&, GisGenerator const&) = default;
  };

  // ab^-1 . cd^-1 is ac1 d^-1 if c = b c1, a (d b1)^-1 if b = c b1, and zero
  // otherwise. The b = c case is the first one with c1 a vertex.
  GisElement gis_multiply(Graph const& g, GisElement const& lhs, GisElement const& rhs);

  // (uv^-1)^-1 = vu^-1.
  GisElement gis_invert(GisElement const& x);

  // Throws InputError if the generator refers to a missing vertex or edge.
  GisElement generator_to_element(Graph const& g, GisGenerator gen);

  // Left fold of gis_multiply over the generator images. Throws InputError on
  // an empty word or unknown identifier.
  GisElement reduce_word(Graph const& g, std::span<GisGenerator const> word);

  bool                              is_idempotent(GisElement const& x);
  GisElement                        phi(GisElement const& x);  // xx^-1
  GisElement                        psi(GisElement const& x);  // x^-1x
  std::pair<GisElement, GisElement> h_pair(GisElement const& x);

  // Zero (when include_zero) followed by every uv^-1 with |u|, |v| <= max_len,
  // ordered by (u, v) in enumerate_paths order.
  std::vector<GisElement> enumerate_elements(Graph const& g,
                                             std::size_t  max_len,
                                             bool         include_zero = true);

  // Prints in the expression grammar: "0", a vertex name, or the edges of u
  // followed by the inverted edges of v, e.g. "e f^-1".
  std::string format_element(Graph const& g, GisElement const& x);

}  // namespace gisemi

#endif  // GISEMI_GIS_ELEMENT_HPP_
