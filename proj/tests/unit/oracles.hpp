#ifndef GISEMI_TESTS_ORACLES_HPP_
#define GISEMI_TESTS_ORACLES_HPP_

// Independent reference implementations used to derive expected values.
// None of them calls the library's multiplication or reduction code.

#include <cstddef>
#include <optional>
#include <vector>

#include "gisemi/gis_element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/polycyclic.hpp"

namespace oracle {

  using gisemi::GisElement;
  using gisemi::GisGenerator;
  using gisemi::Graph;
  using gisemi::Path;
  using gisemi::PolyElement;
  using gisemi::PolyLetter;
  using gisemi::Word;

  // Every generator word of the given length over vertices, edges and
  // inverse edges.
  std::vector<std::vector<GisGenerator>> generator_words(Graph const& g, std::size_t length);

  // Reduces a generator word by rewriting adjacent pairs with the defining
  // relations, then reads off the normal form. Returns zero when a rule
  // annihilates the word.
  GisElement rewrite_word(Graph const& g, std::vector<GisGenerator> word);

  // Number of paths of length <= max_len, by adjacency-matrix powers.
  std::size_t count_paths(Graph const& g, std::size_t max_len);

  // Number of nonzero elements uv^-1 with |u|, |v| <= max_len, from the
  // per-vertex counts of paths ending there.
  std::size_t count_elements(Graph const& g, std::size_t max_len);

  // Partial action of x = ab^-1 on paths: bk maps to ak.
  std::optional<Path> act(Graph const& g, GisElement const& x, Path const& p);

  // Partial action of P_lambda on words: for x = ab^-1, bk maps to ak.
  std::optional<Word> act(PolyElement const& x, Word const& w);

  // Composite action of a letter word, applied right to left.
  std::optional<Word> act(std::vector<PolyLetter> const& letters, Word const& w);

  // All words over {0, .., arity - 1} of length <= max_len.
  std::vector<Word> words(std::uint32_t arity, std::size_t max_len);

  // All letter words of exactly the given length over p_i, p_i^-1, i < arity.
  std::vector<std::vector<PolyLetter>> letter_words(std::uint32_t arity, std::size_t length);

  // Bicyclic monoid <q, p | pq = 1> in the form q^a p^b.
  struct Bicyclic {
    std::size_t a = 0;
    std::size_t b = 0;

    friend bool operator==(Bicyclic const&, Bicyclic const&) = default;
  };
  Bicyclic bicyclic_from_letters(std::vector<PolyLetter> const& letters);

}  // namespace oracle

#endif  // GISEMI_TESTS_ORACLES_HPP_
