#ifndef GISEMI_TOPOLOGY_HPP_
#define GISEMI_TOPOLOGY_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gisemi/embedding.hpp"
#include "gisemi/gis_element.hpp"
#include "gisemi/graph.hpp"
#include "gisemi/polycyclic.hpp"
#include "gisemi/report.hpp"

namespace gisemi {

  // A (possibly infinite) set given by its membership predicate.
  template <typename T>
  class Subset {
   public:
    Subset(std::string label, std::function<bool(T const&)> contains)
        : _label(std::move(label)), _contains(std::move(contains)) {}

    bool contains(T const& t) const {
      return _contains(t);
    }
    std::string const& label() const noexcept {
      return _label;
    }

   private:
    std::string                   _label;
    std::function<bool(T const&)> _contains;
  };

  using PathSet = Subset<Path>;
  using WordSet = Subset<Word>;

  PathSet all_paths();
  // U_n = {u : |u| > n}.
  PathSet longer_than(std::size_t n);
  PathSet all_paths_except(Graph const& g, std::vector<Path> excluded);
  WordSet all_words_except(std::vector<Word> excluded);

  // Filter generated by the sets U_m, m >= n.
  struct LengthFilter {
    std::size_t n = 0;
  };
  // The cofinite filter, represented by the base set Path(E) \ excluded.
  struct CofiniteFilter {
    std::vector<Path> excluded;
  };
  // Finite list of base sets, meaningful up to the stated truncation.
  struct ExplicitBase {
    std::string          label;
    std::vector<PathSet> sets;
    std::size_t          truncation = 0;
  };
  using FilterSpec = std::variant<LengthFilter, CofiniteFilter, ExplicitBase>;

  std::string describe_filter(Graph const& g, FilterSpec const& filter);

  // The distinguished base set: U_n, or the cofinite complement. For an
  // explicit base, the first listed set.
  PathSet base_set(Graph const& g, FilterSpec const& filter);

  // Whether some base set of the filter lies inside s, decided on paths of
  // length <= trunc.
  bool filter_contains(Graph const&      g,
                       FilterSpec const& filter,
                       PathSet const&    s,
                       std::size_t       trunc);

  // x lies in U_F(0) = {ab^-1 : a, b in F} + {0}.
  bool nbhd_contains(PathSet const& f, GisElement const& x);
  bool nbhd_contains(WordSet const& f, PolyElement const& x);

  // Raised when a filter has no ideal base set inside a given set within
  // the truncation window.
  class NoIdealBase : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // F1 = F \ {bk : ak not in F} is again in the filter. Cofinite filters
  // get an explicit finite complement, length filters the bound
  // F1 >= U_{n+|b|}. Throws InputError if r(a) != r(b).
  Check check_condition_i(
      Graph const& g, FilterSpec const& filter, Path const& a, Path const& b, std::size_t trunc);

  // Every Path(E) \ {p} with |p| < trunc is in the filter.
  Check check_condition_ii(Graph const& g, FilterSpec const& filter, std::size_t trunc);

  // Extension closed: u in s and |u| < trunc imply ue in s for every edge e
  // out of r(u).
  bool is_ideal(PathSet const& s, Graph const& g, std::size_t trunc);

  std::vector<Path> prefix_closure(Graph const& g, std::vector<Path> const& paths);

  // Complement of the prefix closure of the excluded set: the largest
  // extension-closed subset of the cofinite base set.
  PathSet largest_ideal_inside(Graph const& g, CofiniteFilter const& filter);

  // Largest extension-closed subset of s as seen on paths of length <=
  // trunc: u belongs iff every extension of u up to that length lies in s.
  PathSet largest_ideal_within(Graph const& g, PathSet const& s, std::size_t trunc);

  struct Witness {
    PathSet set;
    Check   check;
  };

  // H = F \ (P_b + {bk : ak not in F}); checks x U_H(0) <= U_F(0) over all
  // elements with path lengths <= trunc. Throws InputError for x = 0.
  Witness witness_right_translation(Graph const&      g,
                                    GisElement const& x,
                                    PathSet const&    f,
                                    std::size_t       trunc);

  // G = F \ (P_a + {ak : bk not in F}); checks U_G(0) x <= U_F(0).
  Witness witness_left_translation(Graph const&      g,
                                   GisElement const& x,
                                   PathSet const&    f,
                                   std::size_t       trunc);

  // An ideal T inside the base set with U_T(0) U_T(0) <= U_T(0) <= U_F(0),
  // checked at trunc. For an explicit base, every listed set is tried as F.
  // Throws NoIdealBase when no such T is in the filter.
  Witness witness_product(Graph const& g, FilterSpec const& filter, std::size_t trunc);
  // Same, with the product sweep limited to path lengths <= sweep_len.
  Witness witness_product(Graph const&      g,
                          FilterSpec const& filter,
                          std::size_t       trunc,
                          std::size_t       sweep_len);

  // U_F(0) equals phi^-1(H) cap psi^-1(H) with H = {uu^-1 : u in F} + {0},
  // over elements at trunc.
  Check coarsest_identity_check(Graph const& g, PathSet const& f, std::size_t trunc);

  // x in U_n(0) iff min_word_length(F(x)) > n + 1, over elements at trunc.
  // Throws InputError unless trunc > n + 1.
  Check main1_identity_check(EmbeddingSpec const& spec, std::size_t n, std::size_t trunc);

  using Homomorphism = std::function<PolyElement(GisElement const&)>;

  // Continuity at zero: for the cofinite F = words \ excluded,
  // H = {a : f(aa^-1) = cc^-1 with c in F} and f(U_H(0)) <= U_F(0).
  Witness main2_continuity_witness(Graph const&             g,
                                   Homomorphism const&      f,
                                   std::vector<Word> const& excluded,
                                   std::size_t              trunc);

  // Openness on the image: for the cofinite H = paths \ excluded with
  // f(a_i) = u_i v_i^-1, G = words \ {u_i, v_i} and
  // U_G(0) cap f(G(E)) <= f(U_H(0)).
  Check main2_openness_witness(Graph const&             g,
                               Homomorphism const&      f,
                               std::vector<Path> const& excluded,
                               std::size_t              trunc);

  // The ladder graph with `rungs` rungs: the two one-sided containments
  // into {0}, U_F U_F = U_F for every F inside E0, and the largest ideal
  // inside each E0 minus at most two vertices missing every odd vertex.
  TopologyReport ladder_example_suite(std::size_t rungs);

}  // namespace gisemi

#endif  // GISEMI_TOPOLOGY_HPP_
