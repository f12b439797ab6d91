#ifndef GISEMI_VERIFY_HPP_
#define GISEMI_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gisemi/graph.hpp"
#include "gisemi/report.hpp"
#include "gisemi/topology.hpp"

namespace gisemi {

  struct VerifyOptions {
    std::size_t   max_len            = 3;
    std::size_t   trunc              = 5;
    std::uint64_t seed               = 1;
    std::size_t   confluence_samples = 10000;
    std::size_t   confluence_length  = 12;
    // Element bound for the topology sweep inside verify_all.
    std::size_t topology_len = 2;
  };

  // Inverse-semigroup laws on elements with |u|, |v| <= max_len:
  // associativity, xx^-1x = x, x^-1xx^-1 = x^-1, uniqueness of inverses
  // (searched among elements at 2 max_len), (xy)^-1 = y^-1x^-1, commuting
  // idempotents, injectivity of h_pair and the defining relations.
  SuiteReport verify_axioms(Graph const& g, std::size_t max_len);

  // verify_embedding for the default spec plus phi/psi preservation and
  // coverage of all four product cases.
  SuiteReport verify_embedding_suite(Graph const& g, std::size_t max_len);

  // The composite into P_2, the prefix-code relations q_i^-1 q_j for
  // i, j <= 8 and the P_omega -> P_2 map on indices < 6.
  SuiteReport verify_p2(Graph const& g, std::size_t max_len);

  // Rewriting soundness: stack reduction against leftmost and rightmost
  // rewriting on seeded random P_2 words, the homomorphism law on all P_2
  // words of length <= 6, P_1 against the bicyclic monoid, and the rose
  // graph isomorphism for 1, 2 and 3 loops at word length <= 4.
  SuiteReport verify_confluence(VerifyOptions const& options);

  // Length filters U_0..U_2 and cofinite filters excluding up to three
  // paths of length <= max_len: filter conditions, translation and product
  // witnesses, inversion symmetry, separation, the coarsest-topology
  // identity, both embedding identities and the ladder example.
  SuiteReport verify_topology(Graph const& g, std::size_t max_len, std::size_t trunc);

  SuiteReport verify_all(Graph const& g, VerifyOptions const& options);

  // Subsets of `items` with at most `k` members, smallest first.
  template <typename T>
  std::vector<std::vector<T>> small_subsets(std::vector<T> const& items, std::size_t k) {
    std::vector<std::vector<T>>           out{{}};
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (std::size_t size = 1; size <= k; ++size) {
      std::vector<std::vector<std::size_t>> next;
      for (auto const& idx : frontier) {
        for (std::size_t i = idx.empty() ? 0 : idx.back() + 1; i < items.size(); ++i) {
          auto grown = idx;
          grown.push_back(i);
          std::vector<T> subset;
          for (auto j : grown) {
            subset.push_back(items[j]);
          }
          out.push_back(std::move(subset));
          next.push_back(std::move(grown));
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

}  // namespace gisemi

#endif  // GISEMI_VERIFY_HPP_
