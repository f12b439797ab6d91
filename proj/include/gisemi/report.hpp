#ifndef GISEMI_REPORT_HPP_
#define GISEMI_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gisemi/embedding.hpp"

namespace gisemi {

  // One named property checked over `cases` instances. Keeps the first
  // counterexample only.
  struct Check {
    std::string                name;
    bool                       passed = true;
    std::size_t                cases  = 0;
    std::optional<std::string> witness;

    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    void fail(std::string w) {
      if (passed) {
        passed  = false;
        witness = std::move(w);
      }
    }
    void require(bool ok, std::string const& w) {
      ++cases;
      if (!ok) {
        fail(w);
      }
    }
    // Builds the witness only on failure.
    template <typename F>
      requires std::is_invocable_r_v<std::string, F>
    void require(bool ok, F&& witness) {
      ++cases;
      if (!ok) {
        fail(std::forward<F>(witness)());
      }
    }
    void absorb(Check const& other) {
      cases += other.cases;
      if (!other.passed) {
        fail(other.name + ": " + other.witness.value_or(""));
      }
    }
  };

  struct TopologyReport {
    std::string        filter;
    std::size_t        truncation = 0;
    std::vector<Check> checks;

    bool passed() const;
  };

  struct SuiteReport {
    std::string                  suite;
    std::string                  graph;
    std::size_t                  bound      = 0;
    std::size_t                  truncation = 0;
    std::vector<Check>           checks;
    std::vector<EmbeddingReport> embeddings;
    std::vector<TopologyReport>  topology;
    double                       seconds = 0.0;

    bool passed() const;
    void append(SuiteReport const& other);
  };

  std::string to_json(EmbeddingReport const& r, int indent = 2);
  std::string to_json(TopologyReport const& r, int indent = 2);
  std::string to_json(SuiteReport const& r, int indent = 2);

  std::string to_text(EmbeddingReport const& r);
  std::string to_text(SuiteReport const& r);

}  // namespace gisemi

#endif  // GISEMI_REPORT_HPP_
