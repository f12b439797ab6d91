#include "gisemi/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gisemi {

  namespace {
    using nlohmann::ordered_json;

    char const* status(bool passed) {
      return passed ? "pass" : "fail";
    }

    ordered_json check_json(Check const& c) {
      ordered_json j = {{"name", c.name}, {"status", status(c.passed)}, {"cases", c.cases}};
      if (c.witness) {
        j["witness"] = *c.witness;
      }
      return j;
    }

    ordered_json embedding_json(EmbeddingReport const& r) {
      ordered_json j = {{"graph", r.graph},
                        {"arity", r.arity},
                        {"bound", r.bound},
                        {"elements_checked", r.elements_checked},
                        {"pairs_checked", r.pairs_checked},
                        {"case_histogram",
                         {{"1", r.case_histogram[0]},
                          {"2", r.case_histogram[1]},
                          {"3", r.case_histogram[2]},
                          {"4", r.case_histogram[3]}}},
                        {"status", status(r.passed)}};
      if (r.counterexample) {
        j["counterexample"] = *r.counterexample;
      }
      return j;
    }

    ordered_json topology_json(TopologyReport const& r) {
      ordered_json checks = ordered_json::array();
      for (auto const& c : r.checks) {
        checks.push_back(check_json(c));
      }
      return {{"filter", r.filter},
              {"truncation", r.truncation},
              {"status", status(r.passed())},
              {"checks", checks}};
    }
  }  // namespace

  bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.passed; })
           && std::all_of(embeddings.begin(), embeddings.end(),
                          [](auto const& e) { return e.passed; })
           && std::all_of(topology.begin(), topology.end(),
                          [](auto const& t) { return t.passed(); });
  }

  void SuiteReport::append(SuiteReport const& other) {
    for (auto c : other.checks) {
      c.name = other.suite + "/" + c.name;
      checks.push_back(std::move(c));
    }
    embeddings.insert(embeddings.end(), other.embeddings.begin(), other.embeddings.end());
    topology.insert(topology.end(), other.topology.begin(), other.topology.end());
  }

  std::string to_json(EmbeddingReport const& r, int indent) {
    return embedding_json(r).dump(indent);
  }

  std::string to_json(TopologyReport const& r, int indent) {
    return topology_json(r).dump(indent);
  }

  std::string to_json(SuiteReport const& r, int indent) {
    ordered_json j = {{"suite", r.suite}};
    if (!r.graph.empty()) {
      j["graph"] = r.graph;
    }
    j["bound"] = r.bound;
    if (r.truncation != 0) {
      j["truncation"] = r.truncation;
    }
    j["status"]  = status(r.passed());
    j["seconds"] = r.seconds;
    j["checks"]  = ordered_json::array();
    for (auto const& c : r.checks) {
      j["checks"].push_back(check_json(c));
    }
    if (!r.embeddings.empty()) {
      j["embeddings"] = ordered_json::array();
      for (auto const& e : r.embeddings) {
        j["embeddings"].push_back(embedding_json(e));
      }
    }
    if (!r.topology.empty()) {
      j["topology"] = ordered_json::array();
      for (auto const& t : r.topology) {
        j["topology"].push_back(topology_json(t));
      }
    }
    return j.dump(indent);
  }

  std::string to_text(EmbeddingReport const& r) {
    std::ostringstream out;
    // The finite arity |E0| + |E1| stands in for max(|E0|, |E1|, omega);
    // P_m sits inside P_lambda for m <= lambda by index inclusion.
    out << "embedding of G(" << r.graph << ") into P_" << r.arity
        << " (finite arity; P_m embeds in P_lambda for m <= lambda)\n"
        << "  bound " << r.bound << ", elements " << r.elements_checked << ", pairs "
        << r.pairs_checked << "\n"
        << "  cases 1:" << r.case_histogram[0] << " 2:" << r.case_histogram[1]
        << " 3:" << r.case_histogram[2] << " 4:" << r.case_histogram[3] << "\n"
        << "  status " << status(r.passed) << "\n";
    if (r.counterexample) {
      out << "  counterexample: " << *r.counterexample << "\n";
    }
    return out.str();
  }

  std::string to_text(SuiteReport const& r) {
    std::ostringstream out;
    out << r.suite;
    if (!r.graph.empty()) {
      out << " on " << r.graph;
    }
    out << " (bound " << r.bound;
    if (r.truncation != 0) {
      out << ", truncation " << r.truncation;
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    out << ", " << secs << " s)\n";
    for (auto const& c : r.checks) {
      out << "  [" << status(c.passed) << "] " << c.name << " (" << c.cases << " cases)\n";
      if (c.witness) {
        out << "         witness: " << *c.witness << "\n";
      }
    }
    for (auto const& e : r.embeddings) {
      out << to_text(e);
    }
    out << "status " << status(r.passed()) << "\n";
    return out.str();
  }

}  // namespace gisemi
