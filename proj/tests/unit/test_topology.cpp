#include <doctest.h>

#include "gisemi/errors.hpp"
#include "gisemi/expression.hpp"
#include "gisemi/topology.hpp"

using namespace gisemi;

namespace {
  std::vector<std::string> members(Graph const& g, PathSet const& s, std::size_t max_len) {
    std::vector<std::string> out;
    for (auto const& p : enumerate_paths(g, max_len)) {
      if (s.contains(p)) {
        out.push_back(format_path(g, p));
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("neighbourhoods of zero") {
  Graph g  = rose_graph(2);
  auto  u1 = longer_than(1);
  CHECK(nbhd_contains(u1, GisElement::zero()));
  CHECK(nbhd_contains(u1, parse_element(g, "p0 p1 p0^-1 p0^-1")));
  CHECK_FALSE(nbhd_contains(u1, parse_element(g, "p0 p1 p0^-1")));
  CHECK(nbhd_contains(all_words_except({{0}}), PolyElement::make({1}, {0, 0})));
  CHECK_FALSE(nbhd_contains(all_words_except({{0}}), PolyElement::make({1}, {0})));
}

TEST_CASE("filter membership inside the truncation window") {
  Graph g = rose_graph(2);
  CHECK(filter_contains(g, LengthFilter{1}, longer_than(2), 5));
  CHECK(filter_contains(g, CofiniteFilter{}, longer_than(2), 5));
  Path long_path = parse_path(g, "p0 p0 p0 p0");
  CHECK(filter_contains(g, LengthFilter{0}, all_paths_except(g, {long_path}), 5));
  // At truncation 4 a missing path of length 4 could be the start of an
  // infinite complement, so membership is not certified.
  CHECK_FALSE(filter_contains(g, LengthFilter{0}, all_paths_except(g, {long_path}), 4));
  // Every path of G1 fits in the window, so every subset qualifies.
  Graph g1 = parallel_edges_graph();
  CHECK(filter_contains(g1, CofiniteFilter{}, all_paths_except(g1, enumerate_paths(g1, 1)), 3));
}

TEST_CASE("conditions (i) and (ii) for the standard filters") {
  Graph                   g = rose_graph(2);
  std::vector<FilterSpec> filters{LengthFilter{0}, LengthFilter{2},
                                  CofiniteFilter{{parse_path(g, "p0"), parse_path(g, "p1 p0")}}};
  for (auto const& f : filters) {
    CHECK(check_condition_ii(g, f, 5).passed);
    for (auto const& x : enumerate_elements(g, 2, false)) {
      CHECK(check_condition_i(g, f, x.u(), x.v(), 5).passed);
    }
  }
  Graph g1 = parallel_edges_graph();
  CHECK_THROWS_AS(
      check_condition_i(g1, LengthFilter{0}, parse_path(g1, "v1"), parse_path(g1, "e"), 5),
      InputError);
}

TEST_CASE("largest ideal inside a cofinite set") {
  Graph g1 = parallel_edges_graph();
  auto  t  = largest_ideal_inside(g1, CofiniteFilter{{parse_path(g1, "e")}});
  CHECK(members(g1, t, 1) == std::vector<std::string>{"v2", "f"});
  CHECK(is_ideal(t, g1, 3));
  CHECK_FALSE(is_ideal(all_paths_except(g1, {parse_path(g1, "e")}), g1, 3));

  Graph g       = rose_graph(2);
  auto  closure = prefix_closure(g, {parse_path(g, "p0 p1")});
  CHECK(closure.size() == 3);
  auto within = largest_ideal_within(g, all_paths_except(g, {parse_path(g, "p0 p1")}), 4);
  CHECK(members(g, within, 2) == std::vector<std::string>{"p1", "p0 p0", "p1 p0", "p1 p1"});
}

TEST_CASE("translation witnesses") {
  Graph g = rose_graph(2);
  auto  f = longer_than(1);
  for (auto const& x : enumerate_elements(g, 2, false)) {
    auto right = witness_right_translation(g, x, f, 3);
    auto left  = witness_left_translation(g, x, f, 3);
    CHECK(right.check.passed);
    CHECK(left.check.passed);
    CHECK(filter_contains(g, LengthFilter{1}, right.set, 6));
    CHECK(filter_contains(g, LengthFilter{1}, left.set, 6));
  }
  CHECK_THROWS_AS(witness_right_translation(g, GisElement::zero(), f, 3), InputError);
}

TEST_CASE("ideal witnesses for condition (iii)") {
  Graph g = rose_graph(2);
  auto  w = witness_product(g, CofiniteFilter{{parse_path(g, "p0")}}, 5, 2);
  CHECK(w.check.passed);
  CHECK_FALSE(w.set.contains(parse_path(g, "v")));
  CHECK(w.set.contains(parse_path(g, "p1")));

  Graph        ladder = ladder_graph(3);
  ExplicitBase base{"vertices", {PathSet("E0", [](Path const& p) { return p.is_vertex(); })}, 1};
  CHECK_THROWS_AS(witness_product(ladder, base, 1), NoIdealBase);
}

TEST_CASE("coarsest topology identity and embedding identities") {
  Graph g1 = parallel_edges_graph();
  for (auto const& excluded : std::vector<std::vector<Path>>{
           {}, {parse_path(g1, "v1")}, {parse_path(g1, "e"), parse_path(g1, "v2")}}) {
    CHECK(coarsest_identity_check(g1, all_paths_except(g1, excluded), 3).passed);
  }
  auto spec = default_spec(rose_graph(2));
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(main1_identity_check(spec, n, 4).passed);
  }
  CHECK_THROWS_AS(main1_identity_check(spec, 2, 3), InputError);

  auto         g1spec = default_spec(g1);
  Homomorphism embed  = [g1spec](GisElement const& x) { return embed_element(g1spec, x); };
  auto         cont   = main2_continuity_witness(g1, embed, {{0, 2}, {1}}, 3);
  CHECK(cont.check.passed);
  CHECK_FALSE(cont.set.contains(parse_path(g1, "e")));
  CHECK(cont.set.contains(parse_path(g1, "f")));
  CHECK(main2_openness_witness(g1, embed, {parse_path(g1, "e"), parse_path(g1, "v1")}, 3).passed);
}

TEST_CASE("ladder example") {
  auto report = ladder_example_suite(4);
  CHECK(report.passed());
  CHECK(report.checks.size() >= 4);
  CHECK_THROWS_AS(ladder_example_suite(2), InputError);
}
