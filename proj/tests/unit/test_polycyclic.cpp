#include <doctest.h>

#include <random>
#include <set>

#include "gisemi/errors.hpp"
#include "gisemi/polycyclic.hpp"
#include "oracles.hpp"

using namespace gisemi;

namespace {
  PolyElement reduce2(char const* text) {
    return poly_reduce(Arity::finite(2), parse_letters(text));
  }

  // Both sides act identically on every word of length <= max_len.
  bool same_action(std::vector<PolyLetter> const& letters,
                   PolyElement const&             x,
                   std::uint32_t                  arity,
                   std::size_t                    max_len) {
    for (auto const& w : oracle::words(arity, max_len)) {
      if (oracle::act(letters, w) != oracle::act(x, w)) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("frozen reductions") {
  CHECK(format_poly(reduce2("p0^-1 p0")) == "[][]^-1");
  CHECK(reduce2("p0^-1 p0").is_identity());
  CHECK(reduce2("p1^-1 p0").is_zero());
  CHECK(format_poly(reduce2("p0 p1 p1^-1 p0^-1")) == "[0 1][0 1]^-1");
  CHECK(format_poly(reduce2("p1^-1 p0 p1")) == "0");
  CHECK(format_poly(reduce2("p0^-1 p1^-1")) == "[][1 0]^-1");
  CHECK(reduce2("").is_identity());
  CHECK_THROWS_AS(reduce2("p2"), InputError);
  CHECK(format_poly(poly_reduce(Arity::unbounded(), parse_letters("p7 p7^-1"))) == "[7][7]^-1");
}

TEST_CASE("poly_reduce matches the partial action on P_2 and P_3") {
  for (std::uint32_t arity : {2u, 3u}) {
    std::size_t max_len = arity == 2 ? 6 : 4;
    for (std::size_t len = 0; len <= max_len; ++len) {
      for (auto const& w : oracle::letter_words(arity, len)) {
        auto r = poly_reduce(Arity::finite(arity), w);
        if (!same_action(w, r, arity, len + 1)) {
          FAIL_CHECK((format_letters(w) + " -> " + format_poly(r)));
        }
      }
    }
  }
}

TEST_CASE("normal forms are distinguished by their action") {
  // Distinct normal forms act differently on words one longer than theirs,
  // so agreement in the previous test pins the result down.
  std::set<std::vector<std::optional<Word>>> actions;
  std::size_t                                count = 1;
  actions.insert(std::vector<std::optional<Word>>(oracle::words(2, 3).size()));
  for (auto const& x : oracle::words(2, 2)) {
    for (auto const& y : oracle::words(2, 2)) {
      std::vector<std::optional<Word>> table;
      for (auto const& w : oracle::words(2, 3)) {
        table.push_back(oracle::act(PolyElement::make(x, y), w));
      }
      actions.insert(table);
      ++count;
    }
  }
  CHECK(actions.size() == count);
}

TEST_CASE("rewriting strategies agree with the stack reduction") {
  std::mt19937_64                              rng(7);
  std::uniform_int_distribution<std::size_t>   length(0, 14);
  std::uniform_int_distribution<std::uint32_t> letter(0, 5);
  for (int s = 0; s < 2000; ++s) {
    std::vector<PolyLetter> w(length(rng));
    for (auto& l : w) {
      auto c = letter(rng);
      l      = {c / 2, c % 2 == 1};
    }
    auto a = Arity::finite(3);
    auto r = poly_reduce(a, w);
    CHECK(poly_reduce_by_rewriting(a, w, RewriteStrategy::leftmost) == r);
    CHECK(poly_reduce_by_rewriting(a, w, RewriteStrategy::rightmost) == r);
  }
}

TEST_CASE("multiplication, inversion and letters") {
  auto x = parse_poly("[0 1][1]^-1");
  auto y = parse_poly("[1 0][]^-1");
  CHECK(format_poly(poly_multiply(x, y)) == "[0 1 0][]^-1");
  CHECK(format_poly(poly_multiply(y, x)) == "[1 0 0 1][1]^-1");
  CHECK(poly_multiply(parse_poly("[][0]^-1"), parse_poly("[1][]^-1")).is_zero());
  CHECK(format_poly(poly_invert(x)) == "[1][0 1]^-1");
  CHECK(format_letters(letters_of(x)) == "p0 p1 p1^-1");
  CHECK(poly_reduce(Arity::finite(2), letters_of(x)) == x);
  CHECK(poly_multiply(PolyElement::identity(), x) == x);
  CHECK(poly_multiply(PolyElement::zero(), x).is_zero());
  CHECK_THROWS_AS(poly_multiply(Arity::finite(1), x, y), InputError);
  CHECK_THROWS_AS(parse_poly("[0 1]"), ParseError);
  CHECK_THROWS_AS(parse_letters("p0 q1"), ParseError);

  auto ws = oracle::words(2, 2);
  for (auto const& a : ws) {
    for (auto const& b : ws) {
      for (auto const& c : ws) {
        for (auto const& d : ws) {
          auto lhs = PolyElement::make(a, b);
          auto rhs = PolyElement::make(c, d);
          auto xy  = poly_multiply(lhs, rhs);
          for (auto const& w : oracle::words(2, 4)) {
            auto composed = oracle::act(rhs, w);
            if (composed) {
              composed = oracle::act(lhs, *composed);
            }
            if (composed != oracle::act(xy, w)) {
              FAIL_CHECK((format_poly(lhs) + " * " + format_poly(rhs)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("P_1 is the bicyclic monoid with zero adjoined") {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (auto const& w : oracle::letter_words(1, len)) {
      auto r = poly_reduce(Arity::finite(1), w);
      REQUIRE_FALSE(r.is_zero());
      auto b = oracle::bicyclic_from_letters(w);
      CHECK(r.x().size() == b.a);
      CHECK(r.y().size() == b.b);
    }
  }
}

TEST_CASE("prefix code into P_2") {
  CHECK(prefix_code_word(0) == Word{0});
  CHECK(prefix_code_word(3) == Word{1, 1, 1, 0});
  CHECK(format_poly(embed_omega_into_p2(parse_poly("[2][0]^-1"))) == "[1 1 0][0]^-1");
  CHECK(embed_omega_into_p2(PolyElement::zero()).is_zero());
  for (std::uint32_t i = 0; i <= 8; ++i) {
    for (std::uint32_t j = 0; j <= 8; ++j) {
      std::vector<PolyLetter> w;
      auto                    qi = prefix_code_word(i);
      for (auto it = qi.rbegin(); it != qi.rend(); ++it) {
        w.push_back({*it, true});
      }
      for (auto c : prefix_code_word(j)) {
        w.push_back({c, false});
      }
      auto r = poly_reduce(Arity::finite(2), w);
      CHECK((i == j ? r.is_identity() : r.is_zero()));
    }
  }
}

TEST_CASE("minimal word length") {
  CHECK_FALSE(min_word_length(PolyElement::zero()));
  CHECK(*min_word_length(parse_poly("[0 1][1]^-1")) == 1);
  CHECK(*min_word_length(PolyElement::identity()) == 0);
  CHECK(Arity::unbounded().to_string() == "omega");
}
