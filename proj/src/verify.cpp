#include "gisemi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "gisemi/embedding.hpp"
#include "gisemi/errors.hpp"
#include "gisemi/gis_element.hpp"
#include "gisemi/polycyclic.hpp"

namespace gisemi {

  namespace {
    class Stopwatch {
     public:
      double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
      }

     private:
      std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    SuiteReport start(std::string suite, Graph const* g, std::size_t bound, std::size_t trunc = 0) {
      SuiteReport r;
      r.suite      = std::move(suite);
      r.graph      = g ? g->label() : std::string();
      r.bound      = bound;
      r.truncation = trunc;
      return r;
    }

    std::vector<Word> words_up_to(std::uint32_t letters, std::size_t max_len) {
      std::vector<Word> out{{}};
      std::size_t       begin = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (std::uint32_t l = 0; l < letters; ++l) {
            Word w = out[i];
            w.push_back(l);
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

    std::vector<std::vector<PolyLetter>> letter_words_up_to(std::uint32_t arity,
                                                            std::size_t   max_len) {
      std::vector<std::vector<PolyLetter>> out;
      for (auto const& w : words_up_to(2 * arity, max_len)) {
        std::vector<PolyLetter> letters;
        for (auto c : w) {
          letters.push_back({c / 2, c % 2 == 1});
        }
        out.push_back(std::move(letters));
      }
      return out;
    }

    // Bicyclic monoid element q^a p^b with pq = 1.
    struct Bicyclic {
      std::size_t a = 0, b = 0;
      friend bool operator==(Bicyclic const&, Bicyclic const&) = default;
    };

    Bicyclic bicyclic_multiply(Bicyclic const& l, Bicyclic const& r) {
      std::size_t m = std::max(l.b, r.a);
      return {l.a - l.b + m, r.b - r.a + m};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Axioms
  ////////////////////////////////////////////////////////////////////////

  SuiteReport verify_axioms(Graph const& g, std::size_t max_len) {
    Stopwatch   clock;
    SuiteReport report = start("axioms", &g, max_len);
    auto const  xs     = enumerate_elements(g, max_len);
    auto        show   = [&g](GisElement const& x) { return format_element(g, x); };
    auto mul = [&g](GisElement const& x, GisElement const& y) { return gis_multiply(g, x, y); };

    Check assoc("associativity");
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        auto xy = mul(x, y);
        for (auto const& z : xs) {
          assoc.require(mul(xy, z) == mul(x, mul(y, z)),
                        [&] { return "(" + show(x) + ")(" + show(y) + ")(" + show(z) + ")"; });
        }
      }
    }
    report.checks.push_back(assoc);

    Check inverse("xx^-1x = x and x^-1xx^-1 = x^-1");
    for (auto const& x : xs) {
      auto xi = gis_invert(x);
      inverse.require(mul(mul(x, xi), x) == x && mul(mul(xi, x), xi) == xi,
                      [&] { return show(x); });
    }
    report.checks.push_back(inverse);

    Check unique("uniqueness of inverses");
    auto  candidates = enumerate_elements(g, 2 * max_len);
    for (auto const& x : xs) {
      auto xi = gis_invert(x);
      for (auto const& y : candidates) {
        if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
          unique.require(y == xi, [&] { return show(y) + " is also an inverse of " + show(x); });
        }
      }
    }
    report.checks.push_back(unique);

    Check anti("(xy)^-1 = y^-1x^-1");
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        anti.require(gis_invert(mul(x, y)) == mul(gis_invert(y), gis_invert(x)),
                     [&] { return show(x) + ", " + show(y); });
      }
    }
    report.checks.push_back(anti);

    Check                   commute("idempotents commute");
    std::vector<GisElement> idempotents;
    std::copy_if(xs.begin(), xs.end(), std::back_inserter(idempotents), is_idempotent);
    for (auto const& e : idempotents) {
      commute.require(mul(e, e) == e, [&] { return show(e) + " is not idempotent"; });
      for (auto const& f : idempotents) {
        commute.require(mul(e, f) == mul(f, e), [&] { return show(e) + ", " + show(f); });
      }
    }
    for (auto const& x : xs) {
      commute.require(is_idempotent(x) == (mul(x, x) == x),
                      [&] { return "idempotent test wrong at " + show(x); });
    }
    report.checks.push_back(commute);

    Check                                                   h("h_pair injective");
    std::map<std::pair<GisElement, GisElement>, GisElement> seen;
    for (auto const& x : xs) {
      auto [it, fresh] = seen.emplace(h_pair(x), x);
      h.require(fresh, [&] { return show(it->second) + " and " + show(x) + " share h_pair"; });
    }
    report.checks.push_back(h);

    using G = GisGenerator;
    Check rel("relations (i)-(iv)");
    auto  reduce = [&g](std::initializer_list<G> w) { return reduce_word(g, std::vector<G>(w)); };
    for (VertexId a : g.vertices()) {
      for (VertexId b : g.vertices()) {
        auto expected = a == b ? generator_to_element(g, G::vertex(a)) : GisElement::zero();
        rel.require(reduce({G::vertex(a), G::vertex(b)}) == expected,
                    [&] { return "(i) at " + g.vertex_name(a) + ", " + g.vertex_name(b); });
      }
    }
    for (EdgeId e : g.edges()) {
      auto edge = generator_to_element(g, G::edge(e));
      auto inv  = generator_to_element(g, G::edge_inverse(e));
      rel.require(reduce({G::vertex(g.source(e)), G::edge(e)}) == edge
                      && reduce({G::edge(e), G::vertex(g.range(e))}) == edge,
                  [&] { return "(ii) at " + g.edge_name(e); });
      rel.require(reduce({G::edge_inverse(e), G::vertex(g.source(e))}) == inv
                      && reduce({G::vertex(g.range(e)), G::edge_inverse(e)}) == inv,
                  [&] { return "(iii) at " + g.edge_name(e); });
      for (EdgeId f : g.edges()) {
        auto expected =
            e == f ? generator_to_element(g, G::vertex(g.range(e))) : GisElement::zero();
        rel.require(reduce({G::edge_inverse(e), G::edge(f)}) == expected,
                    [&] { return "(iv) at " + g.edge_name(e) + ", " + g.edge_name(f); });
      }
    }
    report.checks.push_back(rel);

    report.seconds = clock.seconds();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Embeddings
  ////////////////////////////////////////////////////////////////////////

  SuiteReport verify_embedding_suite(Graph const& g, std::size_t max_len) {
    Stopwatch   clock;
    SuiteReport report = start("embedding", &g, max_len);
    auto        spec   = default_spec(g);
    auto        er     = verify_embedding(spec, max_len);
    report.embeddings.push_back(er);

    Check main("F injective homomorphism");
    main.cases = er.pairs_checked;
    if (!er.passed) {
      main.fail(er.counterexample.value_or(""));
    }
    report.checks.push_back(main);

    Check cases("all four product cases hit");
    cases.require(er.all_cases_hit(), "histogram has an empty case");
    report.checks.push_back(cases);

    Check idem("F(xx^-1) = F(x)F(x)^-1 and F(x^-1x) = F(x)^-1F(x)");
    for (auto const& x : enumerate_elements(g, max_len)) {
      auto fx = embed_element(spec, x);
      idem.require(embed_element(spec, phi(x)) == poly_multiply(fx, poly_invert(fx))
                       && embed_element(spec, psi(x)) == poly_multiply(poly_invert(fx), fx),
                   [&] { return format_element(g, x); });
    }
    report.checks.push_back(idem);

    report.seconds = clock.seconds();
    return report;
  }

  SuiteReport verify_p2(Graph const& g, std::size_t max_len) {
    Stopwatch   clock;
    SuiteReport report = start("p2", &g, max_len);
    auto        spec   = default_spec(g);
    auto        xs     = enumerate_elements(g, max_len);
    auto        show   = [&g](GisElement const& x) { return format_element(g, x); };

    std::vector<PolyElement>          images;
    Check                             inj("composite injective");
    std::map<PolyElement, GisElement> seen;
    for (auto const& x : xs) {
      auto image = embed_countable_into_p2(spec, x);
      check_arity(Arity::finite(2), image);
      images.push_back(image);
      inj.require(x.is_zero() || !image.is_zero(), [&] { return show(x) + " maps to zero"; });
      auto [it, fresh] = seen.emplace(image, x);
      inj.require(fresh, [&] { return show(it->second) + " and " + show(x) + " collide"; });
    }
    report.checks.push_back(inj);

    Check hom("composite multiplicative");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        hom.require(embed_countable_into_p2(spec, gis_multiply(g, xs[i], xs[j]))
                        == poly_multiply(images[i], images[j]),
                    [&] { return show(xs[i]) + ", " + show(xs[j]); });
      }
    }
    report.checks.push_back(hom);

    Check code("q_i^-1 q_j = 1 iff i = j, else 0, for i, j <= 8");
    for (std::uint32_t i = 0; i <= 8; ++i) {
      for (std::uint32_t j = 0; j <= 8; ++j) {
        std::vector<PolyLetter> letters;
        auto                    qi = prefix_code_word(i);
        for (auto it = qi.rbegin(); it != qi.rend(); ++it) {
          letters.push_back({*it, true});
        }
        for (auto c : prefix_code_word(j)) {
          letters.push_back({c, false});
        }
        auto r = poly_reduce(Arity::finite(2), letters);
        code.require(i == j ? r.is_identity() : r.is_zero(), [&] {
          return "q_" + std::to_string(i) + "^-1 q_" + std::to_string(j) + " = " + format_poly(r);
        });
      }
    }
    report.checks.push_back(code);

    // P_omega -> P_2 on indices < 6: injective on words of length <= 3,
    // multiplicative on all pairs of words of length <= 2 and against every
    // generator on the right for length <= 3.
    Check omega("P_omega -> P_2 injective and multiplicative");
    auto  w3 = words_up_to(6, 3);
    auto  w2 = words_up_to(6, 2);
    {
      std::set<PolyElement> images3;
      for (auto const& x : w3) {
        for (auto const& y : w3) {
          auto e = PolyElement::make(x, y);
          omega.require(images3.insert(embed_omega_into_p2(e)).second,
                        [&] { return "collision at " + format_poly(e); });
        }
      }
    }
    std::vector<PolyElement> small{PolyElement::zero()};
    for (auto const& x : w2) {
      for (auto const& y : w2) {
        small.push_back(PolyElement::make(x, y));
      }
    }
    std::vector<PolyElement> small_images;
    for (auto const& a : small) {
      small_images.push_back(embed_omega_into_p2(a));
    }
    for (std::size_t i = 0; i < small.size(); ++i) {
      for (std::size_t j = 0; j < small.size(); ++j) {
        if (embed_omega_into_p2(poly_multiply(small[i], small[j]))
            != poly_multiply(small_images[i], small_images[j])) {
          omega.fail(format_poly(small[i]) + ", " + format_poly(small[j]));
        }
        ++omega.cases;
      }
    }
    std::vector<PolyElement> letters;
    for (std::uint32_t i = 0; i < 6; ++i) {
      letters.push_back(PolyElement::make({i}, {}));
      letters.push_back(PolyElement::make({}, {i}));
    }
    std::vector<PolyElement> letter_images;
    for (auto const& l : letters) {
      letter_images.push_back(embed_omega_into_p2(l));
    }
    for (auto const& x : w3) {
      for (auto const& y : w3) {
        auto a     = PolyElement::make(x, y);
        auto image = embed_omega_into_p2(a);
        for (std::size_t k = 0; k < letters.size(); ++k) {
          if (embed_omega_into_p2(poly_multiply(a, letters[k]))
              != poly_multiply(image, letter_images[k])) {
            omega.fail(format_poly(a) + ", " + format_poly(letters[k]));
          }
          ++omega.cases;
        }
      }
    }
    report.checks.push_back(omega);

    report.seconds = clock.seconds();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  SuiteReport verify_confluence(VerifyOptions const& options) {
    Stopwatch   clock;
    SuiteReport report = start("confluence", nullptr, options.confluence_length);
    auto const  p2     = Arity::finite(2);

    Check                                        conf("strategy independence on random P_2 words");
    std::mt19937_64                              rng(options.seed);
    std::uniform_int_distribution<std::size_t>   length(0, options.confluence_length);
    std::uniform_int_distribution<std::uint32_t> letter(0, 3);
    for (std::size_t s = 0; s < options.confluence_samples; ++s) {
      std::vector<PolyLetter> w(length(rng));
      for (auto& l : w) {
        auto c = letter(rng);
        l      = {c / 2, c % 2 == 1};
      }
      auto stack = poly_reduce(p2, w);
      auto left  = poly_reduce_by_rewriting(p2, w, RewriteStrategy::leftmost);
      auto right = poly_reduce_by_rewriting(p2, w, RewriteStrategy::rightmost);
      conf.require(stack == left && left == right, [&] {
        return format_letters(w) + ": " + format_poly(stack) + " / " + format_poly(left) + " / "
               + format_poly(right);
      });
    }
    report.checks.push_back(conf);

    // Every letter word of length <= 6, split at every position.
    Check hom("poly_reduce(w1 w2) = poly_reduce(w1) poly_reduce(w2)");
    for (auto const& w : letter_words_up_to(2, 6)) {
      auto whole = poly_reduce(p2, w);
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        std::span<PolyLetter const> all(w);
        auto                        product =
            poly_multiply(poly_reduce(p2, all.first(cut)), poly_reduce(p2, all.subspan(cut)));
        hom.require(whole == product,
                    [&] { return format_letters(w) + " split at " + std::to_string(cut); });
      }
    }
    report.checks.push_back(hom);

    Check bic("P_1 is the bicyclic monoid with zero");
    auto  to_bicyclic = [](PolyElement const& x) { return Bicyclic{x.x().size(), x.y().size()}; };
    for (auto const& w : letter_words_up_to(1, 6)) {
      // p_0 plays q and p_0^-1 plays p.
      Bicyclic expected;
      for (auto const& l : w) {
        expected = bicyclic_multiply(expected, l.inverse ? Bicyclic{0, 1} : Bicyclic{1, 0});
      }
      auto r = poly_reduce(Arity::finite(1), w);
      bic.require(!r.is_zero() && to_bicyclic(r) == expected, [&] { return format_letters(w); });
    }
    for (std::size_t a = 0; a <= 6; ++a) {
      for (std::size_t b = 0; b <= 6; ++b) {
        for (std::size_t c = 0; c <= 6; ++c) {
          for (std::size_t d = 0; d <= 6; ++d) {
            auto x = PolyElement::make(Word(a, 0), Word(b, 0));
            auto y = PolyElement::make(Word(c, 0), Word(d, 0));
            auto r = poly_multiply(x, y);
            bic.require(!r.is_zero() && to_bicyclic(r) == bicyclic_multiply({a, b}, {c, d}),
                        [&] { return format_poly(x) + ", " + format_poly(y); });
          }
        }
      }
    }
    report.checks.push_back(bic);

    Check rose("P_k agrees with G(rose:k) for k = 1, 2, 3 at word length <= 4");
    for (std::size_t k = 1; k <= 3; ++k) {
      Graph                    g  = rose_graph(k);
      auto                     xs = enumerate_elements(g, 4);
      std::vector<PolyElement> images;
      std::set<PolyElement>    distinct;
      for (auto const& x : xs) {
        images.push_back(rose_element_to_poly(g, x));
        distinct.insert(images.back());
      }
      rose.require(distinct.size() == xs.size(),
                   [&] { return "identification not injective on rose:" + std::to_string(k); });
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          auto const& fi = images[i];
          auto const& fj = images[j];
          // Zero products dominate; compare them without building words.
          auto poly = poly_multiply(fi, fj);
          auto gis  = gis_multiply(g, xs[i], xs[j]);
          if (poly.is_zero() != gis.is_zero()
              || (!gis.is_zero() && rose_element_to_poly(g, gis) != poly)) {
            rose.fail("rose:" + std::to_string(k) + " at " + format_element(g, xs[i]) + ", "
                      + format_element(g, xs[j]));
          }
          ++rose.cases;
        }
      }
    }
    report.checks.push_back(rose);

    report.seconds = clock.seconds();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Topology
  ////////////////////////////////////////////////////////////////////////

  SuiteReport verify_topology(Graph const& g, std::size_t max_len, std::size_t trunc) {
    Stopwatch   clock;
    SuiteReport report = start("topology", &g, max_len, trunc);
    auto const  paths  = enumerate_paths(g, max_len);
    auto const  xs     = enumerate_elements(g, max_len, false);

    std::vector<FilterSpec> filters;
    for (std::size_t n = 0; n <= 2; ++n) {
      filters.emplace_back(LengthFilter{n});
    }
    for (auto& excluded : small_subsets(paths, 3)) {
      filters.emplace_back(CofiniteFilter{std::move(excluded)});
    }

    for (auto const& filter : filters) {
      TopologyReport tr;
      tr.filter     = describe_filter(g, filter);
      tr.truncation = trunc;
      PathSet f     = base_set(g, filter);
      // Witness complements reach length 2 max_len; decide membership on a
      // window that sees past them.
      std::size_t const window = std::max(trunc, 2 * max_len + 1);

      Check sym("U_F(0) closed under inversion");
      Check sep("separation of nonzero points");
      Check cond_i("condition (i)");
      Check right("right translation witnesses");
      Check left("left translation witnesses");
      for (auto const& x : xs) {
        sym.require(nbhd_contains(f, x) == nbhd_contains(f, gis_invert(x)),
                    [&] { return format_element(g, x); });
        PathSet apart = all_paths_except(g, {x.u(), x.v()});
        sep.require(filter_contains(g, filter, apart, trunc) && !nbhd_contains(apart, x),
                    [&] { return format_element(g, x); });
        cond_i.absorb(check_condition_i(g, filter, x.u(), x.v(), trunc));

        auto wr = witness_right_translation(g, x, f, max_len);
        right.absorb(wr.check);
        right.require(filter_contains(g, filter, wr.set, window),
                      [&] { return "H for " + format_element(g, x) + " not in the filter"; });
        auto wl = witness_left_translation(g, x, f, max_len);
        left.absorb(wl.check);
        left.require(filter_contains(g, filter, wl.set, window),
                     [&] { return "G for " + format_element(g, x) + " not in the filter"; });
      }
      tr.checks.push_back(sym);
      tr.checks.push_back(sep);
      tr.checks.push_back(cond_i);
      tr.checks.push_back(check_condition_ii(g, filter, trunc));
      tr.checks.push_back(right);
      tr.checks.push_back(left);

      Check cond_iii("condition (iii) and U_T U_T <= U_T");
      try {
        cond_iii.absorb(witness_product(g, filter, window, max_len).check);
      } catch (NoIdealBase const& e) {
        cond_iii.fail(e.what());
      }
      tr.checks.push_back(cond_iii);

      if (std::holds_alternative<CofiniteFilter>(filter)) {
        tr.checks.push_back(coarsest_identity_check(g, f, max_len));
      }
      report.topology.push_back(std::move(tr));
    }

    auto           spec = default_spec(g);
    TopologyReport emb;
    emb.filter     = "embedding identities";
    emb.truncation = trunc;
    for (std::size_t n = 0; n <= 2 && n + 1 < trunc; ++n) {
      emb.checks.push_back(main1_identity_check(spec, n, trunc));
    }
    Homomorphism      f = [spec](GisElement const& x) { return embed_element(spec, x); };
    std::vector<Word> words;
    for (auto const& x : enumerate_elements(g, max_len, false)) {
      auto image = embed_element(spec, x);
      words.push_back(image.x());
      words.push_back(image.y());
    }
    words.push_back(Word{});
    words.push_back(Word{static_cast<std::uint32_t>(spec.arity)});
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    Check cont("continuity witnesses");
    for (auto const& excluded : small_subsets(words, 2)) {
      cont.absorb(main2_continuity_witness(g, f, excluded, max_len).check);
    }
    emb.checks.push_back(cont);
    Check open("openness witnesses");
    for (auto const& excluded : small_subsets(paths, 2)) {
      open.absorb(main2_openness_witness(g, f, excluded, max_len));
    }
    emb.checks.push_back(open);
    report.topology.push_back(std::move(emb));

    std::size_t rungs = 4;
    if (g.label().starts_with("ladder:")) {
      rungs = std::max<std::size_t>(3, std::stoul(g.label().substr(7)));
    }
    report.topology.push_back(ladder_example_suite(rungs));

    for (auto const& tr : report.topology) {
      Check summary(tr.filter);
      for (auto const& c : tr.checks) {
        summary.absorb(c);
      }
      report.checks.push_back(summary);
    }
    report.seconds = clock.seconds();
    return report;
  }

  SuiteReport verify_all(Graph const& g, VerifyOptions const& options) {
    Stopwatch   clock;
    SuiteReport report = start("all", &g, options.max_len, options.trunc);
    report.append(verify_axioms(g, options.max_len));
    report.append(verify_embedding_suite(g, options.max_len));
    report.append(verify_p2(g, options.max_len));
    report.append(verify_confluence(options));
    report.append(
        verify_topology(g, std::min(options.max_len, options.topology_len), options.trunc));
    report.seconds = clock.seconds();
    return report;
  }

}  // namespace gisemi
