#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "gisemi/embedding.hpp"
#include "gisemi/errors.hpp"
#include "gisemi/expression.hpp"
#include "gisemi/graph_io.hpp"
#include "gisemi/polycyclic.hpp"
#include "gisemi/report.hpp"
#include "gisemi/verify.hpp"

namespace gisemi::cli {

  namespace {
    struct GraphSource {
      std::string file;
      std::string builtin;

      void attach(CLI::App* cmd) {
        auto* f = cmd->add_option("--graph", file, "Graph document (JSON)");
        auto* b = cmd->add_option("--builtin", builtin, "Built-in graph: g1, rose:K or ladder:N");
        f->excludes(b);
      }

      Graph load() const {
        if (!file.empty()) {
          return load_graph_file(file);
        }
        if (!builtin.empty()) {
          return builtin_graph(builtin);
        }
        throw InputError("one of --graph or --builtin is required");
      }
    };

    Arity parse_arity(std::string const& text) {
      if (text == "omega") {
        return Arity::unbounded();
      }
      try {
        std::size_t used = 0;
        auto        n    = std::stoul(text, &used);
        if (used == text.size()) {
          return Arity::finite(n);
        }
      } catch (std::exception const&) {
      }
      throw InputError("arity must be a natural number or 'omega', got " + text);
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph inverse semigroups and polycyclic monoids"};
    app.require_subcommand(1);

    GraphSource              source;
    std::size_t              max_len = 3;
    std::string              format  = "text";
    std::vector<std::string> exprs;
    bool                     to_p2 = false;

    auto* paths = app.add_subcommand("paths", "List paths up to a length");
    source.attach(paths);
    paths->add_option("--max-len", max_len, "Maximum path length");

    auto* mul = app.add_subcommand("mul", "Multiply two elements");
    source.attach(mul);
    mul->add_option("exprs", exprs, "Two expressions")->expected(2)->required();

    auto* reduce = app.add_subcommand("reduce", "Normal form of a generator word");
    source.attach(reduce);
    reduce->add_option("exprs", exprs, "Expression")->expected(1)->required();

    auto* invert = app.add_subcommand("invert", "Inverse of an element");
    source.attach(invert);
    invert->add_option("exprs", exprs, "Expression")->expected(1)->required();

    auto* embed = app.add_subcommand("embed", "Image in the polycyclic monoid");
    source.attach(embed);
    embed->add_option("exprs", exprs, "Expression")->expected(1)->required();
    embed->add_flag("--p2", to_p2, "Compose with the prefix-code embedding into P_2");

    auto* poly = app.add_subcommand("poly", "Polycyclic monoid words");
    poly->require_subcommand(1);
    auto*       poly_reduce_cmd = poly->add_subcommand("reduce", "Reduce a letter word");
    std::string arity_text;
    std::string word_text;
    poly_reduce_cmd->add_option("--arity", arity_text, "Number of generators, or omega")
        ->required();
    poly_reduce_cmd->add_option("word", word_text, "Letters like 'p0 p1^-1'; empty for 1");

    auto*         verify = app.add_subcommand("verify", "Run verification suites");
    std::string   suite;
    VerifyOptions options;
    source.attach(verify);
    verify->add_option("suite", suite, "axioms|embedding|p2|confluence|topology|all")
        ->required()
        ->check(CLI::IsMember({"axioms", "embedding", "p2", "confluence", "topology", "all"}));
    verify->add_option("--max-len", options.max_len, "Element bound");
    verify->add_option("--trunc", options.trunc, "Truncation window for filters");
    verify->add_option("--seed", options.seed, "Seed for the random confluence sample");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }

    try {
      if (*paths) {
        Graph g = source.load();
        for (auto const& p : enumerate_paths(g, max_len)) {
          out << format_path(g, p) << "\n";
        }
        return ok;
      }
      if (*mul) {
        Graph g = source.load();
        out << format_element(
            g, gis_multiply(g, parse_element(g, exprs[0]), parse_element(g, exprs[1])))
            << "\n";
        return ok;
      }
      if (*reduce) {
        Graph g = source.load();
        out << format_element(g, parse_element(g, exprs[0])) << "\n";
        return ok;
      }
      if (*invert) {
        Graph g = source.load();
        out << format_element(g, gis_invert(parse_element(g, exprs[0]))) << "\n";
        return ok;
      }
      if (*embed) {
        Graph g    = source.load();
        auto  spec = default_spec(g);
        auto  x    = parse_element(g, exprs[0]);
        out << format_poly(to_p2 ? embed_countable_into_p2(spec, x) : embed_element(spec, x))
            << "\n";
        return ok;
      }
      if (*poly_reduce_cmd) {
        Arity arity   = parse_arity(arity_text);
        auto  letters = parse_letters(word_text);
        out << format_poly(gisemi::poly_reduce(arity, letters)) << "\n";
        return ok;
      }
      if (*verify) {
        SuiteReport report;
        if (suite == "confluence") {
          report = verify_confluence(options);
        } else {
          Graph g = source.load();
          if (suite == "axioms") {
            report = verify_axioms(g, options.max_len);
          } else if (suite == "embedding") {
            report = verify_embedding_suite(g, options.max_len);
          } else if (suite == "p2") {
            report = verify_p2(g, options.max_len);
          } else if (suite == "topology") {
            report = verify_topology(g, options.max_len, options.trunc);
          } else {
            report = verify_all(g, options);
          }
        }
        out << (format == "json" ? to_json(report) + "\n" : to_text(report));
        return report.passed() ? ok : counterexample;
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }
    return input_error;
  }

}  // namespace gisemi::cli
