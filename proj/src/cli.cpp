#include "scat/cli.hpp"

#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "scat/compare.hpp"
#include "scat/error.hpp"
#include "scat/generators.hpp"
#include "scat/oracle.hpp"
#include "scat/rank.hpp"
#include "scat/rewrite.hpp"
#include "scat/sample.hpp"

namespace scat {

namespace {

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::le: return 0;
    case Outcome::not_le: return 1;
    case Outcome::unknown: return 2;
  }
  return 2;
}

void print_trace(const Verdict& v, std::ostream& out) {
  for (const TraceStep& s : v.trace()) {
    out << "  " << s.rule << ": " << s.query;
    if (!s.note.empty()) out << "  (" << s.note << ")";
    out << "\n";
  }
  for (const std::string& b : v.blockers) out << "  blocked: " << b << "\n";
}

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["schema"] = 1;
  j["outcome"] = to_string(v.outcome);
  j["trace"] = nlohmann::json::array();
  for (const TraceStep& s : v.trace()) j["trace"].push_back({{"rule", s.rule}, {"query", s.query}, {"note", s.note}});
  j["blockers"] = v.blockers;
  return j.dump(2);
}

// Samples random terms and checks normalization and comparison laws.
int run_props(Engine& engine, unsigned seed, int count, std::ostream& out) {
  std::mt19937 rng(seed);
  int idempotent = 0, lex = 0, structure = 0;
  for (int i = 0; i < count; ++i) {
    Term f = random_term(rng, 4);
    Term g = random_term(rng, 4);
    Term nf = engine.normalize(f);
    if (engine.normalize(nf) != nf || cb_type(nf) != cb_type(f)) {
      ++idempotent;
      out << "violation: normalize on " << to_string(f) << "\n";
    }
    Verdict v = engine.compare(f, g);
    if (v.le() && cb_type(f) > cb_type(g)) {
      ++lex;
      out << "violation: type order on " << to_string(f) << " <= " << to_string(g) << "\n";
    }
    if (twice(cb_rank(f)) < cb_rank(g) && !v.le()) {
      ++structure;
      out << "violation: doubling order on " << to_string(f) << " <= " << to_string(g) << "\n";
    }
  }
  out << "normalize idempotent and type preserving: " << (idempotent ? "FAIL" : "ok") << "\n";
  out << "le respects the type order: " << (lex ? "FAIL" : "ok") << "\n";
  out << "doubling order yields le: " << (structure ? "FAIL" : "ok") << "\n";
  return idempotent + lex + structure == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus of scattered functions under continuous reducibility", "scatcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  int depth = EngineConfig{}.depth;
  std::size_t max_raw = default_max_raw;
  unsigned seed = 1;
  app.add_option("--depth", depth, "Nesting bound for comparison sub-queries")->check(CLI::NonNegativeNumber);
  app.add_option("--max-raw", max_raw, "Largest raw generator set to enumerate");
  app.add_option("--seed", seed, "Seed for property sampling");

  std::string term_a, term_b, level;
  bool trace = false, json = false, centered = false, raw = false, classes = false, dot = false, hasse_json = false;
  int count = 1000;

  auto* type_cmd = app.add_subcommand("type", "Print the (rank, degree) type of a term");
  type_cmd->add_option("term", term_a)->required();
  auto* norm_cmd = app.add_subcommand("normalize", "Print the normal form of a term");
  norm_cmd->add_option("term", term_a)->required();
  auto* cmp_cmd = app.add_subcommand("compare", "Decide f <= g; exit 0 LE, 1 NOT_LE, 2 UNKNOWN");
  cmp_cmd->add_option("f", term_a)->required();
  cmp_cmd->add_option("g", term_b)->required();
  cmp_cmd->add_flag("--trace", trace, "Print the derivation");
  cmp_cmd->add_flag("--json", json, "Print the verdict as JSON");
  auto* gen_cmd = app.add_subcommand("generators", "List generator terms at a level");
  gen_cmd->add_option("level", level)->required();
  gen_cmd->add_flag("--centered", centered, "Use the centered set instead");
  gen_cmd->add_flag("--raw", raw, "Print every enumerated term (default)");
  gen_cmd->add_flag("--classes", classes, "Print one representative per equivalence class");
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the generator classes at a level");
  hasse_cmd->add_option("level", level)->required();
  hasse_cmd->add_flag("--dot", dot, "Emit DOT (default)");
  hasse_cmd->add_flag("--json", hasse_json, "Emit JSON");
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force f <= g on finite functions \"a b v0 .. v_{a-1}\"");
  oracle_cmd->add_option("f", term_a)->required();
  oracle_cmd->add_option("g", term_b)->required();
  auto* props_cmd = app.add_subcommand("props", "Check normalization and comparison laws on random terms");
  props_cmd->add_option("--count", count, "Number of sampled pairs")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  EngineConfig config;
  config.depth = depth;
  Engine engine(config);

  try {
    if (*type_cmd) {
      out << to_string(cb_type(parse_term(term_a))) << "\n";
      return 0;
    }
    if (*norm_cmd) {
      out << to_string(engine.normalize(parse_term(term_a))) << "\n";
      return 0;
    }
    if (*cmp_cmd) {
      Verdict v = engine.compare(parse_term(term_a), parse_term(term_b));
      if (json) {
        out << verdict_json(v) << "\n";
      } else {
        out << to_string(v.outcome) << "\n";
        if (trace) print_trace(v, out);
      }
      return outcome_code(v.outcome);
    }
    if (*gen_cmd) {
      Ordinal alpha = parse_ordinal(level);
      GeneratorSet s = centered ? centered_set(alpha, max_raw, engine) : generator_set(alpha, max_raw, engine);
      if (classes) {
        for (const TermClass& c : s.classes) out << to_string(c.representative) << "\n";
        for (const auto& [a, b] : s.undecided_pairs)
          err << "undecided: " << to_string(a) << " vs " << to_string(b) << "\n";
      } else {
        for (const Term& t : s.raw) out << to_string(t) << "\n";
      }
      return 0;
    }
    if (*hasse_cmd) {
      GeneratorSet s = generator_set(parse_ordinal(level), max_raw, engine);
      std::vector<Term> reps;
      for (const TermClass& c : s.classes) reps.push_back(c.representative);
      HasseDiagram d = hasse(reps, engine);
      out << (hasse_json ? to_json(d, engine) + "\n" : to_dot(d, engine));
      return 0;
    }
    if (*oracle_cmd) {
      bool le = brute_force_le(parse_finite_fn(term_a), parse_finite_fn(term_b));
      out << (le ? "YES" : "NO") << "\n";
      return le ? 0 : 1;
    }
    if (*props_cmd) return run_props(engine, seed, count, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FeasibilityError& e) {
    err << "infeasible: " << e.what() << "\n";
    return exit_infeasible;
  } catch (const UndecidedError& e) {
    err << e.what() << "\n";
    return exit_infeasible;
  } catch (const RewriteCapError& e) {
    err << "rewrite cap: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace scat
