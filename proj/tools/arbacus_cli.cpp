// Command-line surface for the calculator: classification, raw machine runs
// with tracing, calculator evaluation, scheme evaluation, generators,
// composition, pairing, base conversion, the Snark pipeline, enumeration and
// corpus verification. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 usage error, 2 parse/validation error (also
// corpus verification failure), 3 budget exceeded.

#include "arbacus/arbator.hpp"
#include "arbacus/corpus.hpp"
#include "arbacus/generators.hpp"
#include "arbacus/machine.hpp"
#include "arbacus/numerals.hpp"
#include "arbacus/pattern.hpp"
#include "arbacus/program.hpp"
#include "arbacus/snark.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace arbacus;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_budget = 3;

RenderMode render_mode(const std::string& name) {
  if (name == "plain") return RenderMode::plain;
  if (name == "braces") return RenderMode::braces;
  if (name == "braces-comma") return RenderMode::braces_comma;
  throw ParseError(ParseError::Kind::format, "unknown render mode " + name);
}

std::vector<Nat> parse_inputs(const std::vector<std::string>& texts) {
  std::vector<Nat> values;
  values.reserve(texts.size());
  for (const std::string& t : texts) values.push_back(nat_value(parse_numeral(t)));
  return values;
}

std::vector<std::string> split_fields(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct BudgetFlags {
  std::uint64_t steps = Budget{}.max_steps;
  std::uint64_t bits = Budget{}.max_value_bits;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget", steps, "step budget");
    cmd->add_option("--bits", bits, "value bit-length budget");
  }

  Budget budget() const { return Budget{steps, bits}; }
};

int run_command(const std::string& program_text,
                const std::vector<std::string>& input_texts, Budget budget,
                bool trace, const std::string& watch_list) {
  Numeral program = parse_numeral(program_text);
  ProgramParse parsed = parse_program(program);
  if (const Herbum* h = std::get_if<Herbum>(&parsed)) {
    std::cerr << "herbum-number, the computer never halts: " << h->reason
              << "\n";
    return exit_parse;
  }
  const ProgramTree& tree = std::get<ProgramTree>(parsed);
  std::vector<Nat> inputs = parse_inputs(input_texts);

  RunOutcome outcome;
  if (trace) {
    std::vector<std::string> watched = split_fields(watch_list);
    TraceResult result = run_traced(tree, inputs, budget, watched);
    write_trace(std::cout, result, watched);
    outcome = result.outcome;
  } else {
    outcome = run(tree, inputs, budget);
  }
  if (!outcome.ok()) {
    std::cerr << "budget exceeded ("
              << (outcome.kind == RunOutcome::Kind::steps_exceeded
                      ? "steps"
                      : "value-size")
              << ") after " << outcome.steps << " steps\n";
    return exit_budget;
  }
  std::cout << "result\t" << outcome.value << "\tsteps\t" << outcome.steps
            << "\n";
  return exit_ok;
}

int calc_exit(const CalcResult& r) {
  if (r.ok()) {
    std::cout << r.value << "\n";
    return exit_ok;
  }
  std::cerr << "budget exceeded ("
            << (r.kind == CalcResult::Kind::steps_exceeded ? "steps"
                                                           : "value-size")
            << ")\n";
  return exit_budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"number strings as programs: the loop machine and its total calculator"};
  app.require_subcommand(1);

  // classify
  std::string cls_numeral;
  CLI::App* cls = app.add_subcommand("classify", "classify a number string");
  cls->add_option("numeral", cls_numeral)->required();

  // run
  std::string run_program;
  std::vector<std::string> run_inputs;
  BudgetFlags run_budget;
  bool run_trace = false;
  std::string run_watch;
  CLI::App* runc = app.add_subcommand("run", "run the computer on an arbor-number");
  runc->add_option("program", run_program)->required();
  runc->add_option("inputs", run_inputs);
  runc->add_flag("--trace", run_trace, "print one row per counted step");
  runc->add_option("--watch", run_watch, "comma-separated fields to watch");
  run_budget.attach(runc);

  // arbate
  std::string arb_program;
  std::vector<std::string> arb_inputs;
  BudgetFlags arb_budget;
  CLI::App* arb = app.add_subcommand("arbate", "run the total calculator");
  arb->add_option("program", arb_program)->required();
  arb->add_option("inputs", arb_inputs);
  arb_budget.attach(arb);

  // eval
  std::string eval_pattern;
  std::vector<std::string> eval_binds;
  std::string eval_corpus = "data/corpus.tsv";
  BudgetFlags eval_budget;
  CLI::App* ev = app.add_subcommand("eval", "evaluate a pattern/term/scheme");
  ev->add_option("pattern", eval_pattern)->required();
  ev->add_option("--bind", eval_binds, "variable binding Nk=value");
  ev->add_option("--corpus", eval_corpus, "corpus file for $constants");
  eval_budget.attach(ev);

  // metrics
  std::string met_program;
  CLI::App* met = app.add_subcommand("metrics", "size and depth of a program");
  met->add_option("program", met_program)->required();

  // gen
  std::string gen_family;
  std::uint64_t gen_degree = 0;
  std::string gen_render = "braces-comma";
  CLI::App* gen = app.add_subcommand("gen", "generate a program family member");
  gen->add_option("family", gen_family)
      ->required()
      ->check(CLI::IsMember({"hxpg", "hicg"}));
  gen->add_option("degree", gen_degree)->required();
  gen->add_option("--render", gen_render)
      ->check(CLI::IsMember({"plain", "braces", "braces-comma"}));

  // compose
  std::string comp_outer, comp_inner;
  CLI::App* comp = app.add_subcommand("compose", "unary composition");
  comp->add_option("outer", comp_outer)->required();
  comp->add_option("inner", comp_inner)->required();

  // pair / unpair
  std::string pair_j, pair_k, unpair_n;
  CLI::App* pairc = app.add_subcommand("pair", "antidiagonal pairing");
  pairc->add_option("j", pair_j)->required();
  pairc->add_option("k", pair_k)->required();
  CLI::App* unpair = app.add_subcommand("unpair", "antidiagonal unpairing");
  unpair->add_option("n", unpair_n)->required();

  // convert
  std::string conv_numeral, conv_to;
  CLI::App* conv = app.add_subcommand("convert", "decimal/trigintiquintal conversion");
  conv->add_option("numeral", conv_numeral)->required();
  conv->add_option("--to", conv_to)
      ->required()
      ->check(CLI::IsMember({"trig", "dec"}));

  // snark
  std::string snark_n;
  BudgetFlags snark_budget;
  CLI::App* snk = app.add_subcommand("snark", "the diagonal function");
  snk->add_option("n", snark_n)->required();
  snark_budget.attach(snk);

  // enum
  std::uint64_t enum_limit = 100;
  std::uint64_t enum_start = 0;
  bool enum_schemes_only = false;
  CLI::App* enu = app.add_subcommand("enum", "enumerate trigintiquintal strings");
  enu->add_option("--limit", enum_limit, "number of rows");
  enu->add_option("--start", enum_start, "first index");
  enu->add_flag("--schemes-only", enum_schemes_only);

  // corpus verify
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus operations");
  corpus_cmd->require_subcommand(1);
  std::string ver_file = "data/corpus.tsv";
  std::uint64_t ver_unary = 40, ver_binary = 12;
  BudgetFlags ver_budget;
  ver_budget.steps = 60'000'000;
  CLI::App* ver = corpus_cmd->add_subcommand("verify", "verify entries against oracles");
  ver->add_option("--file", ver_file);
  ver->add_option("--unary-max", ver_unary);
  ver->add_option("--binary-max", ver_binary);
  ver_budget.attach(ver);

  // majorant
  std::string maj_program;
  std::uint64_t maj_lo = 3, maj_hi = 10;
  BudgetFlags maj_budget;
  CLI::App* maj = app.add_subcommand("majorant", "hyperincrementation dominance check");
  maj->add_option("program", maj_program)->required();
  maj->add_option("--lo", maj_lo);
  maj->add_option("--hi", maj_hi);
  maj_budget.attach(maj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (cls->parsed()) {
      Classification c = classify_number(parse_numeral(cls_numeral));
      switch (c.kind) {
        case Classification::Kind::herbum:
          std::cout << "herbum\t" << c.detail << "\n";
          break;
        case Classification::Kind::primitive_arbor:
          std::cout << "primitive\n";
          break;
        case Classification::Kind::complex_arbor:
          std::cout << "complex\t" << c.detail << "\n";
          break;
      }
      return exit_ok;
    }
    if (runc->parsed())
      return run_command(run_program, run_inputs, run_budget.budget(),
                         run_trace, run_watch);
    if (arb->parsed())
      return calc_exit(arbate(parse_numeral(arb_program),
                              parse_inputs(arb_inputs), arb_budget.budget()));
    if (ev->parsed()) {
      ConstantLookup lookup;
      Corpus corpus;
      if (eval_pattern.find('$') != std::string::npos) {
        corpus = load_corpus(eval_corpus);
        lookup = [&corpus](std::string_view name) {
          return corpus.constant(name);
        };
      }
      Pattern p = parse_pattern(eval_pattern, lookup);
      Binding binding;
      for (const std::string& b : eval_binds) {
        std::size_t eq = b.find('=');
        if (eq == std::string::npos || b.size() < 4 || b[0] != 'N')
          throw ParseError(ParseError::Kind::format,
                           "binding must look like Nk=value: " + b);
        int index = std::stoi(b.substr(1, eq - 1));
        binding[index] = nat_value(parse_numeral(b.substr(eq + 1)));
      }
      return calc_exit(evaluate(p, binding, eval_budget.budget()));
    }
    if (met->parsed()) {
      ProgramParse parsed = parse_program(parse_numeral(met_program));
      if (const Herbum* h = std::get_if<Herbum>(&parsed)) {
        std::cerr << "herbum-number has no metrics: " << h->reason << "\n";
        return exit_parse;
      }
      Metrics m = program_metrics(std::get<ProgramTree>(parsed));
      std::cout << m.size << "\t" << m.depth << "\n";
      return exit_ok;
    }
    if (gen->parsed()) {
      Numeral g = gen_family == "hxpg" ? gen_hxpg(gen_degree) : gen_hicg(gen_degree);
      std::cout << render_numeral(g, render_mode(gen_render)) << "\n";
      return exit_ok;
    }
    if (comp->parsed()) {
      Numeral composed =
          compose_unary(parse_numeral(comp_outer), parse_numeral(comp_inner));
      std::cout << render_numeral(composed, RenderMode::braces_comma) << "\n";
      return exit_ok;
    }
    if (pairc->parsed()) {
      std::cout << pair_encode(nat_value(parse_numeral(pair_j)),
                               nat_value(parse_numeral(pair_k)))
                << "\n";
      return exit_ok;
    }
    if (unpair->parsed()) {
      auto [row, col] = pair_decode(nat_value(parse_numeral(unpair_n)));
      std::cout << row << "\t" << col << "\n";
      return exit_ok;
    }
    if (conv->parsed()) {
      if (conv_to == "trig")
        std::cout << convert_dec_trig(parse_numeral(conv_numeral)).chars << "\n";
      else
        std::cout << convert_trig_dec(parse_trig(conv_numeral)).digits << "\n";
      return exit_ok;
    }
    if (snk->parsed()) {
      CalcResult r = snark(nat_value(parse_numeral(snark_n)),
                           snark_budget.budget());
      return calc_exit(r);
    }
    if (enu->parsed()) {
      TrigNumeral t = trig_of(Nat(enum_start));
      for (std::uint64_t i = 0; i < enum_limit; ++i) {
        bool scheme = is_unary_scheme(t);
        if (!enum_schemes_only || scheme)
          std::cout << Nat(enum_start) + i << "\t" << t.chars << "\t"
                    << (scheme ? 1 : 0) << "\n";
        t = trig_successor(t);
      }
      return exit_ok;
    }
    if (ver->parsed()) {
      Corpus corpus = load_corpus(ver_file);
      VerifyReport report =
          verify_corpus(corpus, ver_unary, ver_binary, ver_budget.budget());
      write_verify_report(std::cout, report);
      return report.all_passed ? exit_ok : exit_parse;
    }
    if (maj->parsed()) {
      MajorantReport report = majorant_check(parse_numeral(maj_program),
                                             Nat(maj_lo), Nat(maj_hi),
                                             maj_budget.budget());
      std::cout << "majorant\t"
                << render_numeral(report.majorant, RenderMode::braces_comma)
                << "\tdegree\t" << report.degree << "\n";
      for (const MajorantPoint& pt : report.points) {
        std::cout << pt.x << "\t";
        switch (pt.status) {
          case MajorantPoint::Status::compared:
            std::cout << (pt.dominated ? "dominated" : "NOT-dominated") << "\t"
                      << *pt.program_value << "\t" << *pt.majorant_value;
            break;
          case MajorantPoint::Status::compared_partial:
            std::cout << (pt.dominated ? "dominated-partial" : "NOT-dominated")
                      << "\t" << *pt.program_value << "\t"
                      << *pt.majorant_value << "+";
            break;
          case MajorantPoint::Status::unscanned:
            std::cout << "unscanned";
            break;
        }
        std::cout << "\n";
      }
      if (report.dominance_threshold)
        std::cout << "dominated-from\t" << *report.dominance_threshold << "\n";
      return exit_ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_usage;
}
