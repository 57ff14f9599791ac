// semithue -- command-line front end: validate grammar files, run the
// transformations, enumerate languages, drive the production machine, and
// produce analysis reports.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "semithue/analysis.hh"
#include "semithue/grammar_io.hh"
#include "semithue/report_json.hh"

namespace {

using namespace semithue;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct GlobalOptions {
  Bounds bounds;
  std::string format = "text";

  bool structured() const { return format == "structured"; }
};

void warn_incomplete(const GlobalOptions& opt, bool complete) {
  if (!complete && !opt.structured())
    std::cout << "warning: exploration incomplete (a bound was reached)\n";
}

std::set<std::string> rendered(const Grammar& g, const std::set<SymbolString>& strings) {
  std::set<std::string> out;
  for (const SymbolString& s : strings) out.insert(g.render(s));
  return out;
}

void print_sentences(const GlobalOptions& opt, const std::set<std::string>& sentences,
                     bool complete, const std::string& what) {
  if (opt.structured()) {
    json j{{"command", what}, {"sentences", sentences}, {"complete", complete}};
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const std::string& s : sentences) std::cout << s << '\n';
  warn_incomplete(opt, complete);
}

Grammar load(const std::string& path) {
  Grammar g = parse_grammar_file(path);
  for (const ValidationIssue& issue : validate(g))
    if (issue.severity == Severity::error)
      throw std::runtime_error(path + ": invalid grammar: " + issue.message);
  return g;
}

SymbolString parse_sentence(const Grammar& g, const std::vector<std::string>& words) {
  std::string joined;
  for (const std::string& w : words) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return g.parse_string(joined);
}

int cmd_validate(const GlobalOptions& opt, const std::string& path) {
  Grammar g = parse_grammar_file(path);
  std::vector<ValidationIssue> issues = validate(g);
  bool ok = true;
  if (opt.structured()) {
    json items = json::array();
    for (const ValidationIssue& i : issues) {
      items.push_back({{"severity", i.severity == Severity::error ? "error" : "warning"},
                       {"message", i.message}});
      ok = ok && i.severity != Severity::error;
    }
    std::cout << json{{"command", "validate"}, {"issues", items}, {"valid", ok}}.dump(2)
              << '\n';
  } else {
    for (const ValidationIssue& i : issues) {
      std::cout << (i.severity == Severity::error ? "error: " : "warning: ")
                << i.message << '\n';
      ok = ok && i.severity != Severity::error;
    }
    if (issues.empty()) std::cout << "ok\n";
  }
  return ok ? kExitTrue : kExitError;
}

int cmd_transform(const GlobalOptions& opt, const std::string& path, bool emit) {
  Grammar g = load(path);
  TransformResult result = prepare(g);
  if (opt.structured()) {
    json replaced = json::array();
    for (const auto& r : result.trace.replaced)
      replaced.push_back({{"original", r.original}, {"replacements", r.replacements}});
    std::cout << json{{"command", "transform"},
                      {"prepared", serialize_grammar(result.grammar)},
                      {"replaced", replaced},
                      {"introduced", result.trace.introduced_symbols}}
                     .dump(2)
              << '\n';
    return kExitTrue;
  }
  if (emit) {
    std::cout << serialize_grammar(result.grammar);
    return kExitTrue;
  }
  for (const auto& r : result.trace.replaced) {
    std::cout << "replaced: " << r.original << '\n';
    for (const std::string& p : r.replacements) std::cout << "    with: " << p << '\n';
  }
  if (!result.trace.introduced_symbols.empty()) {
    std::cout << "introduced:";
    for (const std::string& s : result.trace.introduced_symbols) std::cout << ' ' << s;
    std::cout << '\n';
  }
  if (result.trace.replaced.empty()) std::cout << "already prepared\n";
  return kExitTrue;
}

int cmd_oracle(const GlobalOptions& opt, const std::string& path,
               const std::string& relation, bool strict) {
  Grammar g = load(path);
  Relation rel = relation == "full"
                     ? Relation::full()
                     : Relation::leftmost(strict ? ApplicabilityMode::strict
                                                 : ApplicabilityMode::operational);
  EnumerationResult result = enumerate_language(g, rel, opt.bounds);
  print_sentences(opt, rendered(g, result.sentences), result.complete, "oracle");
  return kExitTrue;
}

int cmd_generate(const GlobalOptions& opt, const std::string& path, bool extended,
                 bool markov) {
  Grammar g = load(path);
  Grammar prepared = prepare(g).grammar;
  MachineConfig cfg = MachineConfig::generative(
      prepared, extended, markov ? Strategy::markov : Strategy::nondeterministic);
  MachineRunResult result = run_generative(cfg, opt.bounds);
  print_sentences(opt, rendered(prepared, result.sentences), result.complete,
                  "generate");
  return kExitTrue;
}

int cmd_recognize(const GlobalOptions& opt, const std::string& path,
                  const std::vector<std::string>& words, bool extended) {
  Grammar g = load(path);
  SymbolString sentence = parse_sentence(g, words);
  if (!is_sentence(g, sentence))
    throw std::runtime_error("'" + g.render(sentence) + "' is not a sentence (terminal symbols only)");

  Grammar prepared = prepare(g).grammar;
  RecognitionRunResult machine = run_recognitive(prepared, sentence, opt.bounds, extended);
  RecognitionOracleResult oracle =
      recognize_oracle(g, sentence, ApplicabilityMode::operational, opt.bounds);

  if (opt.structured()) {
    json layers = json::array();
    for (const auto& layer : oracle.graph.layers) {
      json nodes = json::array();
      for (int id : layer) nodes.push_back(g.render(oracle.graph.nodes[id]));
      layers.push_back(nodes);
    }
    std::cout << json{{"command", "recognize"},
                      {"sentence", g.render(sentence)},
                      {"recognized", machine.recognized},
                      {"complete", machine.complete},
                      {"oracle_recognized", oracle.recognized},
                      {"oracle_layers", layers},
                      {"witness", trace_json(dual(prepared), machine.witness)}}
                     .dump(2)
              << '\n';
    return machine.recognized ? kExitTrue : kExitFalse;
  }

  std::cout << (machine.recognized ? "recognized" : "not recognized") << '\n';
  warn_incomplete(opt, machine.complete);
  if (oracle.recognized != machine.recognized)
    std::cout << "note: the machine runs on the prepared grammar; the reduction "
                 "graph below uses the grammar as given and reaches a different "
                 "verdict\n";
  std::cout << "dual-leftmost reduction graph from '" << g.render(sentence) << "':\n";
  for (std::size_t d = 0; d < oracle.graph.layers.size(); ++d) {
    std::cout << "  ";
    bool first = true;
    for (int id : oracle.graph.layers[d]) {
      if (!first) std::cout << "  |  ";
      std::cout << g.render(oracle.graph.nodes[id]);
      first = false;
    }
    std::cout << '\n';
  }
  if (machine.recognized) {
    std::cout << "accepting run (" << machine.witness.size() - 1 << " moves):\n"
              << render_trace(dual(prepared), machine.witness);
  }
  return machine.recognized ? kExitTrue : kExitFalse;
}

int cmd_compare(const GlobalOptions& opt, const std::string& path) {
  Grammar g = load(path);
  LanguageComparison cmp = compare_languages(g, opt.bounds);
  if (opt.structured()) {
    json j = cmp;
    j["command"] = "compare";
    std::cout << j.dump(2) << '\n';
    return kExitTrue;
  }
  auto row = [](const std::string& label, const std::set<std::string>& set,
                bool complete) {
    std::cout << label;
    bool first = true;
    for (const std::string& s : set) {
      std::cout << (first ? "" : " | ") << s;
      first = false;
    }
    if (set.empty()) std::cout << "(empty)";
    if (!complete) std::cout << "   [incomplete]";
    std::cout << '\n';
  };
  row("leftmost:             ", cmp.leftmost, cmp.leftmost_complete);
  row("full:                 ", cmp.full, cmp.full_complete);
  row("generated:            ", cmp.generated, cmp.generated_complete);
  row("extended generated:   ", cmp.extended_generated, cmp.extended_generated_complete);
  row("recognized:           ", cmp.recognized, cmp.recognized_complete);
  row("extended recognized:  ", cmp.extended_recognized,
      cmp.extended_recognized_complete);
  return kExitTrue;
}

int cmd_isomorphism(const GlobalOptions& opt, const std::string& path, int depth) {
  Grammar g = load(path);
  Grammar prepared = prepare(g).grammar;
  IsomorphismReport report = check_isomorphism(prepared, depth, opt.bounds);
  if (opt.structured()) {
    json j = report;
    j["command"] = "isomorphism";
    std::cout << j.dump(2) << '\n';
    return report.pass ? kExitTrue : kExitFalse;
  }
  for (std::size_t d = 0; d < report.layers.size(); ++d) {
    const auto& layer = report.layers[d];
    std::cout << "layer " << d << ": " << layer.string_nodes << " strings, "
              << layer.machine_nodes << " machine states"
              << (layer.bijective ? "" : "  MISMATCH") << '\n';
  }
  std::cout << "edges matched: " << report.edges_matched
            << ", unmatched: " << report.edges_unmatched << '\n';
  warn_incomplete(opt, report.complete);
  if (!report.counterexample.empty())
    std::cout << "counterexample: " << report.counterexample << '\n';
  std::cout << (report.pass ? "PASS" : "FAIL") << '\n';
  return report.pass ? kExitTrue : kExitFalse;
}

int cmd_trace(const GlobalOptions& opt, const std::string& path,
              const std::vector<std::string>& sentence_words, int limit) {
  Grammar g = load(path);
  Grammar prepared = prepare(g).grammar;

  if (!sentence_words.empty()) {
    SymbolString sentence = parse_sentence(g, sentence_words);
    RecognitionRunResult result =
        run_recognitive(prepared, sentence, opt.bounds, false);
    if (!result.recognized) {
      if (opt.structured())
        std::cout << json{{"command", "trace"},
                          {"recognized", false},
                          {"complete", result.complete}}
                         .dump(2)
                  << '\n';
      else
        std::cout << "not recognized\n";
      warn_incomplete(opt, result.complete);
      return kExitFalse;
    }
    std::vector<TraceRecord> trace = result.witness;
    if (static_cast<int>(trace.size()) > limit) trace.resize(limit);
    Grammar machine_grammar = dual(prepared);
    if (opt.structured())
      std::cout << json{{"command", "trace"},
                        {"recognized", true},
                        {"records", trace_json(machine_grammar, trace)}}
                       .dump(2)
                << '\n';
    else
      std::cout << render_trace(machine_grammar, trace);
    return kExitTrue;
  }

  // deterministic generative run (Markov strategy: first matching production)
  MachineConfig cfg =
      MachineConfig::generative(prepared, false, Strategy::markov);
  std::vector<TraceRecord> trace{{0, -1, initial_generative(cfg)}};
  std::vector<MachineState> seen{trace.back().state};
  while (static_cast<int>(trace.size()) < limit) {
    std::vector<StepOutcome> outcomes = step(cfg, trace.back().state);
    if (outcomes.empty()) break;
    const StepOutcome& o = outcomes.front();
    trace.push_back({o.move, o.production, o.state});
    if (std::find(seen.begin(), seen.end(), o.state) != seen.end()) break;
    seen.push_back(o.state);
  }
  if (opt.structured())
    std::cout << json{{"command", "trace"}, {"records", trace_json(prepared, trace)}}
                     .dump(2)
              << '\n';
  else
    std::cout << render_trace(prepared, trace);
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"production grammar toolkit: leftmost-reduction oracle and "
               "three-tape production machines"};
  app.require_subcommand(1);
  app.fallthrough();  // global bounds/format flags may follow the subcommand

  GlobalOptions opt;
  app.add_option("--max-len", opt.bounds.max_string_length,
                 "prune strings/states larger than this many symbols")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-depth", opt.bounds.max_depth, "cap on exploration depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", opt.bounds.max_nodes, "cap on distinct nodes")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string path;
  bool emit = false, strict = false, extended = false, markov = false;
  std::string relation = "leftmost";
  int depth = 12, limit = 500;
  std::vector<std::string> words;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check grammar invariants");
  validate_cmd->add_option("grammar", path)->required();

  CLI::App* transform_cmd =
      app.add_subcommand("transform", "prepare the grammar for the machine");
  transform_cmd->add_option("grammar", path)->required();
  transform_cmd->add_flag("--emit", emit, "print the prepared grammar");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "bounded language enumeration by rewriting");
  oracle_cmd->add_option("grammar", path)->required();
  oracle_cmd->add_option("--relation", relation)
      ->check(CLI::IsMember({"leftmost", "full"}));
  oracle_cmd->add_flag("--strict", strict,
                       "use the strict (conjunctive) leftmost-applicability test");

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "sentences produced by the generative machine");
  generate_cmd->add_option("grammar", path)->required();
  generate_cmd->add_flag("--extended", extended, "allow skipping move 5");
  generate_cmd->add_flag("--markov", markov, "first-production deterministic strategy");

  CLI::App* recognize_cmd =
      app.add_subcommand("recognize", "run the recognitive machine on a sentence");
  recognize_cmd->add_option("grammar", path)->required();
  recognize_cmd->add_option("sentence", words, "sentence as symbol names")
      ->required()
      ->expected(-1);
  recognize_cmd->add_flag("--extended", extended, "allow skipping move 5");

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "oracle and machine language comparison");
  compare_cmd->add_option("grammar", path)->required();

  CLI::App* iso_cmd = app.add_subcommand(
      "isomorphism", "layer-by-layer reduction-graph vs machine-graph check");
  iso_cmd->add_option("grammar", path)->required();
  iso_cmd->add_option("--depth", depth)->check(CLI::PositiveNumber);

  CLI::App* trace_cmd = app.add_subcommand("trace", "per-move tape snapshots");
  trace_cmd->add_option("grammar", path)->required();
  trace_cmd->add_option("--sentence", words, "recognize this sentence instead")
      ->expected(-1);
  trace_cmd->add_option("--limit", limit)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    opt.bounds.check();
    if (validate_cmd->parsed()) return cmd_validate(opt, path);
    if (transform_cmd->parsed()) return cmd_transform(opt, path, emit);
    if (oracle_cmd->parsed()) return cmd_oracle(opt, path, relation, strict);
    if (generate_cmd->parsed()) return cmd_generate(opt, path, extended, markov);
    if (recognize_cmd->parsed()) return cmd_recognize(opt, path, words, extended);
    if (compare_cmd->parsed()) return cmd_compare(opt, path);
    if (iso_cmd->parsed()) return cmd_isomorphism(opt, path, depth);
    if (trace_cmd->parsed()) return cmd_trace(opt, path, words, limit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
