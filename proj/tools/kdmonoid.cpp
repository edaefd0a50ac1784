// kdmonoid: command-line front end for the closure/complement/d/f toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdmonoid/corpus.hpp"
#include "kdmonoid/monoid.hpp"
#include "kdmonoid/poset.hpp"
#include "kdmonoid/rewrite.hpp"
#include "kdmonoid/tables.hpp"
#include "kdmonoid/verify.hpp"
#include "kdmonoid/vitali.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace kdm;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for bad flag values that CLI11 cannot see (word syntax, DSL, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string w0 = "(8,9)";
  std::string w1 = "(8,10)";

  VitaliParams params() const {
    try {
      return VitaliParams::make(parse_tame_dsl(w0), parse_tame_dsl(w1));
    } catch (const ParseError& e) {
      throw UsageError(std::string("--w0/--w1: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--w0/--w1: ") + e.what());
    }
  }
};

Word word_arg(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw UsageError("word '" + text + "': " + e.what());
  }
}

std::vector<Letter> gens_arg(const std::string& text) {
  try {
    return parse_generators(text);
  } catch (const std::exception& e) {
    throw UsageError("--gens '" + text + "': " + e.what());
  }
}

AxiomName axioms_arg(const std::string& text) {
  try {
    return parse_axiom_name(text);
  } catch (const std::exception& e) {
    throw UsageError("--axioms '" + text + "': " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const Word& w : ws) a.push_back(render_word(w));
  return a;
}

// ---------------------------------------------------------------------------

int cmd_normalize(const std::string& word, const std::string& axioms, bool trace) {
  const AxiomSystem& ax = AxiomSystem::get(axioms_arg(axioms));
  std::vector<RewriteStep> steps;
  const Word w = word_arg(word);
  const Word nf = normalize_tokens(w.tokens(), ax, kDefaultStepBudget, trace ? &steps : nullptr);
  if (trace) {
    for (const RewriteStep& s : steps) {
      std::cout << "  " << s.rule << " at " << s.position + 1 << " => "
                << (s.result.empty() ? "e" : s.result) << "\n";
    }
  }
  std::cout << render_word(nf) << "\n";
  return kExitOk;
}

int cmd_enumerate(const std::string& gens, const std::string& axioms, bool as_json) {
  const auto g = gens_arg(gens);
  const AxiomName name = axioms_arg(axioms);
  const MonoidTable m = enumerate(g, AxiomSystem::get(name));
  if (as_json) {
    json j;
    j["version"] = kReportVersion;
    j["generators"] = render_generators(g);
    j["axioms"] = to_string(name);
    j["count"] = m.size();
    j["elements"] = words_json(m.elements);
    json left = json::object();
    for (std::size_t n = 0; n < g.size(); ++n) left[std::string(1, to_char(g[n]))] = m.left_cayley[n];
    j["left_cayley"] = left;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "count " << m.size() << "\n";
  for (std::size_t n = 0; n < m.size(); ++n) {
    std::cout << (n ? " " : "") << render_word(m.elements[n]);
  }
  std::cout << "\n";
  return kExitOk;
}

SymbolicSet set_arg(const std::optional<std::string>& dsl, const std::optional<std::string>& name,
                    const VitaliUniverse& u) {
  if (dsl.has_value() == name.has_value()) throw UsageError("give exactly one of --set, --witness");
  if (name) {
    try {
      return witness(parse_witness_name(*name), u.params());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return parse_set_dsl(*dsl, u);
  } catch (const ParseError& e) {
    throw UsageError("--set '" + *dsl + "': " + e.what());
  }
}

int cmd_eval(const std::string& word, const std::optional<std::string>& dsl,
             const std::optional<std::string>& name, const Globals& g) {
  const VitaliUniverse u(g.params());
  const Word w = word_arg(word);
  const SymbolicSet s = set_arg(dsl, name, u);
  try {
    std::cout << u.render(u.apply_word(w, s)) << "\n";
  } catch (const UndecidableError& e) {
    std::cerr << "error: " << render_word(w) << " on " << u.render(s) << ": " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_distinguish(const std::string& name, const std::string& gens, const std::string& axioms,
                    bool verbose, const Globals& g) {
  const VitaliUniverse u(g.params());
  const SymbolicSet s = set_arg(std::nullopt, name, u);
  const auto ops = enumerate_elements(gens_arg(gens), AxiomSystem::get(axioms_arg(axioms)));
  const Distinction d = u.distinguish(s, ops);
  std::cout << d.count << "\n";
  if (verbose) {
    for (const auto& row : d.rows) {
      std::cout << "  " << render_word(row.word) << "  " << row.image;
      if (row.group != &row - d.rows.data()) {
        std::cout << "  (same as " << render_word(d.rows[row.group].word) << ")";
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_poset(const std::string& axioms, const std::optional<std::string>& dot,
              const std::optional<std::string>& json_path, std::size_t corpus_size,
              std::uint64_t seed, const Globals& g) {
  const VitaliUniverse u(g.params());
  const AxiomName name = axioms_arg(axioms);
  const AxiomSystem& ax = AxiomSystem::get(name);
  const Corpus corpus = build_corpus(seed, corpus_size, u.params());
  LabeledCorpus lc;
  const auto sets = corpus.all();
  const auto labels = corpus.labels();
  for (std::size_t n = 0; n < sets.size(); ++n) {
    if (name == AxiomName::pb && u.has_baire_property(sets[n]) != BaireProperty::yes) continue;
    lc.sets.push_back(sets[n]);
    lc.labels.push_back(labels[n]);
  }
  const auto evens = even_operators(ax);
  const OrderRelation proved = proved_relation(evens, ax);
  const OrderRelation order = reconcile(proved, corpus_relation(evens, lc, u));
  const auto edges = hasse(order);

  std::vector<std::string> names;
  for (const Word& w : evens) names.push_back(render_word(w));
  if (dot) write_file(*dot, emit_dot(edges, names));
  if (json_path) {
    json j;
    j["version"] = kReportVersion;
    j["axioms"] = to_string(name);
    j["elements"] = names;
    json leq = json::array(), prov = json::array();
    for (std::size_t a = 0; a < order.size(); ++a) {
      json row = json::array(), prow = json::array();
      for (std::size_t b = 0; b < order.size(); ++b) {
        row.push_back(order.leq[a][b] != 0);
        prow.push_back(order.leq[a][b] ? json(to_string(order.provenance[a][b])) : json(nullptr));
      }
      leq.push_back(row);
      prov.push_back(prow);
    }
    j["leq"] = leq;
    j["provenance"] = prov;
    write_file(*json_path, j.dump(2) + "\n");
  }

  std::cout << evens.size() << " even operators, " << edges.size() << " Hasse edges\n";
  for (const HasseEdge& e : edges) std::cout << "  " << names[e.from] << " -> " << names[e.to] << "\n";
  std::size_t corpus_only = 0;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      corpus_only += order.leq[a][b] && order.provenance[a][b] == Provenance::corpus_only;
    }
  }
  if (corpus_only) {
    std::cout << corpus_only << " inequalities are supported by the corpus only\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_table(const std::string& which, const Globals& g) {
  const VitaliUniverse u(g.params());
  if (which == "figure-even") {
    std::cout << format_table(figure_even_table(u), "A");
  } else if (which == "vitali") {
    std::cout << format_table(vitali_table(u), "V");
  } else if (which == "kfd-counts") {
    std::cout << format_counts(kfd_counts());
  } else {
    throw UsageError("unknown table '" + which + "' (figure-even|vitali|kfd-counts)");
  }
  return kExitOk;
}

int cmd_verify(std::size_t corpus_size, std::uint64_t seed, const std::optional<std::string>& path,
               const Globals& g) {
  VerifyOptions opt;
  opt.corpus_size = corpus_size;
  opt.seed = seed;
  opt.params = g.params();
  const VerifyReport report = run_verify(opt);
  std::cout << report.to_text();
  if (path) write_file(*path, report.to_json());
  return report.ok() ? kExitOk : kExitFailed;
}

int cmd_rules(const std::string& axioms, bool as_json) {
  const AxiomName name = axioms_arg(axioms);
  const AxiomSystem& ax = AxiomSystem::get(name);
  auto show = [](const std::string& t) { return t.empty() ? std::string("e") : t; };
  if (as_json) {
    json j;
    j["version"] = kReportVersion;
    j["axioms"] = to_string(name);
    j["rules"] = json::array();
    for (const RewriteRule& r : ax.rules()) {
      j["rules"].push_back({{"lhs", show(r.lhs)},
                            {"rhs", show(r.rhs)},
                            {"tier", to_string(r.tier)},
                            {"status", to_string(r.status)},
                            {"provenance", r.provenance}});
    }
    j["schemas"] = json::array();
    for (const RuleSchema& s : ax.schemas()) {
      j["schemas"].push_back({{"id", s.id},
                              {"prefix", s.prefix},
                              {"guard", to_string(s.guard)},
                              {"replacement", show(s.replacement)},
                              {"collapses", s.collapses},
                              {"provenance", s.provenance}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const RewriteRule& r : ax.rules()) {
    std::cout << show(r.lhs) << " -> " << show(r.rhs) << "  [" << to_string(r.tier) << ", "
              << to_string(r.status) << "] " << r.provenance << "\n";
  }
  for (const RuleSchema& s : ax.schemas()) {
    std::cout << s.id << ": " << s.prefix << "w -> " << show(s.replacement)
              << (s.collapses ? "" : "w") << " when w is " << to_string(s.guard) << "\n";
  }
  return kExitOk;
}

int cmd_corpus(std::size_t size, std::uint64_t seed, const Globals& g) {
  const VitaliUniverse u(g.params());
  const Corpus c = build_corpus(seed, size, u.params());
  json j;
  j["version"] = kReportVersion;
  j["seed"] = seed;
  j["sets"] = json::array();
  for (const NamedSet& n : c.named) j["sets"].push_back({{"name", n.name}, {"set", u.render(n.set)}});
  for (std::size_t n = 0; n < c.random.size(); ++n) {
    j["sets"].push_back({{"seed", seed + n}, {"set", render(c.random[n])}});
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure, complement, d and f operator monoids on the real line"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--w0", g.w0, "open set W0 with dV = kW0")->capture_default_str();
  app.add_option("--w1", g.w1, "open set W1 with kV = kW1")->capture_default_str();

  std::string word, axioms = "base", gens, which;
  bool as_json = false, trace = false, verbose = false;
  std::optional<std::string> set_dsl, witness_name, dot, json_path;
  std::size_t corpus_size = kDefaultCorpusSize;
  std::uint64_t seed = kDefaultSeed;

  auto* normalize = app.add_subcommand("normalize", "reduce a word to its canonical form");
  normalize->add_option("word", word, "operator word, e.g. kid")->required();
  normalize->add_option("--axioms", axioms, "base | pb")->capture_default_str();
  normalize->add_flag("--trace", trace, "print each rewrite step");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the monoid generated by --gens");
  enumerate_cmd->add_option("--gens", gens, "generator letters, e.g. kcd")->required();
  enumerate_cmd->add_option("--axioms", axioms, "base | pb")->capture_default_str();
  enumerate_cmd->add_flag("--json", as_json, "emit JSON with the left Cayley table");

  auto* eval = app.add_subcommand("eval", "apply a word to a set");
  eval->add_option("word", word, "operator word")->required();
  auto* set_opt = eval->add_option("--set", set_dsl, "set expression, e.g. '(1,2) u Q(5,6)'");
  auto* wit_opt = eval->add_option("--witness", witness_name, "A18|A22|V|cV|empty|full");
  set_opt->excludes(wit_opt);

  auto* distinguish = app.add_subcommand("distinguish", "count distinct images of a witness");
  distinguish->add_option("--witness", witness_name, "A18|A22|V|cV|empty|full")->required();
  distinguish->add_option("--gens", gens, "generator letters")->required();
  distinguish->add_option("--axioms", axioms, "base | pb")->capture_default_str();
  distinguish->add_flag("-v,--verbose", verbose, "print every image");

  auto* poset = app.add_subcommand("poset", "order and Hasse diagram of the even operators");
  poset->add_option("--axioms", axioms, "base | pb")->capture_default_str();
  poset->add_option("--dot", dot, "write the Hasse diagram as DOT");
  poset->add_option("--json", json_path, "write the order matrix as JSON");
  poset->add_option("--corpus-size", corpus_size, "random corpus sets")->capture_default_str();
  poset->add_option("--seed", seed, "corpus seed")->capture_default_str();

  auto* table = app.add_subcommand("table", "print a reference table");
  table->add_option("name", which, "figure-even | vitali | kfd-counts")
      ->required()
      ->check(CLI::IsMember({"figure-even", "vitali", "kfd-counts"}));

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--corpus-size", corpus_size, "random corpus sets")->capture_default_str();
  verify->add_option("--seed", seed, "corpus seed")->capture_default_str();
  verify->add_option("--json", json_path, "write the report as JSON");

  auto* rules = app.add_subcommand("rules", "list rewrite rules and schemas");
  rules->add_option("--axioms", axioms, "base | pb")->capture_default_str();
  rules->add_flag("--json", as_json, "emit JSON");

  auto* corpus = app.add_subcommand("corpus", "export the seeded corpus as JSON");
  corpus->add_option("--size", corpus_size, "random corpus sets")->capture_default_str();
  corpus->add_option("--seed", seed, "corpus seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*normalize) return cmd_normalize(word, axioms, trace);
    if (*enumerate_cmd) return cmd_enumerate(gens, axioms, as_json);
    if (*eval) return cmd_eval(word, set_dsl, witness_name, g);
    if (*distinguish) return cmd_distinguish(*witness_name, gens, axioms, verbose, g);
    if (*poset) return cmd_poset(axioms, dot, json_path, corpus_size, seed, g);
    if (*table) return cmd_table(which, g);
    if (*verify) return cmd_verify(corpus_size, seed, json_path, g);
    if (*rules) return cmd_rules(axioms, as_json);
    if (*corpus) return cmd_corpus(corpus_size, seed, g);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NormalizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
