#include "kdmonoid/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kdmonoid/monoid.hpp"
#include "kdmonoid/poset.hpp"
#include "kdmonoid/properties.hpp"
#include "kdmonoid/tables.hpp"
#include "kdmonoid/validate.hpp"

namespace kdm {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "skip";
}

std::string criterion_title(int criterion) {
  static const char* titles[] = {
      "monoid cardinalities",     "figure reproduction",  "distinctness counts",
      "Vitali table",             "property suites",      "rewrite soundness",
      "completion",               "poset",                "parity",
      "cross-consistency",
  };
  if (criterion < 1 || criterion > kCriteriaCount) return "unknown";
  return titles[criterion - 1];
}

bool VerifyReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::vector<const CheckResult*> VerifyReport::checks_for(int criterion) const {
  std::vector<const CheckResult*> out;
  for (const CheckResult& c : checks) {
    if (c.criterion == criterion) out.push_back(&c);
  }
  return out;
}

bool VerifyReport::criterion_passed(int criterion) const {
  const auto cs = checks_for(criterion);
  bool any_pass = false;
  for (const CheckResult* c : cs) {
    if (c->status == CheckStatus::fail) return false;
    any_pass = any_pass || c->status == CheckStatus::pass;
  }
  return any_pass;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["ok"] = ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"criterion", c.criterion},
                           {"description", c.description},
                           {"status", to_string(c.status)},
                           {"details", c.details}});
  }
  j["typo_ledger"] = nlohmann::ordered_json::array();
  for (const TypoEntry& t : typo_ledger) {
    j["typo_ledger"].push_back(
        {{"printed", t.printed}, {"corrected", t.corrected}, {"counterexample", t.counterexample}});
  }
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  int current = 0;
  for (const CheckResult& c : checks) {
    if (c.criterion != current) {
      current = c.criterion;
      out << "\n[" << current << "] " << criterion_title(current) << ": "
          << (criterion_passed(current) ? "PASS" : "FAIL") << "\n";
    }
    std::string status(to_string(c.status));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << "  " << status << "  " << c.id << "  " << c.description;
    if (!c.details.empty()) out << "  (" << c.details << ")";
    out << "\n";
  }
  out << "\ntypo ledger (" << typo_ledger.size() << " entries):\n";
  for (const TypoEntry& t : typo_ledger) {
    out << "  printed " << t.printed << "; corrected " << t.corrected << "; " << t.counterexample
        << "\n";
  }
  std::size_t failed = 0;
  for (const CheckResult& c : checks) failed += c.status == CheckStatus::fail;
  out << "\n" << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

namespace {

std::string join(const std::vector<Word>& ws) {
  std::string s;
  for (const Word& w : ws) s += (s.empty() ? "" : " ") + render_word(w);
  return s;
}

std::vector<Word> words(const std::string& spaced) {
  std::vector<Word> out;
  std::istringstream in(spaced);
  for (std::string w; in >> w;) out.push_back(parse_word(w));
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

const char* const kList22 = "e i k ki ik iki kik d id c ci ck cki cik ciki ckik cd cid dc idc cdc cidc";
const char* const kList20 = "e k i d f ik fk ki fi fd id if ff kif kik fik 0 iki fki fif";
const char* const kList40Extra =
    "c ck ci cd cf cik cfk cki cfi cfd cid cif cff ckif ckik cfik 1 ciki cfki cfif";
const char* const kList46Extra = "dc idc cdc cidc fdc cfdc";

struct PairSpec {
  const char* gens;
  AxiomName ax;
  std::size_t expected;
};
const PairSpec kPairs[] = {
    {"kc", AxiomName::base, 14},  {"kcd", AxiomName::base, 22}, {"kcd", AxiomName::pb, 18},
    {"ki", AxiomName::base, 7},   {"kid", AxiomName::base, 9},  {"kcf", AxiomName::base, 34},
    {"kifd", AxiomName::base, 20}, {"kcfd", AxiomName::pb, 40}, {"kcfd", AxiomName::base, 46},
};

std::string pair_name(const PairSpec& p) {
  return std::string(p.gens) + "." + std::string(to_string(p.ax));
}

class Verifier {
 public:
  explicit Verifier(const VerifyOptions& opt)
      : opt_(opt),
        u_(opt.params),
        corpus_(build_corpus(opt.seed, opt.corpus_size, opt.params)) {
    all_.sets = corpus_.all();
    all_.labels = corpus_.labels();
    for (std::size_t n = 0; n < all_.sets.size(); ++n) {
      if (u_.has_baire_property(all_.sets[n]) == BaireProperty::yes) {
        bp_.sets.push_back(all_.sets[n]);
        bp_.labels.push_back(all_.labels[n]);
      }
    }
    defaults_ = u_.params().w0 == VitaliParams::defaults().w0 &&
                u_.params().w1 == VitaliParams::defaults().w1;
  }

  VerifyReport run() {
    cardinalities();
    figure();
    distinctness();
    vitali();
    properties();
    soundness();
    completion();
    poset();
    parity_split();
    cross_consistency();
    return std::move(report_);
  }

 private:
  void add(std::string id, int criterion, std::string description, bool ok,
           std::string details = {}) {
    report_.checks.push_back({std::move(id), criterion, std::move(description),
                              ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
  }
  void skip(std::string id, int criterion, std::string description, std::string details) {
    report_.checks.push_back({std::move(id), criterion, std::move(description),
                              CheckStatus::skip, std::move(details)});
  }

  std::vector<Word> elements(const char* gens, AxiomName ax) {
    const std::string key = std::string(gens) + "/" + std::string(to_string(ax));
    auto it = elements_.find(key);
    if (it == elements_.end()) {
      it = elements_
               .emplace(key, enumerate_elements(parse_generators(gens), AxiomSystem::get(ax)))
               .first;
    }
    return it->second;
  }

  void compare_list(const std::string& id, const std::string& description,
                    const std::vector<Word>& got, const std::vector<Word>& want) {
    std::vector<Word> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(missing), ShortlexLess{});
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(extra), ShortlexLess{});
    std::string details = missing.empty() && extra.empty()
                              ? join(got)
                              : "missing: " + join(missing) + "; extra: " + join(extra);
    add(id, 1, description, missing.empty() && extra.empty(), details);
  }

  // 1 -----------------------------------------------------------------------
  void cardinalities() {
    for (const PairSpec& p : kPairs) {
      const auto els = elements(p.gens, p.ax);
      add("C1.count." + pair_name(p), 1,
          "<" + std::string(p.gens) + "> " + std::string(to_string(p.ax)) + " has " +
              std::to_string(p.expected) + " elements",
          els.size() == p.expected, std::to_string(els.size()));
    }
    const auto l22 = words(kList22);
    const auto l20 = words(kList20);
    const auto l40 = words(std::string(kList20) + " " + kList40Extra);
    const auto l46 = words(std::string(kList20) + " " + kList40Extra + " " + kList46Extra);
    compare_list("C1.list.kcd.base", "element set equals the 22-word list",
                 elements("kcd", AxiomName::base), l22);
    compare_list("C1.list.kifd.base", "element set equals the 20-word list",
                 elements("kifd", AxiomName::base), l20);
    compare_list("C1.list.kcfd.pb", "element set equals the 40-word list",
                 elements("kcfd", AxiomName::pb), l40);
    compare_list("C1.list.kcfd.base", "element set equals the 46-word list",
                 elements("kcfd", AxiomName::base), l46);

    const auto base = elements("kcfd", AxiomName::base);
    const auto pb = elements("kcfd", AxiomName::pb);
    std::vector<Word> diff;
    std::set_difference(base.begin(), base.end(), pb.begin(), pb.end(), std::back_inserter(diff),
                        ShortlexLess{});
    const auto want = words(kList46Extra);
    add("C1.diff.kcfd", 1, "BASE minus PB is {dc, idc, cdc, cidc, fdc, cfdc}", diff == want,
        join(diff));
  }

  // 2 -----------------------------------------------------------------------
  void figure() {
    for (const TableRow& r : figure_even_table(u_)) {
      const std::string w = render_word(r.word);
      add("C2." + w + "A", 2, w + "A = " + r.reference, r.matches, r.derived);
    }
  }

  // 3 -----------------------------------------------------------------------
  void distinctness() {
    const struct {
      const char* id;
      WitnessName witness;
      const char* gens;
      AxiomName ax;
      std::size_t expected;
    } specs[] = {{"C3.A18.kcd.pb", WitnessName::a18, "kcd", AxiomName::pb, 18},
                 {"C3.A22.kcd.base", WitnessName::a22, "kcd", AxiomName::base, 22},
                 {"C3.A22.kcfd.base", WitnessName::a22, "kcfd", AxiomName::base, 46}};
    for (const auto& s : specs) {
      const auto ops = elements(s.gens, s.ax);
      const Distinction d = u_.distinguish(witness(s.witness, u_.params()), ops);
      add(s.id, 3,
          std::string(to_string(s.witness)) + " separates the " + std::to_string(ops.size()) +
              " operators of <" + s.gens + "> " + std::string(to_string(s.ax)),
          d.count == s.expected,
          std::to_string(d.count) + " distinct images");
    }
  }

  // 4 -----------------------------------------------------------------------
  void vitali() {
    if (!defaults_) {
      skip("C4.table", 4, "Vitali table", "only defined for W0=(8,9), W1=(8,10)");
      return;
    }
    static const char* expected[] = {"(-inf,inf)",         "(8,9)", "[8,9]",
                                     "(-inf,inf)",         "(-inf,8) u (9,inf)",
                                     "{}",                 "{}",    "(-inf,8] u [9,inf)"};
    const auto rows = vitali_table(u_);
    std::size_t matches = 0;
    std::vector<std::string> mismatched;
    for (std::size_t n = 0; n < rows.size(); ++n) {
      const std::string w = render_word(rows[n].word);
      add("C4." + w + "V", 4, w + "V = " + expected[n], rows[n].derived == expected[n],
          rows[n].derived);
      if (rows[n].matches) {
        ++matches;
      } else {
        mismatched.push_back(w);
        report_.typo_ledger.push_back(
            {w + "V = " + rows[n].reference, w + "V = " + rows[n].derived,
             rows[n].note});
      }
    }
    add("C4.printed", 4, "six rows match the reference table, cdV and kcdV do not",
        matches == 6 && mismatched == std::vector<std::string>{"cd", "kcd"},
        std::to_string(matches) + " match");

    const SymbolicSet v = witness(WitnessName::v, u_.params());
    const SymbolicSet dv = u_.apply_word(std::string_view("d"), v);
    const SymbolicSet cdv = u_.apply(Letter::c, dv);
    add("C4.consistent", 4, "cdV and kcdV follow from dV by complement and closure",
        u_.compare(SetRelation::equal, cdv, u_.apply_word(std::string_view("cd"), v)) &&
            u_.compare(SetRelation::equal, u_.apply(Letter::k, cdv),
                       u_.apply_word(std::string_view("kcd"), v)));
  }

  // 5 -----------------------------------------------------------------------
  void properties() {
    std::vector<SymbolicSet> sets = {witness(WitnessName::v, u_.params()),
                                     witness(WitnessName::cv, u_.params()),
                                     witness(WitnessName::a22, u_.params())};
    for (const TameSet& t : corpus_.random) sets.push_back(SymbolicSet::tame(t));
    for (const PropertyResult& r : check_d_identities(sets, u_)) {
      add("C5." + r.id, 5, r.statement, r.violations == 0 && r.checked > 0,
          std::to_string(r.checked) + " checked, " + std::to_string(r.skipped) + " undecidable" +
              (r.violations ? ", first violation on " + r.first_violation : ""));
    }
    for (const PropertyResult& r : check_baire_identities(bp_.sets, u_)) {
      add("C5." + r.id, 5, r.statement + " for sets with the Baire property",
          r.violations == 0 && r.checked > 0,
          std::to_string(r.checked) + " checked" +
              (r.violations ? ", first violation on " + r.first_violation : ""));
    }
    const SymbolicSet v = witness(WitnessName::v, u_.params());
    for (const OperatorEquality& e : baire_operator_equalities()) {
      const SymbolicSet lhs = u_.apply_word(std::string_view(e.lhs), v);
      const SymbolicSet rhs = u_.apply_word(std::string_view(e.rhs), v);
      add("C5.V." + e.lhs, 5, e.lhs + " = " + e.rhs + " fails on V",
          !u_.compare(SetRelation::equal, lhs, rhs),
          e.lhs + "V = " + u_.render(lhs) + ", " + e.rhs + "V = " + u_.render(rhs));
    }
  }

  // 6 -----------------------------------------------------------------------
  static std::string describe(const Counterexample& c, const std::string& lhs,
                              const std::string& rhs) {
    return "A = " + c.set + ": " + lhs + "A = " + c.lhs_image + ", " + rhs + "A = " + c.rhs_image;
  }

  void soundness() {
    const auto& rules = AxiomSystem::pb().rules();  // BASE rules plus dc -> cid
    const ValidationReport explicit_report = validate_rules(rules, all_, u_);
    std::size_t checked = 0, unvalidated = 0;
    std::string failures;
    for (const RuleValidation& r : explicit_report.rules) {
      checked += r.checked;
      unvalidated += r.unvalidated;
      if (!r.passed) failures += " " + r.rule.lhs + "->" + r.rule.rhs;
    }
    add("C6.rules", 6, "every explicit rule holds on the corpus", explicit_report.all_passed(),
        std::to_string(rules.size()) + " rules, " + std::to_string(checked) + " evaluations, " +
            std::to_string(unvalidated) + " undecidable" +
            (failures.empty() ? "" : "; failing:" + failures));

    const auto suffixes = elements("kcfd", AxiomName::base);
    const auto instances = instantiate_schemas(AxiomSystem::base(), suffixes);
    const ValidationReport schema_report = validate_rules(instances, all_, u_);
    failures.clear();
    for (const RuleValidation& r : schema_report.rules) {
      if (!r.passed) failures += " " + r.rule.lhs + "->" + r.rule.rhs;
    }
    add("C6.schemas", 6, "every schema instance over the 46 canonical suffixes holds",
        schema_report.all_passed(),
        std::to_string(instances.size()) + " instances" +
            (failures.empty() ? "" : "; failing:" + failures));

    // Printed forms of the two frontier identities against the probe set.
    LabeledCorpus probe{{SymbolicSet::tame(frontier_probe())}, {"probe"}};
    const struct {
      const char* lhs;
      const char* rhs;
      const char* lhs_image;
      const char* rhs_image;
    } printed[] = {{"fkik", "fki", "{0} u {2}", "{0} u {1}"}, {"fiki", "fik", "{0} u {1}", "{0} u {2}"}};
    for (const auto& p : printed) {
      const RewriteRule rule{p.lhs, p.rhs, Tier::base, RuleStatus::stated, "printed form"};
      const auto r = validate_rules_serial(std::vector<RewriteRule>{rule}, probe, u_);
      const auto& cx = r.rules[0].counterexample;
      const bool documented = cx && cx->lhs_image == p.lhs_image && cx->rhs_image == p.rhs_image;
      add(std::string("C6.printed.") + p.lhs, 6,
          std::string(p.lhs) + " -> " + p.rhs + " is refuted by (0,1) u Q(1,2)",
          !r.rules[0].passed && documented, cx ? describe(*cx, p.lhs, p.rhs) : "not refuted");
    }
    identity_typos();
  }

  void identity_typos() {
    // Search the probe set first so that the ledger quotes the smallest witness.
    LabeledCorpus ordered;
    ordered.sets.push_back(SymbolicSet::tame(frontier_probe()));
    ordered.labels.push_back("probe");
    ordered.sets.insert(ordered.sets.end(), all_.sets.begin(), all_.sets.end());
    ordered.labels.insert(ordered.labels.end(), all_.labels.begin(), all_.labels.end());
    const struct {
      const char* lhs;
      const char* printed;
      const char* corrected;
    } typos[] = {{"fkik", "fki", "fik"}, {"fiki", "fik", "fki"}, {"ckik", "kikc", "ikic"}};
    for (const auto& t : typos) {
      const std::vector<RewriteRule> rules = {
          {t.lhs, t.printed, Tier::base, RuleStatus::stated, "printed"},
          {t.lhs, t.corrected, Tier::base, RuleStatus::derived, "corrected"}};
      const auto r = validate_rules_serial(rules, ordered, u_);
      const bool consistent = !r.rules[0].passed && r.rules[1].passed;
      add(std::string("C4.ledger.") + t.lhs, 4,
          std::string(t.lhs) + " = " + t.printed + " is refuted and " + t.lhs + " = " +
              t.corrected + " holds",
          consistent);
      if (!r.rules[0].passed) {
        report_.typo_ledger.push_back({std::string(t.lhs) + " = " + t.printed,
                                       std::string(t.lhs) + " = " + t.corrected,
                                       describe(*r.rules[0].counterexample, t.lhs, t.printed)});
      }
    }
  }

  // 7 -----------------------------------------------------------------------
  void completion() {
    LabeledCorpus probes;
    const std::size_t random_probes = std::min<std::size_t>(corpus_.random.size(), 200);
    const std::size_t count = corpus_.named.size() + random_probes;
    probes.sets.assign(all_.sets.begin(), all_.sets.begin() + static_cast<long>(count));
    probes.labels.assign(all_.labels.begin(), all_.labels.begin() + static_cast<long>(count));
    for (const PairSpec& p : kPairs) {
      const CompletionReport r =
          completion_check(AxiomSystem::get(p.ax), parse_generators(p.gens), probes, u_);
      add("C7." + pair_name(p), 7,
          "<" + std::string(p.gens) + "> " + std::string(to_string(p.ax)) +
              " is closed under left and right multiplication",
          r.closed && r.count == p.expected,
          r.closed ? std::to_string(r.count) + " elements" : r.reason);
    }
  }

  // 8 -----------------------------------------------------------------------
  using EdgeSet = std::set<std::pair<std::string, std::string>>;

  static EdgeSet edge_names(const OrderRelation& r, const std::vector<HasseEdge>& edges) {
    EdgeSet out;
    for (const HasseEdge& e : edges) {
      out.emplace(render_word(r.elements[e.from]), render_word(r.elements[e.to]));
    }
    return out;
  }

  static std::string render_edges(const EdgeSet& es) {
    std::string s;
    for (const auto& [a, b] : es) s += (s.empty() ? "" : " ") + a + "->" + b;
    return s.empty() ? "none" : s;
  }

  void order_checks(const std::string& tag, AxiomName ax, const LabeledCorpus& corpus,
                    const EdgeSet& expected) {
    const AxiomSystem& sys = AxiomSystem::get(ax);
    const auto evens = even_operators(sys);
    const OrderRelation proved = proved_relation(evens, sys);
    CorpusRelationStats stats;
    const OrderRelation seen = corpus_relation(evens, corpus, u_, &stats);
    std::string diff;
    for (std::size_t a = 0; a < evens.size(); ++a) {
      for (std::size_t b = 0; b < evens.size(); ++b) {
        if (proved.leq[a][b] != seen.leq[a][b]) {
          diff += " " + render_word(evens[a]) + (proved.leq[a][b] ? "<=" : "!<=") +
                  render_word(evens[b]);
        }
      }
    }
    add("C8." + tag + ".relation", 8,
        "proved and corpus relations agree on the " + std::to_string(evens.size()) + " " +
            std::string(to_string(ax)) + " evens",
        diff.empty(),
        diff.empty() ? std::to_string(stats.skipped) + " undecidable comparisons skipped"
                     : "proved vs corpus:" + diff);

    EdgeSet got;
    try {
      got = edge_names(seen, hasse(seen));
    } catch (const std::logic_error& e) {
      add("C8." + tag + ".hasse", 8, "Hasse diagram", false, e.what());
      return;
    }
    EdgeSet missing, extra;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                        std::inserter(extra, extra.end()));
    std::string details = std::to_string(got.size()) + " edges";
    if (!missing.empty()) details += "; missing " + render_edges(missing);
    if (!extra.empty()) details += "; extra " + render_edges(extra);
    if (extra.size() == 1 && extra.begin()->first == "iki" && extra.begin()->second == "id") {
      details += "; iki <= cdc <= id holds without PB and cdc = id under PB, so the cover "
                 "iki->id is real and the 10-edge target is unattainable";
    }
    add("C8." + tag + ".hasse", 8,
        "Hasse diagram has the " + std::to_string(expected.size()) + " expected edges",
        missing.empty() && extra.empty(), details);
  }

  void poset() {
    const EdgeSet zfc = {{"i", "iki"},   {"iki", "cdc"}, {"i", "e"},    {"cdc", "id"},
                         {"cdc", "cidc"}, {"iki", "ki"}, {"e", "k"},    {"ki", "cidc"},
                         {"ik", "kik"},  {"id", "ik"},   {"id", "d"},   {"d", "kik"},
                         {"cidc", "d"},  {"kik", "k"}};
    const EdgeSet pb = {{"i", "iki"}, {"i", "e"},  {"iki", "ki"}, {"e", "k"},   {"ik", "kik"},
                        {"id", "ik"}, {"id", "d"}, {"d", "kik"},  {"ki", "d"},  {"kik", "k"}};
    order_checks("zfc", AxiomName::base, all_, zfc);
    order_checks("pb", AxiomName::pb, bp_, pb);
  }

  // 9 -----------------------------------------------------------------------
  void parity_split() {
    for (const auto ax : {AxiomName::base, AxiomName::pb}) {
      const auto els = elements("kcd", ax);
      std::size_t even = 0;
      for (const Word& w : els) even += parity(w) == Parity::even;
      const std::size_t half = els.size() / 2;
      add("C9." + std::string(to_string(ax)), 9,
          "<k,c,d> " + std::string(to_string(ax)) + " splits " + std::to_string(half) + " even / " +
              std::to_string(half) + " odd",
          els.size() % 2 == 0 && even == half && (els.size() == 22 || els.size() == 18),
          std::to_string(even) + " even, " + std::to_string(els.size() - even) + " odd");
    }
  }

  // 10 ----------------------------------------------------------------------
  void cross_consistency() {
    for (const auto ax : {AxiomName::base, AxiomName::pb}) {
      const LabeledCorpus& pool = ax == AxiomName::base ? all_ : bp_;
      const AxiomSystem& sys = AxiomSystem::get(ax);
      std::mt19937_64 rng(opt_.seed ^ (ax == AxiomName::base ? 0x5eedULL : 0xb41eULL));
      std::size_t agreed = 0, decided = 0, undecidable = 0, attempts = 0;
      std::string first_failure;
      while (decided < opt_.random_pairs && attempts < 50 * opt_.random_pairs) {
        ++attempts;
        std::string tokens(1 + rng() % 8, 'k');
        for (char& ch : tokens) ch = "kicdf"[rng() % 5];
        const SymbolicSet& s = pool.sets[rng() % pool.sets.size()];
        try {
          const Word canonical = normalize_tokens(tokens, sys);
          const SymbolicSet lhs = u_.apply_word(std::string_view(tokens), s);
          const SymbolicSet rhs = u_.apply_word(canonical, s);
          const bool same = u_.compare(SetRelation::equal, lhs, rhs);
          ++decided;
          agreed += same;
          if (!same && first_failure.empty()) {
            first_failure = tokens + " vs " + render_word(canonical) + " on " + u_.render(s);
          }
        } catch (const UndecidableError&) {
          ++undecidable;
        }
      }
      add("C10." + std::string(to_string(ax)), 10,
          "normal forms evaluate like their words on " + std::to_string(opt_.random_pairs) +
              " random pairs (" + std::string(to_string(ax)) + ")",
          decided == opt_.random_pairs && agreed == decided,
          std::to_string(agreed) + "/" + std::to_string(decided) + " agree, " +
              std::to_string(undecidable) + " undecidable draws redrawn" +
              (first_failure.empty() ? "" : "; first failure " + first_failure));
    }
  }

  VerifyOptions opt_;
  VitaliUniverse u_;
  Corpus corpus_;
  LabeledCorpus all_;
  LabeledCorpus bp_;
  bool defaults_ = true;
  std::map<std::string, std::vector<Word>> elements_;
  VerifyReport report_;
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report = Verifier(options).run();
  // Checks are emitted per criterion, but the ledger checks for criterion 4
  // are produced while validating rewrite rules; keep criteria contiguous.
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.criterion < b.criterion;
                   });
  return report;
}

}  // namespace kdm
