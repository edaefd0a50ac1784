#include "kdmonoid/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kdmonoid/monoid.hpp"

namespace kdm {

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rules.begin(), rules.end(), [](const RuleValidation& r) { return !r.passed; }));
}

namespace {

RuleValidation validate_one(const RewriteRule& rule, const LabeledCorpus& corpus,
                            const VitaliUniverse& u) {
  RuleValidation out;
  out.rule = rule;
  for (std::size_t n = 0; n < corpus.sets.size(); ++n) {
    const SymbolicSet& s = corpus.sets[n];
    if (rule.tier == Tier::pb && u.has_baire_property(s) != BaireProperty::yes) {
      ++out.not_applicable;
      continue;
    }
    try {
      const SymbolicSet lhs = u.apply_word(rule.lhs, s);
      const SymbolicSet rhs = u.apply_word(rule.rhs, s);
      ++out.checked;
      if (!u.compare(SetRelation::equal, lhs, rhs)) {
        out.passed = false;
        if (!out.counterexample) {
          out.counterexample =
              Counterexample{corpus.labels[n], u.render(s), u.render(lhs), u.render(rhs)};
        }
      }
    } catch (const UndecidableError&) {
      ++out.unvalidated;
    }
  }
  return out;
}

}  // namespace

ValidationReport validate_rules_serial(std::span<const RewriteRule> rules,
                                       const LabeledCorpus& corpus,
                                       const VitaliUniverse& universe) {
  ValidationReport report;
  report.rules.reserve(rules.size());
  for (const RewriteRule& r : rules) report.rules.push_back(validate_one(r, corpus, universe));
  return report;
}

ValidationReport validate_rules(std::span<const RewriteRule> rules, const LabeledCorpus& corpus,
                                const VitaliUniverse& universe) {
  ValidationReport report;
  report.rules.resize(rules.size());
  const auto count = static_cast<long>(rules.size());
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n < count; ++n) {
    report.rules[static_cast<std::size_t>(n)] =
        validate_one(rules[static_cast<std::size_t>(n)], corpus, universe);
  }
  return report;
}

std::vector<RewriteRule> instantiate_schemas(const AxiomSystem& ax,
                                             std::span<const Word> suffixes) {
  std::vector<RewriteRule> out;
  for (const RuleSchema& s : ax.schemas()) {
    for (const Word& w : suffixes) {
      if (!satisfies(infer_kind(w), s.guard)) continue;
      RewriteRule r;
      r.lhs = s.prefix + w.tokens();
      r.rhs = s.collapses ? s.replacement : s.replacement + w.tokens();
      r.tier = Tier::base;
      r.status = RuleStatus::derived;
      r.provenance = s.id + ": " + s.provenance;
      out.push_back(std::move(r));
    }
  }
  return out;
}

CompletionReport completion_check(const AxiomSystem& ax, const std::vector<Letter>& gens,
                                  const LabeledCorpus& probes, const VitaliUniverse& universe) {
  CompletionReport report;
  std::vector<Word> elements;
  try {
    elements = enumerate_elements(gens, ax);
  } catch (const NormalizeError& e) {
    report.failing_word = e.stuck_word();
    report.reason = e.what();
    return report;
  } catch (const std::length_error& e) {
    report.reason = e.what();
    return report;
  }
  report.count = elements.size();
  const std::set<Word, ShortlexLess> members(elements.begin(), elements.end());

  for (const Word& w : elements) {
    for (Letter g : gens) {
      const std::string letter(1, to_char(g));
      for (const std::string& product : {letter + w.tokens(), w.tokens() + letter}) {
        try {
          if (!members.contains(normalize_tokens(product, ax))) {
            report.failing_word = product;
            report.reason = "'" + product + "' does not reduce into the canonical set";
            return report;
          }
        } catch (const NormalizeError& e) {
          report.failing_word = e.stuck_word();
          report.reason = e.what();
          return report;
        }
      }
    }
  }

  // Probe sets on which every element evaluates; PB identities only hold for
  // sets with the Baire property.
  std::vector<std::size_t> usable;
  for (std::size_t n = 0; n < probes.sets.size(); ++n) {
    if (ax.name() == AxiomName::pb &&
        universe.has_baire_property(probes.sets[n]) != BaireProperty::yes) {
      continue;
    }
    try {
      for (const Word& w : elements) (void)universe.apply_word(w, probes.sets[n]);
      usable.push_back(n);
    } catch (const UndecidableError&) {
    }
  }
  std::map<std::vector<std::string>, std::string> seen;
  for (const Word& w : elements) {
    std::vector<std::string> fingerprint;
    for (std::size_t n : usable) {
      fingerprint.push_back(universe.render(universe.apply_word(w, probes.sets[n])));
    }
    auto [it, inserted] = seen.emplace(std::move(fingerprint), render_word(w));
    if (!inserted) {
      report.failing_word = w.tokens();
      report.reason = "irreducible word '" + render_word(w) + "' agrees with '" + it->second +
                      "' on every probe set: a reduction is missing";
      return report;
    }
  }
  report.closed = true;
  return report;
}

}  // namespace kdm
