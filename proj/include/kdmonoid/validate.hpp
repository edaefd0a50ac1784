#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdmonoid/rewrite.hpp"
#include "kdmonoid/vitali.hpp"
#include "kdmonoid/word.hpp"

namespace kdm {

// A corpus with a label per set, for reporting counterexamples.
struct LabeledCorpus {
  std::vector<SymbolicSet> sets;
  std::vector<std::string> labels;
};

struct Counterexample {
  std::string label;
  std::string set;
  std::string lhs_image;
  std::string rhs_image;
};

struct RuleValidation {
  RewriteRule rule;
  bool passed = true;
  std::size_t checked = 0;
  // Evaluation was undecidable on these sets; they do not count against the rule.
  std::size_t unvalidated = 0;
  // PB-tier rules hold only for sets with the Baire property; others are skipped.
  std::size_t not_applicable = 0;
  std::optional<Counterexample> counterexample;
};

struct ValidationReport {
  std::vector<RuleValidation> rules;
  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

// Evaluates both sides of each rule on every corpus set. Rules are checked
// in parallel; the report is in rule order.
ValidationReport validate_rules(std::span<const RewriteRule> rules, const LabeledCorpus& corpus,
                                const VitaliUniverse& universe);
// Single-threaded reference kernel with identical output.
ValidationReport validate_rules_serial(std::span<const RewriteRule> rules,
                                       const LabeledCorpus& corpus,
                                       const VitaliUniverse& universe);

// Instances prefix·w → replacement·w of every schema whose guard holds for w.
std::vector<RewriteRule> instantiate_schemas(const AxiomSystem& ax, std::span<const Word> suffixes);

struct CompletionReport {
  bool closed = false;
  std::size_t count = 0;
  std::string failing_word;  // empty when closed
  std::string reason;
};

// Verifies that the canonical set generated by `gens` is closed under left
// and right multiplication and that its elements are pairwise distinct on
// the probe sets. A duplicate means an irreducible word that should reduce:
// the later (shortlex-larger) word is reported.
CompletionReport completion_check(const AxiomSystem& ax, const std::vector<Letter>& gens,
                                  const LabeledCorpus& probes, const VitaliUniverse& universe);

}  // namespace kdm
