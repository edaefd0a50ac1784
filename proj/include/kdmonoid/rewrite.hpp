#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kdmonoid/word.hpp"

namespace kdm {

// What is known about the image of an operator word, for every input set.
enum class OutputKind {
  arbitrary,
  open,
  closed,
  regular_open,
  regular_closed,
  nwd_closed,  // closed with empty interior
  dense_open,
  empty,
  full,
};

std::string_view to_string(OutputKind k);

bool is_closed_kind(OutputKind k);
bool is_open_kind(OutputKind k);
bool is_regular_closed_kind(OutputKind k);
bool is_regular_open_kind(OutputKind k);
bool is_nwd_closed_kind(OutputKind k);
bool is_dense_open_kind(OutputKind k);

// Kind of op(X) given the kind of X.
OutputKind kind_after(char op, OutputKind inner);
OutputKind infer_kind(std::string_view tokens);
inline OutputKind infer_kind(const Word& w) { return infer_kind(w.tokens()); }

enum class Tier { base, pb, constant };
enum class RuleStatus { stated, derived };
std::string_view to_string(Tier t);
std::string_view to_string(RuleStatus s);

struct RewriteRule {
  std::string lhs;  // token strings; "" is the identity
  std::string rhs;
  Tier tier = Tier::base;
  RuleStatus status = RuleStatus::stated;
  std::string provenance;
};

enum class KindGuard {
  closed,
  open,
  regular_closed,
  regular_open,
  open_or_closed,
  nwd_or_empty,
  dense_open_or_full,
};
bool satisfies(OutputKind k, KindGuard g);
std::string_view to_string(KindGuard g);

// prefix·w → replacement·w when the kind of w satisfies the guard; with
// `collapses` the whole prefix·w becomes the constant `replacement`.
struct RuleSchema {
  std::string id;
  std::string prefix;
  KindGuard guard = KindGuard::closed;
  std::string replacement;
  bool collapses = false;
  std::string provenance;
};

enum class AxiomName { base, pb };
std::string_view to_string(AxiomName a);
AxiomName parse_axiom_name(std::string_view text);

class AxiomSystem {
 public:
  static const AxiomSystem& base();
  static const AxiomSystem& pb();
  static const AxiomSystem& get(AxiomName name) { return name == AxiomName::base ? base() : pb(); }

  AxiomName name() const { return name_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<RuleSchema>& schemas() const { return schemas_; }

  // Variants for experiments and failure injection.
  AxiomSystem without_rule(std::string_view lhs) const;
  AxiomSystem without_schema(std::string_view id) const;
  AxiomSystem with_rule(RewriteRule rule) const;

 private:
  AxiomSystem(AxiomName name, std::vector<RewriteRule> rules, std::vector<RuleSchema> schemas);
  static AxiomSystem build(AxiomName name);

  AxiomName name_;
  std::vector<RewriteRule> rules_;
  std::vector<RuleSchema> schemas_;
};

inline constexpr std::size_t kDefaultStepBudget = 10'000;

class NormalizeError : public std::runtime_error {
 public:
  NormalizeError(std::string stuck, const std::string& what)
      : std::runtime_error(what), stuck_(std::move(stuck)) {}
  const std::string& stuck_word() const noexcept { return stuck_; }

 private:
  std::string stuck_;
};

struct RewriteStep {
  std::size_t position = 0;
  std::string rule;  // "lhs->rhs" or schema id
  std::string result;
};

// Leftmost-outermost rewriting: at the leftmost position where anything
// matches, explicit rules are tried in table order, then schemas.
Word normalize_tokens(std::string_view tokens, const AxiomSystem& ax,
                      std::size_t budget = kDefaultStepBudget,
                      std::vector<RewriteStep>* trace = nullptr);
inline Word normalize(const Word& w, const AxiomSystem& ax,
                      std::size_t budget = kDefaultStepBudget) {
  return normalize_tokens(w.tokens(), ax, budget);
}

// True if no rule or schema instance matches anywhere in the word.
bool is_irreducible(std::string_view tokens, const AxiomSystem& ax);

}  // namespace kdm
