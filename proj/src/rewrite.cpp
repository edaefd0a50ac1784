#include "kdmonoid/rewrite.hpp"

#include <algorithm>

namespace kdm {

std::string_view to_string(OutputKind k) {
  switch (k) {
    case OutputKind::arbitrary: return "arbitrary";
    case OutputKind::open: return "open";
    case OutputKind::closed: return "closed";
    case OutputKind::regular_open: return "regular-open";
    case OutputKind::regular_closed: return "regular-closed";
    case OutputKind::nwd_closed: return "nwd-closed";
    case OutputKind::dense_open: return "dense-open";
    case OutputKind::empty: return "empty";
    case OutputKind::full: return "full";
  }
  return "arbitrary";
}

bool is_closed_kind(OutputKind k) {
  return k == OutputKind::closed || k == OutputKind::regular_closed ||
         k == OutputKind::nwd_closed || k == OutputKind::empty || k == OutputKind::full;
}
bool is_open_kind(OutputKind k) {
  return k == OutputKind::open || k == OutputKind::regular_open || k == OutputKind::dense_open ||
         k == OutputKind::empty || k == OutputKind::full;
}
bool is_regular_closed_kind(OutputKind k) {
  return k == OutputKind::regular_closed || k == OutputKind::empty || k == OutputKind::full;
}
bool is_regular_open_kind(OutputKind k) {
  return k == OutputKind::regular_open || k == OutputKind::empty || k == OutputKind::full;
}
bool is_nwd_closed_kind(OutputKind k) {
  return k == OutputKind::nwd_closed || k == OutputKind::empty;
}
bool is_dense_open_kind(OutputKind k) {
  return k == OutputKind::dense_open || k == OutputKind::full;
}

namespace {

OutputKind dual(OutputKind k) {
  switch (k) {
    case OutputKind::arbitrary: return OutputKind::arbitrary;
    case OutputKind::open: return OutputKind::closed;
    case OutputKind::closed: return OutputKind::open;
    case OutputKind::regular_open: return OutputKind::regular_closed;
    case OutputKind::regular_closed: return OutputKind::regular_open;
    case OutputKind::nwd_closed: return OutputKind::dense_open;
    case OutputKind::dense_open: return OutputKind::nwd_closed;
    case OutputKind::empty: return OutputKind::full;
    case OutputKind::full: return OutputKind::empty;
  }
  return OutputKind::arbitrary;
}

OutputKind closure_kind(OutputKind k) {
  switch (k) {
    case OutputKind::empty:
    case OutputKind::full:
    case OutputKind::nwd_closed:
    case OutputKind::closed:
    case OutputKind::regular_closed: return k;
    case OutputKind::dense_open: return OutputKind::full;
    case OutputKind::open:
    case OutputKind::regular_open: return OutputKind::regular_closed;
    case OutputKind::arbitrary: return OutputKind::closed;
  }
  return OutputKind::closed;
}

}  // namespace

OutputKind kind_after(char op, OutputKind inner) {
  switch (op) {
    case '0': return OutputKind::empty;
    case '1': return OutputKind::full;
    case 'c': return dual(inner);
    case 'k': return closure_kind(inner);
    case 'i': return dual(closure_kind(dual(inner)));
    case 'd':
      if (inner == OutputKind::empty || inner == OutputKind::nwd_closed) return OutputKind::empty;
      if (inner == OutputKind::full || inner == OutputKind::dense_open) return OutputKind::full;
      return OutputKind::regular_closed;
    case 'f':
      if (inner == OutputKind::empty || inner == OutputKind::full) return OutputKind::empty;
      if (is_open_kind(inner) || is_closed_kind(inner)) return OutputKind::nwd_closed;
      return OutputKind::closed;
    default: return OutputKind::arbitrary;
  }
}

OutputKind infer_kind(std::string_view tokens) {
  OutputKind k = OutputKind::arbitrary;
  for (std::size_t n = tokens.size(); n-- > 0;) k = kind_after(tokens[n], k);
  return k;
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::base: return "BASE";
    case Tier::pb: return "PB";
    case Tier::constant: return "CONST";
  }
  return "BASE";
}

std::string_view to_string(RuleStatus s) {
  return s == RuleStatus::stated ? "stated" : "derived";
}

bool satisfies(OutputKind k, KindGuard g) {
  switch (g) {
    case KindGuard::closed: return is_closed_kind(k);
    case KindGuard::open: return is_open_kind(k);
    case KindGuard::regular_closed: return is_regular_closed_kind(k);
    case KindGuard::regular_open: return is_regular_open_kind(k);
    case KindGuard::open_or_closed: return is_open_kind(k) || is_closed_kind(k);
    case KindGuard::nwd_or_empty: return is_nwd_closed_kind(k);
    case KindGuard::dense_open_or_full: return is_dense_open_kind(k);
  }
  return false;
}

std::string_view to_string(KindGuard g) {
  switch (g) {
    case KindGuard::closed: return "closed";
    case KindGuard::open: return "open";
    case KindGuard::regular_closed: return "regular-closed";
    case KindGuard::regular_open: return "regular-open";
    case KindGuard::open_or_closed: return "open-or-closed";
    case KindGuard::nwd_or_empty: return "nwd-closed";
    case KindGuard::dense_open_or_full: return "dense-open";
  }
  return "closed";
}

std::string_view to_string(AxiomName a) { return a == AxiomName::base ? "base" : "pb"; }

AxiomName parse_axiom_name(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "base" || lower == "zfc" || lower == "zf+dc") return AxiomName::base;
  if (lower == "pb" || lower == "zf+dc+pb") return AxiomName::pb;
  throw std::invalid_argument("unknown axiom system '" + std::string(text) + "' (base|pb)");
}

// ---------------------------------------------------------------------------

AxiomSystem::AxiomSystem(AxiomName name, std::vector<RewriteRule> rules,
                         std::vector<RuleSchema> schemas)
    : name_(name), rules_(std::move(rules)), schemas_(std::move(schemas)) {}

namespace {

std::vector<RewriteRule> base_rules() {
  using enum Tier;
  using enum RuleStatus;
  std::vector<RewriteRule> r = {
      {"cc", "", base, stated, "complement is an involution"},
      {"kk", "k", base, stated, "closure is idempotent"},
      {"ii", "i", base, stated, "interior is idempotent"},
      {"kc", "ci", base, stated, "De Morgan: kc = ci"},
      {"ic", "ck", base, stated, "De Morgan: ic = ck"},
      {"kiki", "ki", base, stated, "closure-interior idempotent"},
      {"ikik", "ik", base, stated, "interior-closure idempotent"},
      {"kd", "d", base, stated, "dA is closed"},
      {"dd", "d", base, stated, "ddA = dA"},
      {"di", "ki", base, stated, "A open implies dA = kA"},
      {"dk", "kik", base, stated, "dkA = kikA"},
      {"kid", "d", base, stated, "dA is regular closed: kidA = dA"},
      // c moves left, so a d can only be followed by c in a trailing dc block.
      {"dcd", "kcd", base, derived, "cd is open, and d = k on open sets"},
      {"dck", "kck", base, derived, "ck is open, and d = k on open sets"},
      {"dcf", "kcf", base, derived, "cf is open, and d = k on open sets"},
      {"dci", "kikci", base, derived, "ci is closed, and dC = kikC = kiC for closed C"},
      // frontier tier
      {"fff", "ff", base, stated, "frontier identity fff = ff"},
      {"fc", "f", base, stated, "frontier is complement-invariant"},
      {"kf", "f", base, stated, "frontier is closed"},
      {"ffk", "fk", base, stated, "frontier identity ffk = fk"},
      {"ifk", "0", base, stated, "frontier of a closed set is nowhere dense"},
      {"df", "kif", base, stated, "dfA = kifA"},
      {"fid", "fd", base, stated, "fiC = fC for regular closed C"},
      {"dfk", "0", base, stated, "frontier of a closed set is meager"},
      {"ffd", "fd", base, derived, "fd is closed nowhere dense, fixed by f"},
      {"ffi", "fi", base, derived, "fi is closed nowhere dense, fixed by f"},
      {"ifd", "0", base, derived, "fd is nowhere dense"},
      {"ifi", "0", base, derived, "fi is nowhere dense"},
      {"iff", "0", base, derived, "ff is nowhere dense"},
      {"ikif", "if", base, derived, "if is the interior of a closed set, hence regular open"},
      {"fkif", "fif", base, derived, "fkU = fU for regular open U = if"},
      {"fkik", "fik", base, derived, "fkU = fU for regular open U = ik"},
      {"fiki", "fki", base, derived, "fiC = fC for regular closed C = ki"},
  };
  // Constant operators: 0A = ∅, 1 = c0.
  for (char x : std::string("kicdf01")) {
    r.push_back({std::string("0") + x, "0", constant, derived, "0 ignores its argument"});
    r.push_back({std::string("1") + x, "1", constant, derived, "1 ignores its argument"});
  }
  for (auto [lhs, rhs] : std::vector<std::pair<const char*, const char*>>{
           {"k0", "0"}, {"i0", "0"}, {"d0", "0"}, {"f0", "0"}, {"c0", "1"},
           {"k1", "1"}, {"i1", "1"}, {"d1", "1"}, {"f1", "0"}, {"c1", "0"}}) {
    r.push_back({lhs, rhs, constant, derived, "operator applied to a constant set"});
  }
  return r;
}

std::vector<RuleSchema> base_schemas() {
  using enum KindGuard;
  return {
      {"G1", "k", closed, "", false, "closure fixes closed sets"},
      {"G2", "i", open, "", false, "interior fixes open sets"},
      {"G3", "d", open, "k", false, "A open implies dA = kA"},
      {"G4", "d", closed, "ki", false, "dC = kikC = kiC for closed C"},
      {"G5", "if", open_or_closed, "0", true, "frontier of an open or closed set is nowhere dense"},
      {"G6", "ff", open_or_closed, "f", false, "f fixes closed nowhere dense sets"},
      {"G7", "kik", open, "k", false, "kikU = kU for open U"},
      {"G8", "iki", closed, "i", false, "ikiC = iC for closed C"},
      {"G9", "fi", regular_closed, "f", false, "fiC = fC for regular closed C"},
      {"G10", "fk", regular_open, "f", false, "fkU = fU for regular open U"},
      {"G11d", "d", nwd_or_empty, "0", true, "closed nowhere dense sets are meager"},
      {"G11i", "i", nwd_or_empty, "0", true, "closed nowhere dense sets have empty interior"},
      {"G12", "k", dense_open_or_full, "1", true, "closure of a dense set is everything"},
  };
}

}  // namespace

AxiomSystem AxiomSystem::build(AxiomName name) {
  auto rules = base_rules();
  if (name == AxiomName::pb) {
    rules.push_back({"dc", "cid", Tier::pb, RuleStatus::stated,
                     "every set has the Baire property: dc = kcd = cid"});
  }
  return AxiomSystem(name, std::move(rules), base_schemas());
}

const AxiomSystem& AxiomSystem::base() {
  static const AxiomSystem instance = build(AxiomName::base);
  return instance;
}

const AxiomSystem& AxiomSystem::pb() {
  static const AxiomSystem instance = build(AxiomName::pb);
  return instance;
}

AxiomSystem AxiomSystem::without_rule(std::string_view lhs) const {
  AxiomSystem out = *this;
  std::erase_if(out.rules_, [&](const RewriteRule& r) { return r.lhs == lhs; });
  return out;
}

AxiomSystem AxiomSystem::without_schema(std::string_view id) const {
  AxiomSystem out = *this;
  std::erase_if(out.schemas_, [&](const RuleSchema& s) { return s.id == id; });
  return out;
}

AxiomSystem AxiomSystem::with_rule(RewriteRule rule) const {
  AxiomSystem out = *this;
  out.rules_.push_back(std::move(rule));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool matches_at(const std::string& w, std::size_t pos, const std::string& pattern) {
  return !pattern.empty() && w.compare(pos, pattern.size(), pattern) == 0;
}

bool rewrite_once(std::string& w, const AxiomSystem& ax, std::vector<RewriteStep>* trace) {
  // suffix_kind[p] is the kind of the operator w[p..].
  std::vector<OutputKind> suffix_kind(w.size() + 1, OutputKind::arbitrary);
  for (std::size_t p = w.size(); p-- > 0;) suffix_kind[p] = kind_after(w[p], suffix_kind[p + 1]);

  for (std::size_t p = 0; p < w.size(); ++p) {
    for (const RewriteRule& r : ax.rules()) {
      if (!matches_at(w, p, r.lhs)) continue;
      w.replace(p, r.lhs.size(), r.rhs);
      if (trace) trace->push_back({p, r.lhs + "->" + (r.rhs.empty() ? "e" : r.rhs), w});
      return true;
    }
    for (const RuleSchema& s : ax.schemas()) {
      if (!matches_at(w, p, s.prefix)) continue;
      if (!satisfies(suffix_kind[p + s.prefix.size()], s.guard)) continue;
      if (s.collapses) {
        w.replace(p, std::string::npos, s.replacement);
      } else {
        w.replace(p, s.prefix.size(), s.replacement);
      }
      if (trace) trace->push_back({p, s.id, w});
      return true;
    }
  }
  return false;
}

}  // namespace

Word normalize_tokens(std::string_view tokens, const AxiomSystem& ax, std::size_t budget,
                      std::vector<RewriteStep>* trace) {
  std::string w(tokens);
  if (!std::all_of(w.begin(), w.end(), is_token_char)) {
    throw std::invalid_argument("not a token string: '" + w + "'");
  }
  std::size_t steps = 0;
  while (rewrite_once(w, ax, trace)) {
    if (++steps > budget) {
      throw NormalizeError(w, "rewrite step budget exhausted on '" + std::string(tokens) +
                                  "' (stuck at '" + w + "')");
    }
  }
  if (w.size() > 1 && w.find_first_of("01") != std::string::npos) {
    throw NormalizeError(w, "irreducible word with an embedded constant: '" + w + "'");
  }
  return Word::from_tokens(w);
}

bool is_irreducible(std::string_view tokens, const AxiomSystem& ax) {
  std::string w(tokens);
  return !rewrite_once(w, ax, nullptr);
}

}  // namespace kdm
