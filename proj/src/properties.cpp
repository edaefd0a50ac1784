#include "kdmonoid/properties.hpp"

#include <functional>

namespace kdm {

namespace {

using Check = std::function<bool(const VitaliUniverse&, const SymbolicSet&, const SymbolicSet&)>;

struct Property {
  std::string id;
  std::string statement;
  Check holds;
};

enum class Outcome : char { held, violated, skipped, not_applicable };

bool eq(const VitaliUniverse& u, const SymbolicSet& a, const SymbolicSet& b) {
  return u.compare(SetRelation::equal, a, b);
}
bool sub(const VitaliUniverse& u, const SymbolicSet& a, const SymbolicSet& b) {
  return u.compare(SetRelation::subset, a, b);
}
SymbolicSet ap(const VitaliUniverse& u, const char* w, const SymbolicSet& s) {
  return u.apply_word(std::string_view(w), s);
}
bool is_empty(const SymbolicSet& s) { return s.is_tame() && s.base.empty(); }

const std::vector<Property>& d_properties() {
  static const std::vector<Property> props = {
      {"d.monotone", "A ⊆ B implies dA ⊆ dB (B = A u T)",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet& t) {
         const SymbolicSet b = u.combine(SetOp::union_, s, t);
         return sub(u, ap(u, "d", s), ap(u, "d", b));
       }},
      {"d.closed", "dA is closed and dA ⊆ kA",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         const SymbolicSet d = ap(u, "d", s);
         return eq(u, ap(u, "k", d), d) && sub(u, d, ap(u, "k", s));
       }},
      {"d.open", "A open implies dA = kA (checked on A and on iA)",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         const SymbolicSet open = ap(u, "i", s);
         if (eq(u, open, s) && !eq(u, ap(u, "d", s), ap(u, "k", s))) return false;
         return eq(u, ap(u, "d", open), ap(u, "k", open));
       }},
      {"d.additive", "d(A u B) = dA u dB",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet& t) {
         const SymbolicSet lhs = ap(u, "d", u.combine(SetOp::union_, s, t));
         return eq(u, lhs, u.combine(SetOp::union_, ap(u, "d", s), ap(u, "d", t)));
       }},
      {"d.residue", "A ∖ dA is meager",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         return u.is_meager(u.combine(SetOp::difference, s, ap(u, "d", s)));
       }},
      {"d.meager", "A is meager iff dA = ∅",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         const bool meager = u.is_meager(s);
         if (s.is_tame() && meager != is_syntactically_meager(s.base)) return false;
         return meager == is_empty(ap(u, "d", s));
       }},
      {"d.idempotent", "ddA = dA",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         return eq(u, ap(u, "dd", s), ap(u, "d", s));
       }},
      {"d.dk", "dkA = kikA",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         return eq(u, ap(u, "dk", s), ap(u, "kik", s));
       }},
      {"d.kid", "kidA = dA",
       [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
         return eq(u, ap(u, "kid", s), ap(u, "d", s));
       }},
  };
  return props;
}

const std::vector<Property>& baire_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> out = {
        {"bp.residue", "dA ∖ A is meager",
         [](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
           return u.is_meager(u.combine(SetOp::difference, ap(u, "d", s), s));
         }},
    };
    const char* ids[] = {"bp.idc", "bp.id", "bp.d", "bp.dc"};
    const auto eqs = baire_operator_equalities();
    for (std::size_t n = 0; n < eqs.size(); ++n) {
      const OperatorEquality e = eqs[n];
      out.push_back({ids[n], e.lhs + "A = " + e.rhs + "A",
                     [e](const VitaliUniverse& u, const SymbolicSet& s, const SymbolicSet&) {
                       return eq(u, u.apply_word(std::string_view(e.lhs), s),
                                 u.apply_word(std::string_view(e.rhs), s));
                     }});
    }
    return out;
  }();
  return props;
}

std::vector<Outcome> evaluate(const std::vector<Property>& props, const VitaliUniverse& u,
                              const SymbolicSet& s, const SymbolicSet& next, bool applicable) {
  std::vector<Outcome> out(props.size(), Outcome::not_applicable);
  if (!applicable) return out;
  for (std::size_t p = 0; p < props.size(); ++p) {
    try {
      out[p] = props[p].holds(u, s, next) ? Outcome::held : Outcome::violated;
    } catch (const UndecidableError&) {
      out[p] = Outcome::skipped;
    }
  }
  return out;
}

template <bool Parallel>
std::vector<PropertyResult> run(const std::vector<Property>& props,
                                const std::vector<SymbolicSet>& sets, const VitaliUniverse& u,
                                bool baire_only) {
  const std::size_t n = sets.size();
  std::vector<std::vector<Outcome>> outcomes(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
  for (long j = 0; j < count; ++j) {
    const auto at = static_cast<std::size_t>(j);
    const bool applicable = !baire_only || u.has_baire_property(sets[at]) == BaireProperty::yes;
    outcomes[at] = evaluate(props, u, sets[at], sets[(at + 1) % n], applicable);
  }

  std::vector<PropertyResult> results;
  for (const Property& p : props) results.push_back({p.id, p.statement, 0, 0, 0, {}});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < props.size(); ++p) {
      PropertyResult& r = results[p];
      switch (outcomes[j][p]) {
        case Outcome::held: ++r.checked; break;
        case Outcome::skipped: ++r.skipped; break;
        case Outcome::not_applicable: break;
        case Outcome::violated:
          ++r.checked;
          if (r.violations++ == 0) r.first_violation = u.render(sets[j]);
          break;
      }
    }
  }
  return results;
}

}  // namespace

std::vector<OperatorEquality> baire_operator_equalities() {
  return {{"idc", "cd"}, {"id", "cdc"}, {"d", "cidc"}, {"dc", "kcd"}};
}

std::vector<PropertyResult> check_d_identities(const std::vector<SymbolicSet>& sets,
                                               const VitaliUniverse& u) {
  return run<true>(d_properties(), sets, u, false);
}
std::vector<PropertyResult> check_d_identities_serial(const std::vector<SymbolicSet>& sets,
                                                      const VitaliUniverse& u) {
  return run<false>(d_properties(), sets, u, false);
}
std::vector<PropertyResult> check_baire_identities(const std::vector<SymbolicSet>& sets,
                                                   const VitaliUniverse& u) {
  return run<true>(baire_properties(), sets, u, true);
}
std::vector<PropertyResult> check_baire_identities_serial(const std::vector<SymbolicSet>& sets,
                                                          const VitaliUniverse& u) {
  return run<false>(baire_properties(), sets, u, true);
}

}  // namespace kdm
