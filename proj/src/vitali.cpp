#include "kdmonoid/vitali.hpp"

namespace kdm {

namespace {

TameSet interval(long lo, long hi, bool closed = false) {
  return TameSet::from_cells(std::vector<Cell>{
      Cell::interval(Rational(lo), Rational(hi), closed, closed, Density::full)});
}

TameSet operator|(const TameSet& a, const TameSet& b) { return tame_combine(SetOp::union_, a, b); }
TameSet operator&(const TameSet& a, const TameSet& b) {
  return tame_combine(SetOp::intersect, a, b);
}
TameSet operator-(const TameSet& a, const TameSet& b) {
  return tame_combine(SetOp::difference, a, b);
}

}  // namespace

VitaliParams VitaliParams::defaults() { return make(interval(8, 9), interval(8, 10)); }

VitaliParams VitaliParams::make(TameSet w0, TameSet w1) {
  if (!is_open(w0) || !is_open(w1)) throw std::invalid_argument("W0 and W1 must be open");
  if (w0.empty()) throw std::invalid_argument("W0 must be non-empty: dV = kW0 and V is nonmeager");
  if (!tame_compare(SetRelation::subset, w0, w1)) throw std::invalid_argument("W0 must lie in W1");
  return VitaliParams{std::move(w0), std::move(w1)};
}

std::string_view to_string(BaireProperty bp) {
  switch (bp) {
    case BaireProperty::yes: return "true";
    case BaireProperty::no: return "false";
    case BaireProperty::unknown: return "unknown";
  }
  return "unknown";
}

VitaliUniverse::VitaliUniverse(VitaliParams params)
    : params_(std::move(params)),
      closure_w0_(tame_closure(params_.w0)),
      closure_w1_(tame_closure(params_.w1)) {}

SymbolicSet VitaliUniverse::canonical(SymbolicSet s) const {
  // V ⊆ W1, so adding V to a base covering W1, or removing V from a base
  // missing W1, changes nothing.
  if (s.mode == VitaliMode::plus_v && tame_compare(SetRelation::subset, params_.w1, s.base)) {
    s.mode = VitaliMode::tame;
  } else if (s.mode == VitaliMode::minus_v && (s.base & params_.w1).empty()) {
    s.mode = VitaliMode::tame;
  }
  return s;
}

// Soundness of the mode rules, from the axioms kV = kW1, dV = kW0, V ⊆ W1,
// V meets every coset x+Q exactly once, and U ∩ cV nonmeager for open U ≠ ∅.
//
// k(B ∪ V) = kB ∪ kW1.
// k(B ∖ V) = kB. Full cells: cV is dense, so removing V keeps them dense in
//   their span. Irrational traces: V takes one point per coset, so I∖V still
//   meets every coset densely. Rational traces are a single coset and lose at
//   most one point. Only an isolated point of B lying in W1 can disappear,
//   and whether it is in V is not determined: that case is refused.
// d(B ∪ V) = dB ∪ kW0 by finite additivity.
// d(B ∖ V) = dB. Full cells stay locally nonmeager because U ∩ cV is
//   nonmeager; irrational traces too, since if (U∖Q)∖V were meager then
//   U ∩ cV would be. Meager cells contribute nothing either way.
SymbolicSet VitaliUniverse::apply(Letter op, const SymbolicSet& s) const {
  switch (op) {
    case Letter::c:
      switch (s.mode) {
        case VitaliMode::tame: return SymbolicSet::tame(tame_complement(s.base));
        case VitaliMode::plus_v:
          return canonical(SymbolicSet::minus_v(tame_complement(s.base)));
        case VitaliMode::minus_v:
          return canonical(SymbolicSet::plus_v(tame_complement(s.base)));
      }
      break;
    case Letter::k:
      switch (s.mode) {
        case VitaliMode::tame: return SymbolicSet::tame(tame_closure(s.base));
        case VitaliMode::plus_v:
          return SymbolicSet::tame(tame_closure(s.base) | closure_w1_);
        case VitaliMode::minus_v:
          for (const Rational& x : s.base.isolated_points()) {
            if (params_.w1.contains(x)) {
              throw UndecidableError("closure of B \\ V: isolated point " + render_rational(x) +
                                     " of B lies in W1 and may belong to V");
            }
          }
          return SymbolicSet::tame(tame_closure(s.base));
      }
      break;
    case Letter::d:
      switch (s.mode) {
        case VitaliMode::tame: return SymbolicSet::tame(tame_second_category(s.base));
        case VitaliMode::plus_v:
          return SymbolicSet::tame(tame_second_category(s.base) | closure_w0_);
        case VitaliMode::minus_v: return SymbolicSet::tame(tame_second_category(s.base));
      }
      break;
    case Letter::i:
      return apply(Letter::c, apply(Letter::k, apply(Letter::c, s)));
    case Letter::f:
      return SymbolicSet::tame(apply(Letter::k, s).base &
                               apply(Letter::k, apply(Letter::c, s)).base);
  }
  return s;
}

SymbolicSet VitaliUniverse::apply_word(std::string_view tokens, const SymbolicSet& s) const {
  SymbolicSet cur = s;
  for (std::size_t n = tokens.size(); n-- > 0;) {
    const char ch = tokens[n];
    if (ch == '0') {
      cur = SymbolicSet::tame(TameSet());
    } else if (ch == '1') {
      cur = SymbolicSet::tame(TameSet::real_line());
    } else {
      auto letter = letter_from_char(ch);
      if (!letter) throw std::invalid_argument("bad token in word: " + std::string(tokens));
      try {
        cur = apply(*letter, cur);
      } catch (const UndecidableError& e) {
        throw UndecidableError(std::string(e.what()) + " [applying '" + ch + "' at position " +
                               std::to_string(n + 1) + " of '" + std::string(tokens) +
                               "' to " + render(s) + "]");
      }
    }
  }
  return cur;
}

VitaliUniverse::Split VitaliUniverse::split(const SymbolicSet& s) const {
  switch (s.mode) {
    case VitaliMode::tame: return {s.base, s.base};
    case VitaliMode::plus_v: return {s.base, TameSet::real_line()};
    case VitaliMode::minus_v: return {s.base, TameSet()};
  }
  return {s.base, s.base};
}

SymbolicSet VitaliUniverse::reclassify(const Split& s) const {
  const TameSet on_w1 = s.on_v & params_.w1;
  if (on_w1 == (s.off_v & params_.w1)) return SymbolicSet::tame(s.off_v);
  if (on_w1 == params_.w1) return canonical(SymbolicSet::plus_v(s.off_v));
  if (on_w1.empty()) return canonical(SymbolicSet::minus_v(s.off_v));
  throw UndecidableError("result intersects V with a set that neither contains W1 nor avoids it");
}

SymbolicSet VitaliUniverse::combine(SetOp op, const SymbolicSet& a, const SymbolicSet& b) const {
  const Split sa = split(a), sb = split(b);
  return reclassify({tame_combine(op, sa.off_v, sb.off_v), tame_combine(op, sa.on_v, sb.on_v)});
}

// Does V meet t? V is dense in W1 and nonmeager in every open subset of W0.
VitaliUniverse::Tri VitaliUniverse::meets_v(const TameSet& t) const {
  const TameSet inside = t & params_.w1;
  if (inside.empty()) return Tri::no;
  for (Density g : inside.gaps()) {
    if (g == Density::full) return Tri::yes;
  }
  if (!tame_second_category(inside & params_.w0).empty()) return Tri::yes;
  return Tri::unknown;
}

// Is t ⊆ V? V has empty interior and meets each coset once; all breakpoints
// are rational, so they share the single coset Q.
VitaliUniverse::Tri VitaliUniverse::within_v(const TameSet& t) const {
  if (t.empty()) return Tri::yes;
  for (Density g : t.gaps()) {
    if (g != Density::none) return Tri::no;
  }
  std::size_t members = 0;
  const Rational* last = nullptr;
  for (std::size_t n = 0; n < t.breakpoints().size(); ++n) {
    if (t.breakpoint_member(n)) {
      ++members;
      last = &t.breakpoints()[n];
    }
  }
  if (members >= 2) return Tri::no;
  return params_.w1.contains(*last) ? Tri::unknown : Tri::no;
}

bool VitaliUniverse::subset(const SymbolicSet& a, const SymbolicSet& b) const {
  if (a == b) return true;
  const Split sa = split(a), sb = split(b);
  const Tri off = within_v(sa.off_v - sb.off_v);
  const Tri met = meets_v(sa.on_v - sb.on_v);
  if (off == Tri::no || met == Tri::yes) return false;
  if (off == Tri::yes && met == Tri::no) return true;
  throw UndecidableError("comparison of " + render(a) + " and " + render(b) +
                         " depends on undetermined points of V");
}

bool VitaliUniverse::compare(SetRelation rel, const SymbolicSet& a, const SymbolicSet& b) const {
  if (rel == SetRelation::subset) return subset(a, b);
  if (a == b) return true;
  // Evaluate both directions so that a definite "no" wins over an
  // undecidable direction.
  bool ab = false, ba = false;
  bool ab_known = true, ba_known = true;
  std::string why;
  try {
    ab = subset(a, b);
  } catch (const UndecidableError& e) {
    ab_known = false;
    why = e.what();
  }
  try {
    ba = subset(b, a);
  } catch (const UndecidableError& e) {
    ba_known = false;
    why = e.what();
  }
  if ((ab_known && !ab) || (ba_known && !ba)) return false;
  if (ab_known && ba_known) return true;
  throw UndecidableError(why);
}

bool VitaliUniverse::is_meager(const SymbolicSet& s) const {
  return apply(Letter::d, s).base.empty();
}

// A set has the Baire property iff dS ∖ S is meager, i.e. d(dS ∖ S) = ∅.
//   S = B ∪ V: dS ∖ S = (T ∩ cB) ∖ V with T = dB ∪ kW0, and removing V does
//     not change d, so the test is d(T ∩ cB) = ∅.
//   S = B ∖ V: dS ∖ S = (dB ∖ B) ∪ (V ∩ Y) with Y = dB ∩ B. V ∖ W0 is meager
//     (V ∖ dV is meager and kW0 ∖ W0 is finite), and V is nonmeager in every
//     open subset of W0, so V ∩ Y is meager iff d(Y ∩ W0) = ∅.
BaireProperty VitaliUniverse::has_baire_property(const SymbolicSet& s) const {
  const SymbolicSet c = canonical(s);
  switch (c.mode) {
    case VitaliMode::tame: return BaireProperty::yes;
    case VitaliMode::plus_v: {
      const TameSet t = tame_second_category(c.base) | closure_w0_;
      return tame_second_category(t - c.base).empty() ? BaireProperty::yes : BaireProperty::no;
    }
    case VitaliMode::minus_v: {
      const TameSet db = tame_second_category(c.base);
      const bool rest_meager = tame_second_category(db - c.base).empty();
      const bool v_part_meager = tame_second_category(db & c.base & params_.w0).empty();
      return rest_meager && v_part_meager ? BaireProperty::yes : BaireProperty::no;
    }
  }
  return BaireProperty::unknown;
}

Distinction VitaliUniverse::distinguish(const SymbolicSet& s, const std::vector<Word>& ops) const {
  Distinction out;
  std::vector<SymbolicSet> images;
  std::vector<std::size_t> representatives;
  for (const Word& w : ops) {
    SymbolicSet img = apply_word(w, s);
    std::size_t group = images.size();
    for (std::size_t r : representatives) {
      if (compare(SetRelation::equal, images[r], img)) {
        group = r;
        break;
      }
    }
    if (group == images.size()) representatives.push_back(group);
    out.rows.push_back({w, render(img), group});
    images.push_back(std::move(img));
  }
  out.count = representatives.size();
  return out;
}

std::string VitaliUniverse::render(const SymbolicSet& s) const {
  switch (s.mode) {
    case VitaliMode::tame: return kdm::render(s.base);
    case VitaliMode::plus_v: return s.base.empty() ? "V" : kdm::render(s.base) + " u V";
    case VitaliMode::minus_v: return kdm::render(s.base) + " ∖ V";
  }
  return {};
}

}  // namespace kdm
