#include "kdmonoid/realsets.hpp"

#include <algorithm>
#include <cassert>

namespace kdm {

Cell Cell::point(const Rational& x) { return Cell{x, x, true, true, Density::full}; }

Cell Cell::interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed,
                    bool hi_closed, Density density) {
  return Cell{std::move(lo), std::move(hi), lo_closed, hi_closed, density};
}

bool Cell::is_point() const { return lo && hi && *lo == *hi; }

void Cell::validate() const {
  if (is_point()) {
    if (!lo_closed || !hi_closed || density != Density::full) {
      throw std::invalid_argument("a degenerate cell must be a closed full singleton");
    }
    return;
  }
  if (density == Density::none) throw std::invalid_argument("cell density must be non-empty");
  if ((!lo && lo_closed) || (!hi && hi_closed)) {
    throw std::invalid_argument("infinite endpoints are open");
  }
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("cell has lo > hi");
  if (density == Density::irrationals && (lo_closed || hi_closed)) {
    throw std::invalid_argument("an irrational trace cannot contain its rational endpoints");
  }
}

// ---------------------------------------------------------------------------

void TameBuilder::add(const Rational& point, bool member, Density next_gap) {
  assert(points_.empty() || points_.back() < point);
  // A breakpoint is redundant when both sides agree and the point itself
  // (a rational) follows the gap's rational bit.
  if (gaps_.back() == next_gap && member == has_rationals(next_gap)) return;
  points_.push_back(point);
  at_.push_back(member ? 1 : 0);
  gaps_.push_back(next_gap);
}

TameSet TameBuilder::build() && {
  TameSet s;
  s.points_ = std::move(points_);
  s.at_ = std::move(at_);
  s.gaps_ = std::move(gaps_);
  return s;
}

TameSet::TameSet() : gaps_{Density::none} {}

TameSet TameSet::real_line() { return TameBuilder(Density::full).build(); }

TameSet TameSet::from_cells(std::span<const Cell> cells) { return tame_normalize(cells); }

bool TameSet::empty() const { return points_.empty() && gaps_[0] == Density::none; }
bool TameSet::is_real_line() const { return points_.empty() && gaps_[0] == Density::full; }

bool TameSet::contains(const Rational& x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  const auto n = static_cast<std::size_t>(it - points_.begin());
  if (it != points_.end() && *it == x) return at_[n] != 0;
  return has_rationals(gaps_[n]);
}

bool operator==(const TameSet& a, const TameSet& b) {
  return a.at_ == b.at_ && a.gaps_ == b.gaps_ && a.points_ == b.points_;
}

std::size_t TameSet::isolated_point_count() const { return isolated_points().size(); }

std::vector<Rational> TameSet::isolated_points() const {
  std::vector<Rational> out;
  for (std::size_t n = 0; n < points_.size(); ++n) {
    if (at_[n] && gaps_[n] == Density::none && gaps_[n + 1] == Density::none) {
      out.push_back(points_[n]);
    }
  }
  return out;
}

std::vector<Cell> TameSet::cells() const {
  // A member breakpoint is attached to a neighbouring full gap if there is
  // one, else to a rational-trace gap, else it is a singleton. In canonical
  // form both neighbours never have the same density when the point is a
  // member, so the choice is unambiguous.
  const std::size_t n = points_.size();
  auto owner = [&](std::size_t m) -> int {  // -1 none, 0 left gap, 1 right gap
    if (!at_[m]) return -1;
    const Density l = gaps_[m], r = gaps_[m + 1];
    if (l == Density::full) return 0;
    if (r == Density::full) return 1;
    if (l == Density::rationals) return 0;
    if (r == Density::rationals) return 1;
    return -1;
  };
  std::vector<Cell> out;
  for (std::size_t g = 0; g <= n; ++g) {
    if (gaps_[g] != Density::none) {
      Cell cell;
      cell.density = gaps_[g];
      if (g > 0) {
        cell.lo = points_[g - 1];
        cell.lo_closed = owner(g - 1) == 1;
      }
      if (g < n) {
        cell.hi = points_[g];
        cell.hi_closed = owner(g) == 0;
      }
      out.push_back(std::move(cell));
    }
    if (g < n && at_[g] && owner(g) == -1) out.push_back(Cell::point(points_[g]));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

TameSet cell_to_set(const Cell& cell) {
  cell.validate();
  if (cell.is_point()) {
    TameBuilder b(Density::none);
    b.add(*cell.lo, true, Density::none);
    return std::move(b).build();
  }
  TameBuilder b(cell.lo ? Density::none : cell.density);
  if (cell.lo) b.add(*cell.lo, cell.lo_closed, cell.density);
  if (cell.hi) b.add(*cell.hi, cell.hi_closed, Density::none);
  return std::move(b).build();
}

template <class PointOp, class GapOp>
TameSet pointwise(const TameSet& a, const TameSet& b, PointOp point_op, GapOp gap_op) {
  const auto& pa = a.breakpoints();
  const auto& pb = b.breakpoints();
  const auto& ga = a.gaps();
  const auto& gb = b.gaps();
  TameBuilder out(gap_op(ga[0], gb[0]));
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    const bool take_a = j == pb.size() || (i < pa.size() && pa[i] <= pb[j]);
    const bool take_b = i == pa.size() || (j < pb.size() && pb[j] <= pa[i]);
    const Rational& x = take_a ? pa[i] : pb[j];
    const bool ma = take_a ? a.breakpoint_member(i) : has_rationals(ga[i]);
    const bool mb = take_b ? b.breakpoint_member(j) : has_rationals(gb[j]);
    if (take_a) ++i;
    if (take_b) ++j;
    out.add(x, point_op(ma, mb), gap_op(ga[i], gb[j]));
  }
  return std::move(out).build();
}

// Applies a local rule that maps each gap to a new gap and each breakpoint to
// a membership depending on itself and its two neighbouring gaps.
template <class GapRule, class PointRule>
TameSet local(const TameSet& s, GapRule gap_rule, PointRule point_rule) {
  const auto& p = s.breakpoints();
  const auto& g = s.gaps();
  TameBuilder out(gap_rule(g[0]));
  for (std::size_t n = 0; n < p.size(); ++n) {
    out.add(p[n], point_rule(s.breakpoint_member(n), g[n], g[n + 1]), gap_rule(g[n + 1]));
  }
  return std::move(out).build();
}

}  // namespace

TameSet tame_normalize(std::span<const Cell> cells) {
  TameSet acc;
  for (const Cell& cell : cells) acc = tame_combine(SetOp::union_, acc, cell_to_set(cell));
  return acc;
}

TameSet tame_complement(const TameSet& s) {
  return local(
      s, [](Density g) { return density_not(g); },
      [](bool m, Density, Density) { return !m; });
}

TameSet tame_closure(const TameSet& s) {
  return local(
      s, [](Density g) { return g == Density::none ? Density::none : Density::full; },
      [](bool m, Density l, Density r) {
        return m || l != Density::none || r != Density::none;
      });
}

TameSet tame_interior(const TameSet& s) {
  return tame_complement(tame_closure(tame_complement(s)));
}

// d: a gap is locally nonmeager exactly when it carries irrationals (a
// rational trace is countable, an irrational trace is comeager in its span),
// and d of a finite union is the union of the closures of those gaps.
TameSet tame_second_category(const TameSet& s) {
  return local(
      s, [](Density g) { return has_irrationals(g) ? Density::full : Density::none; },
      [](bool, Density l, Density r) { return has_irrationals(l) || has_irrationals(r); });
}

TameSet tame_frontier(const TameSet& s) {
  return tame_combine(SetOp::intersect, tame_closure(s), tame_closure(tame_complement(s)));
}

TameSet tame_apply(Letter op, const TameSet& s) {
  switch (op) {
    case Letter::k: return tame_closure(s);
    case Letter::i: return tame_interior(s);
    case Letter::c: return tame_complement(s);
    case Letter::d: return tame_second_category(s);
    case Letter::f: return tame_frontier(s);
  }
  return s;
}

TameSet tame_combine(SetOp op, const TameSet& a, const TameSet& b) {
  switch (op) {
    case SetOp::union_:
      return pointwise(a, b, [](bool x, bool y) { return x || y; }, density_or);
    case SetOp::intersect:
      return pointwise(a, b, [](bool x, bool y) { return x && y; }, density_and);
    case SetOp::difference:
      return pointwise(
          a, b, [](bool x, bool y) { return x && !y; },
          [](Density x, Density y) { return density_and(x, density_not(y)); });
  }
  return a;
}

bool tame_compare(SetRelation rel, const TameSet& a, const TameSet& b) {
  if (rel == SetRelation::equal) return a == b;
  return tame_combine(SetOp::difference, a, b).empty();
}

bool is_syntactically_meager(const TameSet& s) {
  return std::none_of(s.gaps().begin(), s.gaps().end(),
                      [](Density g) { return has_irrationals(g); });
}

bool is_open(const TameSet& s) { return tame_interior(s) == s; }
bool is_closed(const TameSet& s) { return tame_closure(s) == s; }

std::string render_rational(const Rational& x) { return x.get_str(); }

namespace {
std::string render_cell(const Cell& cell) {
  if (cell.is_point()) return "{" + render_rational(*cell.lo) + "}";
  std::string out;
  if (cell.density == Density::rationals) out += 'Q';
  if (cell.density == Density::irrationals) out += 'I';
  out += cell.lo_closed ? '[' : '(';
  out += cell.lo ? render_rational(*cell.lo) : "-inf";
  out += ',';
  out += cell.hi ? render_rational(*cell.hi) : "inf";
  out += cell.hi_closed ? ']' : ')';
  return out;
}
}  // namespace

std::string render(const TameSet& s) {
  const auto cells = s.cells();
  if (cells.empty()) return "{}";
  std::string out;
  for (const Cell& cell : cells) {
    if (!out.empty()) out += " u ";
    out += render_cell(cell);
  }
  return out;
}

}  // namespace kdm
