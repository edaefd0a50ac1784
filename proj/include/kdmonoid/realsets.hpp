#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdmonoid/word.hpp"

namespace kdm {

using Rational = mpq_class;

// Which points of an open interval belong to a set. Bit 0 marks the
// rationals, bit 1 the irrationals.
enum class Density : std::uint8_t { none = 0, rationals = 1, irrationals = 2, full = 3 };

constexpr bool has_rationals(Density d) { return (static_cast<unsigned>(d) & 1u) != 0; }
constexpr bool has_irrationals(Density d) { return (static_cast<unsigned>(d) & 2u) != 0; }
constexpr Density density_not(Density d) { return static_cast<Density>(3u - static_cast<unsigned>(d)); }
constexpr Density density_or(Density a, Density b) {
  return static_cast<Density>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr Density density_and(Density a, Density b) {
  return static_cast<Density>(static_cast<unsigned>(a) & static_cast<unsigned>(b));
}

// Rendering / construction unit. An absent bound is infinite (and open).
struct Cell {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_closed = false;
  bool hi_closed = false;
  Density density = Density::full;

  static Cell point(const Rational& x);
  static Cell interval(std::optional<Rational> lo, std::optional<Rational> hi, bool lo_closed,
                       bool hi_closed, Density density = Density::full);

  bool is_point() const;
  // Throws std::invalid_argument on a malformed cell.
  void validate() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// A finite union of rational-endpoint cells, stored in canonical form as a
// sorted list of breakpoints with the membership of each breakpoint and the
// density of each open gap between consecutive breakpoints. Structural
// equality of the canonical form is set equality.
class TameSet {
 public:
  TameSet();
  static TameSet real_line();
  static TameSet from_cells(std::span<const Cell> cells);

  bool empty() const;
  bool is_real_line() const;
  // Membership of a rational point.
  bool contains(const Rational& x) const;

  std::vector<Cell> cells() const;

  const std::vector<Rational>& breakpoints() const { return points_; }
  bool breakpoint_member(std::size_t n) const { return at_[n] != 0; }
  // gaps().size() == breakpoints().size() + 1; gaps()[0] is (-inf, p0).
  const std::vector<Density>& gaps() const { return gaps_; }

  std::size_t isolated_point_count() const;
  std::vector<Rational> isolated_points() const;

  friend bool operator==(const TameSet& a, const TameSet& b);

 private:
  friend class TameBuilder;
  std::vector<Rational> points_;
  std::vector<char> at_;
  std::vector<Density> gaps_;
};

// Incremental construction from raw (possibly non-canonical) breakpoint data.
class TameBuilder {
 public:
  explicit TameBuilder(Density first_gap) { gaps_.push_back(first_gap); }
  void add(const Rational& point, bool member, Density next_gap);
  TameSet build() &&;

 private:
  std::vector<Rational> points_;
  std::vector<char> at_;
  std::vector<Density> gaps_;
};

enum class SetOp { union_, intersect, difference };
enum class SetRelation { subset, equal };

TameSet tame_normalize(std::span<const Cell> cells);
TameSet tame_apply(Letter op, const TameSet& s);
TameSet tame_combine(SetOp op, const TameSet& a, const TameSet& b);
bool tame_compare(SetRelation rel, const TameSet& a, const TameSet& b);

TameSet tame_complement(const TameSet& s);
TameSet tame_closure(const TameSet& s);
TameSet tame_interior(const TameSet& s);
TameSet tame_second_category(const TameSet& s);
TameSet tame_frontier(const TameSet& s);

// True when every cell is a rational trace or a point, i.e. the set is
// countable. Decided from the representation alone, without d.
bool is_syntactically_meager(const TameSet& s);
bool is_open(const TameSet& s);
bool is_closed(const TameSet& s);

std::string render_rational(const Rational& x);
// "[1,3] u {4} u Q(5,6) u I(6,7)"; the empty set renders as "{}".
std::string render(const TameSet& s);

}  // namespace kdm
