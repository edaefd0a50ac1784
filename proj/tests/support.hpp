#pragma once

#include <random>
#include <string>
#include <vector>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/realsets.hpp"
#include "kdmonoid/validate.hpp"

namespace kdm::testing {

inline std::vector<TameSet> random_sets(std::size_t count, std::uint64_t seed = 7,
                                        std::size_t max_cells = kRandomCellBound) {
  std::vector<TameSet> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(random_tame(seed + n, max_cells));
  return out;
}

inline std::string random_tokens(std::mt19937_64& rng, std::size_t max_len,
                                 std::string_view alphabet = "kicdf") {
  std::string w(1 + rng() % max_len, 'k');
  for (char& ch : w) ch = alphabet[rng() % alphabet.size()];
  return w;
}

inline LabeledCorpus labeled(const Corpus& c) { return {c.all(), c.labels()}; }

// Independent reference operators, computed cell by cell rather than on the
// breakpoint representation.

inline TameSet union_all(const std::vector<TameSet>& parts) {
  TameSet out;
  for (const TameSet& p : parts) out = tame_combine(SetOp::union_, out, p);
  return out;
}

// Closure of a finite union is the union of the cell closures.
inline TameSet closure_by_cells(const TameSet& s) {
  std::vector<TameSet> parts;
  for (Cell c : s.cells()) {
    if (!c.is_point()) {
      c.density = Density::full;
      c.lo_closed = c.lo.has_value();
      c.hi_closed = c.hi.has_value();
    }
    parts.push_back(TameSet::from_cells(std::vector<Cell>{c}));
  }
  return union_all(parts);
}

// Points and rational traces are meager; every other cell contributes its closure.
inline TameSet d_by_cells(const TameSet& s) {
  std::vector<TameSet> parts;
  for (Cell c : s.cells()) {
    if (c.is_point() || !has_irrationals(c.density)) continue;
    c.density = Density::full;
    c.lo_closed = c.lo.has_value();
    c.hi_closed = c.hi.has_value();
    parts.push_back(TameSet::from_cells(std::vector<Cell>{c}));
  }
  return union_all(parts);
}

// Interior decided point by point: a breakpoint is interior iff it is a member
// and both adjacent gaps are full; a gap is interior iff it is full.
inline TameSet interior_by_samples(const TameSet& s) {
  const auto& p = s.breakpoints();
  const auto& g = s.gaps();
  TameBuilder b(g[0] == Density::full ? Density::full : Density::none);
  for (std::size_t n = 0; n < p.size(); ++n) {
    const bool inner = s.breakpoint_member(n) && g[n] == Density::full && g[n + 1] == Density::full;
    b.add(p[n], inner, g[n + 1] == Density::full ? Density::full : Density::none);
  }
  return std::move(b).build();
}

}  // namespace kdm::testing
