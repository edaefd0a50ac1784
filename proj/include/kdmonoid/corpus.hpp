#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdmonoid/realsets.hpp"
#include "kdmonoid/vitali.hpp"

namespace kdm {

enum class WitnessName { a18, a22, v, cv, empty, full };

WitnessName parse_witness_name(std::string_view name);
std::string_view to_string(WitnessName name);

// A18 = (1,2) u (2,3) u {4} u Q(5,6) u I(6,7); A22 = A18 u V.
SymbolicSet witness(WitnessName name, const VitaliParams& params);
TameSet a18();

// Separates fkik from fki and fiki from fik: (0,1) u Q(1,2).
TameSet frontier_probe();

// Deterministic for fixed (seed, max_cells): at most max_cells cells with
// endpoints on the grid {p/q : q <= 8} ∩ [-10, 10].
TameSet random_tame(std::uint64_t seed, std::size_t max_cells);

inline constexpr std::size_t kRandomCellBound = 4;

struct NamedSet {
  std::string name;
  SymbolicSet set;
};

struct Corpus {
  std::vector<NamedSet> named;
  std::uint64_t seed = 0;
  std::vector<TameSet> random;  // random[n] = random_tame(seed + n, kRandomCellBound)

  std::vector<SymbolicSet> all() const;
  std::vector<std::string> labels() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::size_t kDefaultCorpusSize = 1000;

Corpus build_corpus(std::uint64_t seed, std::size_t random_count, const VitaliParams& params);

// set  := term ("u" term)* [("∖" | "\") "V"]
// term := interval | "{" num "}" | "{}" | "Q" interval | "I" interval | "V"
// Throws ParseError (1-based position) on malformed input.
SymbolicSet parse_set_dsl(std::string_view text, const VitaliUniverse& universe);
TameSet parse_tame_dsl(std::string_view text);

}  // namespace kdm
