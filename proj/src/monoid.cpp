#include "kdmonoid/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kdm {

std::optional<std::size_t> MonoidTable::index_of(const Word& w) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), w, ShortlexLess{});
  if (it == elements.end() || !(*it == w)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<Letter> parse_generators(std::string_view text) {
  std::vector<Letter> out;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    auto l = letter_from_char(ch);
    if (!l) throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
    if (std::find(out.begin(), out.end(), *l) == out.end()) out.push_back(*l);
  }
  if (out.empty()) throw std::invalid_argument("empty generator set");
  std::sort(out.begin(), out.end(), [](Letter a, Letter b) {
    return shortlex_less(std::string(1, to_char(a)), std::string(1, to_char(b)));
  });
  return out;
}

std::string render_generators(const std::vector<Letter>& gens) {
  std::string out;
  for (Letter g : gens) out.push_back(to_char(g));
  return out;
}

std::vector<Word> enumerate_elements(const std::vector<Letter>& gens, const AxiomSystem& ax,
                                     std::size_t element_cap) {
  std::set<Word, ShortlexLess> seen{Word::identity()};
  std::deque<Word> frontier{Word::identity()};
  while (!frontier.empty()) {
    const Word w = std::move(frontier.front());
    frontier.pop_front();
    for (Letter g : gens) {
      Word next = normalize_tokens(std::string(1, to_char(g)) + w.tokens(), ax);
      if (seen.insert(next).second) {
        if (seen.size() > element_cap) {
          throw std::length_error("monoid exceeds " + std::to_string(element_cap) +
                                  " elements (last added '" + render_word(next) + "')");
        }
        frontier.push_back(std::move(next));
      }
    }
  }

  return {seen.begin(), seen.end()};
}

MonoidTable enumerate(const std::vector<Letter>& gens, const AxiomSystem& ax,
                      std::size_t element_cap) {
  MonoidTable t;
  t.generators = gens;
  t.axioms = ax.name();
  t.elements = enumerate_elements(gens, ax, element_cap);
  t.left_cayley.assign(gens.size(), std::vector<std::size_t>(t.size()));
  t.right_cayley.assign(gens.size(), std::vector<std::size_t>(t.size()));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string letter(1, to_char(gens[g]));
    for (std::size_t n = 0; n < t.size(); ++n) {
      const Word left = normalize_tokens(letter + t.elements[n].tokens(), ax);
      const Word right = normalize_tokens(t.elements[n].tokens() + letter, ax);
      auto li = t.index_of(left);
      auto ri = t.index_of(right);
      if (!li || !ri) {
        throw NormalizeError(render_word(li ? right : left),
                             "product leaves the enumerated set: '" +
                                 render_word(li ? right : left) + "'");
      }
      t.left_cayley[g][n] = *li;
      t.right_cayley[g][n] = *ri;
    }
  }
  return t;
}

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity(const Word& w) {
  if (w.is_constant()) throw ParityDomainError("parity is undefined for constant words");
  if (w.contains(Letter::f)) {
    throw ParityDomainError("parity is undefined once f is present (fc = f)");
  }
  const auto cs = std::count(w.tokens().begin(), w.tokens().end(), 'c');
  return cs % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace kdm
