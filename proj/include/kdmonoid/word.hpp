#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kdm {

// The five generator letters. i and f are primitive even though i = ckc.
enum class Letter : char { k = 'k', i = 'i', c = 'c', d = 'd', f = 'f' };

inline constexpr std::array<Letter, 5> kAllLetters = {Letter::k, Letter::i, Letter::c,
                                                      Letter::d, Letter::f};

constexpr char to_char(Letter l) { return static_cast<char>(l); }
std::optional<Letter> letter_from_char(char ch);

// Token alphabet used while rewriting: the five letters plus the constants
// '0' (empty-set operator) and '1' (= c0). A token string "kc" maps A to k(cA).
inline constexpr std::string_view kLetterChars = "kicdf";
bool is_letter_char(char ch);
bool is_token_char(char ch);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  // 1-based character position in the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operator word: a (possibly empty) letter sequence, or one of the
// constant words 0 and 1. Equality is structural.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word identity() { return Word(); }
  static Word zero();
  static Word one();
  // Accepts "" / pure letter strings / "0" / "1"; throws std::invalid_argument
  // for anything else (e.g. a constant embedded in letters).
  static Word from_tokens(std::string_view tokens);

  bool is_identity() const noexcept { return tokens_.empty(); }
  bool is_zero() const noexcept { return tokens_ == "0"; }
  bool is_one() const noexcept { return tokens_ == "1"; }
  bool is_constant() const noexcept { return is_zero() || is_one(); }
  bool contains(Letter l) const noexcept;

  std::size_t length() const noexcept { return tokens_.size(); }
  const std::string& tokens() const noexcept { return tokens_; }
  std::vector<Letter> letters() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string tokens_;
};

Word parse_word(std::string_view text);
std::string render_word(const Word& w);

// Token string of the composite a∘b (b applied first).
std::string compose(const Word& a, const Word& b);

// Shortlex order with letter rank c < d < f < i < k, constants last.
bool shortlex_less(std::string_view a, std::string_view b);
struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const {
    return shortlex_less(a.tokens(), b.tokens());
  }
};

}  // namespace kdm
