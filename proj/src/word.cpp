#include "kdmonoid/word.hpp"

#include <algorithm>
#include <cctype>

namespace kdm {

std::optional<Letter> letter_from_char(char ch) {
  switch (ch) {
    case 'k': return Letter::k;
    case 'i': return Letter::i;
    case 'c': return Letter::c;
    case 'd': return Letter::d;
    case 'f': return Letter::f;
    default: return std::nullopt;
  }
}

bool is_letter_char(char ch) { return kLetterChars.find(ch) != std::string_view::npos; }
bool is_token_char(char ch) { return is_letter_char(ch) || ch == '0' || ch == '1'; }

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("position " + std::to_string(position) + ": " + what),
      position_(position) {}

Word::Word(const std::vector<Letter>& letters) {
  tokens_.reserve(letters.size());
  for (Letter l : letters) tokens_.push_back(to_char(l));
}

Word Word::zero() {
  Word w;
  w.tokens_ = "0";
  return w;
}

Word Word::one() {
  Word w;
  w.tokens_ = "1";
  return w;
}

Word Word::from_tokens(std::string_view tokens) {
  if (tokens == "0") return zero();
  if (tokens == "1") return one();
  if (!std::all_of(tokens.begin(), tokens.end(), is_letter_char)) {
    throw std::invalid_argument("not a word: '" + std::string(tokens) + "'");
  }
  Word w;
  w.tokens_ = std::string(tokens);
  return w;
}

bool Word::contains(Letter l) const noexcept {
  return tokens_.find(to_char(l)) != std::string::npos;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  if (is_constant()) return out;
  out.reserve(tokens_.size());
  for (char ch : tokens_) out.push_back(*letter_from_char(ch));
  return out;
}

Word parse_word(std::string_view text) {
  std::string compact;
  std::size_t first_constant = 0;
  std::size_t first_letter = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (is_letter_char(ch)) {
      if (first_letter == 0) first_letter = pos + 1;
    } else if (ch == 'e' || ch == '0' || ch == '1') {
      if (first_constant == 0) first_constant = pos + 1;
    } else {
      throw ParseError(pos + 1, std::string("unknown operator character '") + ch + "'");
    }
    compact.push_back(ch);
  }
  if (first_constant != 0 && compact.size() > 1) {
    throw ParseError(first_constant, "'e', '0' and '1' must be the entire word");
  }
  if (compact.empty() || compact == "e") return Word::identity();
  return Word::from_tokens(compact);
}

std::string render_word(const Word& w) { return w.is_identity() ? "e" : w.tokens(); }

std::string compose(const Word& a, const Word& b) { return a.tokens() + b.tokens(); }

namespace {
int rank(char ch) {
  switch (ch) {
    case 'c': return 0;
    case 'd': return 1;
    case 'f': return 2;
    case 'i': return 3;
    case 'k': return 4;
    case '0': return 5;
    case '1': return 6;
    default: return 7;
  }
}
}  // namespace

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] != b[n]) return rank(a[n]) < rank(b[n]);
  }
  return false;
}

}  // namespace kdm
