#include "kdmonoid/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace kdm {

WitnessName parse_witness_name(std::string_view name) {
  if (name == "A18") return WitnessName::a18;
  if (name == "A22") return WitnessName::a22;
  if (name == "V") return WitnessName::v;
  if (name == "cV") return WitnessName::cv;
  if (name == "empty") return WitnessName::empty;
  if (name == "full") return WitnessName::full;
  throw std::invalid_argument("unknown witness '" + std::string(name) +
                              "' (A18|A22|V|cV|empty|full)");
}

std::string_view to_string(WitnessName name) {
  switch (name) {
    case WitnessName::a18: return "A18";
    case WitnessName::a22: return "A22";
    case WitnessName::v: return "V";
    case WitnessName::cv: return "cV";
    case WitnessName::empty: return "empty";
    case WitnessName::full: return "full";
  }
  return "?";
}

TameSet a18() {
  const Rational one(1), two(2), three(3), four(4), five(5), six(6), seven(7);
  const std::vector<Cell> cells = {
      Cell::interval(one, two, false, false),
      Cell::interval(two, three, false, false),
      Cell::point(four),
      Cell::interval(five, six, false, false, Density::rationals),
      Cell::interval(six, seven, false, false, Density::irrationals),
  };
  return TameSet::from_cells(cells);
}

TameSet frontier_probe() {
  const std::vector<Cell> cells = {
      Cell::interval(Rational(0), Rational(1), false, false),
      Cell::interval(Rational(1), Rational(2), false, false, Density::rationals),
  };
  return TameSet::from_cells(cells);
}

SymbolicSet witness(WitnessName name, const VitaliParams& params) {
  switch (name) {
    case WitnessName::a18: return SymbolicSet::tame(a18());
    case WitnessName::a22: return SymbolicSet::plus_v(a18());
    case WitnessName::v: return SymbolicSet::plus_v(TameSet());
    case WitnessName::cv: return SymbolicSet::minus_v(TameSet::real_line());
    case WitnessName::empty: return SymbolicSet::tame(TameSet());
    case WitnessName::full: return SymbolicSet::tame(TameSet::real_line());
  }
  (void)params;
  return {};
}

TameSet random_tame(std::uint64_t seed, std::size_t max_cells) {
  if (max_cells == 0) throw std::invalid_argument("random_tame needs max_cells >= 1");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  auto grid_point = [&] {
    const auto q = static_cast<long>(1 + below(8));
    const auto p = static_cast<long>(below(static_cast<std::uint64_t>(20 * q + 1))) - 10 * q;
    Rational x(p, q);
    x.canonicalize();
    return x;
  };

  const std::size_t m = 1 + below(max_cells);
  std::vector<Rational> ends(2 * m);
  for (auto& e : ends) e = grid_point();
  std::sort(ends.begin(), ends.end());

  // Cells use consecutive pairs of sorted endpoints, so they can touch but
  // never overlap, and normalization cannot increase the cell count.
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < m; ++j) {
    const Rational& a = ends[2 * j];
    const Rational& b = ends[2 * j + 1];
    if (a == b) {
      cells.push_back(Cell::point(a));
      continue;
    }
    const auto density = static_cast<Density>(1 + below(3));
    const bool irr = density == Density::irrationals;
    Cell cell = Cell::interval(a, b, !irr && below(2) == 0, !irr && below(2) == 0, density);
    if (j == 0 && below(8) == 0) {
      cell.lo.reset();
      cell.lo_closed = false;
    }
    if (j + 1 == m && below(8) == 0) {
      cell.hi.reset();
      cell.hi_closed = false;
    }
    cells.push_back(std::move(cell));
  }
  return TameSet::from_cells(cells);
}

std::vector<SymbolicSet> Corpus::all() const {
  std::vector<SymbolicSet> out;
  out.reserve(named.size() + random.size());
  for (const auto& n : named) out.push_back(n.set);
  for (const auto& r : random) out.push_back(SymbolicSet::tame(r));
  return out;
}

std::vector<std::string> Corpus::labels() const {
  std::vector<std::string> out;
  for (const auto& n : named) out.push_back(n.name);
  for (std::size_t n = 0; n < random.size(); ++n) {
    out.push_back("random#" + std::to_string(seed + n));
  }
  return out;
}

Corpus build_corpus(std::uint64_t seed, std::size_t random_count, const VitaliParams& params) {
  Corpus c;
  c.seed = seed;
  for (auto name : {WitnessName::a18, WitnessName::a22, WitnessName::v, WitnessName::cv,
                    WitnessName::empty, WitnessName::full}) {
    c.named.push_back({std::string(to_string(name)), witness(name, params)});
  }
  c.named.push_back({"probe", SymbolicSet::tame(frontier_probe())});
  c.random.reserve(random_count);
  for (std::size_t n = 0; n < random_count; ++n) {
    c.random.push_back(random_tame(seed + n, kRandomCellBound));
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

class DslParser {
 public:
  explicit DslParser(std::string_view text) : text_(text) {}

  struct Result {
    TameSet base;
    bool plus_v = false;
    bool minus_v = false;
  };

  Result parse() {
    Result r;
    skip_ws();
    if (at_end()) fail("empty set expression");
    for (;;) {
      parse_term(r);
      skip_ws();
      if (at_end()) break;
      if (consume_minus()) {
        skip_ws();
        if (!consume('V')) fail("expected 'V' after set difference");
        if (r.plus_v) fail("two V terms");
        r.minus_v = true;
        skip_ws();
        if (!at_end()) fail("trailing input after '∖ V'");
        break;
      }
      if (!consume('u')) fail("expected 'u' between terms");
      skip_ws();
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool consume(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  bool consume_minus() {
    if (consume('\\')) return true;
    static constexpr std::string_view kSetMinus = "\xE2\x88\x96";  // U+2216
    if (text_.substr(pos_, kSetMinus.size()) == kSetMinus) {
      pos_ += kSetMinus.size();
      return true;
    }
    return false;
  }

  void parse_term(Result& r) {
    const char ch = peek();
    if (ch == 'V') {
      ++pos_;
      if (r.plus_v) fail("two V terms");
      r.plus_v = true;
      return;
    }
    if (ch == '{') {
      ++pos_;
      skip_ws();
      if (consume('}')) return;  // {}
      auto x = parse_num();
      if (!x) fail("a singleton must be finite");
      skip_ws();
      if (!consume('}')) fail("expected '}'");
      add(Cell::point(*x));
      return;
    }
    Density density = Density::full;
    if (ch == 'Q') {
      density = Density::rationals;
      ++pos_;
    } else if (ch == 'I') {
      density = Density::irrationals;
      ++pos_;
    }
    parse_interval(density);
  }

  void parse_interval(Density density) {
    const std::size_t start = pos_;
    bool lo_closed = false, hi_closed = false;
    if (consume('[')) {
      lo_closed = true;
    } else if (!consume('(')) {
      fail("expected an interval, singleton or V");
    }
    skip_ws();
    auto lo = parse_num(/*low_end=*/true);
    skip_ws();
    if (!consume(',')) fail("expected ','");
    skip_ws();
    auto hi = parse_num(/*low_end=*/false);
    skip_ws();
    if (consume(']')) {
      hi_closed = true;
    } else if (!consume(')')) {
      fail("expected ')' or ']'");
    }
    if ((!lo && lo_closed) || (!hi && hi_closed)) {
      pos_ = start;
      fail("infinite endpoints must be open");
    }
    if (lo && hi && *hi < *lo) {
      pos_ = start;
      fail("malformed interval: lo > hi");
    }
    if (lo && hi && *lo == *hi) {
      if (lo_closed && hi_closed && density != Density::irrationals) {
        add(Cell::point(*lo));
        return;
      }
      if (!lo_closed && !hi_closed) return;  // (a,a) is empty
      pos_ = start;
      fail("malformed degenerate interval");
    }
    if (density == Density::irrationals && (lo_closed || hi_closed)) {
      pos_ = start;
      fail("an irrational trace cannot contain its rational endpoints");
    }
    add(Cell::interval(lo, hi, lo_closed, hi_closed, density));
  }

  // nullopt encodes an infinite endpoint.
  std::optional<Rational> parse_num(bool low_end = true) {
    const std::size_t start = pos_;
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    if (text_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      if (negative != low_end) {
        pos_ = start;
        fail(low_end ? "lower bound cannot be +inf" : "upper bound cannot be -inf");
      }
      return std::nullopt;
    }
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    if (digits.empty()) {
      pos_ = start;
      fail("expected a number");
    }
    Rational x;
    if (consume('/')) {
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den.push_back(text_[pos_++]);
      if (den.empty() || den.find_first_not_of('0') == std::string::npos) {
        pos_ = start;
        fail("bad denominator");
      }
      x = Rational(digits + "/" + den, 10);
    } else if (consume('.')) {
      std::string frac;
      while (std::isdigit(static_cast<unsigned char>(peek()))) frac.push_back(text_[pos_++]);
      x = Rational(digits + frac + "/1" + std::string(frac.size(), '0'), 10);
    } else {
      x = Rational(digits, 10);
    }
    x.canonicalize();
    if (negative) x = -x;
    return x;
  }

  void add(const Cell& cell) { base_ = tame_combine(SetOp::union_, base_, TameSet::from_cells(std::vector<Cell>{cell})); }

 public:
  TameSet take_base() { return std::move(base_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  TameSet base_;
};

}  // namespace

SymbolicSet parse_set_dsl(std::string_view text, const VitaliUniverse& universe) {
  DslParser p(text);
  auto r = p.parse();
  TameSet base = p.take_base();
  if (r.plus_v) return universe.canonical(SymbolicSet::plus_v(std::move(base)));
  if (r.minus_v) return universe.canonical(SymbolicSet::minus_v(std::move(base)));
  return SymbolicSet::tame(std::move(base));
}

TameSet parse_tame_dsl(std::string_view text) {
  DslParser p(text);
  auto r = p.parse();
  if (r.plus_v || r.minus_v) throw ParseError(1, "V is not allowed in a tame set");
  return p.take_base();
}

}  // namespace kdm
