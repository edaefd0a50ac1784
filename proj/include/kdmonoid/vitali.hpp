#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kdmonoid/realsets.hpp"
#include "kdmonoid/word.hpp"

namespace kdm {

// Raised when the axioms about V do not determine the answer, e.g. whether
// one particular rational point lies in V.
class UndecidableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters of the single Vitali atom: V ⊆ W1, kV = kW1, dV = kW0.
struct VitaliParams {
  TameSet w0;
  TameSet w1;

  // Defaults W0 = (8,9), W1 = (8,10).
  static VitaliParams defaults();
  // Throws std::invalid_argument unless both are open, W0 is non-empty
  // (a Vitali set is never meager) and W0 ⊆ W1.
  static VitaliParams make(TameSet w0, TameSet w1);
};

enum class VitaliMode { tame, plus_v, minus_v };

// tame: base;  plus_v: base ∪ V;  minus_v: base ∖ V.
struct SymbolicSet {
  TameSet base;
  VitaliMode mode = VitaliMode::tame;

  static SymbolicSet tame(TameSet b) { return {std::move(b), VitaliMode::tame}; }
  static SymbolicSet plus_v(TameSet b) { return {std::move(b), VitaliMode::plus_v}; }
  static SymbolicSet minus_v(TameSet b) { return {std::move(b), VitaliMode::minus_v}; }

  bool is_tame() const { return mode == VitaliMode::tame; }
  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;
};

enum class BaireProperty { yes, no, unknown };
std::string_view to_string(BaireProperty bp);

struct Distinction {
  struct Row {
    Word word;
    std::string image;
    std::size_t group = 0;  // index of the first row with the same image
  };
  std::size_t count = 0;
  std::vector<Row> rows;
};

// Evaluation universe: tame sets plus the one axiomatized Vitali atom.
class VitaliUniverse {
 public:
  explicit VitaliUniverse(VitaliParams params = VitaliParams::defaults());

  const VitaliParams& params() const { return params_; }

  SymbolicSet canonical(SymbolicSet s) const;
  SymbolicSet apply(Letter op, const SymbolicSet& s) const;
  // Right-to-left fold; also accepts internal token strings containing 0/1.
  SymbolicSet apply_word(std::string_view tokens, const SymbolicSet& s) const;
  SymbolicSet apply_word(const Word& w, const SymbolicSet& s) const {
    return apply_word(w.tokens(), s);
  }

  SymbolicSet combine(SetOp op, const SymbolicSet& a, const SymbolicSet& b) const;
  // Throws UndecidableError when the answer depends on undetermined points of V.
  bool compare(SetRelation rel, const SymbolicSet& a, const SymbolicSet& b) const;

  bool is_meager(const SymbolicSet& s) const;
  BaireProperty has_baire_property(const SymbolicSet& s) const;
  Distinction distinguish(const SymbolicSet& s, const std::vector<Word>& ops) const;

  std::string render(const SymbolicSet& s) const;

 private:
  enum class Tri { no, yes, unknown };
  struct Split {
    TameSet off_v;  // membership of points outside V
    TameSet on_v;   // membership of points of V
  };
  Split split(const SymbolicSet& s) const;
  SymbolicSet reclassify(const Split& s) const;
  Tri meets_v(const TameSet& t) const;
  Tri within_v(const TameSet& t) const;
  bool subset(const SymbolicSet& a, const SymbolicSet& b) const;

  VitaliParams params_;
  TameSet closure_w0_;
  TameSet closure_w1_;
};

}  // namespace kdm
