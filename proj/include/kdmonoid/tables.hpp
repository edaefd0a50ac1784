#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kdmonoid/vitali.hpp"
#include "kdmonoid/word.hpp"

namespace kdm {

struct TableRow {
  Word word;
  std::string derived;    // rendered image computed by the evaluator
  std::string reference;  // reference value in DSL form
  bool matches = false;   // derived == parse(reference)
  std::string note;
};

// The nine even operators of ⟨k,i,d⟩ applied to A18.
std::vector<TableRow> figure_even_table(const VitaliUniverse& u);

// idcV, idV, dV, dcV, cdV, cdcV, cidcV, kcdV. Only meaningful for the
// default parameters; rows whose reference disagrees carry a note.
std::vector<TableRow> vitali_table(const VitaliUniverse& u);

struct CountRow {
  std::string generators;
  std::string axioms;
  std::size_t count = 0;
  std::size_t expected = 0;
  std::vector<Word> elements;
};
std::vector<CountRow> kfd_counts();

std::string format_table(const std::vector<TableRow>& rows, const std::string& target);
std::string format_counts(const std::vector<CountRow>& rows);

}  // namespace kdm
