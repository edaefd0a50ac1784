#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kdmonoid/vitali.hpp"

namespace kdm {

struct PropertyResult {
  std::string id;           // e.g. "d.additive"
  std::string statement;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // undecidable on the set
  std::size_t violations = 0;
  std::string first_violation;
};

// Identities about d that hold for every set (ZF+DC). The monotonicity and
// additivity checks pair each set with its successor in the list.
std::vector<PropertyResult> check_d_identities(const std::vector<SymbolicSet>& sets,
                                               const VitaliUniverse& u);
std::vector<PropertyResult> check_d_identities_serial(const std::vector<SymbolicSet>& sets,
                                                      const VitaliUniverse& u);

// The equivalent forms of the Baire property: dS∖S meager, idc = cd,
// id = cdc, d = cidc and dc = kcd. Sets without the Baire property
// are skipped.
std::vector<PropertyResult> check_baire_identities(const std::vector<SymbolicSet>& sets,
                                                   const VitaliUniverse& u);
std::vector<PropertyResult> check_baire_identities_serial(const std::vector<SymbolicSet>& sets,
                                                          const VitaliUniverse& u);

struct OperatorEquality {
  std::string lhs;
  std::string rhs;
};
// idc = cd, id = cdc, d = cidc, dc = kcd.
std::vector<OperatorEquality> baire_operator_equalities();

}  // namespace kdm
