#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/vitali.hpp"

namespace kdm {

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  int criterion = 0;
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

struct TypoEntry {
  std::string printed;
  std::string corrected;
  std::string counterexample;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t corpus_size = kDefaultCorpusSize;
  VitaliParams params = VitaliParams::defaults();
  std::size_t random_pairs = 500;
};

inline constexpr int kReportVersion = 1;
inline constexpr int kCriteriaCount = 10;

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<TypoEntry> typo_ledger;

  bool ok() const;
  // False if any check of the criterion failed or none ran.
  bool criterion_passed(int criterion) const;
  std::vector<const CheckResult*> checks_for(int criterion) const;

  std::string to_json() const;
  std::string to_text() const;
};

// Runs every acceptance check in a fixed order. Self-contained: the corpus
// is rebuilt from the seed.
VerifyReport run_verify(const VerifyOptions& options);

std::string criterion_title(int criterion);

}  // namespace kdm
