// Serial vs OpenMP timings for the data-parallel kernels.
// usage: bench_kernels [corpus-size] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef KDMONOID_HAVE_OPENMP
#include <omp.h>
#endif

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/monoid.hpp"
#include "kdmonoid/poset.hpp"
#include "kdmonoid/properties.hpp"
#include "kdmonoid/validate.hpp"

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-22s %10.1f %10.1f %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kdm;
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 1000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  const VitaliUniverse u;
  const Corpus corpus = build_corpus(kDefaultSeed, size, u.params());
  const LabeledCorpus lc{corpus.all(), corpus.labels()};
  const auto& rules = AxiomSystem::pb().rules();
  const auto instances = instantiate_schemas(
      AxiomSystem::base(), enumerate_elements(parse_generators("kcfd"), AxiomSystem::base()));
  const auto evens = even_operators(AxiomSystem::base());

#ifdef KDMONOID_HAVE_OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled: both columns run serially\n");
#endif
  std::printf("corpus: %zu sets, best of %d\n\n", lc.sets.size(), repeats);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  row("validate rules", best_of(repeats, [&] { validate_rules_serial(rules, lc, u); }),
      best_of(repeats, [&] { validate_rules(rules, lc, u); }));
  row("validate schemas", best_of(repeats, [&] { validate_rules_serial(instances, lc, u); }),
      best_of(repeats, [&] { validate_rules(instances, lc, u); }));
  row("corpus relation", best_of(repeats, [&] { corpus_relation_serial(evens, lc, u); }),
      best_of(repeats, [&] { corpus_relation(evens, lc, u); }));
  row("d identities", best_of(repeats, [&] { check_d_identities_serial(lc.sets, u); }),
      best_of(repeats, [&] { check_d_identities(lc.sets, u); }));
  row("baire identities", best_of(repeats, [&] { check_baire_identities_serial(lc.sets, u); }),
      best_of(repeats, [&] { check_baire_identities(lc.sets, u); }));
  return 0;
}
