#include "kdmonoid/tables.hpp"

#include <algorithm>
#include <sstream>

#include "kdmonoid/corpus.hpp"
#include "kdmonoid/monoid.hpp"

namespace kdm {

namespace {

struct Spec {
  const char* word;
  const char* reference;
};

std::vector<TableRow> build(const VitaliUniverse& u, const SymbolicSet& target,
                            const std::vector<Spec>& specs) {
  std::vector<TableRow> rows;
  for (const Spec& s : specs) {
    TableRow r;
    r.word = parse_word(s.word);
    const SymbolicSet image = u.apply_word(r.word, target);
    r.derived = u.render(image);
    r.reference = s.reference;
    r.matches = u.compare(SetRelation::equal, image, parse_set_dsl(s.reference, u));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<TableRow> figure_even_table(const VitaliUniverse& u) {
  return build(u, SymbolicSet::tame(a18()),
               {
                   {"e", "(1,2) u (2,3) u {4} u Q(5,6) u I(6,7)"},
                   {"i", "(1,2) u (2,3)"},
                   {"k", "[1,3] u {4} u [5,7]"},
                   {"ki", "[1,3]"},
                   {"ik", "(1,3) u (5,7)"},
                   {"iki", "(1,3)"},
                   {"kik", "[1,3] u [5,7]"},
                   {"d", "[1,3] u [6,7]"},
                   {"id", "(1,3) u (6,7)"},
               });
}

std::vector<TableRow> vitali_table(const VitaliUniverse& u) {
  auto rows = build(u, witness(WitnessName::v, u.params()),
                    {
                        {"idc", "(-inf,inf)"},
                        {"id", "(8,9)"},
                        {"d", "[8,9]"},
                        {"dc", "(-inf,inf)"},
                        {"cd", "(-inf,8) u (10,inf)"},
                        {"cdc", "{}"},
                        {"cidc", "{}"},
                        {"kcd", "(-inf,8] u [10,inf)"},
                    });
  for (TableRow& r : rows) {
    if (r.matches) continue;
    const std::string w = render_word(r.word);
    if (w == "cd") r.note = "cdV is the complement of dV = [8,9]";
    if (w == "kcd") r.note = "kcdV is the closure of cdV = (-inf,8) u (9,inf)";
    if (r.note.empty()) r.note = "disagrees with the reference";
  }
  return rows;
}

std::vector<CountRow> kfd_counts() {
  const struct {
    const char* gens;
    AxiomName ax;
    std::size_t expected;
  } specs[] = {{"kifd", AxiomName::base, 20}, {"kcfd", AxiomName::pb, 40},
               {"kcfd", AxiomName::base, 46}};
  std::vector<CountRow> rows;
  for (const auto& s : specs) {
    CountRow r;
    const auto gens = parse_generators(s.gens);
    r.generators = render_generators(gens);
    r.axioms = std::string(to_string(s.ax));
    r.elements = enumerate_elements(gens, AxiomSystem::get(s.ax));
    r.count = r.elements.size();
    r.expected = s.expected;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, const std::string& target) {
  std::size_t wcol = 2, dcol = 7, rcol = 9;
  for (const TableRow& r : rows) {
    wcol = std::max(wcol, render_word(r.word).size() + target.size());
    dcol = std::max(dcol, r.derived.size());
    rcol = std::max(rcol, r.reference.size());
  }
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(n, s.size()), ' ');
    return s;
  };
  std::ostringstream out;
  out << "| " << pad("op", wcol) << " | " << pad("derived", dcol) << " | "
      << pad("reference", rcol) << " | note\n";
  out << "|" << std::string(wcol + 2, '-') << "|" << std::string(dcol + 2, '-') << "|"
      << std::string(rcol + 2, '-') << "|------\n";
  for (const TableRow& r : rows) {
    std::string note = r.matches ? "ok" : "MISMATCH";
    if (!r.note.empty()) note += ": " + r.note;
    out << "| " << pad(render_word(r.word) + target, wcol) << " | " << pad(r.derived, dcol)
        << " | " << pad(r.reference, rcol) << " | " << note << "\n";
  }
  return out.str();
}

std::string format_counts(const std::vector<CountRow>& rows) {
  std::ostringstream out;
  out << "| generators | axioms | count | expected |\n|------------|--------|-------|----------|\n";
  for (const CountRow& r : rows) {
    std::string g = r.generators, a = r.axioms;
    g.resize(10, ' ');
    a.resize(6, ' ');
    std::string c = std::to_string(r.count), e = std::to_string(r.expected);
    c.resize(5, ' ');
    e.resize(8, ' ');
    out << "| " << g << " | " << a << " | " << c << " | " << e << " |\n";
  }
  for (const CountRow& r : rows) {
    out << "\n" << r.generators << " " << r.axioms << ":";
    for (const Word& w : r.elements) out << " " << render_word(w);
    out << "\n";
  }
  return out.str();
}

}  // namespace kdm
