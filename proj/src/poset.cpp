#include "kdmonoid/poset.hpp"

#include <sstream>

#include "kdmonoid/monoid.hpp"

namespace kdm {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::none: return "none";
    case Provenance::proved_chain: return "proved-chain";
    case Provenance::corpus_only: return "corpus-only";
  }
  return "none";
}

std::optional<std::size_t> OrderRelation::index_of(const Word& w) const {
  for (std::size_t n = 0; n < elements.size(); ++n) {
    if (elements[n] == w) return n;
  }
  return std::nullopt;
}

bool OrderRelation::le(const Word& a, const Word& b) const {
  auto ia = index_of(a), ib = index_of(b);
  if (!ia || !ib) throw std::out_of_range("word not in relation");
  return leq[*ia][*ib] != 0;
}

std::vector<Inequality> generator_inequalities() {
  auto w = [](const char* s) { return parse_word(s); };
  return {
      {w("i"), w("e")},     {w("e"), w("k")},     {w("d"), w("kik")},   {w("iki"), w("cdc")},
      {w("cdc"), w("id")},  {w("cdc"), w("cidc")}, {w("ki"), w("cidc")}, {w("cidc"), w("d")},
  };
}

namespace {

OrderRelation empty_relation(const std::vector<Word>& elements) {
  OrderRelation r;
  r.elements = elements;
  r.leq.assign(elements.size(), std::vector<char>(elements.size(), 0));
  r.provenance.assign(elements.size(), std::vector<Provenance>(elements.size(), Provenance::none));
  return r;
}

}  // namespace

OrderRelation proved_relation(const std::vector<Word>& elements, const AxiomSystem& ax) {
  // Work in the whole monoid so that odd intermediates take part in chains.
  const MonoidTable m = enumerate(parse_generators("kcdi"), ax);
  const std::size_t n = m.size();
  for (const Word& e : elements) {
    if (!(normalize(e, ax) == e) || !m.index_of(e)) {
      throw std::invalid_argument("'" + render_word(e) + "' is not a canonical element");
    }
  }
  auto gen_index = [&](Letter l) {
    for (std::size_t g = 0; g < m.generators.size(); ++g) {
      if (m.generators[g] == l) return g;
    }
    throw std::logic_error("missing generator");
  };
  const std::size_t gk = gen_index(Letter::k), gi = gen_index(Letter::i),
                    gd = gen_index(Letter::d), gc = gen_index(Letter::c);

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) rel[a][a] = 1;
  for (const Inequality& q : generator_inequalities()) {
    rel[*m.index_of(normalize(q.lesser, ax))][*m.index_of(normalize(q.greater, ax))] = 1;
  }

  bool changed = true;
  auto set = [&](std::size_t a, std::size_t b) {
    if (!rel[a][b]) {
      rel[a][b] = 1;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!rel[a][b]) continue;
        for (std::size_t g : {gk, gi, gd}) set(m.left_cayley[g][a], m.left_cayley[g][b]);
        set(m.left_cayley[gc][b], m.left_cayley[gc][a]);
        for (std::size_t g = 0; g < m.generators.size(); ++g) {
          set(m.right_cayley[g][a], m.right_cayley[g][b]);
        }
      }
    }
    for (std::size_t via = 0; via < n; ++via) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!rel[a][via]) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (rel[via][b]) set(a, b);
        }
      }
    }
  }

  OrderRelation out = empty_relation(elements);
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      if (rel[*m.index_of(elements[a])][*m.index_of(elements[b])]) {
        out.leq[a][b] = 1;
        out.provenance[a][b] = Provenance::proved_chain;
      }
    }
  }
  return out;
}

namespace {

struct Images {
  // images[w][s], absent when undecidable
  std::vector<std::vector<std::optional<SymbolicSet>>> at;
};

std::optional<SymbolicSet> try_apply(const VitaliUniverse& u, const Word& w, const SymbolicSet& s) {
  try {
    return u.apply_word(w, s);
  } catch (const UndecidableError&) {
    return std::nullopt;
  }
}

// 1 = subset on every decidable set, 0 = refuted; adds undecidable count.
char pair_leq(const VitaliUniverse& u, const Images& img, std::size_t a, std::size_t b,
              std::size_t& skipped) {
  const std::size_t sets = img.at[a].size();
  for (std::size_t s = 0; s < sets; ++s) {
    const auto& x = img.at[a][s];
    const auto& y = img.at[b][s];
    if (!x || !y) {
      ++skipped;
      continue;
    }
    try {
      if (!u.compare(SetRelation::subset, *x, *y)) return 0;
    } catch (const UndecidableError&) {
      ++skipped;
    }
  }
  return 1;
}

template <bool Parallel>
OrderRelation corpus_relation_impl(const std::vector<Word>& elements, const LabeledCorpus& corpus,
                                   const VitaliUniverse& u, CorpusRelationStats* stats) {
  const std::size_t n = elements.size();
  const std::size_t sets = corpus.sets.size();
  Images img;
  img.at.assign(n, std::vector<std::optional<SymbolicSet>>(sets));
  const auto cells = static_cast<long>(n * sets);
#pragma omp parallel for schedule(dynamic, 16) if (Parallel)
  for (long c = 0; c < cells; ++c) {
    const auto w = static_cast<std::size_t>(c) / sets;
    const auto s = static_cast<std::size_t>(c) % sets;
    img.at[w][s] = try_apply(u, elements[w], corpus.sets[s]);
  }

  OrderRelation r = empty_relation(elements);
  std::vector<std::size_t> skipped(n * n, 0);
  const auto pairs = static_cast<long>(n * n);
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (long p = 0; p < pairs; ++p) {
    const auto a = static_cast<std::size_t>(p) / n;
    const auto b = static_cast<std::size_t>(p) % n;
    const char v = a == b ? 1 : pair_leq(u, img, a, b, skipped[static_cast<std::size_t>(p)]);
    r.leq[a][b] = v;
    r.provenance[a][b] = v ? Provenance::corpus_only : Provenance::none;
  }
  if (stats) {
    stats->skipped = 0;
    for (std::size_t s : skipped) stats->skipped += s;
  }
  return r;
}

}  // namespace

OrderRelation corpus_relation(const std::vector<Word>& elements, const LabeledCorpus& corpus,
                              const VitaliUniverse& universe, CorpusRelationStats* stats) {
  return corpus_relation_impl<true>(elements, corpus, universe, stats);
}

OrderRelation corpus_relation_serial(const std::vector<Word>& elements,
                                     const LabeledCorpus& corpus, const VitaliUniverse& universe,
                                     CorpusRelationStats* stats) {
  return corpus_relation_impl<false>(elements, corpus, universe, stats);
}

OrderRelation reconcile(const OrderRelation& proved, const OrderRelation& corpus) {
  if (proved.elements != corpus.elements) throw std::invalid_argument("element lists differ");
  OrderRelation out = corpus;
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < out.size(); ++b) {
      if (!out.leq[a][b]) continue;
      out.provenance[a][b] =
          proved.leq[a][b] ? Provenance::proved_chain : Provenance::corpus_only;
    }
  }
  return out;
}

std::vector<HasseEdge> hasse(const OrderRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (r.leq[a][b] && r.leq[b][a]) {
        throw std::logic_error("order has a cycle between '" + render_word(r.elements[a]) +
                               "' and '" + render_word(r.elements[b]) + "'");
      }
    }
  }
  std::vector<HasseEdge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !r.leq[a][b]) continue;
      bool covered = false;
      for (std::size_t c = 0; c < n && !covered; ++c) {
        covered = c != a && c != b && r.leq[a][c] && r.leq[c][b];
      }
      if (!covered) edges.push_back({a, b});
    }
  }
  return edges;
}

std::string emit_dot(const std::vector<HasseEdge>& edges, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph order {\n  rankdir=BT;\n";
  for (std::size_t n = 0; n < labels.size(); ++n) {
    out << "  n" << n << " [label=\"" << labels[n] << "\"];\n";
  }
  for (const HasseEdge& e : edges) out << "  n" << e.from << " -> n" << e.to << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Word> even_operators(const AxiomSystem& ax) {
  std::vector<Word> out;
  for (const Word& w : enumerate_elements(parse_generators("kcd"), ax)) {
    if (parity(w) == Parity::even) out.push_back(w);
  }
  return out;
}

}  // namespace kdm
