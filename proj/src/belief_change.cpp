#include "kbd/belief_change.hpp"

#include <algorithm>
#include <limits>

namespace kbd {

FaithfulRanking::FaithfulRanking(ModelSet domain, std::vector<std::uint8_t> ranks)
    : domain_(std::move(domain)), ranks_(std::move(ranks)) {
  ranks_.resize(static_cast<std::size_t>(domain_.space_size()), 0);
}

ModelSet FaithfulRanking::minimal(const ModelSet& candidates) const {
  ModelSet pool = candidates & domain_;
  unsigned best = std::numeric_limits<unsigned>::max();
  pool.for_each([&](AbductiveInterpretation i) { best = std::min(best, rank(i)); });
  ModelSet out(pool.universe_size());
  pool.for_each([&](AbductiveInterpretation i) {
    if (rank(i) == best) out.insert(i);
  });
  return out;
}

bool operator==(const FaithfulRanking& a, const FaithfulRanking& b) {
  if (a.domain_ != b.domain_) return false;
  bool same = true;
  a.domain_.for_each([&](AbductiveInterpretation i) { same = same && a.rank(i) == b.rank(i); });
  return same;
}

BeliefState kb_models(const KnowledgeBase& kb) {
  std::vector<Sentence> all = kb.knowledge();
  all.insert(all.end(), kb.constraints().begin(), kb.constraints().end());
  return {kb.models_of(all)};
}

bool accepted(const KnowledgeBase& kb, const Sentence& alpha) {
  return kb_models(kb).models.subset_of(kb.models_of({alpha}));
}

bool rejected(const KnowledgeBase& kb, const Sentence& alpha) {
  return accepted(kb, Sentence::negation(alpha));
}

BeliefState expand(const KnowledgeBase& kb, const Sentence& alpha) {
  return {kb_models(kb).models & kb.models_of({alpha})};
}

FaithfulRanking dalal_ranking(const KnowledgeBase& kb) {
  const ModelSet current = kb_models(kb).models;
  const unsigned n = kb.universe_size();
  const auto size = static_cast<std::size_t>(current.space_size());
  if (current.empty()) return FaithfulRanking(kb.constraint_models(), std::vector<std::uint8_t>(size, 0));

  // Hamming distance transform: after relaxing bit b, dist[x] is the
  // distance to the nearest model that agrees with x on the bits not yet
  // relaxed.
  constexpr std::uint8_t kFar = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist(size, kFar);
  current.for_each([&](AbductiveInterpretation i) { dist[i.bits] = 0; });
  for (unsigned b = 0; b < n; ++b) {
    const std::size_t flip = std::size_t{1} << b;
    for (std::size_t x = 0; x < size; ++x) {
      const std::uint8_t via = dist[x ^ flip];
      if (via != kFar && via + 1 < dist[x]) dist[x] = static_cast<std::uint8_t>(via + 1);
    }
  }
  return FaithfulRanking(kb.constraint_models(), std::move(dist));
}

BeliefState revise(const KnowledgeBase& kb, const Sentence& alpha) {
  return revise(kb, alpha, dalal_ranking(kb));
}

BeliefState revise(const KnowledgeBase& kb, const Sentence& alpha, const FaithfulRanking& order) {
  return {order.minimal(kb.models_with_constraints(alpha))};
}

BeliefState contract(const KnowledgeBase& kb, const Sentence& alpha) {
  return contract(kb, alpha, dalal_ranking(kb));
}

BeliefState contract(const KnowledgeBase& kb, const Sentence& alpha, const FaithfulRanking& order) {
  const ModelSet fallback = order.minimal(kb.models_with_constraints(Sentence::negation(alpha)));
  return {kb_models(kb).models | fallback};
}

BeliefState levi_revise(const KnowledgeBase& kb, const Sentence& alpha) {
  return {contract(kb, Sentence::negation(alpha)).models & kb.models_of({alpha})};
}

BeliefState harper_contract(const KnowledgeBase& kb, const Sentence& alpha) {
  return {kb_models(kb).models | revise(kb, Sentence::negation(alpha)).models};
}

Sentence synthesize_sentence(const GroundProgram& program, const ModelSet& ms) {
  const auto& abducibles = program.abducibles();
  if (ms.full()) return Sentence::disjunction({Sentence::top()});
  if (ms.empty()) {
    if (abducibles.empty()) return Sentence::bottom();
    Sentence a = Sentence::atom(program.atom(abducibles.front()));
    return Sentence::conjunction({a, Sentence::negation(a)});
  }
  std::vector<Sentence> rows;
  ms.for_each([&](AbductiveInterpretation i) {
    std::vector<Sentence> row;
    for (std::size_t b = 0; b < abducibles.size(); ++b) {
      Sentence a = Sentence::atom(program.atom(abducibles[b]));
      row.push_back(i.contains(static_cast<unsigned>(b)) ? a : Sentence::negation(a));
    }
    rows.push_back(Sentence::conjunction(std::move(row)));
  });
  if (rows.size() == 1) return std::move(rows.front());
  return Sentence::disjunction(std::move(rows));
}

}  // namespace kbd
