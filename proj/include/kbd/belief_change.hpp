#pragma once

#include <cstdint>
#include <vector>

#include "kbd/knowledge_base.hpp"
#include "kbd/semantics.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

// Semantic content of a knowledge base or of an operator result. An empty
// model set is a legal, inconsistent state.
struct BeliefState {
  ModelSet models;

  bool consistent() const { return !models.empty(); }
  friend bool operator==(const BeliefState&, const BeliefState&) = default;
};

// Total pre-order over S = Mod(IC) given by a rank per interpretation;
// I <= J iff rank(I) <= rank(J).
class FaithfulRanking {
 public:
  FaithfulRanking(ModelSet domain, std::vector<std::uint8_t> ranks);

  const ModelSet& domain() const { return domain_; }
  unsigned rank(AbductiveInterpretation i) const { return ranks_.at(i.bits); }
  bool leq(AbductiveInterpretation a, AbductiveInterpretation b) const {
    return rank(a) <= rank(b);
  }
  // Min(F, <=): the rank-minimal members of F that lie in the domain.
  ModelSet minimal(const ModelSet& candidates) const;

  friend bool operator==(const FaithfulRanking& a, const FaithfulRanking& b);

 private:
  ModelSet domain_;
  std::vector<std::uint8_t> ranks_;
};

BeliefState kb_models(const KnowledgeBase& kb);

bool accepted(const KnowledgeBase& kb, const Sentence& alpha);
bool rejected(const KnowledgeBase& kb, const Sentence& alpha);

// Mod(KB) n Mod(alpha).
BeliefState expand(const KnowledgeBase& kb, const Sentence& alpha);

// rank(I) = min over M in Mod(KB) of |I xor M|; identically 0 when Mod(KB)
// is empty.
FaithfulRanking dalal_ranking(const KnowledgeBase& kb);

// Min(Mod({alpha} u IC), <=_KB). All minimizers are kept.
BeliefState revise(const KnowledgeBase& kb, const Sentence& alpha);
BeliefState revise(const KnowledgeBase& kb, const Sentence& alpha, const FaithfulRanking& order);

// Mod(KB) u Min(Mod({~alpha} u IC), <=_KB).
BeliefState contract(const KnowledgeBase& kb, const Sentence& alpha);
BeliefState contract(const KnowledgeBase& kb, const Sentence& alpha, const FaithfulRanking& order);

// Mod(KB - ~alpha) n Mod(alpha).
BeliefState levi_revise(const KnowledgeBase& kb, const Sentence& alpha);
// Mod(KB) u Mod(KB * ~alpha).
BeliefState harper_contract(const KnowledgeBase& kb, const Sentence& alpha);

// Full DNF over the abducible atoms whose models are exactly `ms`. The full
// set maps to the disjunction of one empty conjunction; the empty set maps
// to a & ~a on the first abducible atom (or `false` with no atoms).
Sentence synthesize_sentence(const GroundProgram& program, const ModelSet& ms);

}  // namespace kbd
