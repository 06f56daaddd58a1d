#pragma once

#include <cstdint>
#include <vector>

#include "kbd/belief_change.hpp"
#include "kbd/knowledge_base.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

inline constexpr unsigned kDefaultMaxDelta = 8;

// A consistent set of abducible literals, kept sorted.
struct Explanation {
  std::vector<GroundLiteral> literals;

  std::size_t size() const { return literals.size(); }
  friend auto operator<=>(const Explanation&, const Explanation&) = default;
  friend bool operator==(const Explanation&, const Explanation&) = default;
};

std::string to_string(const Explanation& delta);

// Mod(delta): the interpretations agreeing with every literal.
ModelSet explanation_models(const GroundProgram& program, const Explanation& delta);

struct ExplanationFamily {
  Sentence target;
  std::vector<Explanation> members;  // by cardinality, then literal order
  unsigned max_cardinality = kDefaultMaxDelta;
  // False when explanations larger than the cap could exist.
  bool complete = true;
};

// delta is consistent, Mod(delta u IC) is non-empty and Mod(delta) is
// contained in Mod(alpha). Throws NonAbducibleLiteral.
bool is_explanation(const KnowledgeBase& kb, const std::vector<GroundLiteral>& delta,
                    const Sentence& alpha);

// Every subset-minimal explanation of at most `max_cardinality` literals,
// by cardinality-increasing search that skips supersets of implicants
// already found.
ExplanationFamily minimal_explanations(const KnowledgeBase& kb, const Sentence& alpha,
                                       unsigned max_cardinality = kDefaultMaxDelta);

// (d1 n d2) u { x | y : x in d1 \ d2, y in d2 \ d1 }.
std::vector<Sentence> disjoin(const Explanation& d1, const Explanation& d2);
// Same combinator over sentence sets, used to fold a whole family.
std::vector<Sentence> disjoin(const std::vector<Sentence>& s1, const std::vector<Sentence>& s2);
// Left fold of disjoin over the family members. Throws EmptyFamily.
std::vector<Sentence> disjoin_all(const ExplanationFamily& family);

// Union of the members' model sets.
ModelSet family_models(const GroundProgram& program, const ExplanationFamily& family);

// A sub-family whose models still cover Min(Mod({alpha} u IC), <=_KB) and
// from which no member can be dropped without losing coverage.
std::vector<Explanation> irredundant_cover(const KnowledgeBase& kb, const ExplanationFamily& family,
                                           const FaithfulRanking& order);

// Revision of a KB that rejects alpha, computed from the models of the
// explanation family restricted to Mod(IC). Throws PreconditionNotRejected
// and NoExplanation.
BeliefState revise_via_explanations(const KnowledgeBase& kb, const Sentence& alpha,
                                    unsigned max_cardinality = kDefaultMaxDelta);

}  // namespace kbd
