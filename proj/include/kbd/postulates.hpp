#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kbd/belief_change.hpp"
#include "kbd/knowledge_base.hpp"
#include "kbd/semantics.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

// One representative sentence per model set over the abducible atoms.
// Representatives are synthesized on demand; index i encodes the model set
// whose member j is present iff bit j of i is set.
class SentenceSpace {
 public:
  static constexpr unsigned kMaxAtoms = 4;

  explicit SentenceSpace(const GroundProgram& program);  // throws UniverseTooLarge

  unsigned universe_size() const { return n_; }
  std::size_t size() const { return std::size_t{1} << (std::size_t{1} << n_); }
  ModelSet models(std::size_t index) const;
  Sentence sentence(std::size_t index) const;

 private:
  GroundProgram program_;
  unsigned n_;
};

SentenceSpace enumerate_sentence_space(const KnowledgeBase& kb);

enum class Verdict { Pass, Fail, PreconditionFailed };

std::string_view to_string(Verdict verdict);

struct Witness {
  std::string label;
  ModelSet models;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LawOptions {
  std::uint64_t seed = 0;
  // Above these bounds alpha, (alpha, beta) pairs, interpretation tuples
  // and subsets are sampled rather than enumerated.
  std::size_t max_sentences = 4096;
  std::size_t max_pairs = 65536;
  std::size_t max_tuples = 200000;
  std::size_t max_subsets = 65536;
  // Sentences drawn when the universe is too large for a sentence space.
  std::size_t random_sentences = 24;
  unsigned max_delta = 8;
};

struct Counterexample {
  KnowledgeBase kb;
  std::optional<Sentence> alpha;
  std::optional<Sentence> beta;
  std::vector<Witness> witnesses;
  LawOptions options;
};

struct LawReport {
  std::string law_id;
  Verdict verdict = Verdict::Pass;
  std::optional<Counterexample> counterexample;
  std::size_t instances_checked = 0;
  // Knowledge bases on which the law's precondition did not hold.
  std::size_t preconditions_failed = 0;
};

using RankingFn = std::function<FaithfulRanking(const KnowledgeBase&)>;
using OperatorFn = std::function<BeliefState(const KnowledgeBase&, const Sentence&)>;

struct Operators {
  std::string name;
  RankingFn ranking;
  OperatorFn revise;
  OperatorFn contract;
};

Operators dalal_operators();
// Keeps the rank-maximal models of {alpha} u IC.
Operators max_rank_revision_mutant();
// Mod(KB) u every model of S ranked no higher than the best ~alpha model;
// drops recovery.
Operators severe_withdrawal_mutant();
// Ranks every interpretation 0, ignoring the knowledge base.
Operators constant_ranking_mutant();
std::vector<Operators> shipped_mutants();

std::vector<LawReport> check_revision_postulates(const KnowledgeBase& kb, const SentenceSpace& space,
                                                 const Operators& ops = dalal_operators(),
                                                 const LawOptions& options = {});
std::vector<LawReport> check_contraction_postulates(const KnowledgeBase& kb,
                                                    const SentenceSpace& space,
                                                    const Operators& ops = dalal_operators(),
                                                    const LawOptions& options = {});
std::vector<LawReport> check_order_axioms(const KnowledgeBase& kb,
                                          const Operators& ops = dalal_operators(),
                                          const LawOptions& options = {});
// Throws NonEmptyIC.
std::vector<LawReport> check_agm_correspondence(const KnowledgeBase& kb, const SentenceSpace& space,
                                                const Operators& ops = dalal_operators(),
                                                const LawOptions& options = {});
std::vector<LawReport> check_identities(const KnowledgeBase& kb, const SentenceSpace& space,
                                        const Operators& ops = dalal_operators(),
                                        const LawOptions& options = {});
// Targets are the space representatives plus every non-abducible ground
// atom and its negation.
std::vector<LawReport> check_abduction_laws(const KnowledgeBase& kb, const SentenceSpace& space,
                                            const Operators& ops = dalal_operators(),
                                            const LawOptions& options = {});

// The sentences a suite quantifies over: the space representatives when
// |Ab| <= 4, otherwise seeded random sentences of a few literals over the
// ground atoms.
std::vector<Sentence> law_sentences(const KnowledgeBase& kb, const LawOptions& options = {});

// Suites over law_sentences(kb, options).
std::vector<LawReport> check_revision_postulates(const KnowledgeBase& kb, const Operators& ops,
                                                 const LawOptions& options = {});
std::vector<LawReport> check_contraction_postulates(const KnowledgeBase& kb, const Operators& ops,
                                                    const LawOptions& options = {});
std::vector<LawReport> check_agm_correspondence(const KnowledgeBase& kb, const Operators& ops,
                                                const LawOptions& options = {});

// Combines reports of the same laws over several knowledge bases: the first
// failure wins, counts add up, and a law is precondition-failed only if it
// was on every input. Output is sorted by law_id.
std::vector<LawReport> merge_reports(const std::vector<std::vector<LawReport>>& runs);

bool all_passed(const std::vector<LawReport>& reports);

std::vector<std::string> law_ids();

// Re-evaluates a failed report's counterexample. True iff the violation
// recurs with identical witness sets.
bool replay(const LawReport& report, const Operators& ops = dalal_operators());

}  // namespace kbd
