#pragma once

#include <memory>
#include <vector>

#include "kbd/program.hpp"
#include "kbd/semantics.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

// The abductive framework <P, Ab, IC, K>. P and Ab come from the ground
// program (Ab is its set of ground abducible atoms); IC and K are sentence
// sets. Only K is meant to change.
class KnowledgeBase {
 public:
  // Computes levels if the program has none. Throws NonAbducibleKnowledge
  // when a knowledge sentence mentions a non-abducible atom, and the usual
  // compile errors for ill-sorted sentences.
  KnowledgeBase(GroundProgram program, std::vector<Sentence> constraints,
                std::vector<Sentence> knowledge, unsigned max_atoms = kDefaultMaxAtoms);

  const GroundProgram& program() const { return *program_; }
  const std::vector<Sentence>& constraints() const { return constraints_; }
  const std::vector<Sentence>& knowledge() const { return knowledge_; }
  unsigned max_atoms() const { return max_atoms_; }
  unsigned universe_size() const { return static_cast<unsigned>(program_->abducible_count()); }

  KnowledgeBase with_knowledge(std::vector<Sentence> knowledge) const;
  KnowledgeBase with_constraints(std::vector<Sentence> constraints) const;

  // Mod(sentences) under this program and enumeration cap.
  ModelSet models_of(const std::vector<Sentence>& sentences) const;
  // S = Mod(IC).
  ModelSet constraint_models() const { return models_of(constraints_); }
  // Mod({alpha} u IC).
  ModelSet models_with_constraints(const Sentence& alpha) const;

 private:
  KnowledgeBase(std::shared_ptr<const GroundProgram> program, std::vector<Sentence> constraints,
                std::vector<Sentence> knowledge, unsigned max_atoms);
  void validate() const;

  std::shared_ptr<const GroundProgram> program_;
  std::vector<Sentence> constraints_;
  std::vector<Sentence> knowledge_;
  unsigned max_atoms_;
};

}  // namespace kbd
