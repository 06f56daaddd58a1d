#include "kbd/knowledge_base.hpp"

#include "kbd/error.hpp"

namespace kbd {

KnowledgeBase::KnowledgeBase(GroundProgram program, std::vector<Sentence> constraints,
                             std::vector<Sentence> knowledge, unsigned max_atoms)
    : KnowledgeBase(std::make_shared<const GroundProgram>(
                        program.has_levels() ? std::move(program) : compute_levels(program)),
                    std::move(constraints), std::move(knowledge), max_atoms) {}

KnowledgeBase::KnowledgeBase(std::shared_ptr<const GroundProgram> program,
                             std::vector<Sentence> constraints, std::vector<Sentence> knowledge,
                             unsigned max_atoms)
    : program_(std::move(program)),
      constraints_(std::move(constraints)),
      knowledge_(std::move(knowledge)),
      max_atoms_(max_atoms) {
  validate();
}

namespace {

const AtomPattern* first_non_abducible(const Signature& sig, const Sentence& s) {
  if (s.kind() == Sentence::Kind::Atom) {
    return sig.is_abducible(s.atom_pattern().predicate) ? nullptr : &s.atom_pattern();
  }
  for (const auto& c : s.children()) {
    if (const auto* found = first_non_abducible(sig, c)) return found;
  }
  return nullptr;
}

}  // namespace

void KnowledgeBase::validate() const {
  for (const auto& ic : constraints_) compile(*program_, ic);
  for (const auto& k : knowledge_) {
    compile(*program_, k);
    if (const auto* atom = first_non_abducible(program_->signature(), k)) {
      throw Error(ErrorKind::NonAbducibleKnowledge, "knowledge sentence '" + to_string(k) +
                                                        "' mentions non-abducible atom '" +
                                                        to_string(*atom) + "'");
    }
  }
}

KnowledgeBase KnowledgeBase::with_knowledge(std::vector<Sentence> knowledge) const {
  return KnowledgeBase(program_, constraints_, std::move(knowledge), max_atoms_);
}

KnowledgeBase KnowledgeBase::with_constraints(std::vector<Sentence> constraints) const {
  return KnowledgeBase(program_, std::move(constraints), knowledge_, max_atoms_);
}

ModelSet KnowledgeBase::models_of(const std::vector<Sentence>& sentences) const {
  return models(*program_, sentences, max_atoms_);
}

ModelSet KnowledgeBase::models_with_constraints(const Sentence& alpha) const {
  std::vector<Sentence> all = constraints_;
  all.push_back(alpha);
  return models_of(all);
}

}  // namespace kbd
