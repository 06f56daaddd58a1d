#include "kbd/signature.hpp"

#include "kbd/error.hpp"

namespace kbd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorKind::UnknownSort: return "UnknownSort";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SortMismatch: return "SortMismatch";
    case ErrorKind::CyclicProgram: return "CyclicProgram";
    case ErrorKind::AbducibleInHead: return "AbducibleInHead";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::IllSortedSentence: return "IllSortedSentence";
    case ErrorKind::NonAbducibleKnowledge: return "NonAbducibleKnowledge";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::NonAbducibleLiteral: return "NonAbducibleLiteral";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::PreconditionNotRejected: return "PreconditionNotRejected";
    case ErrorKind::NoExplanation: return "NoExplanation";
    case ErrorKind::NonEmptyIC: return "NonEmptyIC";
    case ErrorKind::Syntax: return "SyntaxError";
  }
  return "Unknown";
}

void Signature::add_sort(const std::string& name, const std::vector<std::string>& constants) {
  if (sort_index_.count(name) != 0) {
    throw Error(ErrorKind::DuplicateDeclaration, "sort '" + name + "' declared twice");
  }
  if (constants.empty()) {
    throw Error(ErrorKind::InvalidSignature, "sort '" + name + "' has no constants");
  }
  std::set<std::string> seen;
  for (const auto& c : constants) {
    if (!seen.insert(c).second) {
      throw Error(ErrorKind::InvalidSignature,
                  "constant '" + c + "' listed twice in sort '" + name + "'");
    }
    if (auto it = constant_sort_.find(c); it != constant_sort_.end()) {
      throw Error(ErrorKind::InvalidSignature, "constant '" + c + "' belongs to both '" +
                                                   it->second + "' and '" + name + "'");
    }
  }
  for (const auto& c : constants) constant_sort_[c] = name;
  sort_index_[name] = sorts_.size();
  sorts_.push_back({name, constants});
}

void Signature::add_predicate(const std::string& name, const std::vector<std::string>& arg_sorts,
                              bool abducible) {
  if (predicate_index_.count(name) != 0) {
    throw Error(ErrorKind::DuplicateDeclaration, "predicate '" + name + "' declared twice");
  }
  for (const auto& s : arg_sorts) {
    if (sort_index_.count(s) == 0) {
      throw Error(ErrorKind::UnknownSort,
                  "predicate '" + name + "' uses undeclared sort '" + s + "'");
    }
  }
  predicate_index_[name] = predicates_.size();
  predicates_.push_back({name, arg_sorts, abducible});
}

const SortDecl* Signature::find_sort(const std::string& name) const {
  auto it = sort_index_.find(name);
  return it == sort_index_.end() ? nullptr : &sorts_[it->second];
}

const PredicateDecl* Signature::find_predicate(const std::string& name) const {
  auto it = predicate_index_.find(name);
  return it == predicate_index_.end() ? nullptr : &predicates_[it->second];
}

std::optional<std::string> Signature::sort_of(const std::string& constant) const {
  auto it = constant_sort_.find(constant);
  if (it == constant_sort_.end()) return std::nullopt;
  return it->second;
}

bool Signature::is_abducible(const std::string& predicate) const {
  const auto* p = find_predicate(predicate);
  return p != nullptr && p->abducible;
}

std::string to_string(const GroundAtom& atom) {
  std::string out = atom.predicate;
  if (!atom.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i > 0) out += ',';
      out += atom.args[i];
    }
    out += ')';
  }
  return out;
}

std::string to_string(const GroundLiteral& literal) {
  return (literal.positive ? "" : "~") + to_string(literal.atom);
}

std::set<GroundLiteral> positive_part(const std::vector<GroundLiteral>& literals) {
  std::set<GroundLiteral> out;
  for (const auto& l : literals) {
    if (l.positive) out.insert(l);
  }
  return out;
}

std::set<GroundLiteral> negative_part(const std::vector<GroundLiteral>& literals) {
  std::set<GroundLiteral> out;
  for (const auto& l : literals) {
    if (!l.positive) out.insert(l);
  }
  return out;
}

std::set<GroundAtom> atoms_of(const std::vector<GroundLiteral>& literals) {
  std::set<GroundAtom> out;
  for (const auto& l : literals) out.insert(l.atom);
  return out;
}

bool is_consistent(const std::vector<GroundLiteral>& literals) {
  std::set<GroundAtom> negated;
  for (const auto& l : negative_part(literals)) negated.insert(l.atom);
  for (const auto& l : positive_part(literals)) {
    if (negated.count(l.atom) != 0) return false;
  }
  return true;
}

}  // namespace kbd
