#pragma once

#include <string>
#include <vector>

#include "kbd/program.hpp"
#include "kbd/signature.hpp"

namespace kbd {

// First-order sentence over a finite sorted signature. Quantifiers range
// over a declared sort; implication is kept as its own node so that
// printed sentences read the way they were written.
class Sentence {
 public:
  enum class Kind { Atom, Equal, Not, And, Or, Implies, Forall, Exists };

  Sentence() : kind_(Kind::And) {}

  static Sentence atom(AtomPattern pattern);
  static Sentence atom(const GroundAtom& atom);
  static Sentence equal(Term lhs, Term rhs);
  static Sentence negation(Sentence s);
  static Sentence conjunction(std::vector<Sentence> parts);
  static Sentence disjunction(std::vector<Sentence> parts);
  static Sentence implies(Sentence premise, Sentence conclusion);
  static Sentence forall(std::string variable, std::string sort, Sentence body);
  static Sentence exists(std::string variable, std::string sort, Sentence body);
  static Sentence top() { return conjunction({}); }
  static Sentence bottom() { return disjunction({}); }
  static Sentence literal(const GroundLiteral& literal);

  Kind kind() const { return kind_; }
  const AtomPattern& atom_pattern() const { return atom_; }
  const Term& lhs() const { return atom_.args.at(0); }
  const Term& rhs() const { return atom_.args.at(1); }
  const std::vector<Sentence>& children() const { return children_; }
  const Sentence& child(std::size_t i = 0) const { return children_.at(i); }
  const std::string& variable() const { return variable_; }
  const std::string& sort() const { return sort_; }

  friend bool operator==(const Sentence&, const Sentence&) = default;
  friend auto operator<=>(const Sentence& a, const Sentence& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.atom_ <=> b.atom_; c != 0) return c;
    if (auto c = a.variable_ <=> b.variable_; c != 0) return c;
    if (auto c = a.sort_ <=> b.sort_; c != 0) return c;
    return a.children_ <=> b.children_;
  }

 private:
  Kind kind_;
  AtomPattern atom_;  // Atom: the atom; Equal: predicate empty, two args
  std::vector<Sentence> children_;
  std::string variable_;
  std::string sort_;
};

// Concrete syntax: ~ & | -> forall X:sort exists X:sort, true/false for
// the empty conjunction/disjunction.
std::string to_string(const Sentence& s);

}  // namespace kbd
