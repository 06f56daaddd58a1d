#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kbd/error.hpp"
#include "kbd/signature.hpp"

namespace kbd {

// Variables start with an upper-case letter, constants do not. The
// distinction is carried explicitly so that programmatic construction does
// not depend on spelling.
struct Term {
  enum class Kind { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  static Term variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct AtomPattern {
  std::string predicate;
  std::vector<Term> args;

  friend auto operator<=>(const AtomPattern&, const AtomPattern&) = default;
  friend bool operator==(const AtomPattern&, const AtomPattern&) = default;
};

struct LiteralPattern {
  AtomPattern atom;
  bool positive = true;

  friend auto operator<=>(const LiteralPattern&, const LiteralPattern&) = default;
  friend bool operator==(const LiteralPattern&, const LiteralPattern&) = default;
};

struct VariableDecl {
  std::string name;
  std::string sort;

  friend auto operator<=>(const VariableDecl&, const VariableDecl&) = default;
  friend bool operator==(const VariableDecl&, const VariableDecl&) = default;
};

// H <- B1, ..., Bn, not C1, ..., not Cm, standing for all ground instances
// over the declared variable sorts. An empty body is a fact.
struct Rule {
  AtomPattern head;
  std::vector<LiteralPattern> body;
  std::vector<VariableDecl> variables;

  friend bool operator==(const Rule&, const Rule&) = default;
};

std::string to_string(const Term& term);
std::string to_string(const AtomPattern& atom);
std::string to_string(const Rule& rule);

using AtomId = std::uint32_t;

struct GroundRule {
  AtomId head = 0;
  std::vector<AtomId> positive;
  std::vector<AtomId> negative;

  friend auto operator<=>(const GroundRule&, const GroundRule&) = default;
  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

// The ground instantiation of a program over the full (finite) Herbrand
// base of its signature. Atom ids follow the lexicographic order of
// GroundAtom; abducible atoms get dense bit positions in the same order.
class GroundProgram {
 public:
  GroundProgram() = default;

  const Signature& signature() const { return signature_; }

  std::size_t atom_count() const { return atoms_.size(); }
  const GroundAtom& atom(AtomId id) const { return atoms_.at(id); }
  const std::vector<GroundAtom>& atoms() const { return atoms_; }
  std::optional<AtomId> find(const GroundAtom& atom) const;
  AtomId id_of(const GroundAtom& atom) const;  // throws UnknownAtom

  const std::vector<GroundRule>& rules() const { return rules_; }
  const std::vector<std::size_t>& rules_for(AtomId head) const { return by_head_.at(head); }

  bool is_abducible(AtomId id) const { return abducible_bit_.at(id) >= 0; }
  int abducible_bit(AtomId id) const { return abducible_bit_.at(id); }
  const std::vector<AtomId>& abducibles() const { return abducibles_; }
  std::size_t abducible_count() const { return abducibles_.size(); }

  bool has_levels() const { return levels_.has_value(); }
  unsigned level(AtomId id) const { return levels_.value().at(id); }
  const std::vector<unsigned>& levels() const { return levels_.value(); }

 private:
  friend GroundProgram ground(const Signature&, const std::vector<Rule>&);
  friend GroundProgram compute_levels(const GroundProgram&);

  Signature signature_;
  std::vector<GroundAtom> atoms_;
  std::map<GroundAtom, AtomId> index_;
  std::vector<GroundRule> rules_;
  std::vector<std::vector<std::size_t>> by_head_;
  std::vector<int> abducible_bit_;
  std::vector<AtomId> abducibles_;
  std::optional<std::vector<unsigned>> levels_;
};

// CyclicProgram error carrying one dependency cycle, first atom repeated
// at the end.
class CycleError : public Error {
 public:
  CycleError(std::vector<GroundAtom> cycle, const std::string& what)
      : Error(ErrorKind::CyclicProgram, what), cycle_(std::move(cycle)) {}

  const std::vector<GroundAtom>& cycle() const { return cycle_; }

 private:
  std::vector<GroundAtom> cycle_;
};

// Every ground instance of every rule, sorted by head id then body and
// deduplicated. Levels are left unset.
GroundProgram ground(const Signature& signature, const std::vector<Rule>& rules);

// Minimal level mapping: abducibles at 0, every other atom at
// max(1, 1 + max level of the body atoms of its rules).
GroundProgram compute_levels(const GroundProgram& program);

// (heads(P), facts(P)); facts are heads of rules with an empty body.
std::pair<std::set<GroundAtom>, std::set<GroundAtom>> heads_and_facts(const GroundProgram& program);

}  // namespace kbd
