#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kbd/error.hpp"
#include "kbd/knowledge_base.hpp"
#include "kbd/program.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

// `#sort name = c1, c2.`
struct SortStatement {
  std::string name;
  std::vector<std::string> constants;
  friend bool operator==(const SortStatement&, const SortStatement&) = default;
};

// `#abducible p(s1, s2).` or `#predicate p(s1).`
struct PredicateStatement {
  std::string name;
  std::vector<std::string> sorts;
  bool abducible = false;
  friend bool operator==(const PredicateStatement&, const PredicateStatement&) = default;
};

// `rule [X:s] h(X) <- b(X), not c(X).` The bracketed sort annotations are
// optional; unannotated variable sorts are inferred from argument positions.
struct RuleStatement {
  std::vector<VariableDecl> annotations;
  AtomPattern head;
  std::vector<LiteralPattern> body;
  friend bool operator==(const RuleStatement&, const RuleStatement&) = default;
};

// `ic <sentence>.` or the denial form `ic [X:s] <- b(X), not c(X).`
struct ConstraintStatement {
  bool denial = false;
  Sentence sentence;
  std::vector<VariableDecl> annotations;
  std::vector<LiteralPattern> body;
  friend bool operator==(const ConstraintStatement&, const ConstraintStatement&) = default;
};

// `know <sentence>.`
struct KnowledgeStatement {
  Sentence sentence;
  friend bool operator==(const KnowledgeStatement&, const KnowledgeStatement&) = default;
};

struct Statement {
  std::variant<SortStatement, PredicateStatement, RuleStatement, ConstraintStatement,
               KnowledgeStatement>
      body;
  SourceLocation location;

  // Locations do not take part in equality.
  friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct KbDocument {
  std::vector<Statement> statements;
  friend bool operator==(const KbDocument&, const KbDocument&) = default;
};

// Syntax only; throws SyntaxError with line and column.
KbDocument parse_document(std::string_view text);
Sentence parse_sentence(std::string_view text);

// One statement per line, canonical spacing.
std::string print_document(const KbDocument& doc);

// Builds and validates the framework. Every validation failure is reported
// as a SyntaxError located at the offending statement, with the underlying
// ErrorKind available through cause().
KnowledgeBase build_kb(const KbDocument& doc, unsigned max_atoms = kDefaultMaxAtoms);
KnowledgeBase parse_kb(std::string_view text, unsigned max_atoms = kDefaultMaxAtoms);

// Parses a sentence and checks it against the knowledge base signature.
Sentence parse_sentence_for(const KnowledgeBase& kb, std::string_view text);

}  // namespace kbd
