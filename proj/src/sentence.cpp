#include "kbd/sentence.hpp"

namespace kbd {

Sentence Sentence::atom(AtomPattern pattern) {
  Sentence s;
  s.kind_ = Kind::Atom;
  s.atom_ = std::move(pattern);
  return s;
}

Sentence Sentence::atom(const GroundAtom& atom) {
  AtomPattern p{atom.predicate, {}};
  for (const auto& a : atom.args) p.args.push_back(Term::constant(a));
  return Sentence::atom(std::move(p));
}

Sentence Sentence::equal(Term lhs, Term rhs) {
  Sentence s;
  s.kind_ = Kind::Equal;
  s.atom_.args = {std::move(lhs), std::move(rhs)};
  return s;
}

Sentence Sentence::negation(Sentence inner) {
  Sentence s;
  s.kind_ = Kind::Not;
  s.children_.push_back(std::move(inner));
  return s;
}

Sentence Sentence::conjunction(std::vector<Sentence> parts) {
  Sentence s;
  s.kind_ = Kind::And;
  s.children_ = std::move(parts);
  return s;
}

Sentence Sentence::disjunction(std::vector<Sentence> parts) {
  Sentence s;
  s.kind_ = Kind::Or;
  s.children_ = std::move(parts);
  return s;
}

Sentence Sentence::implies(Sentence premise, Sentence conclusion) {
  Sentence s;
  s.kind_ = Kind::Implies;
  s.children_.push_back(std::move(premise));
  s.children_.push_back(std::move(conclusion));
  return s;
}

Sentence Sentence::forall(std::string variable, std::string sort, Sentence body) {
  Sentence s;
  s.kind_ = Kind::Forall;
  s.variable_ = std::move(variable);
  s.sort_ = std::move(sort);
  s.children_.push_back(std::move(body));
  return s;
}

Sentence Sentence::exists(std::string variable, std::string sort, Sentence body) {
  Sentence s = forall(std::move(variable), std::move(sort), std::move(body));
  s.kind_ = Kind::Exists;
  return s;
}

Sentence Sentence::literal(const GroundLiteral& literal) {
  Sentence a = atom(literal.atom);
  return literal.positive ? a : negation(std::move(a));
}

namespace {

int precedence(const Sentence& s) {
  switch (s.kind()) {
    case Sentence::Kind::Forall:
    case Sentence::Kind::Exists: return 0;
    case Sentence::Kind::Implies: return 1;
    case Sentence::Kind::Or: return s.children().empty() ? 4 : 2;
    case Sentence::Kind::And: return s.children().empty() ? 4 : 3;
    default: return 4;
  }
}

void print(const Sentence& s, int context, std::string& out) {
  using K = Sentence::Kind;
  if ((s.kind() == K::And || s.kind() == K::Or) && s.children().size() == 1) {
    print(s.child(), context, out);
    return;
  }
  const bool parens = precedence(s) < context;
  if (parens) out += '(';
  switch (s.kind()) {
    case K::Atom: out += to_string(s.atom_pattern()); break;
    case K::Equal: out += s.lhs().name + " = " + s.rhs().name; break;
    case K::Not:
      out += '~';
      print(s.child(), 4, out);
      break;
    case K::And:
    case K::Or: {
      if (s.children().empty()) {
        out += s.kind() == K::And ? "true" : "false";
        break;
      }
      const char* sep = s.kind() == K::And ? " & " : " | ";
      const int inner = s.kind() == K::And ? 4 : 3;
      for (std::size_t i = 0; i < s.children().size(); ++i) {
        if (i > 0) out += sep;
        print(s.children()[i], inner, out);
      }
      break;
    }
    case K::Implies:
      print(s.child(0), 2, out);
      out += " -> ";
      print(s.child(1), 1, out);
      break;
    case K::Forall:
    case K::Exists:
      out += s.kind() == K::Forall ? "forall " : "exists ";
      out += s.variable() + ":" + s.sort() + " ";
      print(s.child(), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Sentence& s) {
  std::string out;
  print(s, 0, out);
  return out;
}

}  // namespace kbd
