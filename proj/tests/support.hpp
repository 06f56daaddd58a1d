#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kbd/belief_change.hpp"
#include "kbd/parser.hpp"
#include "kbd/semantics.hpp"

namespace kbd::test {

inline std::string read_example(const std::string& name) {
  std::ifstream in(std::string(KBD_EXAMPLES_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Propositional header with zero-arity abducibles a, b, c, ... .
inline std::string letters(unsigned n) {
  std::string out;
  for (unsigned i = 0; i < n; ++i) out += "#abducible " + std::string(1, static_cast<char>('a' + i)) + ".\n";
  return out;
}

inline KnowledgeBase prop_kb(unsigned n, const std::vector<std::string>& knowledge,
                             const std::vector<std::string>& constraints = {}) {
  std::string text = letters(n);
  for (const auto& ic : constraints) text += "ic " + ic + ".\n";
  for (const auto& k : knowledge) text += "know " + k + ".\n";
  return parse_kb(text);
}

inline Sentence S(const std::string& text) { return parse_sentence(text); }

inline std::uint32_t bits_of(const GroundProgram& p, const std::vector<std::string>& names) {
  std::vector<GroundAtom> atoms;
  for (const auto& n : names) atoms.push_back({n, {}});
  return interpretation_of(p, atoms).bits;
}

// Classical truth of a quantifier-free sentence with every atom read as an
// independent proposition.
inline bool classical(const Sentence& s, const std::map<std::string, bool>& v) {
  switch (s.kind()) {
    case Sentence::Kind::Atom: return v.at(s.atom_pattern().predicate);
    case Sentence::Kind::Equal: return s.lhs().name == s.rhs().name;
    case Sentence::Kind::Not: return !classical(s.child(), v);
    case Sentence::Kind::And:
      for (const auto& c : s.children()) {
        if (!classical(c, v)) return false;
      }
      return true;
    case Sentence::Kind::Or:
      for (const auto& c : s.children()) {
        if (classical(c, v)) return true;
      }
      return false;
    case Sentence::Kind::Implies: return !classical(s.child(0), v) || classical(s.child(1), v);
    default: throw std::logic_error("quantifier in classical oracle");
  }
}

// Random quantifier-free sentence over the given zero-arity atom names.
inline Sentence random_sentence(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth) {
  std::uniform_int_distribution<int> op(0, depth <= 0 ? 0 : 4);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  switch (op(rng)) {
    case 0: return Sentence::atom(GroundAtom{atoms[pick(rng)], {}});
    case 1: return Sentence::negation(random_sentence(rng, atoms, depth - 1));
    case 2:
      return Sentence::conjunction({random_sentence(rng, atoms, depth - 1), random_sentence(rng, atoms, depth - 1)});
    case 3:
      return Sentence::disjunction({random_sentence(rng, atoms, depth - 1), random_sentence(rng, atoms, depth - 1)});
    default:
      return Sentence::implies(random_sentence(rng, atoms, depth - 1), random_sentence(rng, atoms, depth - 1));
  }
}

// Random acyclic propositional program: abducibles a0..a{n-1}, derived
// atoms p0..p{m-1} where p_i only uses abducibles and p_j with j < i.
inline std::string random_program(std::mt19937_64& rng, unsigned n, unsigned m) {
  std::string text;
  for (unsigned i = 0; i < n; ++i) text += "#abducible a" + std::to_string(i) + ".\n";
  for (unsigned i = 0; i < m; ++i) text += "#predicate p" + std::to_string(i) + ".\n";
  std::uniform_int_distribution<int> rules(0, 2);
  std::uniform_int_distribution<int> body_len(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (unsigned i = 0; i < m; ++i) {
    const int count = rules(rng);
    for (int r = 0; r < count; ++r) {
      std::vector<std::string> body;
      const int len = body_len(rng);
      for (int k = 0; k < len; ++k) {
        std::uniform_int_distribution<unsigned> which(0, n + i - 1);
        const unsigned w = which(rng);
        std::string atom = w < n ? "a" + std::to_string(w) : "p" + std::to_string(w - n);
        body.push_back((coin(rng) != 0 ? "not " : "") + atom);
      }
      text += "rule p" + std::to_string(i);
      for (std::size_t k = 0; k < body.size(); ++k) text += (k == 0 ? " <- " : ", ") + body[k];
      text += ".\n";
    }
  }
  return text;
}

// Minimum Hamming distance from i to any member of ms, by direct scan.
inline unsigned hamming_oracle(const ModelSet& ms, std::uint32_t i) {
  unsigned best = 64;
  ms.for_each([&](AbductiveInterpretation m) {
    best = std::min(best, static_cast<unsigned>(__builtin_popcount(m.bits ^ i)));
  });
  return best;
}

}  // namespace kbd::test
