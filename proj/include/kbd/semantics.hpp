#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "kbd/program.hpp"
#include "kbd/sentence.hpp"

namespace kbd {

inline constexpr unsigned kDefaultMaxAtoms = 24;
inline constexpr unsigned kHardMaxAtoms = 30;

// A set of abducible atoms; bit i stands for program.abducibles()[i].
struct AbductiveInterpretation {
  std::uint32_t bits = 0;

  bool contains(unsigned bit) const { return (bits >> bit) & 1U; }

  friend auto operator<=>(const AbductiveInterpretation&, const AbductiveInterpretation&) = default;
  friend bool operator==(const AbductiveInterpretation&, const AbductiveInterpretation&) = default;
};

// Dense bitset over all 2^n interpretations of n abducible atoms. Iteration
// order is the numeric order of the interpretation bit pattern.
class ModelSet {
 public:
  ModelSet() : ModelSet(0) {}
  explicit ModelSet(unsigned universe_size);

  static ModelSet all(unsigned universe_size);
  static ModelSet of(unsigned universe_size, std::initializer_list<std::uint32_t> members);
  // Interpretations matching the partial assignment `values` on `mask`.
  static ModelSet cube(unsigned universe_size, std::uint32_t mask, std::uint32_t values);

  unsigned universe_size() const { return n_; }
  std::uint64_t space_size() const { return std::uint64_t{1} << n_; }

  bool contains(AbductiveInterpretation i) const {
    return (words_[i.bits >> 6] >> (i.bits & 63U)) & 1U;
  }
  void insert(AbductiveInterpretation i) { words_[i.bits >> 6] |= std::uint64_t{1} << (i.bits & 63U); }
  void erase(AbductiveInterpretation i) { words_[i.bits >> 6] &= ~(std::uint64_t{1} << (i.bits & 63U)); }

  std::size_t size() const;
  bool empty() const;
  bool full() const { return size() == space_size(); }
  bool subset_of(const ModelSet& other) const;
  bool intersects(const ModelSet& other) const;
  std::vector<AbductiveInterpretation> members() const;

  template <class F>
  void for_each(F&& visit) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        visit(AbductiveInterpretation{static_cast<std::uint32_t>(w * 64 + bit)});
        word &= word - 1;
      }
    }
  }

  ModelSet complement() const;
  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }
  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  void mask_tail();

  unsigned n_;
  std::vector<std::uint64_t> words_;
};

// A sentence after quantifier expansion and equality folding: a
// propositional formula over ground atom ids.
struct Formula {
  enum class Op { Const, Atom, Not, And, Or };

  Op op = Op::Const;
  bool value = true;
  AtomId atom = 0;
  std::vector<Formula> children;
};

// Throws IllSortedSentence for unknown predicates/sorts/constants, wrong
// arity, argument sort mismatches and free variables.
Formula compile(const GroundProgram& program, const Sentence& sentence);

// Ground atom ids a compiled formula depends on directly.
std::vector<AtomId> formula_atoms(const Formula& formula);

// Level-inductive truth of atoms under one interpretation, memoized until
// the next reset().
class Evaluator {
 public:
  explicit Evaluator(const GroundProgram& program);

  void reset(AbductiveInterpretation interpretation);
  bool atom(AtomId id);
  bool formula(const Formula& f);

 private:
  const GroundProgram* program_;
  AbductiveInterpretation current_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> seen_;
  std::vector<char> value_;
};

bool eval_atom(const GroundProgram& program, AbductiveInterpretation i, const GroundAtom& atom);
bool eval_sentence(const GroundProgram& program, AbductiveInterpretation i, const Sentence& s);

// Mod(sentences) by enumeration of every subset of the abducible atoms.
ModelSet models(const GroundProgram& program, const std::vector<Sentence>& sentences,
                unsigned max_atoms = kDefaultMaxAtoms);

bool entails_p(const GroundProgram& program, const std::vector<Sentence>& knowledge,
               const Sentence& alpha, unsigned max_atoms = kDefaultMaxAtoms);
bool p_consistent(const GroundProgram& program, const std::vector<Sentence>& knowledge,
                  unsigned max_atoms = kDefaultMaxAtoms);
bool p_equivalent(const GroundProgram& program, const Sentence& alpha, const Sentence& beta,
                  unsigned max_atoms = kDefaultMaxAtoms);

AbductiveInterpretation interpretation_of(const GroundProgram& program,
                                          const std::vector<GroundAtom>& atoms);
std::vector<GroundAtom> atoms_of(const GroundProgram& program, AbductiveInterpretation i);
std::string to_string(const GroundProgram& program, AbductiveInterpretation i);

}  // namespace kbd
