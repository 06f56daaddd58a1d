#include "kbd/semantics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kbd/error.hpp"

namespace kbd {

// ---- ModelSet ----

ModelSet::ModelSet(unsigned universe_size) : n_(universe_size) {
  if (n_ > kHardMaxAtoms) {
    throw Error(ErrorKind::UniverseTooLarge,
                std::to_string(n_) + " abducible atoms exceed the hard limit of " +
                    std::to_string(kHardMaxAtoms));
  }
  words_.assign(static_cast<std::size_t>((space_size() + 63) / 64), 0);
}

ModelSet ModelSet::all(unsigned universe_size) {
  ModelSet s(universe_size);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.mask_tail();
  return s;
}

ModelSet ModelSet::of(unsigned universe_size, std::initializer_list<std::uint32_t> members) {
  ModelSet s(universe_size);
  for (auto m : members) s.insert({m});
  return s;
}

ModelSet ModelSet::cube(unsigned universe_size, std::uint32_t mask, std::uint32_t values) {
  ModelSet s(universe_size);
  const std::uint32_t full = static_cast<std::uint32_t>(s.space_size() - 1);
  const std::uint32_t free = full & ~mask;
  values &= mask;
  std::uint32_t x = 0;
  do {
    s.insert({values | x});
    x = (x - free) & free;
  } while (x != 0);
  return s;
}

void ModelSet::mask_tail() {
  const std::uint64_t bits = space_size();
  if (bits % 64 != 0) words_.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
}

std::size_t ModelSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total;
}

bool ModelSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ModelSet::subset_of(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<AbductiveInterpretation> ModelSet::members() const {
  std::vector<AbductiveInterpretation> out;
  for_each([&](AbductiveInterpretation i) { out.push_back(i); });
  return out;
}

ModelSet ModelSet::complement() const {
  ModelSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.mask_tail();
  return s;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_.at(i);
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_.at(i);
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_.at(i);
  return *this;
}

// ---- compilation ----

namespace {

Formula constant(bool v) { return Formula{Formula::Op::Const, v, 0, {}}; }

Error ill_sorted(const std::string& msg) { return Error(ErrorKind::IllSortedSentence, msg); }

struct Binding {
  std::string constant;
  std::string sort;
};

class Compiler {
 public:
  explicit Compiler(const GroundProgram& gp) : gp_(gp), sig_(gp.signature()) {}

  Formula run(const Sentence& s) { return compile(s); }

 private:
  using K = Sentence::Kind;

  // Returns (constant, sort) for a term under the current bindings.
  Binding resolve(const Term& t) {
    if (t.is_variable()) {
      auto it = env_.find(t.name);
      if (it == env_.end() || it->second.empty()) {
        throw ill_sorted("free variable '" + t.name + "'");
      }
      return it->second.back();
    }
    auto sort = sig_.sort_of(t.name);
    if (!sort) throw ill_sorted("unknown constant '" + t.name + "'");
    return {t.name, *sort};
  }

  Formula compile(const Sentence& s) {
    switch (s.kind()) {
      case K::Atom: {
        const auto& p = s.atom_pattern();
        const auto* pred = sig_.find_predicate(p.predicate);
        if (pred == nullptr) throw ill_sorted("unknown predicate '" + p.predicate + "'");
        if (pred->arg_sorts.size() != p.args.size()) {
          throw ill_sorted("predicate '" + p.predicate + "' expects " +
                           std::to_string(pred->arg_sorts.size()) + " arguments");
        }
        GroundAtom ga{p.predicate, {}};
        for (std::size_t i = 0; i < p.args.size(); ++i) {
          auto b = resolve(p.args[i]);
          if (b.sort != pred->arg_sorts[i]) {
            throw ill_sorted("argument " + std::to_string(i + 1) + " of '" + p.predicate +
                             "' must be of sort '" + pred->arg_sorts[i] + "', got '" +
                             b.sort + "'");
          }
          ga.args.push_back(std::move(b.constant));
        }
        return Formula{Formula::Op::Atom, false, gp_.id_of(ga), {}};
      }
      case K::Equal:
        return constant(resolve(s.lhs()).constant == resolve(s.rhs()).constant);
      case K::Not: {
        Formula inner = compile(s.child());
        if (inner.op == Formula::Op::Const) return constant(!inner.value);
        return Formula{Formula::Op::Not, false, 0, {std::move(inner)}};
      }
      case K::And:
      case K::Or: {
        std::vector<Formula> parts;
        for (const auto& c : s.children()) parts.push_back(compile(c));
        return junction(s.kind() == K::And, std::move(parts));
      }
      case K::Implies: {
        Formula premise = compile(s.child(0));
        Formula negated = premise.op == Formula::Op::Const
                              ? constant(!premise.value)
                              : Formula{Formula::Op::Not, false, 0, {std::move(premise)}};
        std::vector<Formula> parts;
        parts.push_back(std::move(negated));
        parts.push_back(compile(s.child(1)));
        return junction(false, std::move(parts));
      }
      case K::Forall:
      case K::Exists: {
        const auto* sort = sig_.find_sort(s.sort());
        if (sort == nullptr) throw ill_sorted("unknown sort '" + s.sort() + "'");
        std::vector<Formula> parts;
        auto& stack = env_[s.variable()];
        for (const auto& c : sort->constants) {
          stack.push_back({c, sort->name});
          parts.push_back(compile(s.child()));
          stack.pop_back();
        }
        return junction(s.kind() == K::Forall, std::move(parts));
      }
    }
    throw std::logic_error("unreachable sentence kind");
  }

  static Formula junction(bool is_and, std::vector<Formula> parts) {
    std::vector<Formula> kept;
    for (auto& p : parts) {
      if (p.op == Formula::Op::Const) {
        if (p.value != is_and) return constant(!is_and);
        continue;
      }
      kept.push_back(std::move(p));
    }
    if (kept.empty()) return constant(is_and);
    if (kept.size() == 1) return std::move(kept.front());
    return Formula{is_and ? Formula::Op::And : Formula::Op::Or, false, 0, std::move(kept)};
  }

  const GroundProgram& gp_;
  const Signature& sig_;
  std::map<std::string, std::vector<Binding>> env_;
};

void collect_atoms(const Formula& f, std::vector<AtomId>& out) {
  if (f.op == Formula::Op::Atom) out.push_back(f.atom);
  for (const auto& c : f.children) collect_atoms(c, out);
}

void check_universe(const GroundProgram& program, unsigned max_atoms) {
  const auto n = program.abducible_count();
  const unsigned cap = std::min(max_atoms, kHardMaxAtoms);
  if (n > cap) {
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(n) +
                                                 " abducible atoms exceed the enumeration cap of " +
                                                 std::to_string(cap));
  }
}

}  // namespace

Formula compile(const GroundProgram& program, const Sentence& sentence) {
  return Compiler(program).run(sentence);
}

std::vector<AtomId> formula_atoms(const Formula& formula) {
  std::vector<AtomId> out;
  collect_atoms(formula, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- evaluation ----

Evaluator::Evaluator(const GroundProgram& program)
    : program_(&program), seen_(program.atom_count(), 0), value_(program.atom_count(), 0) {
  if (!program.has_levels()) throw std::logic_error("program levels have not been computed");
}

void Evaluator::reset(AbductiveInterpretation interpretation) {
  current_ = interpretation;
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
}

bool Evaluator::atom(AtomId id) {
  const int bit = program_->abducible_bit(id);
  if (bit >= 0) return current_.contains(static_cast<unsigned>(bit));
  if (seen_[id] == stamp_) return value_[id] != 0;
  bool result = false;
  for (std::size_t r : program_->rules_for(id)) {
    const auto& rule = program_->rules()[r];
    bool body = true;
    for (AtomId b : rule.positive) {
      if (!atom(b)) {
        body = false;
        break;
      }
    }
    if (body) {
      for (AtomId c : rule.negative) {
        if (atom(c)) {
          body = false;
          break;
        }
      }
    }
    if (body) {
      result = true;
      break;
    }
  }
  seen_[id] = stamp_;
  value_[id] = result ? 1 : 0;
  return result;
}

bool Evaluator::formula(const Formula& f) {
  switch (f.op) {
    case Formula::Op::Const: return f.value;
    case Formula::Op::Atom: return atom(f.atom);
    case Formula::Op::Not: return !formula(f.children.front());
    case Formula::Op::And:
      for (const auto& c : f.children) {
        if (!formula(c)) return false;
      }
      return true;
    case Formula::Op::Or:
      for (const auto& c : f.children) {
        if (formula(c)) return true;
      }
      return false;
  }
  return false;
}

bool eval_atom(const GroundProgram& program, AbductiveInterpretation i, const GroundAtom& atom) {
  const AtomId id = program.id_of(atom);
  Evaluator e(program);
  e.reset(i);
  return e.atom(id);
}

bool eval_sentence(const GroundProgram& program, AbductiveInterpretation i, const Sentence& s) {
  const Formula f = compile(program, s);
  Evaluator e(program);
  e.reset(i);
  return e.formula(f);
}

ModelSet models(const GroundProgram& program, const std::vector<Sentence>& sentences,
                unsigned max_atoms) {
  check_universe(program, max_atoms);
  std::vector<Formula> parts;
  for (const auto& s : sentences) parts.push_back(compile(program, s));
  const auto n = static_cast<unsigned>(program.abducible_count());
  ModelSet out(n);
  Evaluator e(program);
  const std::uint64_t total = out.space_size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const AbductiveInterpretation i{static_cast<std::uint32_t>(bits)};
    e.reset(i);
    bool ok = true;
    for (const auto& f : parts) {
      if (!e.formula(f)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(i);
  }
  return out;
}

bool entails_p(const GroundProgram& program, const std::vector<Sentence>& knowledge,
               const Sentence& alpha, unsigned max_atoms) {
  return models(program, knowledge, max_atoms).subset_of(models(program, {alpha}, max_atoms));
}

bool p_consistent(const GroundProgram& program, const std::vector<Sentence>& knowledge,
                  unsigned max_atoms) {
  return !models(program, knowledge, max_atoms).empty();
}

bool p_equivalent(const GroundProgram& program, const Sentence& alpha, const Sentence& beta,
                  unsigned max_atoms) {
  return models(program, {alpha}, max_atoms) == models(program, {beta}, max_atoms);
}

AbductiveInterpretation interpretation_of(const GroundProgram& program,
                                          const std::vector<GroundAtom>& atoms) {
  AbductiveInterpretation i;
  for (const auto& a : atoms) {
    const AtomId id = program.id_of(a);
    const int bit = program.abducible_bit(id);
    if (bit < 0) {
      throw Error(ErrorKind::NonAbducibleLiteral, "'" + to_string(a) + "' is not abducible");
    }
    i.bits |= std::uint32_t{1} << bit;
  }
  return i;
}

std::vector<GroundAtom> atoms_of(const GroundProgram& program, AbductiveInterpretation i) {
  std::vector<GroundAtom> out;
  for (std::size_t b = 0; b < program.abducible_count(); ++b) {
    if (i.contains(static_cast<unsigned>(b))) out.push_back(program.atom(program.abducibles()[b]));
  }
  return out;
}

std::string to_string(const GroundProgram& program, AbductiveInterpretation i) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : atoms_of(program, i)) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

}  // namespace kbd
