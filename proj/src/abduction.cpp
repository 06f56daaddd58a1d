#include "kbd/abduction.hpp"

#include <algorithm>

#include "kbd/error.hpp"

namespace kbd {

namespace {

struct Cube {
  std::uint32_t mask = 0;
  std::uint32_t values = 0;
};

Cube to_cube(const GroundProgram& program, const std::vector<GroundLiteral>& literals,
             bool& consistent) {
  Cube c;
  consistent = true;
  for (const auto& lit : literals) {
    const AtomId id = program.id_of(lit.atom);
    const int bit = program.abducible_bit(id);
    if (bit < 0) {
      throw Error(ErrorKind::NonAbducibleLiteral,
                  "literal '" + to_string(lit) + "' is not over an abducible atom");
    }
    const std::uint32_t b = std::uint32_t{1} << bit;
    const std::uint32_t v = lit.positive ? b : 0;
    if ((c.mask & b) != 0 && (c.values & b) != v) consistent = false;
    c.mask |= b;
    c.values |= v;
  }
  return c;
}

Explanation from_cube(const GroundProgram& program, Cube c) {
  Explanation e;
  for (std::size_t b = 0; b < program.abducible_count(); ++b) {
    if ((c.mask >> b) & 1U) {
      e.literals.push_back({program.atom(program.abducibles()[b]), ((c.values >> b) & 1U) != 0});
    }
  }
  return e;
}

// Every completion of the cube lies in `target`.
bool cube_within(const ModelSet& target, Cube c) {
  const auto full = static_cast<std::uint32_t>(target.space_size() - 1);
  const std::uint32_t free = full & ~c.mask;
  std::uint32_t x = 0;
  do {
    if (!target.contains({c.values | x})) return false;
    x = (x - free) & free;
  } while (x != 0);
  return true;
}

bool cube_meets(const ModelSet& target, Cube c) {
  const auto full = static_cast<std::uint32_t>(target.space_size() - 1);
  const std::uint32_t free = full & ~c.mask;
  std::uint32_t x = 0;
  do {
    if (target.contains({c.values | x})) return true;
    x = (x - free) & free;
  } while (x != 0);
  return false;
}

std::vector<Sentence> unit_sentences(const Explanation& delta) {
  std::vector<Sentence> out;
  for (const auto& lit : delta.literals) out.push_back(Sentence::literal(lit));
  return out;
}

bool member(const std::vector<Sentence>& set, const Sentence& s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

std::vector<Sentence> disjuncts(const Sentence& s) {
  if (s.kind() == Sentence::Kind::Or && !s.children().empty()) return s.children();
  return {s};
}

}  // namespace

std::string to_string(const Explanation& delta) {
  std::string out = "{";
  for (std::size_t i = 0; i < delta.literals.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(delta.literals[i]);
  }
  return out + "}";
}

ModelSet explanation_models(const GroundProgram& program, const Explanation& delta) {
  bool consistent = true;
  const Cube c = to_cube(program, delta.literals, consistent);
  const auto n = static_cast<unsigned>(program.abducible_count());
  if (!consistent) return ModelSet(n);
  return ModelSet::cube(n, c.mask, c.values);
}

bool is_explanation(const KnowledgeBase& kb, const std::vector<GroundLiteral>& delta,
                    const Sentence& alpha) {
  bool consistent = true;
  const Cube c = to_cube(kb.program(), delta, consistent);
  if (!consistent) return false;
  if (!cube_meets(kb.constraint_models(), c)) return false;
  return cube_within(kb.models_of({alpha}), c);
}

ExplanationFamily minimal_explanations(const KnowledgeBase& kb, const Sentence& alpha,
                                       unsigned max_cardinality) {
  const ModelSet target = kb.models_of({alpha});
  const ModelSet admissible = kb.constraint_models();
  const unsigned n = kb.universe_size();
  const unsigned top = std::min(max_cardinality, n);

  ExplanationFamily family{alpha, {}, max_cardinality, max_cardinality >= n};
  std::vector<Cube> implicants;
  std::vector<Cube> found;

  auto dominated = [&](Cube c) {
    return std::any_of(implicants.begin(), implicants.end(), [&](Cube f) {
      return (f.mask & ~c.mask) == 0 && (c.values & f.mask) == f.values;
    });
  };

  for (unsigned k = 0; k <= top; ++k) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    // Gosper's hack over the k-element masks, starting at the smallest one.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
      const auto m = static_cast<std::uint32_t>(mask);
      std::uint32_t v = 0;
      do {
        const Cube c{m, v};
        if (!dominated(c) && cube_within(target, c)) {
          implicants.push_back(c);
          if (cube_meets(admissible, c)) found.push_back(c);
        }
        v = (v - m) & m;
      } while (v != 0);
      if (mask == 0) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }

  for (Cube c : found) family.members.push_back(from_cube(kb.program(), c));
  std::sort(family.members.begin(), family.members.end(),
            [](const Explanation& a, const Explanation& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.literals < b.literals;
            });
  return family;
}

std::vector<Sentence> disjoin(const std::vector<Sentence>& s1, const std::vector<Sentence>& s2) {
  std::vector<Sentence> out;
  std::vector<Sentence> only1;
  std::vector<Sentence> only2;
  for (const auto& x : s1) {
    if (member(s2, x)) {
      if (!member(out, x)) out.push_back(x);
    } else if (!member(only1, x)) {
      only1.push_back(x);
    }
  }
  for (const auto& y : s2) {
    if (!member(s1, y) && !member(only2, y)) only2.push_back(y);
  }
  for (const auto& x : only1) {
    for (const auto& y : only2) {
      std::vector<Sentence> parts = disjuncts(x);
      for (auto& d : disjuncts(y)) parts.push_back(std::move(d));
      Sentence combined = Sentence::disjunction(std::move(parts));
      if (!member(out, combined)) out.push_back(std::move(combined));
    }
  }
  return out;
}

std::vector<Sentence> disjoin(const Explanation& d1, const Explanation& d2) {
  return disjoin(unit_sentences(d1), unit_sentences(d2));
}

std::vector<Sentence> disjoin_all(const ExplanationFamily& family) {
  if (family.members.empty()) {
    throw Error(ErrorKind::EmptyFamily, "cannot disjoin an empty explanation family");
  }
  std::vector<Sentence> acc = unit_sentences(family.members.front());
  for (std::size_t i = 1; i < family.members.size(); ++i) {
    acc = disjoin(acc, unit_sentences(family.members[i]));
  }
  return acc;
}

ModelSet family_models(const GroundProgram& program, const ExplanationFamily& family) {
  ModelSet out(static_cast<unsigned>(program.abducible_count()));
  for (const auto& m : family.members) out |= explanation_models(program, m);
  return out;
}

std::vector<Explanation> irredundant_cover(const KnowledgeBase& kb, const ExplanationFamily& family,
                                           const FaithfulRanking& order) {
  const ModelSet minimizers = order.minimal(kb.models_with_constraints(family.target));
  std::vector<Explanation> cover = family.members;
  std::vector<ModelSet> cubes;
  for (const auto& m : cover) cubes.push_back(explanation_models(kb.program(), m));

  std::size_t i = 0;
  while (i < cover.size()) {
    ModelSet rest(kb.universe_size());
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (j != i) rest |= cubes[j];
    }
    if (minimizers.subset_of(rest)) {
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
      cubes.erase(cubes.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return cover;
}

BeliefState revise_via_explanations(const KnowledgeBase& kb, const Sentence& alpha,
                                    unsigned max_cardinality) {
  if (!rejected(kb, alpha)) {
    throw Error(ErrorKind::PreconditionNotRejected,
                "'" + to_string(alpha) + "' is not rejected by the knowledge base");
  }
  const ExplanationFamily family = minimal_explanations(kb, alpha, max_cardinality);
  if (family.members.empty()) {
    throw Error(ErrorKind::NoExplanation, "'" + to_string(alpha) + "' has no explanation");
  }
  const ModelSet candidates = family_models(kb.program(), family) & kb.constraint_models();
  return {dalal_ranking(kb).minimal(candidates)};
}

}  // namespace kbd
