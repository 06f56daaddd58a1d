#include <gtest/gtest.h>

#include <random>

#include "kbd/program.hpp"
#include "support.hpp"

using namespace kbd;

namespace {

Signature staff_signature() {
  Signature sig;
  sig.add_sort("person", {"delhibabu", "aravindan", "matthias", "gerhard"});
  sig.add_sort("group", {"infor1", "infor2"});
  sig.add_predicate("staff_group", {"person", "group"}, true);
  sig.add_predicate("group_chair", {"group", "person"}, true);
  sig.add_predicate("staff_chair", {"person", "person"}, false);
  return sig;
}

Term V(const char* n) { return Term::variable(n); }
Term C(const char* n) { return Term::constant(n); }

Rule staff_rule() {
  return Rule{{"staff_chair", {V("X"), V("Y")}},
              {{{"staff_group", {V("X"), V("Z")}}, true}, {{"group_chair", {V("Z"), V("Y")}}, true}},
              {{"X", "person"}, {"Y", "person"}, {"Z", "group"}}};
}

Signature props(std::initializer_list<const char*> abducible, std::initializer_list<const char*> derived) {
  Signature sig;
  for (const char* a : abducible) sig.add_predicate(a, {}, true);
  for (const char* d : derived) sig.add_predicate(d, {}, false);
  return sig;
}

Rule prop_rule(const char* head, std::initializer_list<std::pair<const char*, bool>> body) {
  Rule r{{head, {}}, {}, {}};
  for (auto [name, positive] : body) r.body.push_back({{name, {}}, positive});
  return r;
}

}  // namespace

TEST(Signature, RejectsOverlappingAndEmptySorts) {
  Signature sig;
  sig.add_sort("s", {"x", "y"});
  EXPECT_THROW(sig.add_sort("t", {"y"}), Error);
  EXPECT_THROW(sig.add_sort("u", {}), Error);
  EXPECT_THROW(sig.add_sort("s", {"z"}), Error);
  EXPECT_THROW(sig.add_predicate("p", {"nope"}, false), Error);
}

TEST(Ground, StaffRuleHas32Instances) {
  const GroundProgram gp = ground(staff_signature(), {staff_rule()});
  EXPECT_EQ(gp.rules().size(), 32U);
  EXPECT_EQ(gp.abducible_count(), 16U);
  EXPECT_EQ(gp.atom_count(), 32U);
}

TEST(Ground, EmptyAndVariableFree) {
  const GroundProgram empty = ground(Signature{}, {});
  EXPECT_EQ(empty.rules().size(), 0U);
  EXPECT_EQ(empty.atom_count(), 0U);

  Rule fixed{{"staff_chair", {C("delhibabu"), C("matthias")}},
             {{{"staff_group", {C("delhibabu"), C("infor1")}}, true},
              {{"group_chair", {C("infor1"), C("matthias")}}, true}},
             {}};
  const GroundProgram gp = ground(staff_signature(), {fixed});
  ASSERT_EQ(gp.rules().size(), 1U);
  const GroundRule& r = gp.rules().front();
  EXPECT_EQ(gp.atom(r.head), (GroundAtom{"staff_chair", {"delhibabu", "matthias"}}));
  EXPECT_EQ(r.positive.size(), 2U);
}

TEST(Ground, OrderIsByHeadThenBody) {
  const GroundProgram gp = ground(staff_signature(), {staff_rule()});
  for (std::size_t i = 1; i < gp.rules().size(); ++i) EXPECT_LT(gp.rules()[i - 1], gp.rules()[i]);
}

TEST(Ground, ValidationErrorsNameTheRule) {
  auto kind_of = [](const Rule& r) {
    try {
      ground(staff_signature(), {r});
    } catch (const Error& e) {
      EXPECT_NE(std::string(e.what()).find("staff_chair"), std::string::npos);
      return e.kind();
    }
    return ErrorKind::Syntax;
  };
  Rule r = staff_rule();
  r.variables[2].sort = "building";
  EXPECT_EQ(kind_of(r), ErrorKind::UnknownSort);
  r = staff_rule();
  r.body.push_back({{"manages", {V("X")}}, true});
  EXPECT_EQ(kind_of(r), ErrorKind::UnknownPredicate);
  r = staff_rule();
  r.body[0].atom.args.pop_back();
  EXPECT_EQ(kind_of(r), ErrorKind::ArityMismatch);
  r = staff_rule();
  r.variables[2].sort = "person";
  EXPECT_EQ(kind_of(r), ErrorKind::SortMismatch);
}

TEST(Levels, StaffLayers) {
  const GroundProgram gp = compute_levels(ground(staff_signature(), {staff_rule()}));
  for (AtomId id = 0; id < gp.atom_count(); ++id) {
    EXPECT_EQ(gp.level(id), gp.is_abducible(id) ? 0U : 1U) << to_string(gp.atom(id));
  }
}

TEST(Levels, TwoCycleIsRejected) {
  const Signature sig = props({}, {"p", "q"});
  try {
    compute_levels(ground(sig, {prop_rule("p", {{"q", true}}), prop_rule("q", {{"p", true}})}));
    FAIL() << "expected a cycle";
  } catch (const CycleError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CyclicProgram);
    ASSERT_GE(e.cycle().size(), 3U);
    EXPECT_EQ(e.cycle().front(), e.cycle().back());
  }
}

TEST(Levels, LongestPathChain) {
  const Signature sig = props({"a"}, {"p", "q", "r"});
  const GroundProgram gp = compute_levels(
      ground(sig, {prop_rule("p", {{"a", true}}), prop_rule("q", {{"p", true}}),
                   prop_rule("r", {{"p", true}, {"q", false}})}));
  EXPECT_EQ(gp.level(gp.id_of({"a", {}})), 0U);
  EXPECT_EQ(gp.level(gp.id_of({"p", {}})), 1U);
  EXPECT_EQ(gp.level(gp.id_of({"q", {}})), 2U);
  EXPECT_EQ(gp.level(gp.id_of({"r", {}})), 3U);
}

TEST(Levels, AbducibleHeadAndUndefinedAtoms) {
  const Signature sig = props({"a"}, {"u"});
  EXPECT_THROW(
      {
        try {
          compute_levels(ground(sig, {prop_rule("a", {})}));
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::AbducibleInHead);
          throw;
        }
      },
      Error);
  const GroundProgram gp = compute_levels(ground(sig, {}));
  EXPECT_EQ(gp.level(gp.id_of({"u", {}})), 1U);
}

// Levels by Bellman-Ford style relaxation, independent of the DFS.
TEST(Levels, MatchRelaxationOracleOnRandomPrograms) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const KnowledgeBase kb = parse_kb(test::random_program(rng, 3, 6));
    const GroundProgram& gp = kb.program();
    std::vector<unsigned> oracle(gp.atom_count(), 0);
    for (AtomId id = 0; id < gp.atom_count(); ++id) oracle[id] = gp.is_abducible(id) ? 0 : 1;
    for (std::size_t pass = 0; pass <= gp.atom_count(); ++pass) {
      for (const auto& r : gp.rules()) {
        for (const auto* body : {&r.positive, &r.negative}) {
          for (AtomId b : *body) oracle[r.head] = std::max(oracle[r.head], oracle[b] + 1);
        }
      }
    }
    EXPECT_EQ(gp.levels(), oracle);
    for (const auto& r : gp.rules()) {
      for (const auto* body : {&r.positive, &r.negative}) {
        for (AtomId b : *body) EXPECT_GT(gp.level(r.head), gp.level(b));
      }
    }
    EXPECT_EQ(compute_levels(gp).levels(), gp.levels());
  }
}

TEST(HeadsAndFacts, Cases) {
  const auto [heads, facts] = heads_and_facts(ground(staff_signature(), {staff_rule()}));
  EXPECT_EQ(heads.size(), 16U);
  EXPECT_TRUE(facts.empty());

  const Signature sig = props({}, {"h"});
  const auto [h2, f2] = heads_and_facts(ground(sig, {prop_rule("h", {})}));
  EXPECT_EQ(h2, (std::set<GroundAtom>{{"h", {}}}));
  EXPECT_EQ(f2, h2);

  const auto [h3, f3] = heads_and_facts(ground(Signature{}, {}));
  EXPECT_TRUE(h3.empty());
  EXPECT_TRUE(f3.empty());
}

TEST(HeadsAndFacts, FactsAreHeads) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const KnowledgeBase kb = parse_kb(test::random_program(rng, 2, 5));
    const auto [heads, facts] = heads_and_facts(kb.program());
    for (const auto& f : facts) EXPECT_TRUE(heads.count(f));
  }
}

TEST(Literals, ConsistencyMatchesDefinition) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> atom(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int round = 0; round < 500; ++round) {
    std::vector<GroundLiteral> lits;
    for (int k = 0; k < 4; ++k) lits.push_back({{"p", {std::to_string(atom(rng))}}, coin(rng) == 1});
    const auto pos = positive_part(lits);
    std::set<GroundAtom> neg_atoms;
    for (const auto& l : negative_part(lits)) neg_atoms.insert(l.atom);
    bool disjoint = true;
    for (const auto& l : pos) disjoint = disjoint && !neg_atoms.count(l.atom);
    EXPECT_EQ(is_consistent(lits), disjoint);
    EXPECT_LE(atoms_of(lits).size(), lits.size());
  }
}
