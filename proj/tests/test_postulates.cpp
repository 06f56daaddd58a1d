#include <gtest/gtest.h>

#include <algorithm>

#include "kbd/postulates.hpp"
#include "support.hpp"

using namespace kbd;
using test::S;

namespace {

ModelSet from_index(unsigned n, std::uint32_t idx) {
  ModelSet ms(n);
  for (std::uint32_t j = 0; j < (1U << n); ++j) {
    if ((idx >> j) & 1U) ms.insert({j});
  }
  return ms;
}

// Every (IC, K) pair over two atoms with a consistent IC.
std::vector<KnowledgeBase> all_kbs_two_atoms(bool empty_ic_only) {
  const KnowledgeBase base = test::prop_kb(2, {});
  const GroundProgram& p = base.program();
  std::vector<KnowledgeBase> out;
  for (std::uint32_t ic = 1; ic < 16; ++ic) {
    if (empty_ic_only && ic != 15) continue;
    for (std::uint32_t k = 0; k < 16; ++k) {
      std::vector<Sentence> ics;
      if (ic != 15) ics.push_back(synthesize_sentence(p, from_index(2, ic)));
      out.emplace_back(p, ics, std::vector<Sentence>{synthesize_sentence(p, from_index(2, k))});
    }
  }
  return out;
}

const LawReport& find(const std::vector<LawReport>& reports, const std::string& id) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const LawReport& r) { return r.law_id == id; });
  if (it == reports.end()) throw std::logic_error("missing law " + id);
  return *it;
}

using Suite = std::vector<LawReport> (*)(const KnowledgeBase&, const SentenceSpace&, const Operators&,
                                         const LawOptions&);

std::vector<LawReport> run_all(Suite suite, const std::vector<KnowledgeBase>& kbs, const Operators& ops) {
  std::vector<std::vector<LawReport>> runs;
  for (const auto& kb : kbs) runs.push_back(suite(kb, enumerate_sentence_space(kb), ops, {}));
  return merge_reports(runs);
}

}  // namespace

TEST(SentenceSpace, Sizes) {
  EXPECT_EQ(enumerate_sentence_space(test::prop_kb(0, {})).size(), 2U);
  EXPECT_EQ(enumerate_sentence_space(test::prop_kb(1, {})).size(), 4U);
  EXPECT_EQ(enumerate_sentence_space(test::prop_kb(2, {})).size(), 16U);
  EXPECT_EQ(enumerate_sentence_space(test::prop_kb(3, {})).size(), 256U);
  try {
    enumerate_sentence_space(test::prop_kb(5, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UniverseTooLarge);
  }
}

TEST(SentenceSpace, RepresentativesDenoteTheirIndex) {
  const KnowledgeBase kb = test::prop_kb(3, {});
  const SentenceSpace space = enumerate_sentence_space(kb);
  for (std::size_t i = 0; i < space.size(); ++i) {
    ASSERT_EQ(space.models(i), from_index(3, static_cast<std::uint32_t>(i)));
    ASSERT_EQ(kb.models_of({space.sentence(i)}), space.models(i));
  }
}

TEST(Laws, IdsAreUniqueAndCoverEverySuite) {
  const auto ids = law_ids();
  std::set<std::string> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  for (const char* id : {"order.<=1", "order.<=5", "revision.+1", "revision.+7", "contraction.-1", "contraction.-8",
                         "agm.*8", "agm.-8", "agm.thm5", "identity.levi", "identity.harper", "abduction.lemma5",
                         "abduction.lemma6", "abduction.theorem10", "abduction.corollary"}) {
    EXPECT_TRUE(unique.count(id)) << id;
  }
}

TEST(Laws, DalalRevisionPassesExhaustively) {
  const auto reports = run_all(check_revision_postulates, all_kbs_two_atoms(false), dalal_operators());
  for (const auto& r : reports) EXPECT_NE(r.verdict, Verdict::Fail) << r.law_id;
  EXPECT_EQ(reports.size(), 7U);
}

TEST(Laws, DalalContractionPassesExhaustively) {
  const auto reports = run_all(check_contraction_postulates, all_kbs_two_atoms(false), dalal_operators());
  for (const auto& r : reports) EXPECT_NE(r.verdict, Verdict::Fail) << r.law_id;
  EXPECT_EQ(reports.size(), 8U);
}

TEST(Laws, AgmCorrespondenceAndIdentities) {
  const auto kbs = all_kbs_two_atoms(true);
  EXPECT_TRUE(all_passed(run_all(check_agm_correspondence, kbs, dalal_operators())));
  EXPECT_TRUE(all_passed(run_all(check_identities, all_kbs_two_atoms(false), dalal_operators())));
  try {
    check_agm_correspondence(test::prop_kb(2, {"a"}, {"a | b"}), dalal_operators());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonEmptyIC);
  }
}

TEST(Laws, OrderAxioms) {
  for (const auto& kb : all_kbs_two_atoms(false)) {
    const auto reports = check_order_axioms(kb);
    const bool inconsistent = kb_models(kb).models.empty();
    for (const auto& r : reports) {
      if (r.law_id == "order.<=3") {
        EXPECT_EQ(r.verdict, inconsistent ? Verdict::PreconditionFailed : Verdict::Pass);
      } else {
        EXPECT_EQ(r.verdict, Verdict::Pass) << r.law_id;
      }
    }
  }
}

TEST(Laws, InconsistentKbMarksFaithfulLawsPreconditionFailed) {
  const KnowledgeBase kb = test::prop_kb(2, {"a & ~a"});
  const SentenceSpace space = enumerate_sentence_space(kb);
  EXPECT_EQ(find(check_revision_postulates(kb, space), "revision.+4").verdict, Verdict::PreconditionFailed);
  EXPECT_EQ(find(check_contraction_postulates(kb, space), "contraction.-4").verdict, Verdict::PreconditionFailed);
  EXPECT_EQ(find(check_order_axioms(kb), "order.<=3").verdict, Verdict::PreconditionFailed);
  EXPECT_EQ(find(check_revision_postulates(kb, space), "revision.+1").verdict, Verdict::Pass);
}

TEST(Laws, OrderPreservanceOnEquivalentKbs) {
  const KnowledgeBase kb = test::prop_kb(3, {"a -> b", "a"});
  EXPECT_EQ(find(check_order_axioms(kb), "order.<=5").verdict, Verdict::Pass);
  const KnowledgeBase same = test::prop_kb(3, {"a & b"});
  EXPECT_EQ(dalal_ranking(kb).minimal(ModelSet::all(3)), dalal_ranking(same).minimal(ModelSet::all(3)));
}

TEST(Mutants, EachFailsSomeLaw) {
  const auto kbs = all_kbs_two_atoms(false);
  for (const auto& ops : shipped_mutants()) {
    std::vector<std::vector<LawReport>> runs;
    for (const auto& kb : kbs) {
      const SentenceSpace space = enumerate_sentence_space(kb);
      runs.push_back(check_revision_postulates(kb, space, ops));
      runs.push_back(check_contraction_postulates(kb, space, ops));
      runs.push_back(check_order_axioms(kb, ops));
    }
    const auto merged = merge_reports(runs);
    EXPECT_FALSE(all_passed(merged)) << ops.name;
    for (const auto& r : merged) {
      if (r.verdict != Verdict::Fail) continue;
      ASSERT_TRUE(r.counterexample.has_value()) << r.law_id;
      EXPECT_TRUE(replay(r, ops)) << ops.name << " " << r.law_id;
      EXPECT_FALSE(replay(r, dalal_operators())) << ops.name << " " << r.law_id;
    }
  }
}

TEST(Mutants, SevereWithdrawalLosesRecovery) {
  const KnowledgeBase kb = test::prop_kb(2, {"a & b"});
  const auto reports = check_contraction_postulates(kb, enumerate_sentence_space(kb), severe_withdrawal_mutant());
  const LawReport& recovery = find(reports, "contraction.-5");
  ASSERT_EQ(recovery.verdict, Verdict::Fail);
  EXPECT_TRUE(replay(recovery, severe_withdrawal_mutant()));
  EXPECT_EQ(find(check_contraction_postulates(kb, enumerate_sentence_space(kb)), "contraction.-5").verdict,
            Verdict::Pass);
}

TEST(Abduction, LawsOnSmallFrameworks) {
  const KnowledgeBase kb = parse_kb("#abducible a.\n#abducible b.\n#abducible c.\nrule p <- a, not b.\nrule q <- c.\n"
                                    "know a & ~b.\n");
  const auto reports = check_abduction_laws(kb, enumerate_sentence_space(kb));
  EXPECT_TRUE(all_passed(reports));
}

TEST(Abduction, LiteralLemmaSixCounterexampleUnderConstraintsReplays) {
  const KnowledgeBase kb = test::prop_kb(2, {"a"}, {"~(a & b)"});
  const auto reports = check_abduction_laws(kb, enumerate_sentence_space(kb));
  const LawReport& literal = find(reports, "abduction.lemma6");
  EXPECT_EQ(find(reports, "abduction.lemma6.ic").verdict, Verdict::Pass);
  if (literal.verdict == Verdict::Fail) EXPECT_TRUE(replay(literal));
  for (const auto& r : reports) {
    if (r.law_id != "abduction.lemma6") EXPECT_EQ(r.verdict, Verdict::Pass) << r.law_id;
  }
}

TEST(Reports, MergeKeepsFirstFailureAndCounts) {
  LawReport pass{"x", Verdict::Pass, std::nullopt, 3, 0};
  LawReport pre{"x", Verdict::PreconditionFailed, std::nullopt, 0, 1};
  LawReport fail{"x", Verdict::Fail, std::nullopt, 1, 0};
  LawReport other{"a", Verdict::Pass, std::nullopt, 1, 0};
  const auto merged = merge_reports({{pass, other}, {pre}, {fail}, {LawReport{"x", Verdict::Fail, std::nullopt, 2, 0}}});
  ASSERT_EQ(merged.size(), 2U);
  EXPECT_EQ(merged[0].law_id, "a");
  EXPECT_EQ(merged[1].verdict, Verdict::Fail);
  EXPECT_EQ(merged[1].instances_checked, 6U);
  EXPECT_EQ(merged[1].preconditions_failed, 1U);
  const auto only_pre = merge_reports({{pre}, {pre}});
  EXPECT_EQ(only_pre.front().verdict, Verdict::PreconditionFailed);
  EXPECT_EQ(merge_reports({{pre}, {pass}}).front().verdict, Verdict::Pass);
}

TEST(Laws, LargeUniverseUsesSampledSentences) {
  const KnowledgeBase kb = parse_kb(test::read_example("staff.kbd"));
  LawOptions options;
  options.random_sentences = 4;
  const auto sentences = law_sentences(kb, options);
  EXPECT_GE(sentences.size(), 4U);
  EXPECT_EQ(sentences, law_sentences(kb, options));
  EXPECT_TRUE(all_passed(check_order_axioms(kb, dalal_operators(), options)));
}
