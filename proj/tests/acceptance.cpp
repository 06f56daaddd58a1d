// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kbd/abduction.hpp"
#include "kbd/postulates.hpp"
#include "support.hpp"

using namespace kbd;
using test::S;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

ModelSet from_index(unsigned n, std::uint32_t idx) {
  ModelSet ms(n);
  for (std::uint32_t j = 0; j < (1U << n); ++j) {
    if ((idx >> j) & 1U) ms.insert({j});
  }
  return ms;
}

// All knowledge bases over n atoms; with_ic adds every consistent IC.
std::vector<KnowledgeBase> sweep(unsigned n, bool with_ic) {
  const KnowledgeBase base = test::prop_kb(n, {});
  const GroundProgram& p = base.program();
  const std::uint32_t count = 1U << (1U << n);
  std::vector<KnowledgeBase> out;
  for (std::uint32_t ic = 1; ic < count; ++ic) {
    const bool full = ic == count - 1;
    if (!with_ic && !full) continue;
    std::vector<Sentence> ics;
    if (!full) ics.push_back(synthesize_sentence(p, from_index(n, ic)));
    for (std::uint32_t k = 0; k < count; ++k) {
      out.emplace_back(p, ics, std::vector<Sentence>{synthesize_sentence(p, from_index(n, k))});
    }
  }
  return out;
}

std::string describe_failures(const std::vector<LawReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) out += (out.empty() ? "" : ", ") + r.law_id;
  }
  return out;
}

using Suite = std::vector<LawReport> (*)(const KnowledgeBase&, const SentenceSpace&, const Operators&,
                                         const LawOptions&);

std::vector<LawReport> run_suite(Suite suite, const std::vector<KnowledgeBase>& kbs,
                                 const Operators& ops = dalal_operators()) {
  std::vector<std::vector<LawReport>> runs;
  for (const auto& kb : kbs) runs.push_back(suite(kb, enumerate_sentence_space(kb), ops, {}));
  return merge_reports(runs);
}

std::size_t checked(const std::vector<LawReport>& reports) {
  std::size_t total = 0;
  for (const auto& r : reports) total += r.instances_checked;
  return total;
}

Outcome suite_outcome(const std::vector<LawReport>& reports, std::size_t expected_laws) {
  Outcome o;
  if (reports.size() != expected_laws) {
    return {false, std::to_string(reports.size()) + " laws reported, expected " + std::to_string(expected_laws)};
  }
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) o.ok = false;
  }
  o.detail = o.ok ? std::to_string(reports.size()) + " laws, " + std::to_string(checked(reports)) + " instances"
                  : "violations: " + describe_failures(reports);
  return o;
}

Outcome staff_golden() {
  const KnowledgeBase kb = parse_kb(test::read_example("staff.kbd"));
  const GroundProgram& p = kb.program();
  const ModelSet revised = revise(kb, S("staff_chair(delhibabu,aravindan)")).models;
  const auto expected = interpretation_of(p, {{"group_chair", {"infor1", "aravindan"}},
                                              {"group_chair", {"infor2", "gerhard"}},
                                              {"staff_group", {"aravindan", "infor1"}},
                                              {"staff_group", {"delhibabu", "infor1"}}});
  if (revised != ModelSet::of(16, {expected.bits})) return {false, "unexpected revision result"};
  const ExplanationFamily f = minimal_explanations(kb, S("staff_chair(delhibabu,aravindan)"));
  const Explanation d1{{{{"group_chair", {"infor1", "aravindan"}}, true}, {{"staff_group", {"delhibabu", "infor1"}}, true}}};
  const Explanation d2{{{{"group_chair", {"infor2", "aravindan"}}, true}, {{"staff_group", {"delhibabu", "infor2"}}, true}}};
  if (f.members != std::vector<Explanation>{d1, d2}) return {false, "unexpected explanations"};
  return {true, "one minimizer, two explanations"};
}

Outcome order_axioms() {
  std::size_t kbs = 0;
  std::vector<KnowledgeBase> all;
  for (unsigned n = 0; n <= 3; ++n) {
    for (auto& kb : sweep(n, n <= 2)) all.push_back(std::move(kb));
  }
  for (const auto& kb : all) {
    const bool consistent = !kb_models(kb).models.empty();
    for (const auto& r : check_order_axioms(kb)) {
      const bool pre_expected = r.law_id == "order.<=3" && !consistent;
      if (pre_expected != (r.verdict == Verdict::PreconditionFailed)) {
        return {false, r.law_id + " precondition status wrong"};
      }
      if (r.verdict == Verdict::Fail) return {false, r.law_id + " fails"};
    }
    ++kbs;
  }
  return {true, std::to_string(kbs) + " knowledge bases"};
}

Outcome identities() {
  const auto reports = run_suite(check_identities, sweep(2, true));
  if (!all_passed(reports)) return {false, "violations: " + describe_failures(reports)};
  std::mt19937_64 rng(4);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (int round = 0; round < 100; ++round) {
    const KnowledgeBase kb = test::prop_kb(4, {to_string(test::random_sentence(rng, names, 3))},
                                           {to_string(test::random_sentence(rng, names, 2))});
    const Sentence alpha = test::random_sentence(rng, names, 3);
    if (levi_revise(kb, alpha) != revise(kb, alpha)) return {false, "levi mismatch at case " + std::to_string(round)};
    if (harper_contract(kb, alpha) != contract(kb, alpha)) {
      return {false, "harper mismatch at case " + std::to_string(round)};
    }
  }
  return {true, std::to_string(checked(reports)) + " exhaustive instances, 100 random at |Ab|=4"};
}

Outcome agm() {
  const auto reports = run_suite(check_agm_correspondence, sweep(2, false));
  return suite_outcome(reports, 17);
}

Outcome abduction() {
  std::vector<KnowledgeBase> kbs;
  for (unsigned n = 1; n <= 2; ++n) {
    for (auto& kb : sweep(n, true)) kbs.push_back(std::move(kb));
  }
  for (auto& kb : sweep(3, false)) kbs.push_back(std::move(kb));
  std::mt19937_64 rng(12);
  for (int round = 0; round < 60; ++round) {
    std::string text = test::random_program(rng, 3, 2);
    text += "ic " + to_string(test::random_sentence(rng, {"a0", "a1", "a2"}, 2)) + ".\n";
    text += "know " + to_string(test::random_sentence(rng, {"a0", "a1", "a2"}, 2)) + ".\n";
    kbs.push_back(parse_kb(text));
  }
  std::size_t lemma6_failures = 0;
  std::size_t unreplayable = 0;
  std::vector<std::vector<LawReport>> runs;
  for (const auto& kb : kbs) {
    auto reports = check_abduction_laws(kb, enumerate_sentence_space(kb));
    for (const auto& r : reports) {
      if (r.law_id == "abduction.lemma6" && r.verdict == Verdict::Fail) {
        ++lemma6_failures;
        if (!r.counterexample || !replay(r)) ++unreplayable;
      }
    }
    runs.push_back(std::move(reports));
  }
  const auto merged = merge_reports(runs);
  Outcome o;
  for (const auto& r : merged) {
    if (r.law_id != "abduction.lemma6" && r.verdict == Verdict::Fail) {
      o.ok = false;
      o.detail += r.law_id + " fails. ";
    }
  }
  if (unreplayable != 0) {
    o.ok = false;
    o.detail += std::to_string(unreplayable) + " lemma6 counterexamples do not replay. ";
  }
  if (o.ok) {
    o.detail = std::to_string(kbs.size()) + " frameworks, " + std::to_string(checked(merged)) + " instances, " +
               std::to_string(lemma6_failures) + " literal lemma6 counterexamples captured and replayed";
  }
  return o;
}

Outcome consequence() {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<unsigned> abd(1, 4);
  for (int round = 0; round < 500; ++round) {
    const KnowledgeBase kb = parse_kb(test::random_program(rng, abd(rng), 3));
    const GroundProgram& p = kb.program();
    std::vector<std::string> names;
    for (const auto& a : p.atoms()) names.push_back(a.predicate);
    const Sentence k1 = test::random_sentence(rng, names, 2);
    const Sentence k2 = test::random_sentence(rng, names, 2);
    const Sentence alpha = test::random_sentence(rng, names, 3);
    const Sentence beta = test::random_sentence(rng, names, 3);
    const std::string where = " at instance " + std::to_string(round);

    if (!entails_p(p, {k1, k2}, k1)) return {false, "inclusion" + where};
    if (entails_p(p, {k1}, alpha) && models(p, {k1, alpha}) != models(p, {k1})) return {false, "iteration" + where};
    if (entails_p(p, {k1}, alpha) && !entails_p(p, {k1, k2}, alpha)) return {false, "monotony" + where};
    if (entails_p(p, {k1, alpha}, beta) != entails_p(p, {k1}, Sentence::implies(alpha, beta))) {
      return {false, "deduction" + where};
    }
    bool classically = true;
    for (std::uint32_t v = 0; v < (1U << names.size()) && classically; ++v) {
      std::map<std::string, bool> val;
      for (std::size_t j = 0; j < names.size(); ++j) val[names[j]] = (v >> j) & 1U;
      if (test::classical(k1, val) && !test::classical(alpha, val)) classically = false;
    }
    if (classically && !entails_p(p, {k1}, alpha)) return {false, "superclassicality" + where};
  }
  return {true, "500 instances"};
}

Outcome mutation() {
  const auto kbs = sweep(2, true);
  Outcome o;
  for (const auto& ops : shipped_mutants()) {
    std::vector<std::vector<LawReport>> runs;
    for (const auto& kb : kbs) {
      const SentenceSpace space = enumerate_sentence_space(kb);
      runs.push_back(check_revision_postulates(kb, space, ops));
      runs.push_back(check_contraction_postulates(kb, space, ops));
      runs.push_back(check_order_axioms(kb, ops));
    }
    const auto merged = merge_reports(runs);
    if (all_passed(merged)) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : "; ") + ops.name + " passes every law";
    } else {
      o.detail += (o.detail.empty() ? "" : "; ") + ops.name + " fails " + describe_failures(merged);
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "staff revision and explanations", 5, staff_golden},
      {2, "revision postulates, |Ab|=2 exhaustive", 60,
       [] { return suite_outcome(run_suite(check_revision_postulates, sweep(2, false)), 7); }},
      {3, "contraction postulates, |Ab|=2 exhaustive", 60,
       [] { return suite_outcome(run_suite(check_contraction_postulates, sweep(2, false)), 8); }},
      {4, "order axioms, |Ab|<=3", 0, order_axioms},
      {5, "Levi and Harper identities", 0, identities},
      {6, "AGM correspondence, |Ab|=2, IC empty", 0, agm},
      {7, "abduction laws, |Ab|<=3", 0, abduction},
      {8, "consequence properties, 500 instances", 0, consequence},
      {9, "mutation sensitivity", 0, mutation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " - " << o.detail << " ["
         << seconds << " s]";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
