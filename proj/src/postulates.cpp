#include "kbd/postulates.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "kbd/abduction.hpp"
#include "kbd/error.hpp"

namespace kbd {

SentenceSpace::SentenceSpace(const GroundProgram& program)
    : program_(program), n_(static_cast<unsigned>(program.abducible_count())) {
  if (n_ > kMaxAtoms) {
    throw Error(ErrorKind::UniverseTooLarge,
                "sentence space needs at most " + std::to_string(kMaxAtoms) +
                    " abducible atoms, got " + std::to_string(n_));
  }
}

ModelSet SentenceSpace::models(std::size_t index) const {
  ModelSet ms(n_);
  const std::size_t points = std::size_t{1} << n_;
  for (std::size_t j = 0; j < points; ++j) {
    if ((index >> j) & 1U) ms.insert({static_cast<std::uint32_t>(j)});
  }
  return ms;
}

Sentence SentenceSpace::sentence(std::size_t index) const {
  return synthesize_sentence(program_, models(index));
}

SentenceSpace enumerate_sentence_space(const KnowledgeBase& kb) {
  return SentenceSpace(kb.program());
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

// ---- operators ----

Operators dalal_operators() {
  return {"dalal", [](const KnowledgeBase& kb) { return dalal_ranking(kb); },
          [](const KnowledgeBase& kb, const Sentence& a) { return revise(kb, a); },
          [](const KnowledgeBase& kb, const Sentence& a) { return contract(kb, a); }};
}

Operators max_rank_revision_mutant() {
  Operators ops = dalal_operators();
  ops.name = "max-rank-revision";
  ops.revise = [](const KnowledgeBase& kb, const Sentence& a) {
    const FaithfulRanking order = dalal_ranking(kb);
    const ModelSet pool = kb.models_with_constraints(a);
    unsigned worst = 0;
    pool.for_each([&](AbductiveInterpretation i) { worst = std::max(worst, order.rank(i)); });
    ModelSet out(pool.universe_size());
    pool.for_each([&](AbductiveInterpretation i) {
      if (order.rank(i) == worst) out.insert(i);
    });
    return BeliefState{out};
  };
  return ops;
}

Operators severe_withdrawal_mutant() {
  Operators ops = dalal_operators();
  ops.name = "severe-withdrawal";
  ops.contract = [](const KnowledgeBase& kb, const Sentence& a) {
    const FaithfulRanking order = dalal_ranking(kb);
    const ModelSet s = kb.constraint_models();
    const ModelSet rivals = kb.models_with_constraints(Sentence::negation(a));
    ModelSet out = kb_models(kb).models;
    if (rivals.empty()) return BeliefState{out};
    unsigned cut = std::numeric_limits<unsigned>::max();
    rivals.for_each([&](AbductiveInterpretation i) { cut = std::min(cut, order.rank(i)); });
    s.for_each([&](AbductiveInterpretation i) {
      if (order.rank(i) <= cut) out.insert(i);
    });
    return BeliefState{out};
  };
  return ops;
}

Operators constant_ranking_mutant() {
  Operators ops;
  ops.name = "constant-ranking";
  ops.ranking = [](const KnowledgeBase& kb) {
    const ModelSet s = kb.constraint_models();
    return FaithfulRanking(s, std::vector<std::uint8_t>(s.space_size(), 0));
  };
  ops.revise = [rank = ops.ranking](const KnowledgeBase& kb, const Sentence& a) {
    return revise(kb, a, rank(kb));
  };
  ops.contract = [rank = ops.ranking](const KnowledgeBase& kb, const Sentence& a) {
    return contract(kb, a, rank(kb));
  };
  return ops;
}

std::vector<Operators> shipped_mutants() {
  return {max_rank_revision_mutant(), severe_withdrawal_mutant(), constant_ranking_mutant()};
}

// ---- law machinery ----

namespace {

using Witnesses = std::vector<Witness>;
using Outcome = std::optional<Witnesses>;

Sentence double_negation(const Sentence& s) { return Sentence::negation(Sentence::negation(s)); }

class Context {
 public:
  Context(const KnowledgeBase& kb, const Operators& ops, const LawOptions& options)
      : kb_(kb), ops_(ops), options_(options), m_(kb_models(kb).models), s_(kb.constraint_models()) {}

  const KnowledgeBase& kb() const { return kb_; }
  const Operators& ops() const { return ops_; }
  const LawOptions& options() const { return options_; }
  const ModelSet& m() const { return m_; }
  const ModelSet& s() const { return s_; }
  unsigned n() const { return kb_.universe_size(); }

  // Instances examined inside a single law evaluation.
  void tally(std::size_t k) { tally_ += k; }
  std::size_t take_tally() { return std::exchange(tally_, 0); }

  const ModelSet& mod(const Sentence& a) {
    return memo(mod_, a, [&] { return kb_.models_of({a}); });
  }
  const ModelSet& rev(const Sentence& a) {
    return memo(rev_, a, [&] { return ops_.revise(kb_, a).models; });
  }
  const ModelSet& con(const Sentence& a) {
    return memo(con_, a, [&] { return ops_.contract(kb_, a).models; });
  }
  const ExplanationFamily& family(const Sentence& a) {
    auto it = families_.find(a);
    if (it == families_.end()) {
      it = families_.emplace(a, minimal_explanations(kb_, a, options_.max_delta)).first;
    }
    return it->second;
  }
  const FaithfulRanking& ranking() {
    if (!ranking_) ranking_ = ops_.ranking(kb_);
    return *ranking_;
  }

  // Same models as the knowledge base, written as the synthesized DNF of
  // Mod(KB).
  const KnowledgeBase& dnf_variant() {
    if (!dnf_) dnf_ = kb_.with_knowledge({synthesize_sentence(kb_.program(), m_)});
    return *dnf_;
  }
  // Same knowledge, every sentence doubly negated and the order reversed.
  const KnowledgeBase& negated_variant() {
    if (!negated_) {
      std::vector<Sentence> k;
      for (auto it = kb_.knowledge().rbegin(); it != kb_.knowledge().rend(); ++it) {
        k.push_back(double_negation(*it));
      }
      negated_ = kb_.with_knowledge(std::move(k));
    }
    return *negated_;
  }

 private:
  template <class F>
  const ModelSet& memo(std::map<Sentence, ModelSet>& table, const Sentence& key, F&& compute) {
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, compute()).first;
    return it->second;
  }

  const KnowledgeBase& kb_;
  const Operators& ops_;
  LawOptions options_;
  ModelSet m_;
  ModelSet s_;
  std::map<Sentence, ModelSet> mod_;
  std::map<Sentence, ModelSet> rev_;
  std::map<Sentence, ModelSet> con_;
  std::map<Sentence, ExplanationFamily> families_;
  std::optional<FaithfulRanking> ranking_;
  std::optional<KnowledgeBase> dnf_;
  std::optional<KnowledgeBase> negated_;
  std::size_t tally_ = 0;
};

struct Law {
  std::string id;
  int arity;          // number of sentence arguments
  bool faithful;      // needs Mod(KB) non-empty
  std::function<Outcome(Context&, const Sentence*, const Sentence*)> check;
};

Outcome violated(Witnesses w) { return w; }

Sentence conj(const Sentence& a, const Sentence& b) { return Sentence::conjunction({a, b}); }

ModelSet point(unsigned n, std::initializer_list<std::uint32_t> members) {
  ModelSet out(n);
  for (auto m : members) out.insert({m});
  return out;
}

std::mt19937_64 rng_for(const Context& ctx, std::uint64_t salt) {
  return std::mt19937_64(ctx.options().seed * 0x9E3779B97F4A7C15ULL + salt);
}

// Calls visit(i) for every i < count when count <= limit, otherwise for
// `limit` seeded draws. Stops when visit returns false.
template <class F>
std::size_t sweep(std::size_t count, std::size_t limit, std::mt19937_64& rng, F&& visit) {
  if (count <= limit) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!visit(i)) return i + 1;
    }
    return count;
  }
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  for (std::size_t k = 0; k < limit; ++k) {
    if (!visit(pick(rng))) return k + 1;
  }
  return limit;
}

// ---- order axioms ----

Outcome order_preorder(Context& ctx, const Sentence*, const Sentence*) {
  const auto pts = ctx.s().members();
  const FaithfulRanking& r = ctx.ranking();
  const std::size_t k = pts.size();
  auto rng = rng_for(ctx, 1);
  Outcome bad;
  const std::size_t cube = (k > 0 && k <= 2000) ? k * k * k : std::numeric_limits<std::size_t>::max();
  ctx.tally(sweep(k == 0 ? 0 : cube, ctx.options().max_tuples, rng, [&](std::size_t t) {
    const auto a = pts[t % k];
    const auto b = pts[(t / k) % k];
    const auto c = pts[(t / k / k) % k];
    if (!r.leq(a, a)) {
      bad = violated({{"reflexivity", point(ctx.n(), {a.bits})}});
    } else if (r.leq(a, b) && r.leq(b, c) && !r.leq(a, c)) {
      bad = violated({{"transitivity", point(ctx.n(), {a.bits, b.bits, c.bits})}});
    }
    return !bad;
  }));
  return bad;
}

Outcome order_total(Context& ctx, const Sentence*, const Sentence*) {
  const auto pts = ctx.s().members();
  const FaithfulRanking& r = ctx.ranking();
  const std::size_t k = pts.size();
  auto rng = rng_for(ctx, 2);
  Outcome bad;
  const std::size_t sq = (k > 0 && k <= 60000) ? k * k : std::numeric_limits<std::size_t>::max();
  ctx.tally(sweep(k == 0 ? 0 : sq, ctx.options().max_tuples, rng, [&](std::size_t t) {
    const auto a = pts[t % k];
    const auto b = pts[(t / k) % k];
    if (!r.leq(a, b) && !r.leq(b, a)) bad = violated({{"incomparable", point(ctx.n(), {a.bits, b.bits})}});
    return !bad;
  }));
  return bad;
}

Outcome order_faithful(Context& ctx, const Sentence*, const Sentence*) {
  const ModelSet mins = ctx.ranking().minimal(ctx.s());
  if (mins == ctx.m()) return std::nullopt;
  return violated({{"Min(S)", mins}, {"Mod(KB)", ctx.m()}});
}

// Min(F) is a non-empty subset of F whose members are below all of F.
bool has_minimum(const FaithfulRanking& r, const ModelSet& f) {
  const ModelSet mins = r.minimal(f);
  if (mins.empty() || !mins.subset_of(f)) return false;
  const auto low = mins.members().front();
  bool ok = true;
  f.for_each([&](AbductiveInterpretation j) { ok = ok && r.leq(low, j); });
  return ok;
}

Outcome order_minimality(Context& ctx, const Sentence*, const Sentence*) {
  const auto pts = ctx.s().members();
  const FaithfulRanking& r = ctx.ranking();
  const std::size_t k = pts.size();
  Outcome bad;
  auto subset = [&](std::uint64_t bits) {
    ModelSet f(ctx.n());
    for (std::size_t j = 0; j < k; ++j) {
      if ((bits >> j) & 1U) f.insert(pts[j]);
    }
    return f;
  };
  if (k < 63 && (std::uint64_t{1} << k) <= ctx.options().max_subsets) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
      ctx.tally(1);
      ModelSet f = subset(bits);
      if (!has_minimum(r, f)) return violated({{"F", f}, {"Min(F)", r.minimal(f)}});
    }
    return std::nullopt;
  }
  auto rng = rng_for(ctx, 4);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::uniform_int_distribution<std::size_t> length(1, std::min<std::size_t>(k, 32));
  for (std::size_t t = 0; t < ctx.options().max_subsets && !bad; ++t) {
    ModelSet f(ctx.n());
    const std::size_t len = length(rng);
    for (std::size_t j = 0; j < len; ++j) f.insert(pts[pick(rng)]);
    ctx.tally(1);
    if (!has_minimum(r, f)) bad = violated({{"F", f}, {"Min(F)", r.minimal(f)}});
  }
  return bad;
}

Outcome order_preservance(Context& ctx, const Sentence*, const Sentence*) {
  const FaithfulRanking& r = ctx.ranking();
  for (const KnowledgeBase* other : {&ctx.dnf_variant(), &ctx.negated_variant()}) {
    const FaithfulRanking r2 = ctx.ops().ranking(*other);
    if (!(r == r2)) {
      ModelSet diff(ctx.n());
      ctx.s().for_each([&](AbductiveInterpretation i) {
        if (r.rank(i) != r2.rank(i)) diff.insert(i);
      });
      return violated({{"Mod(KB')", kb_models(*other).models}, {"rank differs", diff}});
    }
  }
  return std::nullopt;
}

// ---- revision ----

Outcome rev1(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  if (r.subset_of(c.s())) return std::nullopt;
  return violated({{"Mod(KB*a)", r}, {"Mod(IC)", c.s()}});
}

Outcome rev2(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  if (r.subset_of(c.mod(*a))) return std::nullopt;
  return violated({{"Mod(KB*a)", r}, {"Mod(a)", c.mod(*a)}});
}

Outcome rev3(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet sat = c.mod(*a) & c.s();
  const ModelSet& r = c.rev(*a);
  if (sat.empty() == r.empty()) return std::nullopt;
  return violated({{"Mod({a} u IC)", sat}, {"Mod(KB*a)", r}});
}

Outcome rev4(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet plus = c.m() & c.mod(*a);
  const ModelSet& r = c.rev(*a);
  if (plus.empty() || r == plus) return std::nullopt;
  return violated({{"Mod(KB+a)", plus}, {"Mod(KB*a)", r}});
}

Outcome rev5(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  const Sentence alt = double_negation(*a);
  for (const KnowledgeBase* other : {&c.dnf_variant(), &c.negated_variant()}) {
    const ModelSet r2 = c.ops().revise(*other, alt).models;
    if (r != r2) return violated({{"Mod(KB*a)", r}, {"Mod(KB'*a')", r2}});
  }
  return std::nullopt;
}

Outcome rev6(Context& c, const Sentence* a, const Sentence* b) {
  const ModelSet lhs = c.rev(*a) & c.mod(*b);
  const ModelSet& rhs = c.rev(conj(*a, *b));
  if (lhs.subset_of(rhs)) return std::nullopt;
  return violated({{"Mod(KB*a) n Mod(b)", lhs}, {"Mod(KB*(a&b))", rhs}});
}

Outcome rev7(Context& c, const Sentence* a, const Sentence* b) {
  const ModelSet rhs = c.rev(*a) & c.mod(*b);
  if (rhs.empty()) return std::nullopt;
  const ModelSet& lhs = c.rev(conj(*a, *b));
  if (lhs.subset_of(rhs)) return std::nullopt;
  return violated({{"Mod(KB*(a&b))", lhs}, {"Mod(KB*a) n Mod(b)", rhs}});
}

// ---- contraction ----

Outcome con1(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.con(*a);
  if (r.subset_of(c.s())) return std::nullopt;
  return violated({{"Mod(KB-a)", r}, {"Mod(IC)", c.s()}});
}

Outcome con2(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet rivals = c.s() - c.mod(*a);
  const ModelSet& r = c.con(*a);
  if (rivals.empty() || !r.subset_of(c.mod(*a))) return std::nullopt;
  return violated({{"Mod({~a} u IC)", rivals}, {"Mod(KB-a)", r}});
}

Outcome con3(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.con(*a);
  if (c.m().subset_of(r)) return std::nullopt;
  return violated({{"Mod(KB)", c.m()}, {"Mod(KB-a)", r}});
}

Outcome con4(Context& c, const Sentence* a, const Sentence*) {
  if (c.m().subset_of(c.mod(*a))) return std::nullopt;
  const ModelSet& r = c.con(*a);
  if (r == c.m()) return std::nullopt;
  return violated({{"Mod(KB)", c.m()}, {"Mod(KB-a)", r}});
}

Outcome con5(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet back = c.con(*a) & c.mod(*a);
  if (back.subset_of(c.m())) return std::nullopt;
  return violated({{"Mod(KB-a) n Mod(a)", back}, {"Mod(KB)", c.m()}});
}

Outcome con6(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.con(*a);
  const Sentence alt = double_negation(*a);
  for (const KnowledgeBase* other : {&c.dnf_variant(), &c.negated_variant()}) {
    const ModelSet r2 = c.ops().contract(*other, alt).models;
    if (r != r2) return violated({{"Mod(KB-a)", r}, {"Mod(KB'-a')", r2}});
  }
  return std::nullopt;
}

Outcome con7(Context& c, const Sentence* a, const Sentence* b) {
  const ModelSet& lhs = c.con(conj(*a, *b));
  const ModelSet rhs = c.con(*a) | c.con(*b);
  if (lhs.subset_of(rhs)) return std::nullopt;
  return violated({{"Mod(KB-(a&b))", lhs}, {"Mod(KB-a) u Mod(KB-b)", rhs}});
}

Outcome con8(Context& c, const Sentence* a, const Sentence* b) {
  const ModelSet& both = c.con(conj(*a, *b));
  if (both.subset_of(c.mod(*a))) return std::nullopt;
  const ModelSet& single = c.con(*a);
  if (single.subset_of(both)) return std::nullopt;
  return violated({{"Mod(KB-a)", single}, {"Mod(KB-(a&b))", both}});
}

// ---- AGM correspondence ----

Outcome closure(Context& c, const ModelSet& result, const char* label) {
  const ModelSet back = c.kb().models_of({synthesize_sentence(c.kb().program(), result)});
  if (back == result) return std::nullopt;
  return violated({{label, result}, {"Mod(synthesized)", back}});
}

Outcome agm_r1(Context& c, const Sentence* a, const Sentence*) { return closure(c, c.rev(*a), "Mod(K*a)"); }

Outcome agm_r3(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet plus = c.m() & c.mod(*a);
  const ModelSet& r = c.rev(*a);
  if (plus.subset_of(r)) return std::nullopt;
  return violated({{"Mod(K#a)", plus}, {"Mod(K*a)", r}});
}

Outcome agm_r4(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet plus = c.m() & c.mod(*a);
  const ModelSet& r = c.rev(*a);
  if (plus.empty() || r.subset_of(plus)) return std::nullopt;
  return violated({{"Mod(K*a)", r}, {"Mod(K#a)", plus}});
}

Outcome agm_r5(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  if (r.empty() == c.mod(*a).empty()) return std::nullopt;
  return violated({{"Mod(K*a)", r}, {"Mod(a)", c.mod(*a)}});
}

Outcome agm_r6(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  const ModelSet& r2 = c.rev(double_negation(*a));
  if (r == r2) return std::nullopt;
  return violated({{"Mod(K*a)", r}, {"Mod(K*~~a)", r2}});
}

Outcome agm_c1(Context& c, const Sentence* a, const Sentence*) { return closure(c, c.con(*a), "Mod(K-a)"); }

Outcome agm_c4(Context& c, const Sentence* a, const Sentence*) {
  if (c.mod(*a).full()) return std::nullopt;
  const ModelSet& r = c.con(*a);
  if (!r.subset_of(c.mod(*a))) return std::nullopt;
  return violated({{"Mod(a)", c.mod(*a)}, {"Mod(K-a)", r}});
}

Outcome agm_c5(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.con(*a);
  const ModelSet& r2 = c.con(double_negation(*a));
  if (r == r2) return std::nullopt;
  return violated({{"Mod(K-a)", r}, {"Mod(K-~~a)", r2}});
}

Outcome agm_thm5(Context& c, const Sentence* a, const Sentence*) {
  std::vector<Sentence> k = c.kb().knowledge();
  k.push_back(*a);
  const ModelSet syntactic = kb_models(c.kb().with_knowledge(std::move(k))).models;
  const ModelSet semantic = expand(c.kb(), *a).models;
  if (syntactic == semantic) return std::nullopt;
  return violated({{"Mod(K u {a})", syntactic}, {"Mod(KB+a)", semantic}});
}

// ---- identities ----

Outcome levi(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.rev(*a);
  const ModelSet rhs = c.con(Sentence::negation(*a)) & c.mod(*a);
  if (r == rhs) return std::nullopt;
  return violated({{"Mod(KB*a)", r}, {"Mod(KB-~a) n Mod(a)", rhs}});
}

Outcome harper(Context& c, const Sentence* a, const Sentence*) {
  const ModelSet& r = c.con(*a);
  const ModelSet rhs = c.m() | c.rev(Sentence::negation(*a));
  if (r == rhs) return std::nullopt;
  return violated({{"Mod(KB-a)", r}, {"Mod(KB) u Mod(KB*~a)", rhs}});
}

// ---- abduction ----

ModelSet explanation_union(const GroundProgram& p, const std::vector<Explanation>& members,
                           std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  ModelSet out(static_cast<unsigned>(p.abducible_count()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != skip) out |= explanation_models(p, members[i]);
  }
  return out;
}

// Upper bound on the size of the folded disjunction.
bool fold_is_small(const ExplanationFamily& f) {
  double size = 1;
  for (const auto& m : f.members) size *= static_cast<double>(std::max<std::size_t>(1, m.size()));
  return size <= 20000;
}

Outcome lemma5(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  const GroundProgram& p = c.kb().program();
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    for (std::size_t j = i; j < f.members.size(); ++j) {
      const ModelSet lhs = c.kb().models_of(disjoin(f.members[i], f.members[j]));
      const ModelSet rhs = explanation_models(p, f.members[i]) | explanation_models(p, f.members[j]);
      if (lhs != rhs) {
        return violated({{"Mod(D1)", explanation_models(p, f.members[i])},
                         {"Mod(D2)", explanation_models(p, f.members[j])},
                         {"Mod(D1 v D2)", lhs}});
      }
    }
  }
  if (!f.members.empty() && fold_is_small(f)) {
    const ModelSet lhs = c.kb().models_of(disjoin_all(f));
    const ModelSet rhs = family_models(p, f);
    if (lhs != rhs) return violated({{"Mod(vD*)", lhs}, {"union Mod(D)", rhs}});
  }
  return std::nullopt;
}

ModelSet disjunction_models(Context& c, const ExplanationFamily& f) {
  if (f.members.empty()) return ModelSet(c.n());
  if (fold_is_small(f)) return c.kb().models_of(disjoin_all(f));
  return family_models(c.kb().program(), f);
}

Outcome lemma6(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  if (!f.complete) return std::nullopt;
  const ModelSet target = c.mod(*a) & c.s();
  const ModelSet got = disjunction_models(c, f);
  if (target == got) return std::nullopt;
  return violated({{"Mod({a} u IC)", target}, {"Mod(vD*)", got}});
}

Outcome lemma6_ic(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  if (!f.complete) return std::nullopt;
  const ModelSet target = c.mod(*a) & c.s();
  const ModelSet got = disjunction_models(c, f) & c.s();
  if (target == got) return std::nullopt;
  return violated({{"Mod({a} u IC)", target}, {"Mod(vD*) n Mod(IC)", got}});
}

Outcome theorem10(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  if (!f.complete) return std::nullopt;
  const GroundProgram& p = c.kb().program();
  const ModelSet mins = c.ranking().minimal(c.mod(*a) & c.s());
  const ModelSet all = family_models(p, f);
  if (!mins.subset_of(all)) return violated({{"Min(Mod({a} u IC))", mins}, {"Mod(vD*)", all}});
  const std::vector<Explanation> cover = irredundant_cover(c.kb(), f, c.ranking());
  const ModelSet covered = explanation_union(p, cover);
  if (!mins.subset_of(covered)) {
    return violated({{"Min(Mod({a} u IC))", mins}, {"cover models", covered}});
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const ModelSet rest = explanation_union(p, cover, i);
    if (mins.subset_of(rest)) {
      return violated({{"Min(Mod({a} u IC))", mins}, {"redundant member", explanation_models(p, cover[i])}});
    }
  }
  return std::nullopt;
}

Outcome corollary(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  if (!f.complete || f.members.empty() || !c.m().subset_of(c.s() - c.mod(*a))) return std::nullopt;
  const ModelSet via = revise_via_explanations(c.kb(), *a, c.options().max_delta).models;
  const ModelSet& direct = c.rev(*a);
  if (via == direct) return std::nullopt;
  return violated({{"via explanations", via}, {"Mod(KB*a)", direct}});
}

Outcome minimality(Context& c, const Sentence* a, const Sentence*) {
  const ExplanationFamily& f = c.family(*a);
  const GroundProgram& p = c.kb().program();
  for (const auto& delta : f.members) {
    if (!is_explanation(c.kb(), delta.literals, *a)) {
      return violated({{"not an explanation", explanation_models(p, delta)}});
    }
    for (std::size_t i = 0; i < delta.literals.size(); ++i) {
      std::vector<GroundLiteral> smaller = delta.literals;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_explanation(c.kb(), smaller, *a)) {
        return violated({{"member", explanation_models(p, delta)},
                         {"explanatory subset", explanation_models(p, Explanation{smaller})}});
      }
    }
  }
  return std::nullopt;
}

const std::vector<Law>& registry() {
  static const std::vector<Law> laws{
      {"order.<=1", 0, false, order_preorder},
      {"order.<=2", 0, false, order_total},
      {"order.<=3", 0, true, order_faithful},
      {"order.<=4", 0, false, order_minimality},
      {"order.<=5", 0, false, order_preservance},
      {"revision.+1", 1, false, rev1},
      {"revision.+2", 1, false, rev2},
      {"revision.+3", 1, false, rev3},
      {"revision.+4", 1, true, rev4},
      {"revision.+5", 1, false, rev5},
      {"revision.+6", 2, false, rev6},
      {"revision.+7", 2, false, rev7},
      {"contraction.-1", 1, false, con1},
      {"contraction.-2", 1, false, con2},
      {"contraction.-3", 1, false, con3},
      {"contraction.-4", 1, true, con4},
      {"contraction.-5", 1, false, con5},
      {"contraction.-6", 1, false, con6},
      {"contraction.-7", 2, false, con7},
      {"contraction.-8", 2, false, con8},
      {"agm.*1", 1, false, agm_r1},
      {"agm.*2", 1, false, rev2},
      {"agm.*3", 1, false, agm_r3},
      {"agm.*4", 1, false, agm_r4},
      {"agm.*5", 1, false, agm_r5},
      {"agm.*6", 1, false, agm_r6},
      {"agm.*7", 2, false, rev6},
      {"agm.*8", 2, false, rev7},
      {"agm.-1", 1, false, agm_c1},
      {"agm.-2", 1, false, con3},
      {"agm.-3", 1, false, con4},
      {"agm.-4", 1, false, agm_c4},
      {"agm.-5", 1, false, agm_c5},
      {"agm.-6", 1, false, con5},
      {"agm.-7", 2, false, con7},
      {"agm.-8", 2, false, con8},
      {"agm.thm5", 1, false, agm_thm5},
      {"identity.levi", 1, false, levi},
      {"identity.harper", 1, false, harper},
      {"abduction.lemma5", 1, false, lemma5},
      {"abduction.lemma6", 1, false, lemma6},
      {"abduction.lemma6.ic", 1, false, lemma6_ic},
      {"abduction.theorem10", 1, false, theorem10},
      {"abduction.corollary", 1, false, corollary},
      {"abduction.minimality", 1, false, minimality},
  };
  return laws;
}

const Law& find_law(const std::string& id) {
  for (const auto& law : registry()) {
    if (law.id == id) return law;
  }
  throw std::invalid_argument("unknown law '" + id + "'");
}

std::vector<std::string> ids_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& law : registry()) {
    if (law.id.rfind(prefix, 0) == 0) out.push_back(law.id);
  }
  return out;
}

std::vector<Sentence> pick_sentences(const SentenceSpace& space, const LawOptions& options) {
  std::vector<Sentence> out;
  const std::size_t count = space.size();
  if (count <= options.max_sentences) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(space.sentence(i));
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  std::set<std::size_t> chosen{0, count - 1};
  while (chosen.size() < options.max_sentences) chosen.insert(pick(rng));
  for (std::size_t i : chosen) out.push_back(space.sentence(i));
  return out;
}

std::vector<Sentence> random_sentences(const KnowledgeBase& kb, const LawOptions& options) {
  const GroundProgram& p = kb.program();
  std::vector<Sentence> out{Sentence::top(), Sentence::bottom()};
  if (p.atom_count() == 0) return out;
  std::mt19937_64 rng(options.seed + 0x51EDULL);
  std::uniform_int_distribution<std::size_t> atom(0, p.atom_count() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> shape(0, 3);
  auto literal = [&] {
    Sentence a = Sentence::atom(p.atom(static_cast<AtomId>(atom(rng))));
    return coin(rng) != 0 ? a : Sentence::negation(a);
  };
  while (out.size() < std::max<std::size_t>(options.random_sentences, 2)) {
    switch (shape(rng)) {
      case 0: out.push_back(literal()); break;
      case 1: out.push_back(Sentence::conjunction({literal(), literal()})); break;
      case 2: out.push_back(Sentence::disjunction({literal(), literal()})); break;
      default:
        out.push_back(Sentence::conjunction({Sentence::disjunction({literal(), literal()}), literal()}));
    }
  }
  return out;
}

std::vector<LawReport> run_laws(const KnowledgeBase& kb, const std::vector<Sentence>& sentences,
                                const std::vector<std::string>& ids, const Operators& ops,
                                const LawOptions& options) {
  Context ctx(kb, ops, options);
  std::vector<LawReport> out;
  const std::size_t k = sentences.size();
  for (const auto& id : ids) {
    const Law& law = find_law(id);
    LawReport report{id, Verdict::Pass, std::nullopt, 0, 0};
    if (law.faithful && ctx.m().empty()) {
      report.verdict = Verdict::PreconditionFailed;
      report.preconditions_failed = 1;
      out.push_back(std::move(report));
      continue;
    }
    auto record = [&](const Sentence* a, const Sentence* b, Witnesses w) {
      report.verdict = Verdict::Fail;
      report.counterexample = Counterexample{
          kb, a ? std::optional<Sentence>(*a) : std::nullopt,
          b ? std::optional<Sentence>(*b) : std::nullopt, std::move(w), options};
    };
    if (law.arity == 0) {
      ctx.take_tally();
      if (auto w = law.check(ctx, nullptr, nullptr)) record(nullptr, nullptr, std::move(*w));
      report.instances_checked = std::max<std::size_t>(1, ctx.take_tally());
    } else if (law.arity == 1) {
      for (const auto& a : sentences) {
        ++report.instances_checked;
        if (auto w = law.check(ctx, &a, nullptr)) {
          record(&a, nullptr, std::move(*w));
          break;
        }
      }
    } else {
      std::mt19937_64 rng(options.seed ^ 0xA5A5A5A5ULL);
      const std::size_t pairs = k * k;
      report.instances_checked = sweep(pairs, options.max_pairs, rng, [&](std::size_t t) {
        const Sentence& a = sentences[t % k];
        const Sentence& b = sentences[t / k];
        if (auto w = law.check(ctx, &a, &b)) {
          record(&a, &b, std::move(*w));
          return false;
        }
        return true;
      });
    }
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace

std::vector<LawReport> check_revision_postulates(const KnowledgeBase& kb, const SentenceSpace& space,
                                                 const Operators& ops, const LawOptions& options) {
  return run_laws(kb, pick_sentences(space, options), ids_with_prefix("revision."), ops, options);
}

std::vector<LawReport> check_contraction_postulates(const KnowledgeBase& kb,
                                                    const SentenceSpace& space, const Operators& ops,
                                                    const LawOptions& options) {
  return run_laws(kb, pick_sentences(space, options), ids_with_prefix("contraction."), ops, options);
}

std::vector<LawReport> check_order_axioms(const KnowledgeBase& kb, const Operators& ops,
                                          const LawOptions& options) {
  return run_laws(kb, {}, ids_with_prefix("order."), ops, options);
}

std::vector<LawReport> check_agm_correspondence(const KnowledgeBase& kb, const SentenceSpace& space,
                                                const Operators& ops, const LawOptions& options) {
  if (!kb.constraints().empty()) {
    throw Error(ErrorKind::NonEmptyIC, "the AGM correspondence needs an empty set of integrity constraints");
  }
  return run_laws(kb, pick_sentences(space, options), ids_with_prefix("agm."), ops, options);
}

std::vector<LawReport> check_identities(const KnowledgeBase& kb, const SentenceSpace& space,
                                        const Operators& ops, const LawOptions& options) {
  return run_laws(kb, pick_sentences(space, options), ids_with_prefix("identity."), ops, options);
}

std::vector<LawReport> check_abduction_laws(const KnowledgeBase& kb, const SentenceSpace& space,
                                            const Operators& ops, const LawOptions& options) {
  std::vector<Sentence> targets = pick_sentences(space, options);
  const GroundProgram& p = kb.program();
  for (AtomId id = 0; id < p.atom_count(); ++id) {
    if (p.is_abducible(id)) continue;
    targets.push_back(Sentence::atom(p.atom(id)));
    targets.push_back(Sentence::negation(Sentence::atom(p.atom(id))));
  }
  return run_laws(kb, targets, ids_with_prefix("abduction."), ops, options);
}

std::vector<Sentence> law_sentences(const KnowledgeBase& kb, const LawOptions& options) {
  if (kb.universe_size() <= SentenceSpace::kMaxAtoms) {
    return pick_sentences(SentenceSpace(kb.program()), options);
  }
  return random_sentences(kb, options);
}

std::vector<LawReport> check_revision_postulates(const KnowledgeBase& kb, const Operators& ops,
                                                 const LawOptions& options) {
  return run_laws(kb, law_sentences(kb, options), ids_with_prefix("revision."), ops, options);
}

std::vector<LawReport> check_contraction_postulates(const KnowledgeBase& kb, const Operators& ops,
                                                    const LawOptions& options) {
  return run_laws(kb, law_sentences(kb, options), ids_with_prefix("contraction."), ops, options);
}

std::vector<LawReport> check_agm_correspondence(const KnowledgeBase& kb, const Operators& ops,
                                                const LawOptions& options) {
  if (!kb.constraints().empty()) {
    throw Error(ErrorKind::NonEmptyIC, "the AGM correspondence needs an empty set of integrity constraints");
  }
  return run_laws(kb, law_sentences(kb, options), ids_with_prefix("agm."), ops, options);
}

std::vector<LawReport> merge_reports(const std::vector<std::vector<LawReport>>& runs) {
  std::map<std::string, LawReport> merged;
  std::map<std::string, std::size_t> seen;
  for (const auto& run : runs) {
    for (const auto& r : run) {
      ++seen[r.law_id];
      auto [it, fresh] = merged.emplace(r.law_id, r);
      if (fresh) continue;
      LawReport& m = it->second;
      m.instances_checked += r.instances_checked;
      m.preconditions_failed += r.preconditions_failed;
      if (m.verdict == Verdict::Fail) continue;
      if (r.verdict == Verdict::Fail) {
        m.verdict = Verdict::Fail;
        m.counterexample = r.counterexample;
      } else if (r.verdict == Verdict::Pass) {
        m.verdict = Verdict::Pass;
      }
    }
  }
  std::vector<LawReport> out;
  for (auto& [id, r] : merged) out.push_back(std::move(r));
  return out;
}

bool all_passed(const std::vector<LawReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const LawReport& r) { return r.verdict == Verdict::Fail; });
}

std::vector<std::string> law_ids() {
  std::vector<std::string> out;
  for (const auto& law : registry()) out.push_back(law.id);
  return out;
}

bool replay(const LawReport& report, const Operators& ops) {
  if (report.verdict != Verdict::Fail || !report.counterexample) return false;
  const Counterexample& cx = *report.counterexample;
  const Law& law = find_law(report.law_id);
  Context ctx(cx.kb, ops, cx.options);
  const Outcome again = law.check(ctx, cx.alpha ? &*cx.alpha : nullptr, cx.beta ? &*cx.beta : nullptr);
  return again && *again == cx.witnesses;
}

}  // namespace kbd
