#include "kbd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kbd/abduction.hpp"
#include "kbd/belief_change.hpp"
#include "kbd/parser.hpp"
#include "kbd/postulates.hpp"

namespace kbd {

namespace {

using nlohmann::json;

struct Settings {
  std::string file;
  std::string sentence;
  std::string suite;
  std::string operators = "dalal";
  bool json = false;
  std::uint64_t seed = 0;
  unsigned max_atoms = kDefaultMaxAtoms;
  unsigned max_delta = kDefaultMaxDelta;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json atoms_json(const GroundProgram& p, AbductiveInterpretation i) {
  json out = json::array();
  for (const auto& a : atoms_of(p, i)) out.push_back(to_string(a));
  return out;
}

json models_json(const GroundProgram& p, const ModelSet& ms) {
  json out = json::array();
  ms.for_each([&](AbductiveInterpretation i) { out.push_back(atoms_json(p, i)); });
  return out;
}

void print_models(std::ostream& out, const GroundProgram& p, const ModelSet& ms) {
  out << ms.size() << (ms.size() == 1 ? " model" : " models") << "\n";
  ms.for_each([&](AbductiveInterpretation i) { out << "  " << to_string(p, i) << "\n"; });
}

Operators operators_named(const std::string& name) {
  if (name == "dalal") return dalal_operators();
  for (auto& ops : shipped_mutants()) {
    if (ops.name == name) return ops;
  }
  throw UsageError("unknown operator family '" + name + "'");
}

json report_json(const LawReport& r) {
  json j{{"law_id", r.law_id},
         {"verdict", std::string(to_string(r.verdict))},
         {"instances_checked", r.instances_checked},
         {"preconditions_failed", r.preconditions_failed}};
  if (r.counterexample) {
    const Counterexample& cx = *r.counterexample;
    json c;
    c["alpha"] = cx.alpha ? json(to_string(*cx.alpha)) : json(nullptr);
    c["beta"] = cx.beta ? json(to_string(*cx.beta)) : json(nullptr);
    c["witnesses"] = json::array();
    for (const auto& w : cx.witnesses) {
      c["witnesses"].push_back({{"label", w.label}, {"models", models_json(cx.kb.program(), w.models)}});
    }
    j["counterexample"] = c;
  }
  return j;
}

void print_report(std::ostream& out, const LawReport& r) {
  std::string verdict(to_string(r.verdict));
  std::transform(verdict.begin(), verdict.end(), verdict.begin(), ::toupper);
  out << verdict << " " << r.law_id << " (" << r.instances_checked << " checked";
  if (r.preconditions_failed > 0) out << ", precondition failed on " << r.preconditions_failed;
  out << ")\n";
  if (!r.counterexample) return;
  const Counterexample& cx = *r.counterexample;
  if (cx.alpha) out << "    alpha: " << to_string(*cx.alpha) << "\n";
  if (cx.beta) out << "    beta: " << to_string(*cx.beta) << "\n";
  for (const auto& w : cx.witnesses) {
    out << "    " << w.label << ":";
    w.models.for_each([&](AbductiveInterpretation i) { out << " " << to_string(cx.kb.program(), i); });
    if (w.models.empty()) out << " (none)";
    out << "\n";
  }
}

class Runner {
 public:
  Runner(const Settings& s, std::ostream& out) : s_(s), out_(out) {}

  KnowledgeBase load() const { return parse_kb(read_file(s_.file), s_.max_atoms); }

  Sentence sentence(const KnowledgeBase& kb) const {
    if (s_.sentence.empty()) throw UsageError("--sentence is required");
    try {
      return parse_sentence_for(kb, s_.sentence);
    } catch (const SyntaxError& e) {
      throw UsageError(std::string("--sentence: ") + e.what());
    }
  }

  int check() {
    const KnowledgeBase kb = load();
    const GroundProgram& p = kb.program();
    unsigned top = 0;
    for (unsigned l : p.levels()) top = std::max(top, l);
    if (s_.json) {
      json levels = json::object();
      for (AtomId id = 0; id < p.atom_count(); ++id) levels[to_string(p.atom(id))] = p.level(id);
      emit({{"command", "check"},
            {"valid", true},
            {"atoms", p.atom_count()},
            {"abducibles", p.abducible_count()},
            {"rules", p.rules().size()},
            {"constraints", kb.constraints().size()},
            {"knowledge", kb.knowledge().size()},
            {"max_level", top},
            {"levels", levels}});
      return kExitOk;
    }
    out_ << "valid\n";
    out_ << "atoms: " << p.atom_count() << " (" << p.abducible_count() << " abducible)\n";
    out_ << "ground rules: " << p.rules().size() << "\n";
    out_ << "constraints: " << kb.constraints().size() << "\n";
    out_ << "knowledge: " << kb.knowledge().size() << "\n";
    out_ << "max level: " << top << "\n";
    for (AtomId id = 0; id < p.atom_count(); ++id) {
      if (!p.is_abducible(id)) out_ << "  " << to_string(p.atom(id)) << " " << p.level(id) << "\n";
    }
    return kExitOk;
  }

  int models() {
    const KnowledgeBase kb = load();
    return state("models", kb, kb_models(kb));
  }

  int entails() {
    const KnowledgeBase kb = load();
    const Sentence a = sentence(kb);
    const bool acc = accepted(kb, a);
    const bool rej = rejected(kb, a);
    const char* verdict = acc && rej ? "inconsistent" : acc ? "accepted" : rej ? "rejected" : "undetermined";
    if (s_.json) {
      emit({{"command", "entails"}, {"sentence", to_string(a)}, {"accepted", acc}, {"rejected", rej},
            {"verdict", verdict}});
    } else {
      out_ << verdict << "\n";
    }
    return acc ? kExitOk : kExitSemantic;
  }

  int change(const std::string& command) {
    const KnowledgeBase kb = load();
    const Sentence a = sentence(kb);
    if (command == "expand") return state(command, kb, expand(kb, a), &a);
    if (command == "revise") return state(command, kb, revise(kb, a), &a);
    return state(command, kb, contract(kb, a), &a);
  }

  int explain() {
    const KnowledgeBase kb = load();
    const Sentence a = sentence(kb);
    const ExplanationFamily f = minimal_explanations(kb, a, s_.max_delta);
    if (s_.json) {
      json members = json::array();
      for (const auto& m : f.members) {
        json lits = json::array();
        for (const auto& l : m.literals) lits.push_back(to_string(l));
        members.push_back(lits);
      }
      emit({{"command", "explain"}, {"sentence", to_string(a)}, {"explanations", members},
            {"max_cardinality", f.max_cardinality}, {"complete", f.complete}});
    } else {
      out_ << f.members.size() << (f.members.size() == 1 ? " explanation" : " explanations")
           << " (cardinality cap " << f.max_cardinality << (f.complete ? ", complete" : ", capped below |Ab|")
           << ")\n";
      for (const auto& m : f.members) out_ << "  " << to_string(m) << "\n";
    }
    return f.members.empty() ? kExitSemantic : kExitOk;
  }

  int laws() {
    const KnowledgeBase kb = load();
    const Operators ops = operators_named(s_.operators);
    LawOptions options;
    options.seed = s_.seed;
    options.max_delta = s_.max_delta;
    std::vector<LawReport> reports;
    if (s_.suite == "revision") {
      reports = check_revision_postulates(kb, ops, options);
    } else if (s_.suite == "contraction") {
      reports = check_contraction_postulates(kb, ops, options);
    } else if (s_.suite == "order") {
      reports = check_order_axioms(kb, ops, options);
    } else if (s_.suite == "agm") {
      reports = check_agm_correspondence(kb, ops, options);
    } else {
      throw UsageError("--suite must be one of revision, contraction, order, agm");
    }
    const bool ok = all_passed(reports);
    if (s_.json) {
      json list = json::array();
      for (const auto& r : reports) list.push_back(report_json(r));
      emit({{"command", "laws"}, {"suite", s_.suite}, {"operators", ops.name}, {"seed", s_.seed},
            {"passed", ok}, {"reports", list}});
    } else {
      for (const auto& r : reports) print_report(out_, r);
      out_ << (ok ? "all laws hold" : "law violations found") << "\n";
    }
    return ok ? kExitOk : kExitSemantic;
  }

 private:
  int state(const std::string& command, const KnowledgeBase& kb, const BeliefState& st,
            const Sentence* a = nullptr) {
    const GroundProgram& p = kb.program();
    const Sentence witness = synthesize_sentence(p, st.models);
    if (s_.json) {
      json j{{"command", command},
             {"consistent", st.consistent()},
             {"count", st.models.size()},
             {"models", models_json(p, st.models)},
             {"sentence", to_string(witness)}};
      if (a != nullptr) j["input"] = to_string(*a);
      emit(j);
    } else {
      print_models(out_, p, st.models);
      if (!st.consistent()) out_ << "inconsistent\n";
      out_ << "sentence: " << to_string(witness) << "\n";
    }
    return kExitOk;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  const Settings& s_;
  std::ostream& out_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Knowledge-base dynamics over abductive models", "kbd"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool wants_sentence) {
    sub->add_option("file", s.file, "knowledge base (.kbd)")->required();
    if (wants_sentence) sub->add_option("-s,--sentence", s.sentence, "input sentence")->required();
    sub->add_flag("--json", s.json, "structured report");
    sub->add_option("--max-atoms", s.max_atoms, "enumeration cap on abducible atoms")
        ->check(CLI::Range(0U, kHardMaxAtoms));
    return sub;
  };
  common(app.add_subcommand("check", "validate and print levels"), false);
  common(app.add_subcommand("models", "abductive models of K u IC"), false);
  common(app.add_subcommand("entails", "is the sentence accepted"), true);
  common(app.add_subcommand("expand", "expansion"), true);
  common(app.add_subcommand("revise", "revision"), true);
  common(app.add_subcommand("contract", "contraction"), true);
  auto* explain = common(app.add_subcommand("explain", "minimal abductive explanations"), true);
  explain->add_option("--max-delta", s.max_delta, "explanation cardinality cap");
  auto* laws = common(app.add_subcommand("laws", "check a postulate suite"), false);
  laws->add_option("--suite", s.suite, "revision | contraction | order | agm")
      ->required()
      ->check(CLI::IsMember({"revision", "contraction", "order", "agm"}));
  laws->add_option("--seed", s.seed, "seed for sampled checks");
  laws->add_option("--operators", s.operators,
                   "dalal | max-rank-revision | severe-withdrawal | constant-ranking");
  laws->add_option("--max-delta", s.max_delta, "explanation cardinality cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner run(s, out);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "check") return run.check();
    if (command == "models") return run.models();
    if (command == "entails") return run.entails();
    if (command == "explain") return run.explain();
    if (command == "laws") return run.laws();
    return run.change(command);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "error: " << s.file << ":" << e.what() << " [" << to_string(e.cause()) << "]\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.kind()) << "]\n";
    return kExitSemantic;
  }
}

}  // namespace kbd
