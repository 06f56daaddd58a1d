#include "kbd/program.hpp"

#include <algorithm>
#include <functional>

#include "kbd/error.hpp"

namespace kbd {

std::string to_string(const Term& term) { return term.name; }

std::string to_string(const AtomPattern& atom) {
  std::string out = atom.predicate;
  if (!atom.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i > 0) out += ',';
      out += atom.args[i].name;
    }
    out += ')';
  }
  return out;
}

std::string to_string(const Rule& rule) {
  std::string out = to_string(rule.head);
  if (!rule.body.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0) out += ", ";
      if (!rule.body[i].positive) out += "not ";
      out += to_string(rule.body[i].atom);
    }
  }
  return out;
}

std::optional<AtomId> GroundProgram::find(const GroundAtom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AtomId GroundProgram::id_of(const GroundAtom& atom) const {
  if (auto id = find(atom)) return *id;
  throw Error(ErrorKind::UnknownAtom, "unknown ground atom '" + to_string(atom) + "'");
}

namespace {

// Calls `visit` with every tuple of the cartesian product of `domains`.
void for_each_tuple(const std::vector<const std::vector<std::string>*>& domains,
                    const std::function<void(const std::vector<std::string>&)>& visit) {
  std::vector<std::string> tuple(domains.size());
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == domains.size()) {
      visit(tuple);
      return;
    }
    for (const auto& c : *domains[depth]) {
      tuple[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
}

void check_atom(const Signature& sig, const Rule& rule, const AtomPattern& atom,
                const std::map<std::string, std::string>& var_sorts) {
  const auto* pred = sig.find_predicate(atom.predicate);
  if (pred == nullptr) {
    throw Error(ErrorKind::UnknownPredicate,
                "unknown predicate '" + atom.predicate + "' in rule '" + to_string(rule) + "'");
  }
  if (pred->arg_sorts.size() != atom.args.size()) {
    throw Error(ErrorKind::ArityMismatch,
                "predicate '" + atom.predicate + "' expects " +
                    std::to_string(pred->arg_sorts.size()) + " arguments in rule '" +
                    to_string(rule) + "'");
  }
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    const auto& term = atom.args[i];
    const auto& want = pred->arg_sorts[i];
    std::string have;
    if (term.is_variable()) {
      auto it = var_sorts.find(term.name);
      if (it == var_sorts.end()) {
        throw Error(ErrorKind::UnknownSort, "variable '" + term.name +
                                                "' has no declared sort in rule '" +
                                                to_string(rule) + "'");
      }
      have = it->second;
    } else {
      auto s = sig.sort_of(term.name);
      if (!s) {
        throw Error(ErrorKind::SortMismatch,
                    "unknown constant '" + term.name + "' in rule '" + to_string(rule) + "'");
      }
      have = *s;
    }
    if (have != want) {
      throw Error(ErrorKind::SortMismatch, "argument " + std::to_string(i + 1) + " of '" +
                                               atom.predicate + "' must be of sort '" + want +
                                               "', got '" + have + "' in rule '" +
                                               to_string(rule) + "'");
    }
  }
}

GroundAtom instantiate(const AtomPattern& atom, const std::map<std::string, std::string>& binding) {
  GroundAtom out{atom.predicate, {}};
  out.args.reserve(atom.args.size());
  for (const auto& t : atom.args) {
    out.args.push_back(t.is_variable() ? binding.at(t.name) : t.name);
  }
  return out;
}

}  // namespace

GroundProgram ground(const Signature& signature, const std::vector<Rule>& rules) {
  GroundProgram gp;
  gp.signature_ = signature;

  for (const auto& pred : signature.predicates()) {
    std::vector<const std::vector<std::string>*> domains;
    for (const auto& s : pred.arg_sorts) domains.push_back(&signature.find_sort(s)->constants);
    for_each_tuple(domains, [&](const std::vector<std::string>& args) {
      gp.atoms_.push_back({pred.name, args});
    });
  }
  std::sort(gp.atoms_.begin(), gp.atoms_.end());
  gp.abducible_bit_.assign(gp.atoms_.size(), -1);
  for (AtomId id = 0; id < gp.atoms_.size(); ++id) {
    gp.index_.emplace(gp.atoms_[id], id);
    if (signature.is_abducible(gp.atoms_[id].predicate)) {
      gp.abducible_bit_[id] = static_cast<int>(gp.abducibles_.size());
      gp.abducibles_.push_back(id);
    }
  }

  std::set<GroundRule> instances;
  for (const auto& rule : rules) {
    std::map<std::string, std::string> var_sorts;
    std::vector<const std::vector<std::string>*> domains;
    std::vector<std::string> names;
    for (const auto& v : rule.variables) {
      const auto* sort = signature.find_sort(v.sort);
      if (sort == nullptr) {
        throw Error(ErrorKind::UnknownSort, "variable '" + v.name + "' has unknown sort '" +
                                                v.sort + "' in rule '" + to_string(rule) + "'");
      }
      var_sorts[v.name] = v.sort;
      domains.push_back(&sort->constants);
      names.push_back(v.name);
    }
    check_atom(signature, rule, rule.head, var_sorts);
    for (const auto& lit : rule.body) check_atom(signature, rule, lit.atom, var_sorts);

    for_each_tuple(domains, [&](const std::vector<std::string>& values) {
      std::map<std::string, std::string> binding;
      for (std::size_t i = 0; i < names.size(); ++i) binding[names[i]] = values[i];
      GroundRule gr;
      gr.head = gp.index_.at(instantiate(rule.head, binding));
      for (const auto& lit : rule.body) {
        AtomId id = gp.index_.at(instantiate(lit.atom, binding));
        (lit.positive ? gr.positive : gr.negative).push_back(id);
      }
      std::sort(gr.positive.begin(), gr.positive.end());
      gr.positive.erase(std::unique(gr.positive.begin(), gr.positive.end()), gr.positive.end());
      std::sort(gr.negative.begin(), gr.negative.end());
      gr.negative.erase(std::unique(gr.negative.begin(), gr.negative.end()), gr.negative.end());
      instances.insert(std::move(gr));
    });
  }
  gp.rules_.assign(instances.begin(), instances.end());
  gp.by_head_.assign(gp.atoms_.size(), {});
  for (std::size_t r = 0; r < gp.rules_.size(); ++r) gp.by_head_[gp.rules_[r].head].push_back(r);
  return gp;
}

GroundProgram compute_levels(const GroundProgram& program) {
  GroundProgram gp = program;
  const std::size_t n = gp.atoms_.size();

  for (const auto& rule : gp.rules_) {
    if (gp.is_abducible(rule.head)) {
      throw Error(ErrorKind::AbducibleInHead,
                  "abducible atom '" + to_string(gp.atoms_[rule.head]) + "' is a rule head");
    }
  }

  enum : char { kUnvisited, kActive, kDone };
  std::vector<char> state(n, kUnvisited);
  std::vector<unsigned> level(n, 0);
  std::vector<AtomId> stack;

  std::function<void(AtomId)> visit = [&](AtomId a) {
    if (state[a] == kDone) return;
    if (state[a] == kActive) {
      auto from = std::find(stack.begin(), stack.end(), a);
      std::vector<GroundAtom> cycle;
      std::string text;
      for (auto it = from; it != stack.end(); ++it) {
        cycle.push_back(gp.atoms_[*it]);
        text += to_string(gp.atoms_[*it]) + " -> ";
      }
      cycle.push_back(gp.atoms_[a]);
      text += to_string(gp.atoms_[a]);
      throw CycleError(std::move(cycle), "dependency cycle: " + text);
    }
    if (gp.is_abducible(a)) {
      level[a] = 0;
      state[a] = kDone;
      return;
    }
    state[a] = kActive;
    stack.push_back(a);
    unsigned lvl = 1;
    for (std::size_t r : gp.by_head_[a]) {
      const auto& rule = gp.rules_[r];
      for (const auto* body : {&rule.positive, &rule.negative}) {
        for (AtomId b : *body) {
          visit(b);
          lvl = std::max(lvl, level[b] + 1);
        }
      }
    }
    stack.pop_back();
    level[a] = lvl;
    state[a] = kDone;
  };
  for (AtomId a = 0; a < n; ++a) visit(a);

  gp.levels_ = std::move(level);
  return gp;
}

std::pair<std::set<GroundAtom>, std::set<GroundAtom>> heads_and_facts(const GroundProgram& program) {
  std::set<GroundAtom> heads;
  std::set<GroundAtom> facts;
  for (const auto& rule : program.rules()) {
    heads.insert(program.atom(rule.head));
    if (rule.positive.empty() && rule.negative.empty()) facts.insert(program.atom(rule.head));
  }
  return {heads, facts};
}

}  // namespace kbd
