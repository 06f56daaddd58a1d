#include "kbd/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace kbd {

namespace {

enum class Tok {
  Ident, Directive, LParen, RParen, LBracket, RBracket, Comma, Dot, Colon,
  Equals, Tilde, Amp, Bar, Arrow, LeftArrow, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

[[noreturn]] void fail(SourceLocation loc, const std::string& msg,
                       ErrorKind cause = ErrorKind::Syntax) {
  throw SyntaxError(loc, cause, msg);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourceLocation loc{line, col};
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_char(c) || c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (c == '#' && word.size() == 1) fail(loc, "expected directive name after '#'");
      out.push_back({c == '#' ? Tok::Directive : Tok::Ident, word, loc});
      advance(j - i);
      continue;
    }
    if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", loc});
      advance(2);
      continue;
    }
    if (text.substr(i, 2) == "<-") {
      out.push_back({Tok::LeftArrow, "<-", loc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case ':': kind = Tok::Colon; break;
      case '=': kind = Tok::Equals; break;
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      default: fail(loc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), loc});
    advance(1);
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

bool is_variable_name(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) != 0;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> words{"not", "forall", "exists", "true", "false"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  KbDocument document() {
    KbDocument doc;
    while (peek().kind != Tok::End) doc.statements.push_back(statement());
    return doc;
  }

  Sentence whole_sentence() {
    Sentence s = sentence();
    expect(Tok::End, "end of sentence");
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek().loc, std::string("expected ") + what + ", found '" + peek().text + "'");
    }
    return next();
  }
  std::string identifier(const char* what) {
    const Token& t = expect(Tok::Ident, what);
    if (reserved().count(t.text) != 0) fail(t.loc, "'" + t.text + "' is a reserved word");
    return t.text;
  }
  bool at_word(const char* word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  Statement statement() {
    const Token& head = peek();
    Statement st;
    st.location = head.loc;
    if (head.kind == Tok::Directive) {
      next();
      if (head.text == "#sort") {
        SortStatement s;
        s.name = identifier("sort name");
        expect(Tok::Equals, "'='");
        do {
          s.constants.push_back(identifier("constant"));
        } while (accept(Tok::Comma));
        st.body = std::move(s);
      } else if (head.text == "#abducible" || head.text == "#predicate") {
        PredicateStatement p;
        p.abducible = head.text == "#abducible";
        p.name = identifier("predicate name");
        if (accept(Tok::LParen)) {
          do {
            p.sorts.push_back(identifier("sort name"));
          } while (accept(Tok::Comma));
          expect(Tok::RParen, "')'");
        }
        st.body = std::move(p);
      } else {
        fail(head.loc, "unknown directive '" + head.text + "'");
      }
    } else if (at_word("rule")) {
      next();
      RuleStatement r;
      r.annotations = annotations();
      r.head = atom();
      if (accept(Tok::LeftArrow)) r.body = body();
      st.body = std::move(r);
    } else if (at_word("ic")) {
      next();
      ConstraintStatement c;
      if (peek().kind == Tok::LBracket || peek().kind == Tok::LeftArrow) {
        c.denial = true;
        c.annotations = annotations();
        expect(Tok::LeftArrow, "'<-'");
        c.body = body();
      } else {
        c.sentence = sentence();
      }
      st.body = std::move(c);
    } else if (at_word("know")) {
      next();
      st.body = KnowledgeStatement{sentence()};
    } else {
      fail(head.loc, "expected a statement, found '" + head.text + "'");
    }
    expect(Tok::Dot, "'.' at end of statement");
    return st;
  }

  std::vector<VariableDecl> annotations() {
    std::vector<VariableDecl> out;
    if (!accept(Tok::LBracket)) return out;
    do {
      const Token& v = expect(Tok::Ident, "variable");
      if (!is_variable_name(v.text)) fail(v.loc, "'" + v.text + "' is not a variable");
      expect(Tok::Colon, "':'");
      out.push_back({v.text, identifier("sort name")});
    } while (accept(Tok::Comma));
    expect(Tok::RBracket, "']'");
    return out;
  }

  std::vector<LiteralPattern> body() {
    std::vector<LiteralPattern> out;
    do {
      LiteralPattern lit;
      if (at_word("not")) {
        next();
        lit.positive = false;
      }
      lit.atom = atom();
      out.push_back(std::move(lit));
    } while (accept(Tok::Comma));
    return out;
  }

  Term term() {
    std::string name = identifier("term");
    return is_variable_name(name) ? Term::variable(name) : Term::constant(name);
  }

  AtomPattern atom() {
    const Token& t = peek();
    AtomPattern a;
    a.predicate = identifier("atom");
    if (is_variable_name(a.predicate)) fail(t.loc, "predicate names must start in lower case");
    if (accept(Tok::LParen)) {
      do {
        a.args.push_back(term());
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    return a;
  }

  Sentence sentence() {
    Sentence lhs = disjunction();
    if (accept(Tok::Arrow)) return Sentence::implies(std::move(lhs), sentence());
    return lhs;
  }

  Sentence disjunction() {
    std::vector<Sentence> parts{conjunction()};
    while (accept(Tok::Bar)) parts.push_back(conjunction());
    if (parts.size() == 1) return std::move(parts.front());
    return Sentence::disjunction(std::move(parts));
  }

  Sentence conjunction() {
    std::vector<Sentence> parts{unary()};
    while (accept(Tok::Amp)) parts.push_back(unary());
    if (parts.size() == 1) return std::move(parts.front());
    return Sentence::conjunction(std::move(parts));
  }

  Sentence unary() {
    if (accept(Tok::Tilde)) return Sentence::negation(unary());
    if (at_word("forall") || at_word("exists")) {
      const bool universal = next().text == "forall";
      const Token& v = expect(Tok::Ident, "variable");
      if (!is_variable_name(v.text)) fail(v.loc, "'" + v.text + "' is not a variable");
      expect(Tok::Colon, "':'");
      std::string sort = identifier("sort name");
      Sentence body = sentence();
      return universal ? Sentence::forall(v.text, sort, std::move(body))
                       : Sentence::exists(v.text, sort, std::move(body));
    }
    return primary();
  }

  Sentence primary() {
    if (accept(Tok::LParen)) {
      Sentence s = sentence();
      expect(Tok::RParen, "')'");
      return s;
    }
    if (at_word("true")) {
      next();
      return Sentence::top();
    }
    if (at_word("false")) {
      next();
      return Sentence::bottom();
    }
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Equals) {
      Term lhs = term();
      next();
      return Sentence::equal(std::move(lhs), term());
    }
    return Sentence::atom(atom());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- printing ----

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string print_annotations(const std::vector<VariableDecl>& decls) {
  if (decls.empty()) return "";
  std::vector<std::string> parts;
  for (const auto& d : decls) parts.push_back(d.name + ":" + d.sort);
  return "[" + join(parts, ", ") + "] ";
}

std::string print_body(const std::vector<LiteralPattern>& body) {
  std::vector<std::string> parts;
  for (const auto& l : body) parts.push_back((l.positive ? "" : "not ") + to_string(l.atom));
  return join(parts, ", ");
}

struct Printer {
  std::string operator()(const SortStatement& s) const {
    return "#sort " + s.name + " = " + join(s.constants, ", ") + ".";
  }
  std::string operator()(const PredicateStatement& p) const {
    std::string out = p.abducible ? "#abducible " : "#predicate ";
    out += p.name;
    if (!p.sorts.empty()) out += "(" + join(p.sorts, ", ") + ")";
    return out + ".";
  }
  std::string operator()(const RuleStatement& r) const {
    std::string out = "rule " + print_annotations(r.annotations) + to_string(r.head);
    if (!r.body.empty()) out += " <- " + print_body(r.body);
    return out + ".";
  }
  std::string operator()(const ConstraintStatement& c) const {
    if (c.denial) return "ic " + print_annotations(c.annotations) + "<- " + print_body(c.body) + ".";
    return "ic " + to_string(c.sentence) + ".";
  }
  std::string operator()(const KnowledgeStatement& k) const {
    return "know " + to_string(k.sentence) + ".";
  }
};

// ---- building ----

// Assigns sorts to the variables of one rule or denial. Returns false when
// some predicate is not known yet.
class VariableSorts {
 public:
  VariableSorts(const Signature& sig, SourceLocation loc) : sig_(sig), loc_(loc) {}

  void annotate(const std::vector<VariableDecl>& decls) {
    for (const auto& d : decls) {
      if (sig_.find_sort(d.sort) == nullptr) {
        fail(loc_, "unknown sort '" + d.sort + "' for variable '" + d.name + "'",
             ErrorKind::UnknownSort);
      }
      bind(d.name, d.sort);
    }
  }

  // Binds variables in argument positions of a known predicate. Returns
  // false when the predicate is not (yet) declared.
  bool learn(const AtomPattern& atom) {
    const auto* pred = sig_.find_predicate(atom.predicate);
    if (pred == nullptr) return false;
    if (pred->arg_sorts.size() != atom.args.size()) {
      fail(loc_, "predicate '" + atom.predicate + "' expects " +
                     std::to_string(pred->arg_sorts.size()) + " arguments",
           ErrorKind::ArityMismatch);
    }
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (atom.args[i].is_variable()) bind(atom.args[i].name, pred->arg_sorts[i]);
    }
    return true;
  }

  void note_order(const AtomPattern& atom) {
    for (const auto& t : atom.args) {
      if (t.is_variable() && std::find(order_.begin(), order_.end(), t.name) == order_.end()) {
        order_.push_back(t.name);
      }
    }
  }

  std::optional<std::string> sort_of(const Term& t) const {
    if (!t.is_variable()) return sig_.sort_of(t.name);
    auto it = sorts_.find(t.name);
    if (it == sorts_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<VariableDecl> declarations() const {
    std::vector<VariableDecl> out;
    for (const auto& name : order_) {
      auto it = sorts_.find(name);
      if (it == sorts_.end()) {
        fail(loc_, "cannot infer the sort of variable '" + name + "'", ErrorKind::UnknownSort);
      }
      out.push_back({name, it->second});
    }
    for (const auto& [name, sort] : sorts_) {
      if (std::find(order_.begin(), order_.end(), name) == order_.end()) {
        out.push_back({name, sort});
      }
    }
    return out;
  }

 private:
  void bind(const std::string& var, const std::string& sort) {
    auto [it, inserted] = sorts_.emplace(var, sort);
    if (!inserted && it->second != sort) {
      fail(loc_, "variable '" + var + "' used with sorts '" + it->second + "' and '" + sort + "'",
           ErrorKind::SortMismatch);
    }
  }

  const Signature& sig_;
  SourceLocation loc_;
  std::map<std::string, std::string> sorts_;
  std::vector<std::string> order_;
};

template <class F>
auto located(SourceLocation loc, F&& body) {
  try {
    return body();
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SyntaxError(loc, e.kind(), e.what());
  }
}

Sentence denial_sentence(const std::vector<VariableDecl>& vars,
                         const std::vector<LiteralPattern>& body) {
  std::vector<Sentence> parts;
  for (const auto& l : body) {
    Sentence a = Sentence::atom(l.atom);
    parts.push_back(l.positive ? a : Sentence::negation(a));
  }
  Sentence s = Sentence::negation(parts.size() == 1 ? std::move(parts.front())
                                                    : Sentence::conjunction(std::move(parts)));
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) s = Sentence::forall(it->name, it->sort, s);
  return s;
}

}  // namespace

KbDocument parse_document(std::string_view text) { return Parser(text).document(); }

Sentence parse_sentence(std::string_view text) { return Parser(text).whole_sentence(); }

std::string print_document(const KbDocument& doc) {
  std::string out;
  for (const auto& st : doc.statements) out += std::visit(Printer{}, st.body) + "\n";
  return out;
}

KnowledgeBase build_kb(const KbDocument& doc, unsigned max_atoms) {
  Signature sig;
  for (const auto& st : doc.statements) {
    if (const auto* s = std::get_if<SortStatement>(&st.body)) {
      located(st.location, [&] {
        sig.add_sort(s->name, s->constants);
        return 0;
      });
    }
  }
  for (const auto& st : doc.statements) {
    if (const auto* p = std::get_if<PredicateStatement>(&st.body)) {
      located(st.location, [&] {
        sig.add_predicate(p->name, p->sorts, p->abducible);
        return 0;
      });
    }
  }

  // Rules may define predicates that other rules use, so resolve them to a
  // fixpoint; a head predicate without a declaration takes the sorts of its
  // arguments.
  struct Pending {
    const RuleStatement* rule;
    SourceLocation loc;
  };
  std::vector<Pending> pending;
  for (const auto& st : doc.statements) {
    if (const auto* r = std::get_if<RuleStatement>(&st.body)) pending.push_back({r, st.location});
  }
  std::vector<std::pair<Rule, SourceLocation>> rules(pending.size());
  std::vector<bool> resolved(pending.size(), false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (resolved[i]) continue;
      const auto& [r, loc] = pending[i];
      VariableSorts vs(sig, loc);
      vs.annotate(r->annotations);
      bool ready = true;
      for (const auto& lit : r->body) ready = vs.learn(lit.atom) && ready;
      if (!ready) continue;
      if (sig.is_abducible(r->head.predicate)) {
        fail(loc, "abducible predicate '" + r->head.predicate + "' cannot head a rule",
             ErrorKind::AbducibleInHead);
      }
      if (!vs.learn(r->head)) {
        std::vector<std::string> sorts;
        for (const auto& t : r->head.args) {
          auto s = vs.sort_of(t);
          if (!s) {
            fail(loc, "cannot infer the sort of '" + t.name + "' in the head of a rule",
                 t.is_variable() ? ErrorKind::UnknownSort : ErrorKind::SortMismatch);
          }
          sorts.push_back(*s);
        }
        sig.add_predicate(r->head.predicate, sorts, false);
      }
      vs.note_order(r->head);
      for (const auto& lit : r->body) vs.note_order(lit.atom);
      rules[i] = {Rule{r->head, r->body, vs.declarations()}, loc};
      resolved[i] = true;
      progress = true;
    }
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (resolved[i]) continue;
    for (const auto& lit : pending[i].rule->body) {
      if (sig.find_predicate(lit.atom.predicate) == nullptr) {
        fail(pending[i].loc, "unknown predicate '" + lit.atom.predicate + "'",
             ErrorKind::UnknownPredicate);
      }
    }
  }

  std::vector<Rule> plain;
  for (const auto& [rule, loc] : rules) {
    located(loc, [&] { return ground(sig, {rule}); });
    plain.push_back(rule);
  }
  GroundProgram gp = ground(sig, plain);
  try {
    gp = compute_levels(gp);
  } catch (const CycleError& e) {
    SourceLocation where = rules.empty() ? SourceLocation{} : rules.front().second;
    for (const auto& [rule, loc] : rules) {
      const bool in_cycle = std::any_of(e.cycle().begin(), e.cycle().end(), [&](const auto& a) {
        return a.predicate == rule.head.predicate;
      });
      if (in_cycle) {
        where = loc;
        break;
      }
    }
    throw SyntaxError(where, ErrorKind::CyclicProgram, e.what());
  }

  std::vector<Sentence> constraints;
  std::vector<Sentence> knowledge;
  auto scratch = [&](std::vector<Sentence> ic, std::vector<Sentence> k) {
    return KnowledgeBase(gp, std::move(ic), std::move(k), max_atoms);
  };
  for (const auto& st : doc.statements) {
    if (const auto* c = std::get_if<ConstraintStatement>(&st.body)) {
      Sentence s = c->sentence;
      if (c->denial) {
        VariableSorts vs(sig, st.location);
        vs.annotate(c->annotations);
        for (const auto& lit : c->body) {
          if (!vs.learn(lit.atom)) {
            fail(st.location, "unknown predicate '" + lit.atom.predicate + "'",
                 ErrorKind::UnknownPredicate);
          }
          vs.note_order(lit.atom);
        }
        s = denial_sentence(vs.declarations(), c->body);
      }
      located(st.location, [&] { return scratch({s}, {}); });
      constraints.push_back(std::move(s));
    } else if (const auto* k = std::get_if<KnowledgeStatement>(&st.body)) {
      located(st.location, [&] { return scratch({}, {k->sentence}); });
      knowledge.push_back(k->sentence);
    }
  }
  return KnowledgeBase(std::move(gp), std::move(constraints), std::move(knowledge), max_atoms);
}

KnowledgeBase parse_kb(std::string_view text, unsigned max_atoms) {
  return build_kb(parse_document(text), max_atoms);
}

Sentence parse_sentence_for(const KnowledgeBase& kb, std::string_view text) {
  Sentence s = parse_sentence(text);
  located(SourceLocation{1, 1}, [&] { return compile(kb.program(), s); });
  return s;
}

}  // namespace kbd
