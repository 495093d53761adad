#include "gbox/parser.hpp"

#include <array>
#include <map>
#include <optional>

#include "gbox/errors.hpp"

namespace gbox {

namespace {

enum class Tok { Name, Var, LParen, RParen, LBrace, RBrace, Comma, Semicolon, Colon, Arrow, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

constexpr std::array<std::string_view, 11> kKeywords = {
    "SubClassOf", "EquivalentTo", "SubRoleOf", "Thing", "Nothing", "not",
    "and",        "or",           "some",      "only",  "inverse"};

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords) {
    if (k == s) return true;
  }
  return false;
}

bool name_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool name_char(char c) { return name_start(c) || (c >= '0' && c <= '9'); }

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Name:      return "'" + t.text + "'";
    case Tok::Var:       return "'?" + t.text + "'";
    case Tok::LParen:    return "'('";
    case Tok::RParen:    return "')'";
    case Tok::LBrace:    return "'{'";
    case Tok::RBrace:    return "'}'";
    case Tok::Comma:     return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Colon:     return "':'";
    case Tok::Arrow:     return "'=>'";
    case Tok::Newline:   return "end of line";
    case Tok::End:       return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view text, const std::string& source) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string s, std::size_t l, std::size_t c) {
    out.push_back(Token{kind, std::move(s), l, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      push(Tok::Newline, {}, line, col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (name_start(ch) || ch == '?') {
      const bool var = ch == '?';
      std::size_t j = var ? i + 1 : i;
      if (var && (j >= text.size() || !name_start(text[j]))) {
        throw ParseError(source, line, col, "'?' must be followed by a variable name");
      }
      std::size_t k = j;
      while (k < text.size() && name_char(text[k])) ++k;
      std::string name(text.substr(j, k - j));
      if (name.size() >= 2 && name[0] == '_' && name[1] == '_') {
        throw ParseError(source, line, col, "names starting with '__' are reserved");
      }
      push(var ? Tok::Var : Tok::Name, std::move(name), line, start_col);
      col += k - i;
      i = k;
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case ':': kind = Tok::Colon; break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(source, line, col, std::string("unexpected character '") + ch + "'");
    }
    push(kind, std::string(text.substr(i, len)), line, start_col);
    i += len;
    col += len;
  }
  push(Tok::End, {}, line, col);
  return out;
}

/// `X EquivalentTo Y` with two bare operands whose kind depends on the rest of
/// the document.
struct Pending {
  Token lhs;
  Token rhs;
  std::size_t scope = 0;
};

using RawStatement = std::variant<std::vector<Axiom>, Pending>;

struct Scope {
  std::set<std::string> role_vars;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options, bool line_mode, bool allow_vars)
      : source_(options.source_name),
        tokens_(lex(text, options.source_name)),
        line_mode_(line_mode),
        allow_vars_(allow_vars),
        role_names_(options.role_names) {
    scopes_.emplace_back();
  }

  // -- token access -------------------------------------------------------

  const Token& peek(std::size_t k = 0) {
    std::size_t idx = pos_;
    for (;;) {
      while (idx < tokens_.size() && !line_mode_ && tokens_[idx].kind == Tok::Newline) ++idx;
      if (idx >= tokens_.size()) return tokens_.back();
      if (k == 0) return tokens_[idx];
      --k;
      ++idx;
    }
  }

  Token next() {
    const Token& t = peek();
    Token copy = t;
    pos_ = static_cast<std::size_t>(&t - tokens_.data()) + 1;
    if (pos_ > tokens_.size()) pos_ = tokens_.size();
    return copy;
  }

  bool at(Tok kind, std::size_t k = 0) { return peek(k).kind == kind; }
  bool at_word(std::string_view word, std::size_t k = 0) {
    const Token& t = peek(k);
    return t.kind == Tok::Name && t.text == word;
  }
  bool at_symbol(std::size_t k = 0) {
    const Token& t = peek(k);
    return t.kind == Tok::Var || (t.kind == Tok::Name && !is_keyword(t.text));
  }

  [[noreturn]] void fail(const Token& at, std::string message, std::vector<std::string> expected = {}) {
    throw ParseError(source_, at.line, at.column, std::move(message), std::move(expected));
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) {
    const Token& t = peek();
    fail(t, "unexpected " + describe(t), std::move(expected));
  }

  Token expect(Tok kind, const char* what) {
    if (!at(kind)) unexpected({what});
    return next();
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) unexpected({"'" + std::string(word) + "'"});
    next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  bool at_statement_end(std::size_t k = 0) {
    switch (peek(k).kind) {
      case Tok::Newline:
      case Tok::End:
      case Tok::Semicolon:
      case Tok::RBrace:
        return true;
      default:
        return false;
    }
  }

  void check_var(const Token& t) {
    if (t.kind == Tok::Var && !allow_vars_) fail(t, "variable ?" + t.text + " not allowed here");
  }

  // -- scopes ---------------------------------------------------------------

  std::size_t open_scope() {
    scopes_.emplace_back();
    current_scope_ = scopes_.size() - 1;
    return current_scope_;
  }

  void note_role(const Token& t) {
    if (t.kind == Tok::Var) {
      scopes_[current_scope_].role_vars.insert(t.text);
    } else {
      role_names_.insert(t.text);
    }
  }

  // -- grammar --------------------------------------------------------------

  Role role() {
    if (at_word("inverse")) {
      next();
      const Token& t = peek();
      if (t.kind != Tok::Name || is_keyword(t.text)) unexpected({"role name after 'inverse'"});
      Token name = next();
      note_role(name);
      return Role::inverse_of(name.text);
    }
    if (!at_symbol()) unexpected({"role"});
    Token t = next();
    check_var(t);
    note_role(t);
    return t.kind == Tok::Var ? Role::var(t.text) : Role::named(t.text);
  }

  Individual individual() {
    if (!at_symbol()) unexpected({"individual"});
    Token t = next();
    check_var(t);
    return t.kind == Tok::Var ? Individual::var(t.text) : Individual::named(t.text);
  }

  Concept concept_expr() {
    Concept first = conjunction();
    if (!at_word("or")) return first;
    std::vector<Concept> ops{std::move(first)};
    while (at_word("or")) {
      next();
      ops.push_back(conjunction());
    }
    return Concept::disjunction(std::move(ops));
  }

  Concept conjunction() {
    Concept first = unary();
    if (!at_word("and")) return first;
    std::vector<Concept> ops{std::move(first)};
    while (at_word("and")) {
      next();
      ops.push_back(unary());
    }
    return Concept::conjunction(std::move(ops));
  }

  bool at_restriction(std::size_t k) { return at_word("some", k) || at_word("only", k); }

  Concept unary() {
    if (at_word("not")) {
      next();
      return Concept::negation(unary());
    }
    if (at_word("inverse") || (at_symbol() && at_restriction(1))) {
      Role r = role();
      if (!at_restriction(0)) unexpected({"'some'", "'only'"});
      const bool some = next().text == "some";
      Concept filler = unary();
      return some ? Concept::some(std::move(r), std::move(filler))
                  : Concept::only(std::move(r), std::move(filler));
    }
    return atom();
  }

  Concept atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Concept c = concept_expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (t.kind == Tok::Var) {
      Token v = next();
      check_var(v);
      return Concept::var(v.text);
    }
    if (t.kind == Tok::Name) {
      if (t.text == "Thing") {
        next();
        return Concept::top();
      }
      if (t.text == "Nothing") {
        next();
        return Concept::bottom();
      }
      if (!is_keyword(t.text)) return Concept::name(next().text);
    }
    unexpected({"concept"});
  }

  std::vector<Axiom> role_axiom() {
    Role lhs = role();
    if (at_word("SubRoleOf")) {
      next();
      return {RoleInclusion{lhs, role()}};
    }
    if (at_word("EquivalentTo")) {
      next();
      Role rhs = role();
      return {RoleInclusion{lhs, rhs}, RoleInclusion{rhs, lhs}};
    }
    unexpected({"'SubRoleOf'", "'EquivalentTo'"});
  }

  RawStatement statement() {
    // R(a, b)
    if (at_symbol() && at(Tok::LParen, 1) && (at(Tok::Name, 2) || at(Tok::Var, 2)) && at(Tok::Comma, 3)) {
      Token r = next();
      check_var(r);
      note_role(r);
      next();
      Individual a = individual();
      expect(Tok::Comma, "','");
      Individual b = individual();
      expect(Tok::RParen, "')'");
      Role role = r.kind == Tok::Var ? Role::var(r.text) : Role::named(r.text);
      return std::vector<Axiom>{RoleAssertion{std::move(role), std::move(a), std::move(b)}};
    }
    if (at_word("inverse") && (at_word("SubRoleOf", 2) || at_word("EquivalentTo", 2))) return role_axiom();
    if (at_symbol() && at_word("SubRoleOf", 1)) return role_axiom();
    if (at_symbol() && at_word("EquivalentTo", 1)) {
      if (at_word("inverse", 2)) return role_axiom();
      if (at_symbol(2) && at_statement_end(3)) {
        Pending p;
        p.lhs = next();
        next();
        p.rhs = next();
        check_var(p.lhs);
        check_var(p.rhs);
        p.scope = current_scope_;
        return p;
      }
    }
    Concept lhs = concept_expr();
    if (at_word("SubClassOf")) {
      next();
      return std::vector<Axiom>{ConceptInclusion{std::move(lhs), concept_expr()}};
    }
    if (at_word("EquivalentTo")) {
      next();
      Concept rhs = concept_expr();
      return std::vector<Axiom>{ConceptInclusion{lhs, rhs}, ConceptInclusion{rhs, lhs}};
    }
    if (at(Tok::LParen)) {
      next();
      Individual a = individual();
      expect(Tok::RParen, "')'");
      return std::vector<Axiom>{ConceptAssertion{std::move(lhs), std::move(a)}};
    }
    unexpected({"'SubClassOf'", "'EquivalentTo'", "'('"});
  }

  void end_of_line() {
    if (!at(Tok::Newline) && !at(Tok::End)) unexpected({"end of line"});
    if (at(Tok::Newline)) next();
  }

  // -- ambiguity resolution -------------------------------------------------

  bool token_is_role(const Token& t, std::size_t scope, const VarSet& declared) {
    if (t.kind == Tok::Var) {
      auto it = declared.find(t.text);
      if (it != declared.end()) return it->second == VarType::Role;
      return scopes_[scope].role_vars.contains(t.text);
    }
    return role_names_.contains(t.text);
  }

  /// Fixes the role set: a bare equivalence touching a role makes both sides roles.
  void settle_roles(const std::vector<const Pending*>& pendings, const VarSet& declared) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Pending* p : pendings) {
        if (token_is_role(p->lhs, p->scope, declared) || token_is_role(p->rhs, p->scope, declared)) {
          for (const Token* t : {&p->lhs, &p->rhs}) {
            const std::size_t before = role_names_.size() + scopes_[p->scope].role_vars.size();
            current_scope_ = p->scope;
            note_role(*t);
            if (role_names_.size() + scopes_[p->scope].role_vars.size() != before) changed = true;
          }
        }
      }
    }
  }

  std::vector<Axiom> resolve(const RawStatement& raw, const VarSet& declared) {
    if (const auto* ready = std::get_if<std::vector<Axiom>>(&raw)) return *ready;
    const auto& p = std::get<Pending>(raw);
    auto as_role = [](const Token& t) { return t.kind == Tok::Var ? Role::var(t.text) : Role::named(t.text); };
    auto as_concept = [](const Token& t) {
      return t.kind == Tok::Var ? Concept::var(t.text) : Concept::name(t.text);
    };
    if (token_is_role(p.lhs, p.scope, declared) || token_is_role(p.rhs, p.scope, declared)) {
      return {RoleInclusion{as_role(p.lhs), as_role(p.rhs)}, RoleInclusion{as_role(p.rhs), as_role(p.lhs)}};
    }
    return {ConceptInclusion{as_concept(p.lhs), as_concept(p.rhs)},
            ConceptInclusion{as_concept(p.rhs), as_concept(p.lhs)}};
  }

  static void collect_pending(const std::vector<RawStatement>& raws, std::vector<const Pending*>& out) {
    for (const auto& r : raws) {
      if (const auto* p = std::get_if<Pending>(&r)) out.push_back(p);
    }
  }

  // -- documents ------------------------------------------------------------

  Ontology ontology() {
    std::vector<RawStatement> raws;
    for (;;) {
      skip_newlines();
      if (at(Tok::End)) break;
      raws.push_back(statement());
      end_of_line();
    }
    std::vector<const Pending*> pendings;
    collect_pending(raws, pendings);
    settle_roles(pendings, {});
    Ontology out;
    for (const auto& raw : raws) {
      for (const auto& a : resolve(raw, {})) out.insert(a);
    }
    return out;
  }

  /// Statements up to a closing brace (not consumed) separated by ';'.
  std::vector<RawStatement> block_body() {
    std::vector<RawStatement> raws;
    while (!at(Tok::RBrace)) {
      if (at(Tok::Semicolon)) {
        next();
        continue;
      }
      raws.push_back(statement());
      if (at(Tok::Semicolon)) {
        next();
      } else if (!at(Tok::RBrace)) {
        unexpected({"';'", "'}'"});
      }
    }
    return raws;
  }

  std::vector<RawStatement> block() {
    expect(Tok::LBrace, "'{'");
    auto raws = block_body();
    expect(Tok::RBrace, "'}'");
    return raws;
  }

  Template build_template(const std::vector<RawStatement>& raws, const VarSet& declared) {
    AxiomSet axioms;
    for (const auto& raw : raws) {
      for (auto& a : resolve(raw, declared)) axioms.insert(std::move(a));
    }
    return Template(axioms, declared);
  }

  Template template_doc() {
    const bool braced = at(Tok::LBrace);
    std::vector<RawStatement> raws;
    if (braced) {
      raws = block();
    } else {
      line_mode_ = true;
      for (;;) {
        while (at(Tok::Newline) || at(Tok::Semicolon)) next();
        if (at(Tok::End)) break;
        raws.push_back(statement());
        if (!at(Tok::Semicolon) && !at(Tok::Newline) && !at(Tok::End)) unexpected({"';'", "end of line"});
      }
    }
    line_mode_ = false;
    if (!at(Tok::End)) unexpected({"end of input"});
    std::vector<const Pending*> pendings;
    collect_pending(raws, pendings);
    settle_roles(pendings, {});
    return build_template(raws, {});
  }

  Axiom single_axiom() {
    skip_newlines();
    RawStatement raw = statement();
    skip_newlines();
    if (!at(Tok::End)) unexpected({"end of input"});
    auto axioms = resolve(raw, {});
    if (axioms.size() != 1) {
      throw ParseError(source_, 1, 1, "expected a single axiom; EquivalentTo denotes two inclusions");
    }
    return axioms.front();
  }

  Concept single_concept() {
    skip_newlines();
    Concept c = concept_expr();
    skip_newlines();
    if (!at(Tok::End)) unexpected({"end of input"});
    return c;
  }

  LanguageSpec language() {
    enum class Section { None, Concepts, Roles, Individuals } section = Section::None;
    std::vector<Concept> concepts;
    std::vector<Role> roles;
    std::vector<std::string> individuals;
    for (;;) {
      skip_newlines();
      if (at(Tok::End)) break;
      if (at(Tok::Name) && at(Tok::Colon, 1)) {
        const Token& t = peek();
        if (t.text == "concepts") {
          section = Section::Concepts;
        } else if (t.text == "roles") {
          section = Section::Roles;
        } else if (t.text == "individuals") {
          section = Section::Individuals;
        } else {
          fail(t, "unknown section '" + t.text + "'", {"'concepts:'", "'roles:'", "'individuals:'"});
        }
        next();
        next();
        end_of_line();
        continue;
      }
      switch (section) {
        case Section::None:
          unexpected({"'concepts:'", "'roles:'", "'individuals:'"});
        case Section::Concepts:
          concepts.push_back(concept_expr());
          break;
        case Section::Roles:
          roles.push_back(role());
          break;
        case Section::Individuals: {
          const Token& t = peek();
          if (t.kind != Tok::Name || is_keyword(t.text)) unexpected({"individual name"});
          individuals.push_back(next().text);
          break;
        }
      }
      end_of_line();
    }
    return LanguageSpec(std::move(concepts), std::move(roles), std::move(individuals));
  }

  struct RawGenerator {
    Token name;
    std::size_t scope = 0;
    std::vector<RawStatement> positive;
    std::vector<std::vector<RawStatement>> negative;
    std::vector<RawStatement> head;
  };

  GBox gbox() {
    std::vector<RawGenerator> raws;
    VarSet declared;
    for (;;) {
      if (at(Tok::End)) break;
      if (at_word("gen")) {
        next();
        RawGenerator g;
        if (!at(Tok::Name) || is_keyword(peek().text)) unexpected({"generator name"});
        g.name = next();
        expect(Tok::Colon, "':'");
        g.scope = open_scope();
        g.positive = block();
        while (at(Tok::Comma)) {
          next();
          expect_word("not");
          g.negative.push_back(block());
        }
        expect(Tok::Arrow, "'=>'");
        g.head = block();
        raws.push_back(std::move(g));
        continue;
      }
      if (at_word("declare")) {
        next();
        VarType type;
        if (at_word("concept")) {
          type = VarType::Concept;
        } else if (at_word("role")) {
          type = VarType::Role;
        } else if (at_word("individual")) {
          type = VarType::Individual;
        } else {
          unexpected({"'concept'", "'role'", "'individual'"});
        }
        next();
        for (;;) {
          Token v = expect(Tok::Var, "variable");
          auto [it, inserted] = declared.emplace(v.text, type);
          if (!inserted && it->second != type) fail(v, "conflicting declarations for ?" + v.text);
          if (!at(Tok::Comma)) break;
          next();
        }
        continue;
      }
      unexpected({"'gen'", "'declare'"});
    }

    std::vector<const Pending*> pendings;
    for (const auto& g : raws) {
      collect_pending(g.positive, pendings);
      for (const auto& n : g.negative) collect_pending(n, pendings);
      collect_pending(g.head, pendings);
    }
    settle_roles(pendings, declared);

    std::vector<Generator> generators;
    for (const auto& g : raws) {
      try {
        Template positive = build_template(g.positive, declared);
        std::vector<Template> negative;
        for (const auto& n : g.negative) negative.push_back(build_template(n, declared));
        Template head = build_template(g.head, declared);
        generators.emplace_back(g.name.text, std::move(positive), std::move(negative), std::move(head));
      } catch (const TypeError& e) {
        fail(g.name, e.what());
      }
    }
    try {
      return GBox(std::move(generators));
    } catch (const TypeError& e) {
      throw ParseError(source_, 1, 1, e.what());
    }
  }

 private:
  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool line_mode_;
  bool allow_vars_;
  std::set<std::string> role_names_;
  std::vector<Scope> scopes_;
  std::size_t current_scope_ = 0;
};

template <typename F>
auto with_type_errors_as_parse_errors(const ParseOptions& options, F&& f) {
  try {
    return f();
  } catch (const TypeError& e) {
    throw ParseError(options.source_name, 1, 1, e.what());
  }
}

}  // namespace

Ontology parse_ontology(std::string_view text, const ParseOptions& options) {
  Parser p(text, options, true, false);
  return p.ontology();
}

Template parse_template(std::string_view text, const ParseOptions& options) {
  return with_type_errors_as_parse_errors(options, [&] {
    Parser p(text, options, false, true);
    return p.template_doc();
  });
}

Axiom parse_axiom(std::string_view text, const ParseOptions& options) {
  Parser p(text, options, false, true);
  return canonicalize(p.single_axiom());
}

Concept parse_concept(std::string_view text, const ParseOptions& options) {
  Parser p(text, options, false, true);
  return canonicalize(p.single_concept());
}

LanguageSpec parse_language(std::string_view text, const ParseOptions& options) {
  Parser p(text, options, true, false);
  return p.language();
}

GBox parse_gbox(std::string_view text, const ParseOptions& options) {
  Parser p(text, options, false, true);
  return p.gbox();
}

std::set<std::string> role_names_of(const LanguageSpec& language) {
  std::set<std::string> out;
  for (const auto& r : language.roles()) out.insert(r.name());
  return out;
}

}  // namespace gbox
