#include "gbox/printer.hpp"

#include <sstream>

namespace gbox {

namespace {

// 0: top level, 1: operand of `or`, 2: operand of `and` or of a unary constructor.
void print(std::string& out, const Concept& c, int ctx) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Name:
      out += c.name();
      return;
    case K::Var:
      out += '?';
      out += c.name();
      return;
    case K::Top:
      out += "Thing";
      return;
    case K::Bottom:
      out += "Nothing";
      return;
    case K::Not:
      out += "not ";
      print(out, c.operand(), 2);
      return;
    case K::Exists:
    case K::Forall:
      out += to_string(c.role());
      out += c.kind() == K::Exists ? " some " : " only ";
      print(out, c.operand(), 2);
      return;
    case K::And:
    case K::Or: {
      const bool is_or = c.kind() == K::Or;
      const bool parens = ctx >= (is_or ? 1 : 2);
      if (parens) out += '(';
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += is_or ? " or " : " and ";
        first = false;
        print(out, op, is_or ? 1 : 2);
      }
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Role& r) {
  switch (r.kind()) {
    case Role::Kind::Name:    return r.name();
    case Role::Kind::Inverse: return "inverse " + r.name();
    case Role::Kind::Var:     return "?" + r.name();
  }
  return {};
}

std::string to_string(const Concept& c) {
  std::string out;
  print(out, c, 0);
  return out;
}

std::string to_string(const Individual& i) { return i.is_var ? "?" + i.name : i.name; }

std::string to_string(const Axiom& a) {
  return std::visit(
      [](const auto& ax) -> std::string {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return to_string(ax.sub) + " SubClassOf " + to_string(ax.sup);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return to_string(ax.sub) + " SubRoleOf " + to_string(ax.sup);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          std::string c = to_string(ax.expr);
          if (!ax.expr.is_atomic()) c = "(" + c + ")";
          return c + "(" + to_string(ax.individual) + ")";
        } else {
          return to_string(ax.role) + "(" + to_string(ax.subject) + ", " + to_string(ax.object) + ")";
        }
      },
      a);
}

std::string to_string(const Term& t) {
  switch (type_of(t)) {
    case VarType::Concept: return to_string(std::get<Concept>(t));
    case VarType::Role:    return to_string(std::get<Role>(t));
    default:               return std::get<std::string>(t);
  }
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, term] : s) {
    if (!first) out += ", ";
    first = false;
    out += "?" + name + " -> " + to_string(term);
  }
  return out + "}";
}

namespace {

template <typename Range>
std::string braced(const Range& axioms) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : axioms) {
    if (!first) out += "; ";
    first = false;
    out += to_string(a);
  }
  return out + "}";
}

}  // namespace

std::string to_string(const Template& t) { return braced(t.axioms()); }
std::string to_string(const Ontology& o) { return braced(o.axioms()); }

void write_ontology(std::ostream& out, const Ontology& o) {
  for (const auto& a : o) out << to_string(a) << '\n';
}

void write_template(std::ostream& out, const Template& t) { out << to_string(t); }

void write_generator(std::ostream& out, const Generator& g) {
  out << "gen " << g.name() << ": " << to_string(g.positive_body());
  for (const auto& n : g.negative_bodies()) out << ", not " << to_string(n);
  out << " => " << to_string(g.head()) << '\n';
}

void write_gbox(std::ostream& out, const GBox& g) {
  for (const auto& gen : g) write_generator(out, gen);
}

void write_language(std::ostream& out, const LanguageSpec& l) {
  out << "concepts:\n";
  for (const auto& c : l.concepts()) out << to_string(c) << '\n';
  out << "roles:\n";
  for (const auto& r : l.roles()) out << to_string(r) << '\n';
  out << "individuals:\n";
  for (const auto& i : l.individuals()) out << i << '\n';
}

}  // namespace gbox
