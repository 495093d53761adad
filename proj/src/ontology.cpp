#include "gbox/ontology.hpp"

#include <algorithm>

#include "gbox/errors.hpp"

namespace gbox {

// ---------------------------------------------------------------------------
// Ontology

Ontology::Ontology(const AxiomSet& axioms) {
  for (const auto& a : axioms) insert(a);
}

Ontology::Ontology(std::initializer_list<Axiom> axioms) {
  for (const auto& a : axioms) insert(a);
}

bool Ontology::insert(const Axiom& axiom) {
  if (!is_ground(axiom)) throw TypeError("ontology axioms must not contain variables");
  return axioms_.insert(canonicalize(axiom)).second;
}

void Ontology::insert(const Ontology& other) { axioms_.insert(other.begin(), other.end()); }

bool Ontology::contains(const Axiom& axiom) const { return axioms_.contains(canonicalize(axiom)); }

bool Ontology::includes(const Ontology& other) const {
  return std::includes(axioms_.begin(), axioms_.end(), other.axioms_.begin(), other.axioms_.end());
}

std::uint64_t Ontology::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& a : axioms_) {
    h ^= hash_value(a);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return h ^ axioms_.size();
}

Ontology united(const Ontology& a, const Ontology& b) {
  Ontology out = a;
  out.insert(b);
  return out;
}

Ontology difference(const Ontology& a, const Ontology& b) {
  Ontology out;
  for (const auto& ax : a) {
    if (!b.contains(ax)) out.insert(ax);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variables

namespace {

void note(VarSet& vars, const std::string& name, VarType type) {
  auto [it, inserted] = vars.emplace(name, type);
  if (!inserted && it->second != type) {
    throw TypeError("variable ?" + name + " used both as " + to_string(it->second) + " and " +
                    to_string(type));
  }
}

void collect(VarSet& vars, const Role& r) {
  if (r.is_var()) note(vars, r.name(), VarType::Role);
}

void collect(VarSet& vars, const Individual& i) {
  if (i.is_var) note(vars, i.name, VarType::Individual);
}

void collect(VarSet& vars, const Concept& c) {
  if (c.is_ground()) return;
  switch (c.kind()) {
    case Concept::Kind::Var:
      note(vars, c.name(), VarType::Concept);
      return;
    case Concept::Kind::Exists:
    case Concept::Kind::Forall:
      collect(vars, c.role());
      break;
    default:
      break;
  }
  for (const auto& op : c.operands()) collect(vars, op);
}

void collect(VarSet& vars, const Axiom& a) {
  std::visit(
      [&vars](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          collect(vars, ax.sub);
          collect(vars, ax.sup);
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          collect(vars, ax.sub);
          collect(vars, ax.sup);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          collect(vars, ax.expr);
          collect(vars, ax.individual);
        } else {
          collect(vars, ax.role);
          collect(vars, ax.subject);
          collect(vars, ax.object);
        }
      },
      a);
}

}  // namespace

VarSet variables_of(const AxiomSet& axioms) {
  VarSet vars;
  for (const auto& a : axioms) collect(vars, a);
  return vars;
}

VarSet variables_of(const Template& t) { return t.vars(); }

// ---------------------------------------------------------------------------
// Template

Template::Template(const AxiomSet& axioms, const VarSet& declared) {
  for (const auto& a : axioms) axioms_.insert(canonicalize(a));
  vars_ = variables_of(axioms_);
  for (const auto& [name, type] : vars_) {
    auto it = declared.find(name);
    if (it != declared.end() && it->second != type) {
      throw TypeError("variable ?" + name + " declared " + to_string(it->second) + " but used as " +
                      to_string(type));
    }
  }
}

Template::Template(std::initializer_list<Axiom> axioms) : Template(AxiomSet(axioms)) {}

// ---------------------------------------------------------------------------
// Substitution

VarType type_of(const Term& term) noexcept {
  switch (term.index()) {
    case 0: return VarType::Concept;
    case 1: return VarType::Role;
    default: return VarType::Individual;
  }
}

namespace {

struct Substituter {
  const Substitution& s;
  bool partial;

  const Term* lookup(const std::string& name, VarType type) const {
    auto it = s.find(name);
    if (it == s.end()) {
      if (partial) return nullptr;
      throw TypeError("unbound variable ?" + name);
    }
    if (type_of(it->second) != type) {
      throw TypeError("variable ?" + name + " of type " + to_string(type) + " bound to a " +
                      to_string(type_of(it->second)));
    }
    if (type != VarType::Individual) {
      bool ground = type == VarType::Concept ? std::get<Concept>(it->second).is_ground()
                                             : is_ground(std::get<Role>(it->second));
      if (!ground) throw TypeError("variable ?" + name + " bound to a non-ground value");
    }
    return &it->second;
  }

  Role operator()(const Role& r) const {
    if (!r.is_var()) return r;
    const Term* t = lookup(r.name(), VarType::Role);
    return t ? std::get<Role>(*t) : r;
  }

  Individual operator()(const Individual& i) const {
    if (!i.is_var) return i;
    const Term* t = lookup(i.name, VarType::Individual);
    return t ? Individual::named(std::get<std::string>(*t)) : i;
  }

  Concept operator()(const Concept& c) const {
    if (c.is_ground()) return c;
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Var: {
        const Term* t = lookup(c.name(), VarType::Concept);
        return t ? std::get<Concept>(*t) : c;
      }
      case K::Not:
        return Concept::negation((*this)(c.operand()));
      case K::And:
      case K::Or: {
        std::vector<Concept> ops;
        ops.reserve(c.operands().size());
        for (const auto& op : c.operands()) ops.push_back((*this)(op));
        return c.kind() == K::And ? Concept::conjunction(std::move(ops))
                                  : Concept::disjunction(std::move(ops));
      }
      case K::Exists:
        return Concept::some((*this)(c.role()), (*this)(c.operand()));
      case K::Forall:
        return Concept::only((*this)(c.role()), (*this)(c.operand()));
      default:
        return c;
    }
  }

  Axiom operator()(const Axiom& a) const {
    return std::visit(
        [this](const auto& ax) -> Axiom {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            return ConceptInclusion{(*this)(ax.sub), (*this)(ax.sup)};
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            return RoleInclusion{(*this)(ax.sub), (*this)(ax.sup)};
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            return ConceptAssertion{(*this)(ax.expr), (*this)(ax.individual)};
          } else {
            return RoleAssertion{(*this)(ax.role), (*this)(ax.subject), (*this)(ax.object)};
          }
        },
        a);
  }
};

}  // namespace

Axiom substitute(const Axiom& axiom, const Substitution& s, bool partial) {
  return canonicalize(Substituter{s, partial}(axiom));
}

Ontology apply_substitution(const Template& t, const Substitution& s) {
  Ontology out;
  Substituter sub{s, false};
  for (const auto& a : t.axioms()) out.insert(canonicalize(sub(a)));
  return out;
}

Template apply_partial(const Template& t, const Substitution& s) {
  AxiomSet out;
  Substituter sub{s, true};
  for (const auto& a : t.axioms()) out.insert(canonicalize(sub(a)));
  return Template(out);
}

Substitution restrict(const Substitution& s, const VarSet& vars) {
  Substitution out;
  for (const auto& [name, type] : vars) {
    auto it = s.find(name);
    if (it != s.end()) out.emplace(name, it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LanguageSpec

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

LanguageSpec::LanguageSpec(std::vector<Concept> concepts, std::vector<Role> roles,
                           std::vector<std::string> individuals) {
  for (auto& c : concepts) {
    if (!c.is_ground()) throw TypeError("language entries must be ground");
    c = canonicalize(c);
  }
  for (const auto& r : roles) {
    if (r.is_var()) throw TypeError("language entries must be ground");
  }
  concepts_ = sorted_unique(std::move(concepts));
  roles_ = sorted_unique(std::move(roles));
  individuals_ = sorted_unique(std::move(individuals));
}

std::size_t LanguageSpec::count(VarType type) const noexcept {
  switch (type) {
    case VarType::Concept:    return concepts_.size();
    case VarType::Role:       return roles_.size();
    case VarType::Individual: return individuals_.size();
  }
  return 0;
}

LanguageSpec LanguageSpec::with(const LanguageSpec& extra) const {
  auto concepts = concepts_;
  concepts.insert(concepts.end(), extra.concepts_.begin(), extra.concepts_.end());
  auto roles = roles_;
  roles.insert(roles.end(), extra.roles_.begin(), extra.roles_.end());
  auto individuals = individuals_;
  individuals.insert(individuals.end(), extra.individuals_.begin(), extra.individuals_.end());
  return LanguageSpec(std::move(concepts), std::move(roles), std::move(individuals));
}

}  // namespace gbox
