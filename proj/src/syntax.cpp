#include "gbox/syntax.hpp"

#include <algorithm>
#include <functional>

#include "gbox/errors.hpp"

namespace gbox {

namespace {

inline void hash_combine(std::size_t& seed, std::size_t v) noexcept {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

const char* to_string(VarType type) noexcept {
  switch (type) {
    case VarType::Individual: return "individual";
    case VarType::Concept:    return "concept";
    case VarType::Role:       return "role";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Role

Role Role::named(std::string name) { return Role(Kind::Name, std::move(name)); }
Role Role::inverse_of(std::string name) { return Role(Kind::Inverse, std::move(name)); }
Role Role::var(std::string name) { return Role(Kind::Var, std::move(name)); }

Role Role::inverse() const {
  switch (kind_) {
    case Kind::Name:    return inverse_of(name_);
    case Kind::Inverse: return named(name_);
    case Kind::Var:     break;
  }
  throw TypeError("cannot invert role variable ?" + name_);
}

bool is_ground(const Role& r) noexcept { return !r.is_var(); }

std::size_t hash_value(const Role& r) noexcept {
  std::size_t h = std::hash<std::string>{}(r.name());
  hash_combine(h, static_cast<std::size_t>(r.kind()));
  return h;
}

Role canonicalize(const Role& r) { return r; }

// ---------------------------------------------------------------------------
// Concept

struct Concept::Node {
  Kind kind;
  std::string name;
  Role role;
  std::vector<Concept> operands;
  std::size_t hash = 0;
  bool ground = true;
};

Concept Concept::make(Kind kind, std::string name, Role role, std::vector<Concept> operands) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->role = std::move(role);
  node->operands = std::move(operands);

  std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
  hash_combine(h, std::hash<std::string>{}(node->name));
  bool ground = kind != Kind::Var;
  if (kind == Kind::Exists || kind == Kind::Forall) {
    hash_combine(h, hash_value(node->role));
    ground = ground && !node->role.is_var();
  }
  for (const auto& op : node->operands) {
    hash_combine(h, op.hash());
    ground = ground && op.is_ground();
  }
  node->hash = h;
  node->ground = ground;
  return Concept(std::move(node));
}

Concept::Concept() : Concept(top()) {}

Concept Concept::name(std::string name) { return make(Kind::Name, std::move(name), {}, {}); }
Concept Concept::var(std::string name) { return make(Kind::Var, std::move(name), {}, {}); }

Concept Concept::top() {
  static const Concept t = make(Kind::Top, {}, {}, {});
  return t;
}

Concept Concept::bottom() {
  static const Concept b = make(Kind::Bottom, {}, {}, {});
  return b;
}

Concept Concept::negation(Concept operand) {
  std::vector<Concept> ops;
  ops.push_back(std::move(operand));
  return make(Kind::Not, {}, {}, std::move(ops));
}

Concept Concept::conjunction(std::vector<Concept> operands) {
  return make(Kind::And, {}, {}, std::move(operands));
}

Concept Concept::disjunction(std::vector<Concept> operands) {
  return make(Kind::Or, {}, {}, std::move(operands));
}

Concept Concept::some(Role role, Concept filler) {
  std::vector<Concept> ops;
  ops.push_back(std::move(filler));
  return make(Kind::Exists, {}, std::move(role), std::move(ops));
}

Concept Concept::only(Role role, Concept filler) {
  std::vector<Concept> ops;
  ops.push_back(std::move(filler));
  return make(Kind::Forall, {}, std::move(role), std::move(ops));
}

Concept::Kind Concept::kind() const noexcept { return node_->kind; }
const std::string& Concept::name() const noexcept { return node_->name; }
const Role& Concept::role() const noexcept { return node_->role; }
std::span<const Concept> Concept::operands() const noexcept { return node_->operands; }
const Concept& Concept::operand() const noexcept { return node_->operands.front(); }
std::size_t Concept::hash() const noexcept { return node_->hash; }
bool Concept::is_ground() const noexcept { return node_->ground; }

bool Concept::is_atomic() const noexcept {
  switch (node_->kind) {
    case Kind::Name:
    case Kind::Var:
    case Kind::Top:
    case Kind::Bottom:
      return true;
    default:
      return false;
  }
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  const auto& ao = a.node_->operands;
  const auto& bo = b.node_->operands;
  const std::size_t n = std::min(ao.size(), bo.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ao[i] <=> bo[i]; c != 0) return c;
  }
  if (auto c = ao.size() <=> bo.size(); c != 0) return c;
  if (auto c = a.node_->role <=> b.node_->role; c != 0) return c;
  return a.node_->name <=> b.node_->name;
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

// ---------------------------------------------------------------------------
// Canonical forms

Concept canonicalize(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Name:
    case K::Var:
    case K::Top:
    case K::Bottom:
      return c;
    case K::Not: {
      Concept inner = canonicalize(c.operand());
      if (inner.kind() == K::Not) return inner.operand();
      return Concept::negation(std::move(inner));
    }
    case K::And:
    case K::Or: {
      std::vector<Concept> flat;
      for (const auto& op : c.operands()) {
        Concept cop = canonicalize(op);
        if (cop.kind() == c.kind()) {
          flat.insert(flat.end(), cop.operands().begin(), cop.operands().end());
        } else {
          flat.push_back(std::move(cop));
        }
      }
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      if (flat.empty()) return c.kind() == K::And ? Concept::top() : Concept::bottom();
      if (flat.size() == 1) return flat.front();
      return c.kind() == K::And ? Concept::conjunction(std::move(flat))
                                : Concept::disjunction(std::move(flat));
    }
    case K::Exists:
      return Concept::some(c.role(), canonicalize(c.operand()));
    case K::Forall:
      return Concept::only(c.role(), canonicalize(c.operand()));
  }
  return c;
}

namespace {

struct Canonicalizer {
  Axiom operator()(const ConceptInclusion& ci) const {
    return ConceptInclusion{canonicalize(ci.sub), canonicalize(ci.sup)};
  }
  Axiom operator()(const RoleInclusion& ri) const {
    // R- <= S and R <= S- are the same statement; keep the left side plain.
    if (ri.sub.is_inverse() && !ri.sup.is_var()) {
      return RoleInclusion{ri.sub.inverse(), ri.sup.inverse()};
    }
    return ri;
  }
  Axiom operator()(const ConceptAssertion& ca) const {
    return ConceptAssertion{canonicalize(ca.expr), ca.individual};
  }
  Axiom operator()(const RoleAssertion& ra) const {
    if (ra.role.is_inverse()) return RoleAssertion{ra.role.inverse(), ra.object, ra.subject};
    return ra;
  }
};

struct GroundCheck {
  bool operator()(const ConceptInclusion& ci) const { return ci.sub.is_ground() && ci.sup.is_ground(); }
  bool operator()(const RoleInclusion& ri) const { return is_ground(ri.sub) && is_ground(ri.sup); }
  bool operator()(const ConceptAssertion& ca) const { return ca.expr.is_ground() && !ca.individual.is_var; }
  bool operator()(const RoleAssertion& ra) const {
    return is_ground(ra.role) && !ra.subject.is_var && !ra.object.is_var;
  }
};

std::size_t hash_individual(const Individual& i) noexcept {
  std::size_t h = std::hash<std::string>{}(i.name);
  hash_combine(h, i.is_var ? 1 : 0);
  return h;
}

}  // namespace

Axiom canonicalize(const Axiom& a) { return std::visit(Canonicalizer{}, a); }

bool is_ground(const Axiom& a) noexcept { return std::visit(GroundCheck{}, a); }

std::size_t hash_value(const Axiom& a) noexcept {
  std::size_t h = a.index();
  std::visit(
      [&h](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          hash_combine(h, ax.sub.hash());
          hash_combine(h, ax.sup.hash());
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          hash_combine(h, hash_value(ax.sub));
          hash_combine(h, hash_value(ax.sup));
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          hash_combine(h, ax.expr.hash());
          hash_combine(h, hash_individual(ax.individual));
        } else {
          hash_combine(h, hash_value(ax.role));
          hash_combine(h, hash_individual(ax.subject));
          hash_combine(h, hash_individual(ax.object));
        }
      },
      a);
  return h;
}

}  // namespace gbox
