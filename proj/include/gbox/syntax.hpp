#pragma once

// Abstract syntax of the description logic fragment (ALC with inverse roles
// and role inclusions), possibly containing typed variables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gbox {

enum class VarType : std::uint8_t { Individual, Concept, Role };

const char* to_string(VarType type) noexcept;

class Role {
 public:
  enum class Kind : std::uint8_t { Name, Inverse, Var };

  Role() = default;

  static Role named(std::string name);
  static Role inverse_of(std::string name);
  static Role var(std::string name);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_var() const noexcept { return kind_ == Kind::Var; }
  bool is_inverse() const noexcept { return kind_ == Kind::Inverse; }

  /// Inverse of a ground role; inverse(inverse(R)) == R. Throws on variables.
  Role inverse() const;

  friend auto operator<=>(const Role&, const Role&) = default;
  friend bool operator==(const Role&, const Role&) = default;

 private:
  Role(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_ = Kind::Name;
  std::string name_;
};

/// Immutable concept expression tree with structural sharing.
///
/// The factory functions build exactly the requested shape; `canonicalize`
/// produces the normal form (flattened, sorted, duplicate-free And/Or, no
/// double negation). Ordering is by constructor tag, then children, then
/// names, which is the canonical ordering used for every set in the library.
class Concept {
 public:
  enum class Kind : std::uint8_t { Name, Top, Bottom, Not, And, Or, Exists, Forall, Var };

  Concept();  // Top

  static Concept name(std::string name);
  static Concept var(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept operand);
  static Concept conjunction(std::vector<Concept> operands);
  static Concept disjunction(std::vector<Concept> operands);
  static Concept some(Role role, Concept filler);
  static Concept only(Role role, Concept filler);

  Kind kind() const noexcept;
  /// Name of a concept name or variable; empty otherwise.
  const std::string& name() const noexcept;
  /// Role of an Exists/Forall.
  const Role& role() const noexcept;
  /// Operands of And/Or; the single operand of Not/Exists/Forall.
  std::span<const Concept> operands() const noexcept;
  const Concept& operand() const noexcept;

  bool is_atomic() const noexcept;
  bool is_ground() const noexcept;
  std::size_t hash() const noexcept;

  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);
  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept make(Kind kind, std::string name, Role role, std::vector<Concept> operands);

  std::shared_ptr<const Node> node_;
};

struct Individual {
  std::string name;
  bool is_var = false;

  static Individual named(std::string n) { return {std::move(n), false}; }
  static Individual var(std::string n) { return {std::move(n), true}; }

  friend auto operator<=>(const Individual&, const Individual&) = default;
  friend bool operator==(const Individual&, const Individual&) = default;
};

struct ConceptInclusion {
  Concept sub;
  Concept sup;
  friend auto operator<=>(const ConceptInclusion&, const ConceptInclusion&) = default;
  friend bool operator==(const ConceptInclusion&, const ConceptInclusion&) = default;
};

struct RoleInclusion {
  Role sub;
  Role sup;
  friend auto operator<=>(const RoleInclusion&, const RoleInclusion&) = default;
  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};

struct ConceptAssertion {
  Concept expr;
  Individual individual;
  friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

/// After canonicalization `role` is never an inverse.
struct RoleAssertion {
  Role role;
  Individual subject;
  Individual object;
  friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Axiom = std::variant<ConceptInclusion, RoleInclusion, ConceptAssertion, RoleAssertion>;

Concept canonicalize(const Concept& c);
Role canonicalize(const Role& r);
Axiom canonicalize(const Axiom& a);

bool is_ground(const Role& r) noexcept;
bool is_ground(const Axiom& a) noexcept;

std::size_t hash_value(const Role& r) noexcept;
std::size_t hash_value(const Axiom& a) noexcept;

struct AxiomHash {
  std::size_t operator()(const Axiom& a) const noexcept { return hash_value(a); }
};

}  // namespace gbox
