#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gbox/syntax.hpp"

namespace gbox {

using AxiomSet = std::set<Axiom>;

/// Typed variable set; a variable name has exactly one type.
using VarSet = std::map<std::string, VarType>;

/// Finite canonical set of ground axioms.
class Ontology {
 public:
  Ontology() = default;
  /// Canonicalizes every axiom; throws TypeError if one contains a variable.
  explicit Ontology(const AxiomSet& axioms);
  Ontology(std::initializer_list<Axiom> axioms);

  /// Returns true if the (canonicalized) axiom was new.
  bool insert(const Axiom& axiom);
  void insert(const Ontology& other);

  const AxiomSet& axioms() const noexcept { return axioms_; }
  std::size_t size() const noexcept { return axioms_.size(); }
  bool empty() const noexcept { return axioms_.empty(); }
  bool contains(const Axiom& axiom) const;
  /// Syntactic superset test over canonical axioms.
  bool includes(const Ontology& other) const;

  auto begin() const { return axioms_.begin(); }
  auto end() const { return axioms_.end(); }

  /// Order-sensitive 64-bit digest of the canonical axiom sequence.
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const Ontology&, const Ontology&) = default;

 private:
  AxiomSet axioms_;
};

Ontology united(const Ontology& a, const Ontology& b);
/// Axioms of `a` that are not in `b`.
Ontology difference(const Ontology& a, const Ontology& b);

/// Exact variable set of an axiom collection with types inferred from position.
/// Throws TypeError when a name is used at two different kinds of position.
VarSet variables_of(const AxiomSet& axioms);

/// Ontology with free typed variables.
class Template {
 public:
  Template() = default;
  /// `declared` pins variable types; a use contradicting a declaration is a TypeError.
  explicit Template(const AxiomSet& axioms, const VarSet& declared = {});
  Template(std::initializer_list<Axiom> axioms);

  const AxiomSet& axioms() const noexcept { return axioms_; }
  const VarSet& vars() const noexcept { return vars_; }
  bool empty() const noexcept { return axioms_.empty(); }
  bool is_ground() const noexcept { return vars_.empty(); }

  friend bool operator==(const Template& a, const Template& b) { return a.axioms_ == b.axioms_; }
  friend auto operator<=>(const Template& a, const Template& b) { return a.axioms_ <=> b.axioms_; }

 private:
  AxiomSet axioms_;
  VarSet vars_;
};

VarSet variables_of(const Template& t);

/// Value bound to a variable: a concept, a role, or an individual name.
using Term = std::variant<Concept, Role, std::string>;

VarType type_of(const Term& term) noexcept;

using Substitution = std::map<std::string, Term>;

/// Instantiates `axiom` with `s`; the result is canonical but may still contain
/// variables outside the domain of `s` when `partial` is set.
Axiom substitute(const Axiom& axiom, const Substitution& s, bool partial = false);

/// T sigma. Throws TypeError on unbound variables or type-violating bindings.
Ontology apply_substitution(const Template& t, const Substitution& s);

/// Instantiates the variables bound by `s` and leaves the rest in place.
Template apply_partial(const Template& t, const Substitution& s);

/// Restriction of `s` to the variables in `vars`.
Substitution restrict(const Substitution& s, const VarSet& vars);

/// The finite language: admissible substitution targets, canonical and
/// duplicate-free, in canonical order.
class LanguageSpec {
 public:
  LanguageSpec() = default;
  LanguageSpec(std::vector<Concept> concepts, std::vector<Role> roles,
               std::vector<std::string> individuals);

  const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  const std::vector<Role>& roles() const noexcept { return roles_; }
  const std::vector<std::string>& individuals() const noexcept { return individuals_; }

  /// Total entry count |L|.
  std::size_t size() const noexcept { return concepts_.size() + roles_.size() + individuals_.size(); }
  /// Number of admissible values for a variable of the given type.
  std::size_t count(VarType type) const noexcept;

  LanguageSpec with(const LanguageSpec& extra) const;

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;

 private:
  std::vector<Concept> concepts_;
  std::vector<Role> roles_;
  std::vector<std::string> individuals_;
};

}  // namespace gbox
