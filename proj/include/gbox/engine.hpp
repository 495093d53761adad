#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"
#include "gbox/reasoner.hpp"

namespace gbox {

/// Every type-respecting L-substitution for `vars`: variables ordered by
/// name, the first one most significant, values in LanguageSpec order. No
/// variables gives the single empty substitution.
std::vector<Substitution> enumerate_substitutions(const VarSet& vars, const LanguageSpec& l);

struct EvalOptions {
  /// Proceed on an inconsistent ontology, where every substitution matches.
  bool allow_inconsistent = false;
};

/// eval(t, O, L) in enumeration order. Throws InconsistentInput unless
/// allowed, and ResourceLimit naming the substitution being checked.
std::vector<Substitution> eval_template(const Template& t, const Ontology& o, const LanguageSpec& l,
                                        Reasoner& reasoner, const EvalOptions& opts = {});
std::vector<Substitution> eval_template(const Template& t, const Ontology& o, const LanguageSpec& l);

/// eval of the positive body minus the substitutions whose instance of some
/// negative body is entailed.
std::vector<Substitution> active_substitutions(const Generator& g, const Ontology& o, const LanguageSpec& l,
                                               Reasoner& reasoner, const EvalOptions& opts = {});

bool satisfies_generator(const Ontology& o, const Generator& g, const LanguageSpec& l, Reasoner& reasoner,
                         const EvalOptions& opts = {});
bool satisfies_generator(const Ontology& o, const Generator& g, const LanguageSpec& l);

/// One head instance added by a step.
struct Derivation {
  Axiom axiom;
  std::string generator;
  Substitution substitution;
};

/// 1Exp (or 1Exp with negation) together with the new axioms it produced,
/// attributed to the first generator in name order that derives them.
struct StepResult {
  Ontology result;
  std::vector<Derivation> added;
};

StepResult expansion_step(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                          const EvalOptions& opts = {});
Ontology one_step_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                         const EvalOptions& opts = {});
Ontology one_step_expand(const GBox& g, const Ontology& o, const LanguageSpec& l);

struct ExpandOptions {
  /// Number of 1Exp applications before giving up; none means unbounded.
  std::optional<std::size_t> max_steps = 1000;
  bool allow_inconsistent = false;
  /// The inflationary fixpoint of a GBox with negation need not be an
  /// expansion; callers opt in explicitly.
  bool allow_negation = false;
};

struct ExpansionReport {
  Ontology result;
  /// Applications of 1Exp, including the final one that added nothing.
  std::size_t steps = 0;
  std::vector<std::vector<Derivation>> added_axioms;
  bool consistent = true;
  /// max_steps ran out before a fixpoint.
  bool limits_hit = false;

  std::size_t added_count() const;
};

/// Iterates 1Exp to a syntactic fixpoint over canonical axiom sets.
ExpansionReport expand_fixpoint(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                const ExpandOptions& opts = {});
ExpansionReport expand_fixpoint(const GBox& g, const Ontology& o, const LanguageSpec& l,
                                const ExpandOptions& opts = {});

/// |G| * |L|^n * h, where n is the largest variable count of a generator and
/// h the largest head. Saturates at UINT64_MAX.
std::uint64_t size_bound(const GBox& g, const LanguageSpec& l);

bool check_size_bound(const GBox& g, const LanguageSpec& l, const ExpansionReport& report);

}  // namespace gbox
