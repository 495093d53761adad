#pragma once

// Brute-force semantics used to cross-check the tableau and the engine.
// Nothing here shares code with the tableau.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"

namespace gbox {

/// Interpretation over the domain {0, ..., size-1}. Names missing from the
/// maps denote empty extensions.
struct FiniteInterpretation {
  std::size_t size = 0;
  std::map<std::string, std::vector<bool>> concepts;
  std::map<std::string, std::set<std::pair<std::size_t, std::size_t>>> roles;
  std::map<std::string, std::size_t> individuals;

  /// Extension of a ground concept; throws Error if an individual is unmapped.
  std::vector<bool> extension(const Concept& c) const;
  bool satisfies(const Axiom& a) const;
  bool is_model(const Ontology& o) const;
};

constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Lexicographically least model with at most `max_size` elements: smaller
/// domains first, then individual map, concept bits, role bits. Throws
/// ResourceLimit when the candidate count exceeds `budget`.
std::optional<FiniteInterpretation> find_model_upto(const Ontology& o, std::size_t max_size,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Least model of `o` with at most `max_size` elements that violates `a`.
std::optional<FiniteInterpretation> find_countermodel_upto(const Ontology& o, const Axiom& a, std::size_t max_size,
                                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of interpretations find_model_upto would enumerate.
double enumeration_size(const Ontology& o, std::size_t max_size);

enum class OracleVerdict { Entailed, NotEntailed, Unknown };

const char* to_string(OracleVerdict v) noexcept;

/// 1. Countermodel search up to `max_size` elements (the largest size within
///    budget). 2. Type elimination on the refutation ontology, capped at 2^12
///    types; satisfiable outcomes are confirmed by building a finite
///    countermodel and checking it with FiniteInterpretation.
OracleVerdict oracle_entails(const Ontology& o, const Axiom& a, std::size_t max_size,
                             std::uint64_t budget = kDefaultEnumerationBudget);

class Reasoner;

/// Grounds every generator over `l` and fires instances one at a time until
/// nothing changes. Positive GBoxes only (throws Unsupported otherwise).
Ontology naive_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner);

}  // namespace gbox
