#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbox/engine.hpp"
#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"
#include "gbox/reasoner.hpp"

namespace gbox {

/// {T_Bσ -> T_Hσ} over all L-substitutions σ of the rule, duplicates removed.
/// A ground generator is returned unchanged; otherwise names get the
/// 1-based substitution index as suffix, e.g. `g_3`.
std::vector<Generator> ground_generator(const Generator& g, const LanguageSpec& l);

GBox ground_gbox(const GBox& g, const LanguageSpec& l);

inline constexpr const char* kFrozenPrefix = "__frozen_";

struct FrozenTemplate {
  Ontology ontology;
  /// Variable name to its frozen value, typed like the variable.
  Substitution frozen_map;
};

/// Replaces each variable ?X by the reserved name `__frozen_X`.
FrozenTemplate freeze(const Template& t);

/// The frozen names of `map`, as a language.
LanguageSpec frozen_language(const Substitution& map);

enum class FreezeMode {
  /// Checks every L-instance of each rule of G1 as its own seed ontology.
  /// Exact for L-containment.
  Grounded,
  /// Frozen body as seed, expansion over L only.
  Plain,
  /// Frozen body as seed, expansion over L plus the frozen names.
  IntoLanguage,
};

const char* to_string(FreezeMode m) noexcept;

struct ContainmentOptions {
  FreezeMode mode = FreezeMode::Grounded;
  ExpandOptions expand{};
};

struct ContainmentFailure {
  std::string generator;
  /// Head axiom (instantiated or frozen) the expansion does not entail.
  Axiom missing;
  /// The instantiating substitution, or the freeze map.
  Substitution substitution;
};

struct ContainmentResult {
  bool contained = true;
  /// At most one failure per generator of the left GBox.
  std::vector<ContainmentFailure> failures;
};

/// G1 ⪯_L G2. Both GBoxes must be negation-free (Unsupported otherwise).
/// Throws ResourceLimit when an expansion does not reach a fixpoint.
ContainmentResult is_contained(const GBox& g1, const GBox& g2, const LanguageSpec& l, Reasoner& reasoner,
                               const ContainmentOptions& opts = {});
ContainmentResult is_contained(const GBox& g1, const GBox& g2, const LanguageSpec& l,
                               const ContainmentOptions& opts = {});

bool is_equivalent_gbox(const GBox& g1, const GBox& g2, const LanguageSpec& l, Reasoner& reasoner,
                        const ContainmentOptions& opts = {});
bool is_equivalent_gbox(const GBox& g1, const GBox& g2, const LanguageSpec& l,
                        const ContainmentOptions& opts = {});

}  // namespace gbox
