#pragma once

// Text formats:
//
//   .ont   one axiom per line, `#` comments
//            C SubClassOf C | C EquivalentTo C | R SubRoleOf R | R EquivalentTo R
//            C(ind) | RoleName(ind, ind)
//   .lang  sections `concepts:`, `roles:`, `individuals:`, one entry per line
//   .gbx   gen NAME : {axioms} (, not {axioms})* => {axioms}
//          declare (concept|role|individual) ?V (, ?V)*
//
// Concept precedence is not > some/only > and > or. `A EquivalentTo B` with two
// bare names is a role equivalence when either name is used as a role anywhere
// in the document (or listed in ParseOptions::role_names), a concept
// equivalence otherwise.

#include <set>
#include <string>
#include <string_view>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"

namespace gbox {

struct ParseOptions {
  /// Name reported in diagnostics.
  std::string source_name;
  /// Names known to denote roles, e.g. from a language file.
  std::set<std::string> role_names;
};

Ontology parse_ontology(std::string_view text, const ParseOptions& options = {});

/// Axioms separated by newlines or `;`, optionally wrapped in braces.
Template parse_template(std::string_view text, const ParseOptions& options = {});

/// A single statement; `EquivalentTo` is rejected since it denotes two axioms.
Axiom parse_axiom(std::string_view text, const ParseOptions& options = {});

Concept parse_concept(std::string_view text, const ParseOptions& options = {});

LanguageSpec parse_language(std::string_view text, const ParseOptions& options = {});

GBox parse_gbox(std::string_view text, const ParseOptions& options = {});

/// Role names occurring anywhere in a language.
std::set<std::string> role_names_of(const LanguageSpec& language);

}  // namespace gbox
