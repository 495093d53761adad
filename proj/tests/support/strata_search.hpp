#pragma once

// Brute-force stratification search, written directly from conditions 1-4
// (independent of the precedence-graph construction).

#include <vector>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"
#include "gbox/reasoner.hpp"
#include "gbox/stratification.hpp"

namespace gbox::testkit {

/// Every v: templates -> {1..n} (n = number of distinct templates) that
/// satisfies the conditions, in lexicographic order of the level vector.
std::vector<StratumMap> all_stratifications(const GBox& g, const Ontology& o, const LanguageSpec& l,
                                            Reasoner& reasoner);

}  // namespace gbox::testkit
