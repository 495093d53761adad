#pragma once

// Small random instances over the signature {A, B, C}, role r, individuals
// {a, b}. Shared by the property tests and the acceptance binary.

#include <random>
#include <string>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"

namespace gbox::testkit {

using Rng = std::mt19937_64;

std::string read_file(const std::string& path);
/// Path of a file under tests/data.
std::string data_path(const std::string& name);

Concept random_concept(Rng& rng, int depth);
Axiom random_axiom(Rng& rng, int depth);
Ontology random_ontology(Rng& rng, int max_axioms, int depth);

/// Two concept names {A, B} only: at most 4 axioms of depth at most 2.
Axiom random_small_axiom(Rng& rng);
Ontology random_small_ontology(Rng& rng);

/// Concept names only, 1..max_size of them, possibly with one compound entry.
LanguageSpec random_language(Rng& rng, int max_size, bool with_individuals);

struct GBoxShape {
  int max_generators = 3;
  int max_vars = 2;
  /// Probability that a generator gets a negative body.
  double negation = 0.0;
};

GBox random_gbox(Rng& rng, const GBoxShape& shape);

/// Negative bodies mention only the concept name N, which no head and no
/// random ontology contains. Mostly semi-positive; callers still filter with
/// is_semi_positive.
GBox random_semi_positive_gbox(Rng& rng, int max_generators);

}  // namespace gbox::testkit
