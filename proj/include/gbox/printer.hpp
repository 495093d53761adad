#pragma once

// Rendering in the same surface syntax the parser reads. Output round-trips:
// parse(to_string(x)) == canonicalize(x).

#include <ostream>
#include <string>

#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"

namespace gbox {

std::string to_string(const Role& r);
std::string to_string(const Concept& c);
std::string to_string(const Individual& i);
std::string to_string(const Axiom& a);
std::string to_string(const Term& t);
/// `{?X -> Jaguar, ?y -> a}`
std::string to_string(const Substitution& s);
/// `{A SubClassOf B; r(a, b)}`
std::string to_string(const Template& t);
std::string to_string(const Ontology& o);

void write_ontology(std::ostream& out, const Ontology& o);
void write_template(std::ostream& out, const Template& t);
void write_generator(std::ostream& out, const Generator& g);
void write_gbox(std::ostream& out, const GBox& g);
void write_language(std::ostream& out, const LanguageSpec& l);

}  // namespace gbox
