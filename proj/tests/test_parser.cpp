#include <gtest/gtest.h>

#include <sstream>

#include "gbox/errors.hpp"
#include "gbox/parser.hpp"
#include "gbox/printer.hpp"
#include "random_instances.hpp"

using namespace gbox;

namespace {

Concept N(const char* n) { return Concept::name(n); }
Concept V(const char* n) { return Concept::var(n); }
Role R(const char* n) { return Role::named(n); }

std::string dump(const Ontology& o) {
  std::ostringstream ss;
  write_ontology(ss, o);
  return ss.str();
}

}  // namespace

TEST(ParseOntology, SimpleInclusion) {
  EXPECT_EQ(parse_ontology("Jaguar SubClassOf Animal"), (Ontology{ConceptInclusion{N("Jaguar"), N("Animal")}}));
}

TEST(ParseOntology, EmptyDocument) {
  EXPECT_TRUE(parse_ontology("").empty());
  EXPECT_TRUE(parse_ontology("\n# only a comment\n\n").empty());
}

TEST(ParseOntology, ConceptAssertion) {
  EXPECT_EQ(parse_ontology("A(s)"), (Ontology{ConceptAssertion{N("A"), Individual::named("s")}}));
}

TEST(ParseOntology, RoleAssertion) {
  EXPECT_EQ(parse_ontology("hasMember(g, x)"),
            (Ontology{RoleAssertion{R("hasMember"), Individual::named("g"), Individual::named("x")}}));
}

TEST(ParseOntology, Precedence) {
  Ontology o = parse_ontology("not A and B or r some C and D SubClassOf E");
  Concept lhs = Concept::disjunction(
      {Concept::conjunction({Concept::negation(N("A")), N("B")}),
       Concept::conjunction({Concept::some(R("r"), N("C")), N("D")})});
  EXPECT_EQ(o, (Ontology{ConceptInclusion{lhs, N("E")}}));
}

TEST(ParseOntology, RestrictionBindsTighterThanAnd) {
  Ontology o = parse_ontology("X SubClassOf r only A and B");
  Concept rhs = Concept::conjunction({Concept::only(R("r"), N("A")), N("B")});
  EXPECT_EQ(o, (Ontology{ConceptInclusion{N("X"), rhs}}));
}

TEST(ParseOntology, EquivalenceIsTwoInclusions) {
  Ontology o = parse_ontology("A EquivalentTo B and C");
  EXPECT_EQ(o.size(), 2U);
}

TEST(ParseOntology, RoleEquivalenceWithInverse) {
  Ontology o = parse_ontology("socialisesIn EquivalentTo inverse hasMember\n");
  Ontology expected{RoleInclusion{R("socialisesIn"), Role::inverse_of("hasMember")},
                    RoleInclusion{Role::inverse_of("hasMember"), R("socialisesIn")}};
  EXPECT_EQ(o, expected);
}

TEST(ParseOntology, BareEquivalenceResolvedByUsage) {
  Ontology roles = parse_ontology("p EquivalentTo q\nq(a, b)\n");
  EXPECT_TRUE(roles.contains(RoleInclusion{R("p"), R("q")}));
  Ontology concepts = parse_ontology("P EquivalentTo Q\nQ(a)\n");
  EXPECT_TRUE(concepts.contains(ConceptInclusion{N("P"), N("Q")}));
  ParseOptions opts;
  opts.role_names = {"p"};
  EXPECT_TRUE(parse_ontology("p EquivalentTo q", opts).contains(RoleInclusion{R("q"), R("p")}));
}

TEST(ParseOntology, ChainedRoleEquivalences) {
  Ontology o = parse_ontology("p EquivalentTo q\nq EquivalentTo s\ns SubRoleOf t\n");
  EXPECT_TRUE(o.contains(RoleInclusion{R("p"), R("q")}));
}

TEST(ParseOntology, ComplexAssertion) {
  Ontology o = parse_ontology("(A or B)(s)");
  EXPECT_EQ(o, (Ontology{ConceptAssertion{Concept::disjunction({N("A"), N("B")}), Individual::named("s")}}));
}

TEST(ParseOntology, ErrorsCarryPosition) {
  try {
    parse_ontology("A SubClassOf B\nA SubClassOf\n", {"f.ont", {}});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 13U);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("f.ont:2:13"), std::string::npos);
  }
}

TEST(ParseOntology, RejectsVariables) {
  EXPECT_THROW(parse_ontology("?X SubClassOf A"), ParseError);
}

TEST(ParseOntology, RejectsReservedNames) {
  EXPECT_THROW(parse_ontology("__frozen_X SubClassOf A"), ParseError);
}

TEST(ParseOntology, RejectsTrailingGarbage) {
  EXPECT_THROW(parse_ontology("A SubClassOf B C"), ParseError);
  EXPECT_THROW(parse_ontology("A SubClassOf B; C SubClassOf D"), ParseError);
  EXPECT_THROW(parse_ontology("A = B"), ParseError);
}

TEST(ParseTemplate, Variables) {
  Template t = parse_template("{?Y SubClassOf hasHunter some ?X}");
  EXPECT_EQ(t.vars(), (VarSet{{"X", VarType::Concept}, {"Y", VarType::Concept}}));
  Template u = parse_template("?R(?x, a); A(?x)");
  EXPECT_THROW(parse_template("?x(?x)"), ParseError);
  EXPECT_EQ(u.vars().at("R"), VarType::Role);
}

TEST(ParseTemplate, BareVariableEquivalence) {
  Template t = parse_template("?P EquivalentTo ?Q; ?P(a, b)");
  EXPECT_EQ(t.vars().at("Q"), VarType::Role);
  Template u = parse_template("?P EquivalentTo ?Q");
  EXPECT_EQ(u.vars().at("Q"), VarType::Concept);
}

TEST(ParseAxiom, SingleStatement) {
  EXPECT_EQ(parse_axiom("A SubClassOf C"), Axiom(ConceptInclusion{N("A"), N("C")}));
  EXPECT_THROW(parse_axiom("A EquivalentTo C"), ParseError);
}

TEST(ParseLanguage, Sections) {
  LanguageSpec l = parse_language("concepts:\nJaguar\nhasChild some Tiger\nroles:\nr\ninverse s\nindividuals:\na\n");
  EXPECT_EQ(l.concepts().size(), 2U);
  EXPECT_EQ(l.roles().size(), 2U);
  EXPECT_EQ(l.individuals(), std::vector<std::string>{"a"});
  EXPECT_EQ(role_names_of(l), (std::set<std::string>{"r", "s"}));
  EXPECT_THROW(parse_language("Jaguar\n"), ParseError);
  EXPECT_THROW(parse_language("concepts:\n?X\n"), ParseError);
  EXPECT_THROW(parse_language("colours:\n"), ParseError);
}

TEST(ParseGBox, IntroGenerator) {
  GBox g = parse_gbox(testkit::read_file(testkit::data_path("intro.gbx")));
  ASSERT_EQ(g.size(), 1U);
  const Generator& gen = *g.begin();
  EXPECT_EQ(gen.name(), "g");
  EXPECT_EQ(gen.positive_body(), (Template{ConceptInclusion{V("X"), N("Animal")}}));
  EXPECT_EQ(gen.head(), (Template{ConceptInclusion{V("X"), Concept::only(R("hasChild"), V("X"))}}));
}

TEST(ParseGBox, NegationAndMultiline) {
  GBox g = parse_gbox(testkit::read_file(testkit::data_path("maggy.gbx")));
  ASSERT_EQ(g.size(), 2U);
  EXPECT_TRUE(g.has_negation());
  GBox d = parse_gbox(testkit::read_file(testkit::data_path("disease.gbx")));
  EXPECT_EQ(d.begin()->vars().size(), 4U);
}

TEST(ParseGBox, Declarations) {
  GBox g = parse_gbox("declare role ?P, ?Q\ngen g: {?P EquivalentTo ?Q} => {}\n");
  EXPECT_EQ(g.begin()->vars().at("P"), VarType::Role);
  EXPECT_THROW(parse_gbox("declare concept ?P\ngen g: {?P(a, b)} => {}"), ParseError);
}

TEST(ParseGBox, UnsafeOrDuplicateRejected) {
  EXPECT_THROW(parse_gbox("gen g: {?X SubClassOf A} => {?Y SubClassOf B}"), ParseError);
  EXPECT_THROW(parse_gbox("gen g: {A(a)} => {}\ngen g: {B(a)} => {}"), ParseError);
  EXPECT_THROW(parse_gbox("gen g {A(a)} => {}"), ParseError);
}

TEST(Printer, Substitution) {
  EXPECT_EQ(to_string(Substitution{{"X", N("Jaguar")}, {"x", std::string("a")}}), "{?X -> Jaguar, ?x -> a}");
}

TEST(Printer, ParenthesizesComplexAssertions) {
  EXPECT_EQ(to_string(Axiom(ConceptAssertion{Concept::negation(N("A")), Individual::named("s")})), "(not A)(s)");
  EXPECT_EQ(to_string(Axiom(ConceptInclusion{Concept::conjunction({Concept::disjunction({N("A"), N("B")}), N("C")}),
                                             Concept::some(Role::inverse_of("r"), Concept::conjunction({N("A"), N("B")}))})),
            "(A or B) and C SubClassOf inverse r some (A and B)");
}

TEST(RoundTrip, RandomOntologiesAreBitExact) {
  testkit::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    Ontology o = testkit::random_ontology(rng, 6, 3);
    const std::string text = dump(o);
    Ontology back = parse_ontology(text, {"roundtrip", {"r"}});
    ASSERT_EQ(back, o) << text;
    EXPECT_EQ(dump(back), text);
  }
}

TEST(RoundTrip, GBoxFiles) {
  for (const char* f : {"intro.gbx", "maggy.gbx", "nonunique.gbx", "disease.gbx", "chain_right.gbx"}) {
    GBox g = parse_gbox(testkit::read_file(testkit::data_path(f)));
    std::ostringstream ss;
    write_gbox(ss, g);
    EXPECT_EQ(parse_gbox(ss.str()), g) << f;
  }
}

TEST(RoundTrip, Language) {
  LanguageSpec l = parse_language(testkit::read_file(testkit::data_path("maggy.lang")));
  std::ostringstream ss;
  write_language(ss, l);
  EXPECT_EQ(parse_language(ss.str()), l);
}
