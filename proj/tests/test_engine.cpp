#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gbox/engine.hpp"
#include "gbox/errors.hpp"
#include "gbox/oracle.hpp"
#include "gbox/parser.hpp"
#include "gbox/printer.hpp"
#include "random_instances.hpp"

using namespace gbox;

namespace {

Ontology ont(const std::string& text) { return parse_ontology(text); }
Axiom ax(const std::string& text) { return parse_axiom(text); }
Ontology ont_file(const std::string& f) { return parse_ontology(testkit::read_file(testkit::data_path(f))); }
GBox gbox_file(const std::string& f) { return parse_gbox(testkit::read_file(testkit::data_path(f))); }
LanguageSpec lang_file(const std::string& f) { return parse_language(testkit::read_file(testkit::data_path(f))); }

Substitution bind(const std::string& var, const char* concept_name) { return {{var, Concept::name(concept_name)}}; }

LanguageSpec concepts(std::initializer_list<const char*> names) {
  std::vector<Concept> cs;
  for (const char* n : names) cs.push_back(Concept::name(n));
  return LanguageSpec(cs, {}, {});
}

struct Instance {
  GBox g;
  Ontology o;
  LanguageSpec l;
};

/// Positive GBox, consistent ontology, |L| <= 4, at most 2 variables.
Instance random_instance(testkit::Rng& rng) {
  for (;;) {
    Instance in{testkit::random_gbox(rng, {}), testkit::random_ontology(rng, 3, 1),
                testkit::random_language(rng, 4, true)};
    if (is_consistent(in.o).holds) return in;
  }
}

std::string describe(const Instance& in) {
  return "G = " + [&] {
    std::string s;
    for (const auto& gen : in.g) s += to_string(gen.positive_body()) + " => " + to_string(gen.head()) + "; ";
    return s;
  }() + "\nO = " + to_string(in.o);
}

}  // namespace

TEST(EnumerateSubstitutions, Examples) {
  const LanguageSpec l = concepts({"A", "B"});
  EXPECT_EQ(enumerate_substitutions({{"X", VarType::Concept}}, l),
            (std::vector<Substitution>{bind("X", "A"), bind("X", "B")}));
  EXPECT_EQ(enumerate_substitutions({}, l), std::vector<Substitution>{Substitution{}});
  EXPECT_EQ(enumerate_substitutions({{"X", VarType::Concept}, {"Y", VarType::Concept}}, concepts({"A", "B", "C"})).size(),
            9U);
  EXPECT_TRUE(enumerate_substitutions({{"x", VarType::Individual}}, l).empty());
}

TEST(EnumerateSubstitutions, FirstVariableMostSignificant) {
  const auto subs = enumerate_substitutions({{"X", VarType::Concept}, {"Y", VarType::Concept}}, concepts({"A", "B"}));
  ASSERT_EQ(subs.size(), 4U);
  EXPECT_EQ(std::get<Concept>(subs[1].at("X")), Concept::name("A"));
  EXPECT_EQ(std::get<Concept>(subs[1].at("Y")), Concept::name("B"));
}

TEST(EvalTemplate, Intro) {
  const auto subs = eval_template(parse_template("?X SubClassOf Animal"), ont_file("intro.ont"), lang_file("intro.lang"));
  EXPECT_EQ(subs, (std::vector<Substitution>{bind("X", "Animal"), bind("X", "Jaguar"), bind("X", "Lion"),
                                             bind("X", "Tiger")}));
}

TEST(EvalTemplate, TransitiveChain) {
  const auto subs =
      eval_template(parse_template("?X SubClassOf C"), ont("A SubClassOf B\nB SubClassOf C"), concepts({"A", "B", "C"}));
  EXPECT_EQ(subs, (std::vector<Substitution>{bind("X", "A"), bind("X", "B"), bind("X", "C")}));
}

TEST(EvalTemplate, GroundTemplate) {
  EXPECT_EQ(eval_template(parse_template("A SubClassOf C"), ont("A SubClassOf B\nB SubClassOf C"), concepts({"A"})),
            std::vector<Substitution>{Substitution{}});
  EXPECT_TRUE(eval_template(parse_template("C SubClassOf A"), ont("A SubClassOf C"), concepts({"A"})).empty());
}

TEST(EvalTemplate, RefusesInconsistentInput) {
  Ontology bad = ont("A(s)\nA SubClassOf Nothing");
  EXPECT_THROW(eval_template(parse_template("?X SubClassOf A"), bad, concepts({"A"})), InconsistentInput);
  Reasoner r;
  EXPECT_EQ(eval_template(parse_template("?X SubClassOf A"), bad, concepts({"A", "B"}), r, {true}).size(), 2U);
}

TEST(EvalTemplate, MatchesDefinitionOnRandomTemplates) {
  // join with early checks vs. filtering the full enumeration
  testkit::Rng rng(41);
  Reasoner r;
  for (int i = 0; i < 400; ++i) {
    Instance in = random_instance(rng);
    for (const auto& gen : in.g) {
      std::vector<Substitution> expected;
      for (const auto& s : enumerate_substitutions(gen.positive_body().vars(), in.l)) {
        if (entails_ontology(in.o, apply_substitution(gen.positive_body(), s)).holds) expected.push_back(s);
      }
      EXPECT_EQ(eval_template(gen.positive_body(), in.o, in.l, r), expected) << describe(in);
    }
  }
}

TEST(SatisfiesGenerator, Examples) {
  const Generator g = *gbox_file("intro.gbx").begin();
  EXPECT_TRUE(satisfies_generator(ont_file("intro_full.ont"), g, concepts({"Jaguar", "Lion", "Tiger"})));
  EXPECT_FALSE(satisfies_generator(ont_file("turtle.ont"), g, lang_file("turtle.lang")));
  const Generator vacuous("v", parse_template("A SubClassOf B"), parse_template("C SubClassOf D"));
  EXPECT_TRUE(satisfies_generator(ont("C(a)"), vacuous, concepts({"A"})));
}

TEST(OneStep, EmptyGBoxIsIdentity) {
  Ontology o = ont_file("intro.ont");
  EXPECT_EQ(one_step_expand(GBox{}, o, lang_file("intro.lang")), o);
}

TEST(OneStep, Intro) {
  Ontology expected = ont_file("intro_full.ont");
  expected.insert(ax("Animal SubClassOf hasChild only Animal"));
  EXPECT_EQ(one_step_expand(gbox_file("intro.gbx"), ont_file("intro.ont"), lang_file("intro.lang")), expected);
}

TEST(OneStep, NegationFiresWhenBodyNotEntailed) {
  EXPECT_EQ(one_step_expand(gbox_file("nonunique.gbx"), ont_file("nonunique.ont"), lang_file("nonunique.lang")),
            ont("A(s)\nC(s)"));
}

TEST(Fixpoint, Intro) {
  const ExpansionReport rep = expand_fixpoint(gbox_file("intro.gbx"), ont_file("intro.ont"), lang_file("intro.lang"));
  EXPECT_EQ(rep.steps, 2U);
  EXPECT_TRUE(rep.consistent);
  EXPECT_FALSE(rep.limits_hit);
  ASSERT_EQ(rep.added_axioms.size(), 2U);
  EXPECT_EQ(rep.added_axioms[0].size(), 4U);
  EXPECT_TRUE(rep.added_axioms[1].empty());
  Ontology o1 = ont_file("intro_full.ont");
  o1.insert(ax("Animal SubClassOf hasChild only Animal"));
  EXPECT_TRUE(equivalent(rep.result, o1));
  EXPECT_TRUE(check_size_bound(gbox_file("intro.gbx"), lang_file("intro.lang"), rep));
  EXPECT_EQ(size_bound(gbox_file("intro.gbx"), lang_file("intro.lang")), 4U);
}

TEST(Fixpoint, DerivationsNameTheirSource) {
  const ExpansionReport rep = expand_fixpoint(gbox_file("intro.gbx"), ont_file("intro.ont"), lang_file("intro.lang"));
  for (const auto& d : rep.added_axioms[0]) {
    EXPECT_EQ(d.generator, "g");
    EXPECT_EQ(apply_substitution(gbox_file("intro.gbx").begin()->head(), d.substitution), (Ontology{d.axiom}));
  }
}

TEST(Fixpoint, Maggy) {
  ExpandOptions opts;
  opts.allow_negation = true;
  const ExpansionReport rep = expand_fixpoint(gbox_file("maggy.gbx"), ont_file("maggy.ont"), lang_file("maggy.lang"), opts);
  Ontology expected = ont_file("maggy.ont");
  expected.insert(ax("Single(Maggy)"));
  expected.insert(ax("Spouse(Maggy)"));
  EXPECT_EQ(rep.result, expected);
  EXPECT_FALSE(rep.consistent);
}

TEST(Fixpoint, NegationNeedsOptIn) {
  EXPECT_THROW(expand_fixpoint(gbox_file("maggy.gbx"), ont_file("maggy.ont"), lang_file("maggy.lang")), Unsupported);
}

TEST(Fixpoint, EmptyGBox) {
  const ExpansionReport rep = expand_fixpoint(GBox{}, ont("A(a)"), concepts({"A"}));
  EXPECT_EQ(rep.steps, 1U);
  EXPECT_EQ(rep.result, ont("A(a)"));
  EXPECT_EQ(size_bound(GBox{}, concepts({"A"})), 0U);
  EXPECT_TRUE(check_size_bound(GBox{}, concepts({"A"}), rep));
}

TEST(Fixpoint, DiseaseSpreadsAlongHabitats) {
  const ExpansionReport rep = expand_fixpoint(gbox_file("disease.gbx"), ont_file("disease.ont"), lang_file("disease.lang"));
  for (const char* a : {"Animal2", "Animal3", "Animal4"}) {
    EXPECT_TRUE(rep.result.contains(ax(std::string(a) + " SubClassOf suffersFrom some Flu"))) << a;
  }
  // one new animal per step, then a confirming step
  EXPECT_EQ(rep.steps, 4U);
  EXPECT_TRUE(rep.consistent);
}

TEST(Fixpoint, MaxStepsIsDistinctFromFixpoint) {
  ExpandOptions opts;
  opts.max_steps = 1;
  const ExpansionReport rep =
      expand_fixpoint(gbox_file("disease.gbx"), ont_file("disease.ont"), lang_file("disease.lang"), opts);
  EXPECT_TRUE(rep.limits_hit);
  EXPECT_EQ(rep.steps, 1U);
}

TEST(Fixpoint, RefusesInconsistentInput) {
  Ontology bad = ont("A(s)\nA SubClassOf Nothing");
  EXPECT_THROW(expand_fixpoint(gbox_file("intro.gbx"), bad, lang_file("intro.lang")), InconsistentInput);
  ExpandOptions opts;
  opts.allow_inconsistent = true;
  EXPECT_FALSE(expand_fixpoint(gbox_file("intro.gbx"), bad, lang_file("intro.lang"), opts).consistent);
}

TEST(EngineProperties, InflationaryAndMonotone) {
  testkit::Rng rng(42);
  Reasoner r;
  for (int i = 0; i < 400; ++i) {
    Instance in = random_instance(rng);
    Ontology bigger = united(in.o, testkit::random_ontology(rng, 2, 1));
    const Ontology small_step = one_step_expand(in.g, in.o, in.l, r);
    EXPECT_TRUE(small_step.includes(in.o)) << describe(in);
    if (!r.is_consistent(bigger)) continue;
    EXPECT_TRUE(one_step_expand(in.g, bigger, in.l, r).includes(small_step)) << describe(in);
  }
}

TEST(EngineProperties, FixpointLaws) {
  testkit::Rng rng(43);
  Reasoner r;
  ExpandOptions opts;
  opts.allow_inconsistent = true;
  int productive = 0;
  int fired = 0;
  for (int i = 0; i < 400; ++i) {
    Instance in = random_instance(rng);
    const ExpansionReport rep = expand_fixpoint(in.g, in.o, in.l, r, opts);
    ASSERT_FALSE(rep.limits_hit);
    if (rep.added_count() > 0) ++fired;
    if (rep.steps > 2) ++productive;
    const Ontology& fix = rep.result;
    EXPECT_TRUE(check_size_bound(in.g, in.l, rep)) << describe(in);
    EXPECT_EQ(one_step_expand(in.g, fix, in.l, r, {true}), fix) << describe(in);
    EXPECT_EQ(expand_fixpoint(in.g, fix, in.l, r, opts).result, fix) << describe(in);
    if (rep.consistent) {
      for (const auto& gen : in.g) EXPECT_TRUE(satisfies_generator(fix, gen, in.l, r)) << describe(in);
    }
    std::vector<Generator> shuffled(in.g.begin(), in.g.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(expand_fixpoint(GBox(shuffled), in.o, in.l, r, opts).result, fix) << describe(in);
  }
  EXPECT_GT(fired, 60);
  EXPECT_GT(productive, 3);
}

TEST(EngineProperties, AgreesWithNaiveExpansion) {
  testkit::Rng rng(44);
  Reasoner r;
  for (int i = 0; i < 400; ++i) {
    Instance in = random_instance(rng);
    const ExpansionReport rep = expand_fixpoint(in.g, in.o, in.l, r);
    EXPECT_TRUE(equivalent(naive_expand(in.g, in.o, in.l, r), rep.result)) << describe(in);
  }
}

TEST(NaiveExpand, Disease) {
  Reasoner r;
  const Ontology naive = naive_expand(gbox_file("disease.gbx"), ont_file("disease.ont"), lang_file("disease.lang"), r);
  EXPECT_TRUE(naive.contains(ax("Animal4 SubClassOf suffersFrom some Flu")));
  EXPECT_EQ(naive_expand(GBox{}, ont("A(a)"), concepts({"A"}), r), ont("A(a)"));
}
