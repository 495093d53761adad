#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gbox/containment.hpp"
#include "gbox/engine.hpp"
#include "gbox/errors.hpp"
#include "gbox/oracle.hpp"
#include "gbox/parser.hpp"
#include "gbox/printer.hpp"
#include "random_instances.hpp"

using namespace gbox;

namespace {

Ontology ont(const std::string& text) { return parse_ontology(text); }
Template tpl(const std::string& text) { return parse_template(text); }
Ontology ont_file(const std::string& f) { return parse_ontology(testkit::read_file(testkit::data_path(f))); }
GBox gbox_file(const std::string& f) { return parse_gbox(testkit::read_file(testkit::data_path(f))); }
LanguageSpec lang_file(const std::string& f) { return parse_language(testkit::read_file(testkit::data_path(f))); }

LanguageSpec concepts(std::initializer_list<const char*> names) {
  std::vector<Concept> cs;
  for (const char* n : names) cs.push_back(Concept::name(n));
  return LanguageSpec(cs, {}, {});
}

GBox merged(const GBox& a, const GBox& b, const std::string& prefix) {
  std::vector<Generator> gens(a.begin(), a.end());
  for (const auto& g : b) gens.push_back(g.renamed(prefix + g.name()));
  return GBox(std::move(gens));
}

std::string describe(const GBox& g) {
  std::string s;
  for (const auto& gen : g) s += gen.name() + ": " + to_string(gen.positive_body()) + " => " + to_string(gen.head()) + "\n";
  return s;
}

Ontology consistent_ontology(testkit::Rng& rng) {
  for (;;) {
    Ontology o = testkit::random_ontology(rng, 3, 1);
    if (is_consistent(o).holds) return o;
  }
}

Ontology expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& r) {
  ExpandOptions opts;
  opts.allow_inconsistent = true;
  return expand_fixpoint(g, o, l, r, opts).result;
}

ContainmentOptions with_mode(FreezeMode m) {
  ContainmentOptions opts;
  opts.mode = m;
  return opts;
}

}  // namespace

TEST(GroundGenerator, Counts) {
  const GBox g = parse_gbox("gen g: {?X SubClassOf A} => {?X SubClassOf B}\n");
  const auto ground = ground_generator(g.generators()[0], concepts({"A", "B"}));
  ASSERT_EQ(ground.size(), 2u);
  EXPECT_EQ(ground[0].name(), "g_1");
  EXPECT_EQ(ground[0].positive_body(), tpl("A SubClassOf A"));
  EXPECT_EQ(ground[1].head(), tpl("B SubClassOf B"));
  for (const auto& h : ground) EXPECT_TRUE(h.vars().empty());
}

TEST(GroundGenerator, GroundIsUnchanged) {
  const GBox g = parse_gbox("gen g: {A SubClassOf B} => {B(a)}\n");
  EXPECT_EQ(ground_generator(g.generators()[0], concepts({"A", "B"})), g.generators());
}

TEST(GroundGenerator, DuplicatesRemoved) {
  // X -> A, Y -> B and X -> B, Y -> A give the same ground rule
  const GBox g = parse_gbox("gen g: {?X SubClassOf C; ?Y SubClassOf C} => {C(a)}\n");
  const auto ground = ground_generator(g.generators()[0], concepts({"A", "B"}));
  EXPECT_EQ(ground.size(), 3u);
}

TEST(GroundGenerator, IntroSameOneStepEffect) {
  Reasoner r;
  const GBox g = gbox_file("intro.gbx");
  const LanguageSpec l = lang_file("intro.lang");
  const Ontology o = ont_file("intro.ont");
  const auto ground = ground_generator(g.generators()[0], l);
  EXPECT_EQ(ground.size(), 4u);
  EXPECT_EQ(one_step_expand(GBox(ground), o, l, r), one_step_expand(g, o, l, r));
}

TEST(GroundGBox, Sizes) {
  EXPECT_TRUE(ground_gbox(GBox{}, concepts({"A"})).empty());
  const GBox g = parse_gbox("gen g: {?X SubClassOf A} => {?X SubClassOf B}\n");
  EXPECT_EQ(ground_gbox(g, concepts({"A", "B", "C"})).size(), 3u);
}

TEST(Freeze, Examples) {
  const Concept fx = Concept::name("__frozen_X");
  const FrozenTemplate f = freeze(tpl("?X SubClassOf Animal"));
  EXPECT_EQ(f.ontology, Ontology({ConceptInclusion{fx, Concept::name("Animal")}}));
  ASSERT_EQ(f.frozen_map.size(), 1u);
  EXPECT_EQ(f.frozen_map.at("X"), Term(Concept::name("__frozen_X")));

  const FrozenTemplate g = freeze(tpl("A SubClassOf B"));
  EXPECT_EQ(g.ontology, ont("A SubClassOf B"));
  EXPECT_TRUE(g.frozen_map.empty());

  const FrozenTemplate h = freeze(tpl("?Y SubClassOf hasHunter some ?X"));
  EXPECT_EQ(h.ontology, Ontology({ConceptInclusion{Concept::name("__frozen_Y"),
                                                   Concept::some(Role::named("hasHunter"), fx)}}));
}

TEST(Freeze, RolesAndIndividuals) {
  const FrozenTemplate f = freeze(tpl("?R(?x, ?y)"));
  EXPECT_EQ(f.frozen_map.at("R"), Term(Role::named("__frozen_R")));
  EXPECT_EQ(f.frozen_map.at("x"), Term(std::string("__frozen_x")));
  const LanguageSpec l = frozen_language(f.frozen_map);
  EXPECT_EQ(l.roles().size(), 1u);
  EXPECT_EQ(l.individuals().size(), 2u);
}

TEST(Containment, Chain) {
  const GBox left = gbox_file("chain_left.gbx");
  const GBox right = gbox_file("chain_right.gbx");
  const LanguageSpec l = lang_file("chain.lang");
  EXPECT_TRUE(is_contained(left, right, l).contained);
  const ContainmentResult back = is_contained(right, left, l);
  EXPECT_FALSE(back.contained);
  // neither rule of the chain is reproduced by the direct rule
  ASSERT_EQ(back.failures.size(), 2u);
  EXPECT_EQ(back.failures[0].generator, "first");
  EXPECT_EQ(back.failures[1].generator, "second");
  // the certificate is a real counterexample: seed with the instantiated body
  Reasoner r;
  const Generator& first = right.generators()[0];
  const Ontology seed = apply_substitution(first.positive_body(), back.failures[0].substitution);
  EXPECT_FALSE(r.entails(naive_expand(left, seed, l, r), back.failures[0].missing));
  EXPECT_FALSE(is_equivalent_gbox(left, right, l));
}

TEST(Containment, ChainFreezeModes) {
  const GBox left = gbox_file("chain_left.gbx");
  const GBox right = gbox_file("chain_right.gbx");
  const LanguageSpec l = lang_file("chain.lang");
  for (FreezeMode m : {FreezeMode::Plain, FreezeMode::IntoLanguage}) {
    EXPECT_FALSE(is_contained(right, left, l, with_mode(m)).contained) << to_string(m);
  }
  EXPECT_TRUE(is_contained(left, right, l, with_mode(FreezeMode::IntoLanguage)).contained);
  // the chain fires on A itself, and the frozen X inherits A SubClassOf C
  EXPECT_TRUE(is_contained(left, right, l, with_mode(FreezeMode::Plain)).contained);
  const ContainmentResult plain = is_contained(right, left, l, with_mode(FreezeMode::Plain));
  ASSERT_FALSE(plain.failures.empty());
  EXPECT_EQ(plain.failures[0].missing, Axiom(ConceptInclusion{Concept::name("__frozen_X"), Concept::name("B")}));
}

TEST(Containment, Reflexive) {
  for (const char* f : {"intro.gbx", "chain_left.gbx", "chain_right.gbx", "disease.gbx"}) {
    const GBox g = gbox_file(f);
    const LanguageSpec l = lang_file(std::string(f) == "disease.gbx" ? "disease.lang"
                                     : std::string(f) == "intro.gbx" ? "intro.lang"
                                                                     : "chain.lang");
    EXPECT_TRUE(is_contained(g, g, l).contained) << f;
    EXPECT_TRUE(is_contained(g, g, l, with_mode(FreezeMode::IntoLanguage)).contained) << f;
  }
  // Plain freezing loses reflexivity: the frozen X is not an L-substitution.
  const GBox intro = gbox_file("intro.gbx");
  EXPECT_FALSE(is_contained(intro, intro, lang_file("intro.lang"), with_mode(FreezeMode::Plain)).contained);
}

TEST(Containment, EmptyLeft) {
  EXPECT_TRUE(is_contained(GBox{}, gbox_file("chain_right.gbx"), lang_file("chain.lang")).contained);
  EXPECT_TRUE(is_contained(GBox{}, GBox{}, lang_file("chain.lang")).contained);
}

TEST(Containment, RejectsNegation) {
  const GBox neg = gbox_file("maggy.gbx");
  const LanguageSpec l = lang_file("maggy.lang");
  EXPECT_THROW(is_contained(neg, GBox{}, l), Unsupported);
  EXPECT_THROW(is_contained(GBox{}, neg, l), Unsupported);
}

TEST(Containment, IntoLanguageIsIncomplete) {
  // Over L = {A} the only instance of the left rule is the right rule itself.
  const GBox g1 = parse_gbox("gen g1: {?X SubClassOf R some Thing} => {?X SubClassOf D}\n");
  const GBox g2 = parse_gbox("gen g2: {A SubClassOf R some Thing} => {A SubClassOf D}\n");
  const LanguageSpec l = concepts({"A"});
  EXPECT_TRUE(is_contained(g1, g2, l).contained);
  EXPECT_FALSE(is_contained(g1, g2, l, with_mode(FreezeMode::IntoLanguage)).contained);
  // definition check on sample ontologies
  Reasoner r;
  for (const Ontology& o : {ont("A SubClassOf R some Thing"), ont("B SubClassOf R some Thing"), Ontology{}}) {
    EXPECT_TRUE(r.entails(naive_expand(g2, o, l, r), naive_expand(g1, o, l, r)));
  }
}

TEST(Equivalence, Examples) {
  const GBox intro = gbox_file("intro.gbx");
  const LanguageSpec l = lang_file("intro.lang");
  EXPECT_TRUE(is_equivalent_gbox(intro, intro, l));
  EXPECT_TRUE(is_equivalent_gbox(intro, ground_gbox(intro, l), l));
  const GBox chain = gbox_file("chain_right.gbx");
  const LanguageSpec cl = lang_file("chain.lang");
  EXPECT_TRUE(is_equivalent_gbox(chain, ground_gbox(chain, cl), cl));
}

TEST(ContainmentProperties, GroundingPreservesExpansion) {
  testkit::Rng rng(61);
  Reasoner r;
  for (int i = 0; i < 150; ++i) {
    const GBox g = testkit::random_gbox(rng, {});
    const LanguageSpec l2 = testkit::random_language(rng, 4, true);
    const LanguageSpec l1(std::vector<Concept>(l2.concepts().begin(), l2.concepts().begin() + l2.concepts().size() / 2),
                          {}, {});
    const Ontology o = consistent_ontology(rng);
    const GBox ground = ground_gbox(g, l2);
    EXPECT_TRUE(equivalent(expand(ground, o, l1, r), expand(g, o, l2, r))) << describe(g) << to_string(o);
  }
}

TEST(ContainmentProperties, SoundAndCertified) {
  testkit::Rng rng(62);
  Reasoner r;
  int contained = 0;
  int refuted = 0;
  for (int i = 0; i < 200; ++i) {
    const LanguageSpec l = testkit::random_language(rng, 3, true);
    const GBox g2 = testkit::random_gbox(rng, {});
    // half the time a sub-GBox, which is contained by construction
    const GBox g1 = i % 2 ? testkit::random_gbox(rng, {}) : GBox({g2.generators()[0]});
    const ContainmentResult res = is_contained(g1, g2, l, r);
    if (i % 2 == 0) EXPECT_TRUE(res.contained) << describe(g2);
    if (res.contained) {
      ++contained;
      for (int k = 0; k < 3; ++k) {
        const Ontology o = consistent_ontology(rng);
        EXPECT_TRUE(r.entails(naive_expand(g2, o, l, r), naive_expand(g1, o, l, r)))
            << describe(g1) << "vs\n" << describe(g2) << to_string(o);
      }
      continue;
    }
    ++refuted;
    for (const auto& f : res.failures) {
      const auto it = std::find_if(g1.begin(), g1.end(), [&](const Generator& g) { return g.name() == f.generator; });
      ASSERT_NE(it, g1.end());
      const Ontology seed = apply_substitution(it->positive_body(), f.substitution);
      const Ontology expansion = naive_expand(g2, seed, l, r);
      EXPECT_FALSE(r.entails(expansion, f.missing)) << describe(g1) << "vs\n" << describe(g2);
      EXPECT_FALSE(r.entails(expansion, naive_expand(g1, seed, l, r)));
    }
  }
  EXPECT_GT(contained, 100);
  EXPECT_GT(refuted, 20);
}

TEST(ContainmentProperties, ReflexiveAndTransitive) {
  testkit::Rng rng(63);
  Reasoner r;
  int chains = 0;
  for (int i = 0; i < 150; ++i) {
    const LanguageSpec l = testkit::random_language(rng, 3, true);
    const GBox a = testkit::random_gbox(rng, {});
    const GBox b = i % 3 ? testkit::random_gbox(rng, {}) : merged(a, testkit::random_gbox(rng, {}), "b_");
    const GBox c = i % 3 ? testkit::random_gbox(rng, {}) : merged(b, testkit::random_gbox(rng, {}), "c_");
    EXPECT_TRUE(is_contained(a, a, l, r).contained) << describe(a);
    const bool ab = is_contained(a, b, l, r).contained;
    const bool bc = is_contained(b, c, l, r).contained;
    if (ab && bc) {
      ++chains;
      EXPECT_TRUE(is_contained(a, c, l, r).contained) << describe(a) << describe(b) << describe(c);
    }
  }
  EXPECT_GE(chains, 50);
}

TEST(ContainmentProperties, MonotoneInTheOntology) {
  testkit::Rng rng(64);
  Reasoner r;
  for (int i = 0; i < 200; ++i) {
    const GBox g = testkit::random_gbox(rng, {});
    const LanguageSpec l = testkit::random_language(rng, 4, true);
    const Ontology t = consistent_ontology(rng);
    // T' keeps part of T and adds consequences of T
    Ontology weaker;
    for (const auto& a : t.axioms()) {
      if (rng() % 2) weaker.insert(a);
    }
    for (int k = 0; k < 3; ++k) {
      const Axiom a = testkit::random_axiom(rng, 1);
      if (r.entails(t, a)) weaker.insert(a);
    }
    ASSERT_TRUE(r.entails(t, weaker));
    EXPECT_TRUE(r.entails(expand(g, t, l, r), expand(g, weaker, l, r))) << describe(g) << to_string(t);
  }
}

TEST(ContainmentProperties, ModelsOfTheRulesEntailTheExpansion) {
  testkit::Rng rng(65);
  Reasoner r;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const GBox g = testkit::random_gbox(rng, {});
    const LanguageSpec l = testkit::random_language(rng, 4, true);
    const Ontology o = consistent_ontology(rng);
    // any theory closed under G that contains O; built by expanding a superset
    const Ontology t = expand(g, united(o, testkit::random_ontology(rng, 2, 1)), l, r);
    if (!r.is_consistent(t)) continue;
    bool satisfies_all = true;
    for (const auto& gen : g) satisfies_all = satisfies_all && satisfies_generator(t, gen, l, r);
    ASSERT_TRUE(satisfies_all);
    ++checked;
    EXPECT_TRUE(r.entails(t, expand(g, o, l, r))) << describe(g) << to_string(o);
  }
  EXPECT_GT(checked, 100);
}
