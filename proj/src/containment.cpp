#include "gbox/containment.hpp"

#include <optional>
#include <set>
#include <tuple>

#include "gbox/errors.hpp"

namespace gbox {

namespace {

Template instantiate(const Template& t, const Substitution& s) { return Template(apply_substitution(t, s).axioms()); }

void require_positive(const GBox& g, const char* side) {
  if (g.has_negation()) {
    throw Unsupported(std::string("containment is only decided for negation-free GBoxes; the ") + side +
                      " GBox has negative bodies");
  }
}

// Fixpoint of G2 on a seed; seeds may be inconsistent.
Ontology expand_seed(const GBox& g2, const Ontology& seed, const LanguageSpec& l, Reasoner& reasoner,
                     const ExpandOptions& base) {
  ExpandOptions opts = base;
  opts.allow_inconsistent = true;
  opts.allow_negation = false;
  auto report = expand_fixpoint(g2, seed, l, reasoner, opts);
  if (report.limits_hit) {
    throw ResourceLimit("expansion of a containment seed did not reach a fixpoint within " +
                        std::to_string(report.steps) + " steps");
  }
  return std::move(report.result);
}

std::optional<Axiom> first_missing(Reasoner& reasoner, const Ontology& o, const Ontology& head) {
  for (const auto& a : head.axioms()) {
    if (!reasoner.entails(o, a)) return a;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Generator> ground_generator(const Generator& g, const LanguageSpec& l) {
  if (g.vars().empty()) return {g};
  using Key = std::tuple<Template, std::vector<Template>, Template>;
  std::set<Key> seen;
  std::vector<Generator> out;
  std::size_t index = 0;
  for (const auto& s : enumerate_substitutions(g.vars(), l)) {
    ++index;
    Template body = instantiate(g.positive_body(), s);
    std::vector<Template> negs;
    negs.reserve(g.negative_bodies().size());
    for (const auto& n : g.negative_bodies()) negs.push_back(instantiate(n, s));
    Template head = instantiate(g.head(), s);
    if (!seen.emplace(body, negs, head).second) continue;
    out.emplace_back(g.name() + "_" + std::to_string(index), std::move(body), std::move(negs), std::move(head));
  }
  return out;
}

GBox ground_gbox(const GBox& g, const LanguageSpec& l) {
  std::vector<Generator> out;
  for (const auto& gen : g) {
    auto ground = ground_generator(gen, l);
    out.insert(out.end(), std::make_move_iterator(ground.begin()), std::make_move_iterator(ground.end()));
  }
  return GBox(std::move(out));
}

FrozenTemplate freeze(const Template& t) {
  FrozenTemplate out;
  for (const auto& [name, type] : t.vars()) {
    std::string frozen = kFrozenPrefix + name;
    switch (type) {
      case VarType::Concept:
        out.frozen_map.emplace(name, Concept::name(std::move(frozen)));
        break;
      case VarType::Role:
        out.frozen_map.emplace(name, Role::named(std::move(frozen)));
        break;
      case VarType::Individual:
        out.frozen_map.emplace(name, std::move(frozen));
        break;
    }
  }
  out.ontology = apply_substitution(t, out.frozen_map);
  return out;
}

LanguageSpec frozen_language(const Substitution& map) {
  std::vector<Concept> concepts;
  std::vector<Role> roles;
  std::vector<std::string> individuals;
  for (const auto& [name, term] : map) {
    if (const auto* c = std::get_if<Concept>(&term)) concepts.push_back(*c);
    if (const auto* r = std::get_if<Role>(&term)) roles.push_back(*r);
    if (const auto* i = std::get_if<std::string>(&term)) individuals.push_back(*i);
  }
  return LanguageSpec(std::move(concepts), std::move(roles), std::move(individuals));
}

const char* to_string(FreezeMode m) noexcept {
  switch (m) {
    case FreezeMode::Grounded:
      return "grounded";
    case FreezeMode::Plain:
      return "plain";
    case FreezeMode::IntoLanguage:
      return "into-lang";
  }
  return "?";
}

ContainmentResult is_contained(const GBox& g1, const GBox& g2, const LanguageSpec& l, Reasoner& reasoner,
                               const ContainmentOptions& opts) {
  require_positive(g1, "left");
  require_positive(g2, "right");
  ContainmentResult result;
  auto fail = [&](const Generator& g, Axiom missing, Substitution s) {
    result.contained = false;
    result.failures.push_back({g.name(), std::move(missing), std::move(s)});
  };
  for (const auto& g : g1) {
    if (opts.mode == FreezeMode::Grounded) {
      for (const auto& s : enumerate_substitutions(g.vars(), l)) {
        const Ontology seed = apply_substitution(g.positive_body(), s);
        const Ontology expanded = expand_seed(g2, seed, l, reasoner, opts.expand);
        if (auto missing = first_missing(reasoner, expanded, apply_substitution(g.head(), s))) {
          fail(g, *missing, s);
          break;
        }
      }
      continue;
    }
    FrozenTemplate body = freeze(g.positive_body());
    // Head variables are body variables, so the body's map freezes the head too.
    const Ontology head = apply_substitution(g.head(), body.frozen_map);
    const LanguageSpec lang =
        opts.mode == FreezeMode::IntoLanguage ? l.with(frozen_language(body.frozen_map)) : l;
    const Ontology expanded = expand_seed(g2, body.ontology, lang, reasoner, opts.expand);
    if (auto missing = first_missing(reasoner, expanded, head)) fail(g, *missing, body.frozen_map);
  }
  return result;
}

ContainmentResult is_contained(const GBox& g1, const GBox& g2, const LanguageSpec& l,
                               const ContainmentOptions& opts) {
  Reasoner reasoner;
  return is_contained(g1, g2, l, reasoner, opts);
}

bool is_equivalent_gbox(const GBox& g1, const GBox& g2, const LanguageSpec& l, Reasoner& reasoner,
                        const ContainmentOptions& opts) {
  return is_contained(g1, g2, l, reasoner, opts).contained && is_contained(g2, g1, l, reasoner, opts).contained;
}

bool is_equivalent_gbox(const GBox& g1, const GBox& g2, const LanguageSpec& l, const ContainmentOptions& opts) {
  Reasoner reasoner;
  return is_equivalent_gbox(g1, g2, l, reasoner, opts);
}

}  // namespace gbox
