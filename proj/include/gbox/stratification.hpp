#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbox/engine.hpp"
#include "gbox/errors.hpp"
#include "gbox/generator.hpp"
#include "gbox/ontology.hpp"
#include "gbox/reasoner.hpp"

namespace gbox {

struct ActivationConfig {
  /// Entailment checks one activation query may need before ResourceLimit.
  std::uint64_t budget = 1'000'000;
  /// Largest head set searched for minimal activating subsets.
  std::size_t max_heads = 12;
  /// Only count activations the heads contribute to: the target instance must
  /// not already follow from the ontology alone.
  bool proper = false;
};

/// Representative of a template up to variable renaming; equal for templates
/// that differ only in variable names.
Template canonical_template(const Template& t);

struct ActivationWitness {
  /// One substitution per activating template, in input order.
  std::vector<Substitution> head_substitutions;
  Substitution target;
};

/// Whether O together with one L-instance of each template in `s` entails some
/// L-instance of `t`. Exhaustive over substitution tuples.
std::optional<ActivationWitness> activates(const std::vector<Template>& s, const Template& t, const Ontology& o,
                                           const LanguageSpec& l, Reasoner& reasoner,
                                           const ActivationConfig& cfg = {});

/// Subset-minimal activating subsets of `heads`, by increasing size, each as
/// sorted indices into `heads`.
std::vector<std::vector<std::size_t>> minimal_activating_sets(const Template& t, const std::vector<Template>& heads,
                                                              const Ontology& o, const LanguageSpec& l,
                                                              Reasoner& reasoner, const ActivationConfig& cfg = {});

enum class Polarity { Positive, Negative };

const char* to_string(Polarity p) noexcept;

struct PrecedenceEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Polarity polarity = Polarity::Positive;

  friend auto operator<=>(const PrecedenceEdge&, const PrecedenceEdge&) = default;
};

/// Nodes are the canonical templates of G in canonical order; edges sorted
/// and duplicate-free.
struct PrecedenceGraph {
  std::vector<Template> nodes;
  /// First occurrence of each node in G, with its original variable names.
  std::vector<Template> labels;
  std::vector<PrecedenceEdge> edges;

  /// Index of the node for `t` (up to renaming), if any.
  std::optional<std::size_t> find(const Template& t) const;
};

PrecedenceGraph build_precedence_graph(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                       const ActivationConfig& cfg = {});

/// No negative body template is activated by H(G) as a whole.
bool is_semi_positive(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                      const ActivationConfig& cfg = {});

/// Stratum per canonical template, starting at 1.
using StratumMap = std::map<Template, std::size_t>;

struct StratifyResult {
  PrecedenceGraph graph;
  /// Empty when a negative cycle exists.
  StratumMap levels;
  /// partition[i] holds the generators whose head is in stratum i + 1.
  std::vector<GBox> partition;
  /// A cycle through a negative edge, as consecutive edges; empty if stratifiable.
  std::vector<PrecedenceEdge> cycle;

  bool stratifiable() const noexcept { return cycle.empty(); }
  std::size_t strata() const noexcept { return partition.size(); }
};

/// Most granular stratification from the strongly connected components of
/// the precedence graph: levels are longest paths where negative edges
/// count 1 and positive edges 0.
StratifyResult stratify(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                        const ActivationConfig& cfg = {});

/// Conditions 1-4 of a stratification, checked directly from the generators
/// and minimal activating sets. Templates missing from `v` fail.
bool is_valid_stratification(const GBox& g, const Ontology& o, const LanguageSpec& l, const StratumMap& v,
                             Reasoner& reasoner, const ActivationConfig& cfg = {});

/// Generators grouped by the stratum of their head, strata 1..max(v) in order.
std::vector<GBox> partition_by(const GBox& g, const StratumMap& v);

class NotStratifiable : public Error {
 public:
  NotStratifiable(const std::string& message, std::vector<PrecedenceEdge> cycle)
      : Error(message), cycle_(std::move(cycle)) {}
  const std::vector<PrecedenceEdge>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<PrecedenceEdge> cycle_;
};

/// Fixpoint of each stratum in turn, strata 1..k. Throws NotStratifiable.
ExpansionReport stratified_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                  const ExpandOptions& opts = {}, const ActivationConfig& cfg = {});

/// Same, for a given stratification `v`.
ExpansionReport expand_with_strata(const GBox& g, const Ontology& o, const LanguageSpec& l, const StratumMap& v,
                                   Reasoner& reasoner, const ExpandOptions& opts = {});

/// "A => B" style rendering of a negative-cycle witness.
std::string describe_cycle(const PrecedenceGraph& graph, const std::vector<PrecedenceEdge>& cycle);

}  // namespace gbox
