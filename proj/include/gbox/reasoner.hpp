#pragma once

// Consistency and entailment for ALCHI ontologies via a tableau with
// equality blocking. Every query reduces to one consistency test.

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>

#include "gbox/ontology.hpp"

namespace gbox {

struct TableauConfig {
  /// Upper bound on completion-graph nodes created during one run,
  /// summed over all branches. Exceeding it throws ResourceLimit.
  std::size_t max_nodes = 100000;
};

struct TableauStats {
  std::size_t nodes = 0;
  std::size_t clashes = 0;
  std::size_t branches = 0;

  TableauStats& operator+=(const TableauStats& o) {
    nodes += o.nodes;
    clashes += o.clashes;
    branches += o.branches;
    return *this;
  }
};

struct EntailmentResult {
  bool holds = false;
  TableauStats stats;
};

EntailmentResult is_consistent(const Ontology& o, const TableauConfig& cfg = {});

/// Ontology that is inconsistent exactly when `o` entails `a`. Introduces the
/// fresh names `__fresh_x0` and `__fresh_B`, which the parser never produces.
Ontology refutation_ontology(const Ontology& o, const Axiom& a);

EntailmentResult entails_axiom(const Ontology& o, const Axiom& a, const TableauConfig& cfg = {});

/// Conjunction over the axioms of `target`; an empty target always holds.
EntailmentResult entails_ontology(const Ontology& o, const Ontology& target, const TableauConfig& cfg = {});

bool equivalent(const Ontology& a, const Ontology& b, const TableauConfig& cfg = {});

/// Memoizing front end used by the engine. Answers for one ontology are kept
/// until a different ontology with the same fingerprint slot is queried.
/// Safe to call from several threads.
class Reasoner {
 public:
  explicit Reasoner(TableauConfig cfg = {}) : cfg_(cfg) {}

  const TableauConfig& config() const noexcept { return cfg_; }

  bool is_consistent(const Ontology& o);
  bool entails(const Ontology& o, const Axiom& a);
  bool entails(const Ontology& o, const Ontology& target);
  bool equivalent(const Ontology& a, const Ontology& b);

  /// Tableau runs actually performed (cache misses).
  std::size_t tableau_runs() const;
  TableauStats stats() const;

 private:
  struct Entry {
    Ontology ontology;
    int consistent = -1;
    std::map<Axiom, bool> answers;
  };

  Entry& entry_for(const Ontology& o);
  void record(const TableauStats& s);

  TableauConfig cfg_;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, Entry> cache_;
  std::size_t runs_ = 0;
  TableauStats stats_;
};

}  // namespace gbox
