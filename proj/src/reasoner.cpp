#include "gbox/reasoner.hpp"

#include "gbox/errors.hpp"
#include "tableau.hpp"

namespace gbox {

namespace {

const char* const kFreshIndividual = "__fresh_x0";
const char* const kFreshConcept = "__fresh_B";

constexpr std::size_t kMaxCachedOntologies = 256;

}  // namespace

EntailmentResult is_consistent(const Ontology& o, const TableauConfig& cfg) {
  if (cfg.max_nodes < 1) throw Error("max_nodes must be at least 1");
  detail::Tableau t(o, cfg);
  EntailmentResult r;
  r.holds = t.satisfiable();
  r.stats = t.stats();
  return r;
}

Ontology refutation_ontology(const Ontology& o, const Axiom& a) {
  if (!is_ground(a)) throw TypeError("entailment query must be ground");
  Ontology out = o;
  const Individual x0 = Individual::named(kFreshIndividual);
  const Concept b = Concept::name(kFreshConcept);
  std::visit(
      [&](const auto& ax) {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          out.insert(ConceptAssertion{Concept::conjunction({ax.sub, Concept::negation(ax.sup)}), x0});
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          out.insert(ConceptAssertion{Concept::negation(ax.expr), ax.individual});
        } else if constexpr (std::is_same_v<T, RoleAssertion>) {
          out.insert(ConceptAssertion{b, ax.object});
          out.insert(ConceptAssertion{Concept::only(ax.role, Concept::negation(b)), ax.subject});
        } else {
          out.insert(ConceptAssertion{
              Concept::conjunction({Concept::some(ax.sub, b), Concept::only(ax.sup, Concept::negation(b))}), x0});
        }
      },
      a);
  return out;
}

EntailmentResult entails_axiom(const Ontology& o, const Axiom& a, const TableauConfig& cfg) {
  if (o.contains(a)) return {true, {}};
  EntailmentResult r = is_consistent(refutation_ontology(o, a), cfg);
  r.holds = !r.holds;
  return r;
}

EntailmentResult entails_ontology(const Ontology& o, const Ontology& target, const TableauConfig& cfg) {
  EntailmentResult total{true, {}};
  for (const auto& a : target) {
    EntailmentResult r = entails_axiom(o, a, cfg);
    total.stats += r.stats;
    if (!r.holds) {
      total.holds = false;
      break;
    }
  }
  return total;
}

bool equivalent(const Ontology& a, const Ontology& b, const TableauConfig& cfg) {
  return entails_ontology(a, b, cfg).holds && entails_ontology(b, a, cfg).holds;
}

// ---------------------------------------------------------------------------
// Reasoner

Reasoner::Entry& Reasoner::entry_for(const Ontology& o) {
  const std::uint64_t key = o.fingerprint();
  auto it = cache_.find(key);
  if (it != cache_.end() && it->second.ontology == o) return it->second;
  if (it == cache_.end() && cache_.size() >= kMaxCachedOntologies) cache_.clear();
  Entry& e = cache_[key];
  e = Entry{o, -1, {}};
  return e;
}

void Reasoner::record(const TableauStats& s) {
  ++runs_;
  stats_ += s;
}

bool Reasoner::is_consistent(const Ontology& o) {
  {
    std::lock_guard lock(mutex_);
    const int c = entry_for(o).consistent;
    if (c >= 0) return c == 1;
  }
  const EntailmentResult r = gbox::is_consistent(o, cfg_);
  std::lock_guard lock(mutex_);
  record(r.stats);
  entry_for(o).consistent = r.holds ? 1 : 0;
  return r.holds;
}

bool Reasoner::entails(const Ontology& o, const Axiom& a) {
  const Axiom canon = canonicalize(a);
  if (o.contains(canon)) return true;
  {
    std::lock_guard lock(mutex_);
    Entry& e = entry_for(o);
    if (e.consistent == 0) return true;
    auto it = e.answers.find(canon);
    if (it != e.answers.end()) return it->second;
  }
  if (!is_consistent(o)) return true;
  const EntailmentResult r = entails_axiom(o, canon, cfg_);
  std::lock_guard lock(mutex_);
  record(r.stats);
  entry_for(o).answers.emplace(canon, r.holds);
  return r.holds;
}

bool Reasoner::entails(const Ontology& o, const Ontology& target) {
  for (const auto& a : target) {
    if (!entails(o, a)) return false;
  }
  return true;
}

bool Reasoner::equivalent(const Ontology& a, const Ontology& b) { return entails(a, b) && entails(b, a); }

std::size_t Reasoner::tableau_runs() const {
  std::lock_guard lock(mutex_);
  return runs_;
}

TableauStats Reasoner::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

}  // namespace gbox
