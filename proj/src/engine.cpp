#include "gbox/engine.hpp"

#include <algorithm>
#include <limits>

#include "gbox/errors.hpp"
#include "gbox/printer.hpp"

namespace gbox {

namespace {

std::vector<Term> candidates(VarType type, const LanguageSpec& l) {
  std::vector<Term> out;
  switch (type) {
    case VarType::Concept:
      out.assign(l.concepts().begin(), l.concepts().end());
      break;
    case VarType::Role:
      out.assign(l.roles().begin(), l.roles().end());
      break;
    case VarType::Individual:
      out.assign(l.individuals().begin(), l.individuals().end());
      break;
  }
  return out;
}

bool entails_checked(Reasoner& reasoner, const Ontology& o, const Axiom& a, const Substitution& s) {
  try {
    return reasoner.entails(o, a);
  } catch (const ResourceLimit& e) {
    throw ResourceLimit(std::string(e.what()) + " (while checking " + to_string(a) + " under " + to_string(s) + ")");
  }
}

void require_consistent(Reasoner& reasoner, const Ontology& o, const EvalOptions& opts) {
  if (!opts.allow_inconsistent && !reasoner.is_consistent(o)) {
    throw InconsistentInput("input ontology is inconsistent");
  }
}

}  // namespace

std::vector<Substitution> enumerate_substitutions(const VarSet& vars, const LanguageSpec& l) {
  std::vector<Substitution> out{Substitution{}};
  // VarSet is ordered by name; extending the rightmost variable fastest keeps
  // the first variable most significant.
  for (const auto& [name, type] : vars) {
    const auto values = candidates(type, l);
    std::vector<Substitution> next;
    next.reserve(out.size() * values.size());
    for (const auto& s : out) {
      for (const auto& v : values) {
        Substitution t = s;
        t.emplace(name, v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

/// Backtracking join: variables are bound in name order and each axiom is
/// checked as soon as its last variable is bound. Visits survivors in
/// enumeration order.
class Join {
 public:
  Join(const Template& t, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner)
      : o_(o), reasoner_(reasoner) {
    for (const auto& [name, type] : t.vars()) {
      order_.push_back(name);
      values_.push_back(candidates(type, l));
    }
    checks_.resize(order_.size() + 1);
    for (const auto& a : t.axioms()) {
      std::size_t last = 0;
      for (const auto& [name, type] : variables_of(AxiomSet{a})) {
        const auto pos = static_cast<std::size_t>(std::find(order_.begin(), order_.end(), name) - order_.begin());
        last = std::max(last, pos + 1);
      }
      checks_[last].push_back(&a);
    }
  }

  std::vector<Substitution> run() {
    Substitution s;
    if (passes(0, s)) extend(0, s);
    return std::move(out_);
  }

 private:
  bool passes(std::size_t level, const Substitution& s) {
    return std::all_of(checks_[level].begin(), checks_[level].end(), [&](const Axiom* a) {
      return entails_checked(reasoner_, o_, substitute(*a, s), s);
    });
  }

  void extend(std::size_t k, Substitution& s) {
    if (k == order_.size()) {
      out_.push_back(s);
      return;
    }
    for (const auto& v : values_[k]) {
      s[order_[k]] = v;
      if (passes(k + 1, s)) extend(k + 1, s);
    }
    s.erase(order_[k]);
  }

  const Ontology& o_;
  Reasoner& reasoner_;
  std::vector<std::string> order_;
  std::vector<std::vector<Term>> values_;
  /// checks_[k]: axioms whose variables are all among the first k.
  std::vector<std::vector<const Axiom*>> checks_;
  std::vector<Substitution> out_;
};

}  // namespace

std::vector<Substitution> eval_template(const Template& t, const Ontology& o, const LanguageSpec& l,
                                        Reasoner& reasoner, const EvalOptions& opts) {
  require_consistent(reasoner, o, opts);
  return Join(t, o, l, reasoner).run();
}

std::vector<Substitution> eval_template(const Template& t, const Ontology& o, const LanguageSpec& l) {
  Reasoner reasoner;
  return eval_template(t, o, l, reasoner);
}

std::vector<Substitution> active_substitutions(const Generator& g, const Ontology& o, const LanguageSpec& l,
                                               Reasoner& reasoner, const EvalOptions& opts) {
  std::vector<Substitution> out;
  for (auto& s : eval_template(g.positive_body(), o, l, reasoner, opts)) {
    const bool blocked = std::any_of(g.negative_bodies().begin(), g.negative_bodies().end(), [&](const Template& n) {
      return std::all_of(n.axioms().begin(), n.axioms().end(),
                         [&](const Axiom& a) { return entails_checked(reasoner, o, substitute(a, s), s); });
    });
    if (!blocked) out.push_back(std::move(s));
  }
  return out;
}

bool satisfies_generator(const Ontology& o, const Generator& g, const LanguageSpec& l, Reasoner& reasoner,
                         const EvalOptions& opts) {
  for (const auto& s : active_substitutions(g, o, l, reasoner, opts)) {
    for (const auto& a : g.head().axioms()) {
      if (!entails_checked(reasoner, o, substitute(a, s), s)) return false;
    }
  }
  return true;
}

bool satisfies_generator(const Ontology& o, const Generator& g, const LanguageSpec& l) {
  Reasoner reasoner;
  return satisfies_generator(o, g, l, reasoner);
}

StepResult expansion_step(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                          const EvalOptions& opts) {
  require_consistent(reasoner, o, opts);
  std::vector<const Generator*> gens;
  for (const auto& gen : g) gens.push_back(&gen);
  std::sort(gens.begin(), gens.end(), [](const Generator* a, const Generator* b) { return a->name() < b->name(); });

  StepResult step{o, {}};
  const EvalOptions checked{true};
  for (const Generator* gen : gens) {
    for (const auto& s : active_substitutions(*gen, o, l, reasoner, checked)) {
      for (const auto& a : apply_substitution(gen->head(), s)) {
        if (step.result.insert(a)) step.added.push_back({a, gen->name(), s});
      }
    }
  }
  return step;
}

Ontology one_step_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                         const EvalOptions& opts) {
  return expansion_step(g, o, l, reasoner, opts).result;
}

Ontology one_step_expand(const GBox& g, const Ontology& o, const LanguageSpec& l) {
  Reasoner reasoner;
  return one_step_expand(g, o, l, reasoner);
}

std::size_t ExpansionReport::added_count() const {
  std::size_t n = 0;
  for (const auto& step : added_axioms) n += step.size();
  return n;
}

ExpansionReport expand_fixpoint(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                const ExpandOptions& opts) {
  if (g.has_negation() && !opts.allow_negation) {
    throw Unsupported("GBox has negative bodies; its inflationary fixpoint needs explicit opt-in");
  }
  require_consistent(reasoner, o, EvalOptions{opts.allow_inconsistent});

  ExpansionReport report;
  report.result = o;
  // later steps may legitimately run on an inconsistent intermediate result
  const EvalOptions inner{true};
  for (;;) {
    if (opts.max_steps && report.steps >= *opts.max_steps) {
      report.limits_hit = true;
      break;
    }
    StepResult step = expansion_step(g, report.result, l, reasoner, inner);
    ++report.steps;
    const bool changed = !step.added.empty();
    report.added_axioms.push_back(std::move(step.added));
    report.result = std::move(step.result);
    if (!changed) break;
  }
  report.consistent = reasoner.is_consistent(report.result);
  return report;
}

ExpansionReport expand_fixpoint(const GBox& g, const Ontology& o, const LanguageSpec& l, const ExpandOptions& opts) {
  Reasoner reasoner;
  return expand_fixpoint(g, o, l, reasoner, opts);
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t size_bound(const GBox& g, const LanguageSpec& l) {
  std::uint64_t h = 0;
  for (const auto& gen : g) h = std::max<std::uint64_t>(h, gen.head().axioms().size());
  std::uint64_t bound = saturating_mul(g.size(), h);
  for (std::size_t i = 0; i < g.max_variables(); ++i) bound = saturating_mul(bound, l.size());
  return bound;
}

bool check_size_bound(const GBox& g, const LanguageSpec& l, const ExpansionReport& report) {
  return report.added_count() <= size_bound(g, l);
}

}  // namespace gbox
