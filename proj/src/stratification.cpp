#include "gbox/stratification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "gbox/printer.hpp"

namespace gbox {

// ---------------------------------------------------------------------------
// Canonical templates

namespace {

using Renaming = std::map<std::string, std::string>;

Role rename(const Role& r, const Renaming& m) { return r.is_var() ? Role::var(m.at(r.name())) : r; }

Individual rename(const Individual& i, const Renaming& m) { return i.is_var ? Individual::var(m.at(i.name)) : i; }

Concept rename(const Concept& c, const Renaming& m) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Var:
      return Concept::var(m.at(c.name()));
    case K::Not:
      return Concept::negation(rename(c.operand(), m));
    case K::And:
    case K::Or: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(rename(op, m));
      return c.kind() == K::And ? Concept::conjunction(std::move(ops)) : Concept::disjunction(std::move(ops));
    }
    case K::Exists:
      return Concept::some(rename(c.role(), m), rename(c.operand(), m));
    case K::Forall:
      return Concept::only(rename(c.role(), m), rename(c.operand(), m));
    default:
      return c;
  }
}

Axiom rename(const Axiom& a, const Renaming& m) {
  return std::visit(
      [&m](const auto& ax) -> Axiom {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return ConceptInclusion{rename(ax.sub, m), rename(ax.sup, m)};
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          return RoleInclusion{rename(ax.sub, m), rename(ax.sup, m)};
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return ConceptAssertion{rename(ax.expr, m), rename(ax.individual, m)};
        } else {
          return RoleAssertion{ax.role.is_var() ? rename(ax.role, m) : ax.role, rename(ax.subject, m),
                               rename(ax.object, m)};
        }
      },
      a);
}

Template rename(const Template& t, const Renaming& m) {
  AxiomSet axioms;
  for (const auto& a : t.axioms()) axioms.insert(canonicalize(rename(a, m)));
  VarSet vars;
  for (const auto& [name, type] : t.vars()) vars.emplace(m.at(name), type);
  return Template(axioms, vars);
}

/// Beyond this many variables only the name-order renaming is tried.
constexpr std::size_t kMaxPermutedVars = 6;

}  // namespace

Template canonical_template(const Template& t) {
  std::vector<std::string> names;
  for (const auto& [name, type] : t.vars()) names.push_back(name);
  std::vector<std::size_t> perm(names.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Template> best;
  do {
    Renaming m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = "v" + std::to_string(perm[i] + 1);
    Template candidate = rename(t, m);
    if (!best || candidate < *best) best = std::move(candidate);
  } while (names.size() <= kMaxPermutedVars && std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// ---------------------------------------------------------------------------
// Activation

std::optional<ActivationWitness> activates(const std::vector<Template>& s, const Template& t, const Ontology& o,
                                           const LanguageSpec& l, Reasoner& reasoner, const ActivationConfig& cfg) {
  std::vector<std::vector<Substitution>> choices;
  double checks = static_cast<double>(enumerate_substitutions(t.vars(), l).size());
  for (const auto& si : s) {
    choices.push_back(enumerate_substitutions(si.vars(), l));
    if (choices.back().empty()) return std::nullopt;
    checks *= static_cast<double>(choices.back().size());
  }
  if (checks > static_cast<double>(cfg.budget)) {
    throw ResourceLimit("activation check needs " + std::to_string(static_cast<std::uint64_t>(checks)) +
                        " entailment checks, budget is " + std::to_string(cfg.budget));
  }

  const EvalOptions any{true};
  std::set<Substitution> already;
  if (cfg.proper) {
    for (auto& sigma : eval_template(t, o, l, reasoner, any)) already.insert(std::move(sigma));
  }

  std::vector<std::size_t> pick(s.size(), 0);
  for (;;) {
    Ontology extended = o;
    for (std::size_t i = 0; i < s.size(); ++i) extended.insert(apply_substitution(s[i], choices[i][pick[i]]));
    for (auto& sigma : eval_template(t, extended, l, reasoner, any)) {
      if (already.contains(sigma)) continue;
      ActivationWitness w;
      for (std::size_t i = 0; i < s.size(); ++i) w.head_substitutions.push_back(choices[i][pick[i]]);
      w.target = std::move(sigma);
      return w;
    }
    // next tuple, first template most significant
    std::size_t i = s.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (s.empty()) return std::nullopt;
  }
}

std::vector<std::vector<std::size_t>> minimal_activating_sets(const Template& t, const std::vector<Template>& heads,
                                                              const Ontology& o, const LanguageSpec& l,
                                                              Reasoner& reasoner, const ActivationConfig& cfg) {
  if (heads.size() > cfg.max_heads) {
    throw ResourceLimit("minimal activating sets over " + std::to_string(heads.size()) + " heads exceed the limit of " +
                        std::to_string(cfg.max_heads));
  }
  std::vector<std::vector<std::size_t>> found;
  const std::size_t n = heads.size();
  for (std::size_t k = 0; k <= n; ++k) {
    // combinations of size k in lexicographic order
    std::vector<std::size_t> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      const bool superset = std::any_of(found.begin(), found.end(), [&](const std::vector<std::size_t>& f) {
        return std::includes(combo.begin(), combo.end(), f.begin(), f.end());
      });
      if (!superset) {
        std::vector<Template> subset;
        for (std::size_t i : combo) subset.push_back(heads[i]);
        if (activates(subset, t, o, l, reasoner, cfg)) found.push_back(combo);
      }
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Precedence graph

const char* to_string(Polarity p) noexcept { return p == Polarity::Positive ? "positive" : "negative"; }

std::optional<std::size_t> PrecedenceGraph::find(const Template& t) const {
  const Template key = canonical_template(t);
  auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
  if (it == nodes.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

namespace {

struct Occurrences {
  std::vector<std::size_t> heads;  // node indices, sorted, distinct
  std::vector<bool> positive_body;
  std::vector<bool> negative_body;
};

PrecedenceGraph collect_nodes(const GBox& g, Occurrences& occ) {
  std::map<Template, Template> first;  // canonical -> original
  auto note = [&first](const Template& t) { first.emplace(canonical_template(t), t); };
  for (const auto& gen : g) {
    note(gen.positive_body());
    for (const auto& n : gen.negative_bodies()) note(n);
    note(gen.head());
  }
  PrecedenceGraph graph;
  for (const auto& [key, original] : first) {
    graph.nodes.push_back(key);
    graph.labels.push_back(original);
  }
  occ.positive_body.assign(graph.nodes.size(), false);
  occ.negative_body.assign(graph.nodes.size(), false);
  std::set<std::size_t> heads;
  for (const auto& gen : g) {
    occ.positive_body[*graph.find(gen.positive_body())] = true;
    for (const auto& n : gen.negative_bodies()) occ.negative_body[*graph.find(n)] = true;
    heads.insert(*graph.find(gen.head()));
  }
  occ.heads.assign(heads.begin(), heads.end());
  return graph;
}

std::vector<Template> head_templates(const PrecedenceGraph& graph, const Occurrences& occ) {
  std::vector<Template> out;
  for (std::size_t h : occ.heads) out.push_back(graph.nodes[h]);
  return out;
}

}  // namespace

PrecedenceGraph build_precedence_graph(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                       const ActivationConfig& cfg) {
  Occurrences occ;
  PrecedenceGraph graph = collect_nodes(g, occ);
  std::set<PrecedenceEdge> edges;
  for (const auto& gen : g) {
    const std::size_t head = *graph.find(gen.head());
    edges.insert({*graph.find(gen.positive_body()), head, Polarity::Positive});
    for (const auto& n : gen.negative_bodies()) edges.insert({*graph.find(n), head, Polarity::Negative});
  }
  const std::vector<Template> heads = head_templates(graph, occ);
  for (std::size_t t = 0; t < graph.nodes.size(); ++t) {
    if (!occ.positive_body[t] && !occ.negative_body[t]) continue;
    for (const auto& set : minimal_activating_sets(graph.nodes[t], heads, o, l, reasoner, cfg)) {
      for (std::size_t i : set) {
        if (occ.positive_body[t]) edges.insert({occ.heads[i], t, Polarity::Positive});
        if (occ.negative_body[t]) edges.insert({occ.heads[i], t, Polarity::Negative});
      }
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

bool is_semi_positive(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                      const ActivationConfig& cfg) {
  if (!g.has_negation()) return true;
  Occurrences occ;
  const PrecedenceGraph graph = collect_nodes(g, occ);
  const std::vector<Template> heads = head_templates(graph, occ);
  for (std::size_t t = 0; t < graph.nodes.size(); ++t) {
    if (occ.negative_body[t] && activates(heads, graph.nodes[t], o, l, reasoner, cfg)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stratification

namespace {

/// Tarjan's algorithm; returns the component of every node.
std::vector<std::size_t> components(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::vector<std::size_t> index(n, SIZE_MAX);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::size_t next_comp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == SIZE_MAX) visit(v);
  }
  return comp;
}

/// Edges of a shortest path from `from` to `to` inside one component.
std::vector<PrecedenceEdge> path_within(const PrecedenceGraph& graph, const std::vector<std::size_t>& comp,
                                        std::size_t from, std::size_t to) {
  std::vector<std::optional<PrecedenceEdge>> via(graph.nodes.size());
  std::vector<bool> seen(graph.nodes.size(), false);
  std::queue<std::size_t> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    if (v == to) break;
    for (const auto& e : graph.edges) {
      if (e.from != v || seen[e.to] || comp[e.to] != comp[from]) continue;
      seen[e.to] = true;
      via[e.to] = e;
      queue.push(e.to);
    }
  }
  std::vector<PrecedenceEdge> path;
  for (std::size_t v = to; v != from;) {
    path.push_back(*via[v]);
    v = via[v]->from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<GBox> partition_by(const GBox& g, const StratumMap& v) {
  std::size_t k = 0;
  for (const auto& [t, level] : v) k = std::max(k, level);
  std::vector<std::vector<Generator>> parts(k);
  for (const auto& gen : g) {
    const std::size_t level = v.at(canonical_template(gen.head()));
    parts.at(level - 1).push_back(gen);
  }
  std::vector<GBox> out;
  for (auto& p : parts) out.emplace_back(std::move(p));
  return out;
}

StratifyResult stratify(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                        const ActivationConfig& cfg) {
  StratifyResult result;
  result.graph = build_precedence_graph(g, o, l, reasoner, cfg);
  const PrecedenceGraph& graph = result.graph;
  const std::size_t n = graph.nodes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : graph.edges) adj[e.from].push_back(e.to);
  const std::vector<std::size_t> comp = components(n, adj);

  // prefer a witness between two templates over a self-loop
  for (bool self_loops : {false, true}) {
    for (const auto& e : graph.edges) {
      if (e.polarity != Polarity::Negative || comp[e.from] != comp[e.to] || (e.from == e.to) != self_loops) continue;
      result.cycle.push_back(e);
      for (const auto& step : path_within(graph, comp, e.to, e.from)) result.cycle.push_back(step);
      return result;
    }
  }

  // longest paths; no positive-weight cycles remain, so relaxation settles
  std::vector<std::size_t> level(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : graph.edges) {
      const std::size_t want = level[e.from] + (e.polarity == Polarity::Negative ? 1 : 0);
      if (level[e.to] < want) {
        level[e.to] = want;
        changed = true;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) result.levels[graph.nodes[v]] = level[v];
  result.partition = partition_by(g, result.levels);
  return result;
}

bool is_valid_stratification(const GBox& g, const Ontology& o, const LanguageSpec& l, const StratumMap& v,
                             Reasoner& reasoner, const ActivationConfig& cfg) {
  auto value = [&v](const Template& t) -> std::optional<std::size_t> {
    auto it = v.find(canonical_template(t));
    if (it == v.end()) return std::nullopt;
    return it->second;
  };
  std::set<Template> head_set;
  for (const auto& gen : g) head_set.insert(canonical_template(gen.head()));
  const std::vector<Template> heads(head_set.begin(), head_set.end());
  // largest stratum among the members of each activating set
  auto max_over = [&](const std::vector<std::size_t>& set) -> std::optional<std::size_t> {
    std::size_t m = 0;
    for (std::size_t i : set) {
      auto hv = value(heads[i]);
      if (!hv) return std::nullopt;
      m = std::max(m, *hv);
    }
    return m;
  };
  for (const auto& gen : g) {
    const auto vh = value(gen.head());
    const auto vb = value(gen.positive_body());
    if (!vh || !vb || *vh < *vb) return false;
    for (const auto& set : minimal_activating_sets(canonical_template(gen.positive_body()), heads, o, l, reasoner, cfg)) {
      const auto m = max_over(set);
      if (!m || (!set.empty() && *vb < *m)) return false;
    }
    for (const auto& neg : gen.negative_bodies()) {
      const auto vn = value(neg);
      if (!vn || *vh <= *vn) return false;
      for (const auto& set : minimal_activating_sets(canonical_template(neg), heads, o, l, reasoner, cfg)) {
        const auto m = max_over(set);
        if (!m || (!set.empty() && *vn <= *m)) return false;
      }
    }
  }
  return true;
}

std::string describe_cycle(const PrecedenceGraph& graph, const std::vector<PrecedenceEdge>& cycle) {
  if (cycle.empty()) return "";
  std::string out = to_string(graph.labels[cycle.front().from]);
  for (const auto& e : cycle) {
    out += e.polarity == Polarity::Negative ? " -not-> " : " -> ";
    out += to_string(graph.labels[e.to]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stratified expansion

ExpansionReport expand_with_strata(const GBox& g, const Ontology& o, const LanguageSpec& l, const StratumMap& v,
                                   Reasoner& reasoner, const ExpandOptions& opts) {
  if (!opts.allow_inconsistent && !reasoner.is_consistent(o)) {
    throw InconsistentInput("input ontology is inconsistent");
  }
  ExpansionReport report;
  report.result = o;
  for (const GBox& stratum : partition_by(g, v)) {
    if (stratum.empty()) continue;
    ExpandOptions inner;
    inner.allow_inconsistent = true;
    inner.allow_negation = true;
    if (opts.max_steps) inner.max_steps = *opts.max_steps - std::min(*opts.max_steps, report.steps);
    ExpansionReport part = expand_fixpoint(stratum, report.result, l, reasoner, inner);
    report.result = std::move(part.result);
    report.steps += part.steps;
    for (auto& step : part.added_axioms) report.added_axioms.push_back(std::move(step));
    if (part.limits_hit) {
      report.limits_hit = true;
      break;
    }
  }
  report.consistent = reasoner.is_consistent(report.result);
  return report;
}

ExpansionReport stratified_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner,
                                  const ExpandOptions& opts, const ActivationConfig& cfg) {
  if (!opts.allow_inconsistent && !reasoner.is_consistent(o)) {
    throw InconsistentInput("input ontology is inconsistent");
  }
  const StratifyResult s = stratify(g, o, l, reasoner, cfg);
  if (!s.stratifiable()) {
    throw NotStratifiable("GBox is not stratifiable: " + describe_cycle(s.graph, s.cycle), s.cycle);
  }
  return expand_with_strata(g, o, l, s.levels, reasoner, opts);
}

}  // namespace gbox
