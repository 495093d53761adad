#include "gbox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "gbox/errors.hpp"
#include "gbox/reasoner.hpp"

namespace gbox {

// ---------------------------------------------------------------------------
// Model checking

namespace {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

const Pairs kNoPairs;

/// Calls f(d, e) for every (d, e) in the extension of r.
template <typename F>
void for_each_pair(const FiniteInterpretation& i, const Role& r, F&& f) {
  if (r.is_var()) throw TypeError("cannot evaluate role variable ?" + r.name());
  auto it = i.roles.find(r.name());
  const Pairs& pairs = it == i.roles.end() ? kNoPairs : it->second;
  for (auto [d, e] : pairs) {
    if (r.is_inverse()) {
      f(e, d);
    } else {
      f(d, e);
    }
  }
}

std::size_t element_of(const FiniteInterpretation& i, const Individual& ind) {
  if (ind.is_var) throw TypeError("cannot evaluate individual variable ?" + ind.name);
  auto it = i.individuals.find(ind.name);
  if (it == i.individuals.end()) throw Error("individual " + ind.name + " is not interpreted");
  return it->second;
}

}  // namespace

std::vector<bool> FiniteInterpretation::extension(const Concept& c) const {
  using K = Concept::Kind;
  std::vector<bool> out(size, false);
  switch (c.kind()) {
    case K::Name: {
      auto it = concepts.find(c.name());
      if (it != concepts.end()) out = it->second;
      out.resize(size, false);
      return out;
    }
    case K::Top:
      return std::vector<bool>(size, true);
    case K::Bottom:
      return out;
    case K::Not: {
      out = extension(c.operand());
      out.flip();
      return out;
    }
    case K::And:
    case K::Or: {
      const bool is_and = c.kind() == K::And;
      out.assign(size, is_and);
      for (const auto& op : c.operands()) {
        const auto e = extension(op);
        for (std::size_t d = 0; d < size; ++d) out[d] = is_and ? (out[d] && e[d]) : (out[d] || e[d]);
      }
      return out;
    }
    case K::Exists: {
      const auto filler = extension(c.operand());
      for_each_pair(*this, c.role(), [&](std::size_t d, std::size_t e) {
        if (filler[e]) out[d] = true;
      });
      return out;
    }
    case K::Forall: {
      const auto filler = extension(c.operand());
      out.assign(size, true);
      for_each_pair(*this, c.role(), [&](std::size_t d, std::size_t e) {
        if (!filler[e]) out[d] = false;
      });
      return out;
    }
    case K::Var:
      break;
  }
  throw TypeError("cannot evaluate concept variable ?" + c.name());
}

bool FiniteInterpretation::satisfies(const Axiom& a) const {
  return std::visit(
      [this](const auto& ax) -> bool {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          const auto sub = extension(ax.sub);
          const auto sup = extension(ax.sup);
          for (std::size_t d = 0; d < size; ++d) {
            if (sub[d] && !sup[d]) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, RoleInclusion>) {
          Pairs sup;
          for_each_pair(*this, ax.sup, [&](std::size_t d, std::size_t e) { sup.emplace(d, e); });
          bool ok = true;
          for_each_pair(*this, ax.sub, [&](std::size_t d, std::size_t e) {
            if (!sup.contains({d, e})) ok = false;
          });
          return ok;
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return extension(ax.expr)[element_of(*this, ax.individual)];
        } else {
          const std::size_t d = element_of(*this, ax.subject);
          const std::size_t e = element_of(*this, ax.object);
          bool found = false;
          for_each_pair(*this, ax.role, [&](std::size_t x, std::size_t y) {
            if (x == d && y == e) found = true;
          });
          return found;
        }
      },
      a);
}

bool FiniteInterpretation::is_model(const Ontology& o) const {
  if (size == 0) return false;
  return std::all_of(o.begin(), o.end(), [this](const Axiom& a) { return satisfies(a); });
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  void add(const Concept& c) {
    switch (c.kind()) {
      case Concept::Kind::Name:
        concepts.insert(c.name());
        return;
      case Concept::Kind::Exists:
      case Concept::Kind::Forall:
        roles.insert(c.role().name());
        break;
      default:
        break;
    }
    for (const auto& op : c.operands()) add(op);
  }

  void add(const Axiom& a) {
    std::visit(
        [this](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            add(ax.sub);
            add(ax.sup);
          } else if constexpr (std::is_same_v<T, RoleInclusion>) {
            roles.insert(ax.sub.name());
            roles.insert(ax.sup.name());
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            add(ax.expr);
            individuals.insert(ax.individual.name);
          } else {
            roles.insert(ax.role.name());
            individuals.insert(ax.subject.name);
            individuals.insert(ax.object.name);
          }
        },
        a);
  }
};

bool mentions_roles(const Concept& c) {
  if (c.kind() == Concept::Kind::Exists || c.kind() == Concept::Kind::Forall) return true;
  return std::any_of(c.operands().begin(), c.operands().end(), mentions_roles);
}

bool mentions_roles(const Axiom& a) {
  return std::visit(
      [](const auto& ax) -> bool {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, ConceptInclusion>) {
          return mentions_roles(ax.sub) || mentions_roles(ax.sup);
        } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
          return mentions_roles(ax.expr);
        } else {
          return true;
        }
      },
      a);
}

double count_for_size(const Signature& sig, std::size_t n) {
  const double dn = static_cast<double>(n);
  return std::pow(dn, static_cast<double>(sig.individuals.size())) *
         std::pow(2.0, dn * static_cast<double>(sig.concepts.size())) *
         std::pow(2.0, dn * dn * static_cast<double>(sig.roles.size()));
}

double count_upto(const Signature& sig, std::size_t max_size) {
  double total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) total += count_for_size(sig, n);
  return total;
}

/// Bit i of a vector of `width` bits, the first bit being most significant.
bool bit(std::uint64_t m, std::size_t width, std::size_t i) { return (m >> (width - 1 - i)) & 1U; }

/// Enumerates interpretations of `sig` in lexicographic order and returns the
/// first one accepted by both predicates. `early` sees only the individual
/// map and concept extensions.
template <typename Early, typename Full>
std::optional<FiniteInterpretation> enumerate(const Signature& sig, std::size_t max_size, std::uint64_t budget,
                                              Early&& early, Full&& full) {
  if (count_upto(sig, max_size) > static_cast<double>(budget)) {
    throw ResourceLimit("model enumeration exceeds budget of " + std::to_string(budget) + " interpretations");
  }
  const std::vector<std::string> inds(sig.individuals.begin(), sig.individuals.end());
  const std::vector<std::string> cs(sig.concepts.begin(), sig.concepts.end());
  const std::vector<std::string> rs(sig.roles.begin(), sig.roles.end());
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::size_t cbits = n * cs.size();
    const std::size_t rbits = n * n * rs.size();
    std::vector<std::size_t> map(inds.size(), 0);
    for (bool more = true; more;) {
      FiniteInterpretation fi;
      fi.size = n;
      for (std::size_t k = 0; k < inds.size(); ++k) fi.individuals[inds[k]] = map[k];
      for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << cbits); ++cm) {
        for (std::size_t c = 0; c < cs.size(); ++c) {
          std::vector<bool> ext(n);
          for (std::size_t d = 0; d < n; ++d) ext[d] = bit(cm, cbits, c * n + d);
          fi.concepts[cs[c]] = std::move(ext);
        }
        if (!early(fi)) continue;
        for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << rbits); ++rm) {
          for (std::size_t r = 0; r < rs.size(); ++r) {
            Pairs& p = fi.roles[rs[r]];
            p.clear();
            for (std::size_t d = 0; d < n; ++d) {
              for (std::size_t e = 0; e < n; ++e) {
                if (bit(rm, rbits, r * n * n + d * n + e)) p.emplace(d, e);
              }
            }
          }
          if (full(fi)) return fi;
        }
      }
      // next individual map, first individual most significant
      more = false;
      for (std::size_t k = inds.size(); k-- > 0;) {
        if (++map[k] < n) {
          more = true;
          break;
        }
        map[k] = 0;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

double enumeration_size(const Ontology& o, std::size_t max_size) {
  Signature sig;
  for (const auto& a : o) sig.add(a);
  return count_upto(sig, max_size);
}

namespace {

template <typename Extra>
std::optional<FiniteInterpretation> search(const Ontology& o, const Signature& sig, std::size_t max_size,
                                           std::uint64_t budget, Extra&& extra) {
  std::vector<const Axiom*> early;
  std::vector<const Axiom*> late;
  for (const auto& a : o) (mentions_roles(a) ? late : early).push_back(&a);
  return enumerate(
      sig, max_size, budget,
      [&](const FiniteInterpretation& fi) {
        return std::all_of(early.begin(), early.end(), [&](const Axiom* a) { return fi.satisfies(*a); });
      },
      [&](const FiniteInterpretation& fi) {
        return std::all_of(late.begin(), late.end(), [&](const Axiom* a) { return fi.satisfies(*a); }) &&
               extra(fi);
      });
}

}  // namespace

std::optional<FiniteInterpretation> find_model_upto(const Ontology& o, std::size_t max_size, std::uint64_t budget) {
  Signature sig;
  for (const auto& a : o) sig.add(a);
  return search(o, sig, max_size, budget, [](const FiniteInterpretation&) { return true; });
}

std::optional<FiniteInterpretation> find_countermodel_upto(const Ontology& o, const Axiom& a, std::size_t max_size,
                                                           std::uint64_t budget) {
  if (!is_ground(a)) throw TypeError("entailment query must be ground");
  Signature sig;
  for (const auto& ax : o) sig.add(ax);
  sig.add(a);
  return search(o, sig, max_size, budget, [&a](const FiniteInterpretation& fi) { return !fi.satisfies(a); });
}

// ---------------------------------------------------------------------------
// Type elimination

namespace {

constexpr std::size_t kMaxBasics = 12;

/// Types are bitmasks over the basic formulas: concept names and
/// existentials (universals are read as negated existentials).
class TypeSpace {
 public:
  explicit TypeSpace(const Ontology& o) {
    for (const auto& a : o) collect(a);
  }

  bool too_large() const { return basics_.size() > kMaxBasics; }
  std::size_t width() const { return basics_.size(); }

  void finish(const Ontology& o) {
    // role ids: 2 * index + inverse
    role_ids_.assign(basics_.size(), -1);
    for (std::size_t i = 0; i < basics_.size(); ++i) {
      if (basics_[i].kind() == Concept::Kind::Exists) role_ids_[i] = role_id(basics_[i].role());
    }
    for (const auto& a : o) {
      if (const auto* ri = std::get_if<RoleInclusion>(&a)) {
        role_id(ri->sub);
        role_id(ri->sup);
      } else if (const auto* ra = std::get_if<RoleAssertion>(&a)) {
        role_id(ra->role);
      }
    }
    const std::size_t nr = 2 * role_index_.size();
    sub_.assign(nr, std::vector<bool>(nr, false));
    for (std::size_t r = 0; r < nr; ++r) sub_[r][r] = true;
    for (const auto& a : o) {
      if (const auto* ri = std::get_if<RoleInclusion>(&a)) {
        const int r = role_id(ri->sub);
        const int s = role_id(ri->sup);
        sub_[r][s] = true;
        sub_[r ^ 1][s ^ 1] = true;
      }
    }
    for (std::size_t k = 0; k < nr; ++k) {
      for (std::size_t i = 0; i < nr; ++i) {
        if (!sub_[i][k]) continue;
        for (std::size_t j = 0; j < nr; ++j) {
          if (sub_[k][j]) sub_[i][j] = true;
        }
      }
    }
  }

  bool eval(const Concept& c, std::uint32_t t) const {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Name:
      case K::Exists:
        return (t >> basic_index_.at(canonicalize(c))) & 1U;
      case K::Forall:
        return !((t >> basic_index_.at(forall_key(c))) & 1U);
      case K::Top:
        return true;
      case K::Bottom:
        return false;
      case K::Not:
        return !eval(c.operand(), t);
      case K::And:
        return std::all_of(c.operands().begin(), c.operands().end(), [&](const Concept& op) { return eval(op, t); });
      case K::Or:
        return std::any_of(c.operands().begin(), c.operands().end(), [&](const Concept& op) { return eval(op, t); });
      case K::Var:
        break;
    }
    throw TypeError("type elimination needs ground concepts");
  }

  /// Whether an edge t --r--> u is allowed by the existentials false in t and u.
  bool compatible(std::uint32_t t, std::uint32_t u, int r) const {
    for (std::size_t i = 0; i < basics_.size(); ++i) {
      const Concept& b = basics_[i];
      if (b.kind() != Concept::Kind::Exists) continue;
      const int s = role_ids_.at(i);
      if (sub_[r][s] && !((t >> i) & 1U) && eval(b.operand(), u)) return false;
      if (sub_[r ^ 1][s] && !((u >> i) & 1U) && eval(b.operand(), t)) return false;
    }
    return true;
  }

  const std::vector<Concept>& basics() const { return basics_; }
  int basic_role(std::size_t i) const { return role_ids_.at(i); }
  bool sub_role(int r, int s) const { return sub_[r][s]; }
  std::size_t role_count() const { return role_index_.size(); }
  const std::string& role_name(int r) const { return role_names_.at(static_cast<std::size_t>(r / 2)); }

  int role_id(const Role& r) {
    auto [it, inserted] = role_index_.emplace(r.name(), static_cast<int>(role_index_.size()));
    if (inserted) role_names_.push_back(r.name());
    return 2 * it->second + (r.is_inverse() ? 1 : 0);
  }

  int role_id(const Role& r) const { return 2 * role_index_.at(r.name()) + (r.is_inverse() ? 1 : 0); }

 private:
  static Concept forall_key(const Concept& c) {
    return canonicalize(Concept::some(c.role(), Concept::negation(c.operand())));
  }

  void add_basic(const Concept& b) {
    if (basic_index_.emplace(b, basics_.size()).second) basics_.push_back(b);
  }

  void collect(const Concept& c) {
    switch (c.kind()) {
      case Concept::Kind::Name:
        add_basic(c);
        return;
      case Concept::Kind::Exists:
        add_basic(canonicalize(c));
        break;
      case Concept::Kind::Forall:
        add_basic(forall_key(c));
        break;
      default:
        break;
    }
    for (const auto& op : c.operands()) collect(op);
  }

  void collect(const Axiom& a) {
    std::visit(
        [this](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, ConceptInclusion>) {
            collect(ax.sub);
            collect(ax.sup);
          } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
            collect(ax.expr);
          }
        },
        a);
  }

  std::vector<Concept> basics_;
  std::map<Concept, std::size_t> basic_index_;
  std::map<std::string, int> role_index_;
  std::vector<std::string> role_names_;
  std::vector<std::vector<bool>> sub_;
  std::vector<int> role_ids_;  // per basic, -1 for concept names
};

struct Elimination {
  enum class Outcome { Unsatisfiable, Satisfiable, TooLarge };
  Outcome outcome = Outcome::TooLarge;
  std::optional<FiniteInterpretation> model;
};

Elimination eliminate(const Ontology& r) {
  Elimination out;
  TypeSpace ts(r);
  if (ts.too_large()) return out;
  ts.finish(r);

  std::vector<const ConceptInclusion*> tbox;
  std::vector<const ConceptAssertion*> concept_assertions;
  std::vector<const RoleAssertion*> role_assertions;
  std::set<std::string> individual_names;
  for (const auto& a : r) {
    if (const auto* ci = std::get_if<ConceptInclusion>(&a)) tbox.push_back(ci);
    if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
      concept_assertions.push_back(ca);
      individual_names.insert(ca->individual.name);
    }
    if (const auto* ra = std::get_if<RoleAssertion>(&a)) {
      role_assertions.push_back(ra);
      individual_names.insert(ra->subject.name);
      individual_names.insert(ra->object.name);
    }
  }

  const std::uint32_t ntypes = std::uint32_t{1} << ts.width();
  std::vector<std::uint32_t> alive;
  for (std::uint32_t t = 0; t < ntypes; ++t) {
    const bool ok = std::all_of(tbox.begin(), tbox.end(), [&](const ConceptInclusion* ci) {
      return !ts.eval(ci->sub, t) || ts.eval(ci->sup, t);
    });
    if (ok) alive.push_back(t);
  }

  const auto& basics = ts.basics();
  auto witness = [&](std::uint32_t t, std::size_t i, const std::vector<std::uint32_t>& pool) -> std::optional<std::uint32_t> {
    for (std::uint32_t u : pool) {
      if (ts.eval(basics[i].operand(), u) && ts.compatible(t, u, ts.basic_role(i))) return u;
    }
    return std::nullopt;
  };

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::uint32_t> next;
    for (std::uint32_t t : alive) {
      bool ok = true;
      for (std::size_t i = 0; i < basics.size() && ok; ++i) {
        if (basics[i].kind() == Concept::Kind::Exists && ((t >> i) & 1U)) ok = witness(t, i, alive).has_value();
      }
      if (ok) {
        next.push_back(t);
      } else {
        changed = true;
      }
    }
    alive = std::move(next);
  }

  // assign survivor types to individuals
  const std::vector<std::string> inds(individual_names.begin(), individual_names.end());
  std::map<std::string, std::size_t> ind_pos;
  for (std::size_t k = 0; k < inds.size(); ++k) ind_pos[inds[k]] = k;
  std::vector<std::vector<std::uint32_t>> candidates(inds.size());
  for (std::size_t k = 0; k < inds.size(); ++k) {
    for (std::uint32_t t : alive) {
      const bool ok = std::all_of(concept_assertions.begin(), concept_assertions.end(), [&](const ConceptAssertion* ca) {
        return ca->individual.name != inds[k] || ts.eval(ca->expr, t);
      });
      if (ok) candidates[k].push_back(t);
    }
  }
  std::vector<std::uint32_t> chosen(inds.size());
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == inds.size()) return true;
    for (std::uint32_t t : candidates[k]) {
      chosen[k] = t;
      bool ok = true;
      for (const RoleAssertion* ra : role_assertions) {
        const std::size_t a = ind_pos[ra->subject.name];
        const std::size_t b = ind_pos[ra->object.name];
        if (a > k || b > k) continue;
        if (!ts.compatible(chosen[a], chosen[b], ts.role_id(ra->role))) ok = false;
      }
      if (ok && assign(k + 1)) return true;
    }
    return false;
  };
  if ((inds.empty() && alive.empty()) || !assign(0)) {
    out.outcome = Elimination::Outcome::Unsatisfiable;
    return out;
  }
  out.outcome = Elimination::Outcome::Satisfiable;

  // finite model: named elements plus one anonymous element per reachable type
  FiniteInterpretation fi;
  std::vector<std::uint32_t> type_of;
  std::map<std::uint32_t, std::size_t> anon;
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < inds.size(); ++k) {
    fi.individuals[inds[k]] = k;
    type_of.push_back(chosen[k]);
    queue.push_back(k);
  }
  if (inds.empty()) {
    anon[alive.front()] = 0;
    type_of.push_back(alive.front());
    queue.push_back(0);
  }
  std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
  for (const RoleAssertion* ra : role_assertions) {
    edges.emplace_back(ind_pos[ra->subject.name], ind_pos[ra->object.name], ts.role_id(ra->role));
  }
  while (!queue.empty()) {
    const std::size_t d = queue.front();
    queue.pop_front();
    const std::uint32_t t = type_of[d];
    for (std::size_t i = 0; i < basics.size(); ++i) {
      if (basics[i].kind() != Concept::Kind::Exists || !((t >> i) & 1U)) continue;
      const std::uint32_t u = *witness(t, i, alive);
      auto [it, inserted] = anon.emplace(u, type_of.size());
      if (inserted) {
        type_of.push_back(u);
        queue.push_back(it->second);
      }
      edges.emplace_back(d, it->second, ts.basic_role(i));
    }
  }
  fi.size = type_of.size();
  for (std::size_t i = 0; i < basics.size(); ++i) {
    if (basics[i].kind() != Concept::Kind::Name) continue;
    std::vector<bool> ext(fi.size);
    for (std::size_t d = 0; d < fi.size; ++d) ext[d] = (type_of[d] >> i) & 1U;
    fi.concepts[basics[i].name()] = std::move(ext);
  }
  for (auto [d, e, r] : edges) {
    for (int s = 0; s < static_cast<int>(2 * ts.role_count()); ++s) {
      if (!ts.sub_role(r, s)) continue;
      auto& pairs = fi.roles[ts.role_name(s)];
      if (s % 2 == 0) {
        pairs.emplace(d, e);
      } else {
        pairs.emplace(e, d);
      }
    }
  }
  out.model = std::move(fi);
  return out;
}

}  // namespace

const char* to_string(OracleVerdict v) noexcept {
  switch (v) {
    case OracleVerdict::Entailed:    return "entailed";
    case OracleVerdict::NotEntailed: return "not entailed";
    case OracleVerdict::Unknown:     return "unknown";
  }
  return "?";
}

OracleVerdict oracle_entails(const Ontology& o, const Axiom& a, std::size_t max_size, std::uint64_t budget) {
  const Axiom query = canonicalize(a);
  Signature sig;
  for (const auto& ax : o) sig.add(ax);
  sig.add(query);
  std::size_t size = max_size;
  while (size > 0 && count_upto(sig, size) > static_cast<double>(budget)) --size;
  if (size > 0 && find_countermodel_upto(o, query, size, budget)) return OracleVerdict::NotEntailed;

  const Elimination e = eliminate(refutation_ontology(o, query));
  switch (e.outcome) {
    case Elimination::Outcome::Unsatisfiable:
      return OracleVerdict::Entailed;
    case Elimination::Outcome::Satisfiable:
      if (e.model && e.model->is_model(o) && !e.model->satisfies(query)) return OracleVerdict::NotEntailed;
      return OracleVerdict::Unknown;
    case Elimination::Outcome::TooLarge:
      break;
  }
  return OracleVerdict::Unknown;
}

// ---------------------------------------------------------------------------
// Naive expansion

namespace {

void ground_all(const VarSet& vars, VarSet::const_iterator it, const LanguageSpec& l, Substitution& current,
                std::vector<Substitution>& out) {
  if (it == vars.end()) {
    out.push_back(current);
    return;
  }
  const auto& [name, type] = *it;
  auto recurse = [&](Term value) {
    current[name] = std::move(value);
    ground_all(vars, std::next(it), l, current, out);
  };
  switch (type) {
    case VarType::Concept:
      for (const auto& c : l.concepts()) recurse(c);
      break;
    case VarType::Role:
      for (const auto& r : l.roles()) recurse(r);
      break;
    case VarType::Individual:
      for (const auto& i : l.individuals()) recurse(i);
      break;
  }
  current.erase(name);
}

}  // namespace

Ontology naive_expand(const GBox& g, const Ontology& o, const LanguageSpec& l, Reasoner& reasoner) {
  if (g.has_negation()) throw Unsupported("naive expansion handles positive GBoxes only");
  std::vector<std::pair<Ontology, Ontology>> rules;  // (body, head) instances
  for (const auto& gen : g) {
    std::vector<Substitution> subs;
    Substitution current;
    ground_all(gen.vars(), gen.vars().begin(), l, current, subs);
    for (const auto& s : subs) {
      rules.emplace_back(apply_substitution(gen.positive_body(), s), apply_substitution(gen.head(), s));
    }
  }
  Ontology out = o;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [body, head] : rules) {
      if (out.includes(head)) continue;
      if (!reasoner.entails(out, body)) continue;
      out.insert(head);
      changed = true;
    }
  }
  return out;
}

}  // namespace gbox
