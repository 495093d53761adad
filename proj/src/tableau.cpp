#include "tableau.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <tuple>

#include "gbox/errors.hpp"

namespace gbox::detail {

namespace {

enum class NK : std::uint8_t { Top, Bottom, Atom, NegAtom, And, Or, Exists, Forall };

struct NConcept {
  NK kind;
  int atom = -1;
  int role = -1;
  std::vector<int> ops;  // And/Or operands; filler of Exists/Forall at ops[0]
};

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool set(int i) {
    auto& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

using Deps = std::shared_ptr<const std::vector<int>>;

Deps join(const Deps& a, const Deps& b) {
  if (!a || a->empty()) return b;
  if (!b || b->empty() || a == b) return a;
  auto out = std::make_shared<std::vector<int>>();
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(*out));
  return out;
}

Deps with_level(const Deps& a, int level) { return join(a, std::make_shared<const std::vector<int>>(1, level)); }

Deps without_level(const Deps& a, int level) {
  if (!a) return a;
  auto out = std::make_shared<std::vector<int>>(*a);
  out->erase(std::remove(out->begin(), out->end(), level), out->end());
  return out;
}

bool depends_on(const Deps& d, int level) { return d && std::binary_search(d->begin(), d->end(), level); }

struct Edge {
  int to;
  int role;  // as seen from the owning node
  Deps deps;
};

struct Node {
  Bits label;
  std::vector<Deps> deps;  // indexed by concept id
  int parent = -1;  // -1 for roots
  bool root = false;
  std::vector<Edge> adj;
};

struct State {
  std::vector<Node> nodes;
  bool clash = false;
  Deps clash_deps;
};

}  // namespace

struct Tableau::Impl {
  TableauConfig cfg;
  TableauStats stats;

  std::map<std::string, int> atom_ids;
  std::map<std::string, int> role_names;
  std::map<std::string, int> individuals;
  std::vector<NConcept> concepts;
  std::map<std::tuple<NK, int, int, std::vector<int>>, int> interned;
  std::vector<int> complement;  // literal -> opposite literal, or -1
  std::vector<std::vector<int>> unfold;  // atom -> concepts implied by it
  std::vector<int> universal;
  std::vector<std::vector<bool>> sub_role;  // reflexive-transitive closure
  std::vector<std::pair<int, int>> root_concepts;  // (individual, concept)
  std::vector<std::tuple<int, int, int>> root_edges;  // (subject, object, role)
  int top_id = -1;
  int bottom_id = -1;

  int atom(const std::string& n) {
    auto [it, inserted] = atom_ids.emplace(n, static_cast<int>(atom_ids.size()));
    if (inserted) unfold.emplace_back();
    return it->second;
  }

  int role(const Role& r) {
    auto [it, inserted] = role_names.emplace(r.name(), static_cast<int>(role_names.size()));
    return 2 * it->second + (r.is_inverse() ? 1 : 0);
  }

  int individual(const std::string& n) {
    return individuals.emplace(n, static_cast<int>(individuals.size())).first->second;
  }

  int intern(NK kind, int a, int r, std::vector<int> ops) {
    auto key = std::make_tuple(kind, a, r, ops);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    const int id = static_cast<int>(concepts.size());
    concepts.push_back(NConcept{kind, a, r, std::move(ops)});
    interned.emplace(std::move(key), id);
    return id;
  }

  int junction(bool is_and, std::vector<int> ops) {
    const int unit = is_and ? top() : bottom();
    const int zero = is_and ? bottom() : top();
    std::vector<int> flat;
    for (int op : ops) {
      if (op == unit) continue;
      if (op == zero) return zero;
      const NConcept& c = concepts[op];
      if (c.kind == (is_and ? NK::And : NK::Or)) {
        flat.insert(flat.end(), c.ops.begin(), c.ops.end());
      } else {
        flat.push_back(op);
      }
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return unit;
    if (flat.size() == 1) return flat[0];
    return intern(is_and ? NK::And : NK::Or, -1, -1, std::move(flat));
  }

  int top() {
    if (top_id < 0) top_id = intern(NK::Top, -1, -1, {});
    return top_id;
  }
  int bottom() {
    if (bottom_id < 0) bottom_id = intern(NK::Bottom, -1, -1, {});
    return bottom_id;
  }

  int nnf(const Concept& c, bool neg) {
    using K = Concept::Kind;
    switch (c.kind()) {
      case K::Name:
        return intern(neg ? NK::NegAtom : NK::Atom, atom(c.name()), -1, {});
      case K::Top:
        return neg ? bottom() : top();
      case K::Bottom:
        return neg ? top() : bottom();
      case K::Not:
        return nnf(c.operand(), !neg);
      case K::And:
      case K::Or: {
        std::vector<int> ops;
        for (const auto& op : c.operands()) ops.push_back(nnf(op, neg));
        const bool is_and = (c.kind() == K::And) != neg;
        return junction(is_and, std::move(ops));
      }
      case K::Exists:
      case K::Forall: {
        const int r = role(c.role());
        const int filler = nnf(c.operand(), neg);
        const bool exists = (c.kind() == K::Exists) != neg;
        return intern(exists ? NK::Exists : NK::Forall, -1, r, {filler});
      }
      case K::Var:
        break;
    }
    throw TypeError("tableau input must be ground");
  }

  void load(const Ontology& o) {
    std::vector<std::pair<int, int>> sub_pairs;
    for (const auto& ax : o) {
      std::visit(
          [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ConceptInclusion>) {
              if (a.sub.kind() == Concept::Kind::Name) {
                const int at = atom(a.sub.name());
                const int d = nnf(a.sup, false);
                if (d != top()) unfold[at].push_back(d);
              } else {
                const int g = junction(false, {nnf(a.sub, true), nnf(a.sup, false)});
                if (g != top()) universal.push_back(g);
              }
            } else if constexpr (std::is_same_v<T, RoleInclusion>) {
              sub_pairs.emplace_back(role(a.sub), role(a.sup));
            } else if constexpr (std::is_same_v<T, ConceptAssertion>) {
              const int ind = individual(a.individual.name);
              root_concepts.emplace_back(ind, nnf(a.expr, false));
            } else {
              const int s = individual(a.subject.name);
              const int t = individual(a.object.name);
              root_edges.emplace_back(s, t, role(a.role));
            }
          },
          ax);
    }
    std::sort(universal.begin(), universal.end());
    universal.erase(std::unique(universal.begin(), universal.end()), universal.end());

    const std::size_t nr = 2 * role_names.size();
    sub_role.assign(nr, std::vector<bool>(nr, false));
    for (std::size_t r = 0; r < nr; ++r) sub_role[r][r] = true;
    for (auto [r, s] : sub_pairs) {
      sub_role[r][s] = true;
      sub_role[r ^ 1][s ^ 1] = true;
    }
    for (std::size_t k = 0; k < nr; ++k) {
      for (std::size_t i = 0; i < nr; ++i) {
        if (!sub_role[i][k]) continue;
        for (std::size_t j = 0; j < nr; ++j) {
          if (sub_role[k][j]) sub_role[i][j] = true;
        }
      }
    }

    // every concept gets its NNF complement so clashes on compound concepts
    // and unit propagation on disjunctions see them
    complement.assign(concepts.size(), -1);
    for (std::size_t i = 0; i < concepts.size(); ++i) {
      const int c = negate(static_cast<int>(i));
      complement.resize(concepts.size(), -1);
      complement[i] = c;
      complement[static_cast<std::size_t>(c)] = static_cast<int>(i);
    }
  }

  int negate(int id) {
    if (id < static_cast<int>(complement.size()) && complement[id] >= 0) return complement[id];
    const NConcept c = concepts[id];
    switch (c.kind) {
      case NK::Top:     return bottom();
      case NK::Bottom:  return top();
      case NK::Atom:    return intern(NK::NegAtom, c.atom, -1, {});
      case NK::NegAtom: return intern(NK::Atom, c.atom, -1, {});
      case NK::And:
      case NK::Or: {
        std::vector<int> ops;
        for (int op : c.ops) ops.push_back(negate(op));
        return junction(c.kind == NK::Or, std::move(ops));
      }
      case NK::Exists: return intern(NK::Forall, -1, c.role, {negate(c.ops[0])});
      case NK::Forall: return intern(NK::Exists, -1, c.role, {negate(c.ops[0])});
    }
    return top();
  }

  // -- completion graph -----------------------------------------------------

  std::vector<int> worklist;

  void add(State& s, int x, int c, const Deps& deps) {
    if (s.clash) return;
    Node& n = s.nodes[x];
    if (!n.label.set(c)) return;
    n.deps[c] = deps;
    if (c == bottom_id) {
      s.clash = true;
      s.clash_deps = deps;
      return;
    }
    if (n.label.test(complement[c])) {
      s.clash = true;
      s.clash_deps = join(deps, n.deps[complement[c]]);
      return;
    }
    worklist.push_back(x);
  }

  int new_node(State& s, int parent) {
    if (++stats.nodes > cfg.max_nodes) {
      throw ResourceLimit("tableau exceeded " + std::to_string(cfg.max_nodes) + " nodes");
    }
    const int id = static_cast<int>(s.nodes.size());
    Node n;
    n.label = Bits(concepts.size());
    n.deps.resize(concepts.size());
    n.parent = parent;
    n.root = parent < 0;
    s.nodes.push_back(std::move(n));
    for (int u : universal) add(s, id, u, nullptr);
    return id;
  }

  void connect(State& s, int x, int y, int r, const Deps& deps) {
    s.nodes[x].adj.push_back(Edge{y, r, deps});
    s.nodes[y].adj.push_back(Edge{x, r ^ 1, deps});
    worklist.push_back(x);
    worklist.push_back(y);
  }

  // Saturates the deterministic rules over the whole graph.
  void saturate(State& s) {
    std::vector<int> todo;
    while (!worklist.empty() && !s.clash) {
      const int x = worklist.back();
      worklist.pop_back();
      todo.clear();
      s.nodes[x].label.for_each([&](int c) { todo.push_back(c); });
      for (int c : todo) {
        if (s.clash) break;
        const NConcept& nc = concepts[c];
        const Deps d = s.nodes[x].deps[c];
        switch (nc.kind) {
          case NK::And:
            for (int op : nc.ops) add(s, x, op, d);
            break;
          case NK::Atom:
            for (int u : unfold[nc.atom]) add(s, x, u, d);
            break;
          case NK::Forall: {
            const auto adj = s.nodes[x].adj;
            for (const auto& e : adj) {
              if (sub_role[e.role][nc.role]) add(s, e.to, nc.ops[0], join(d, e.deps));
            }
            break;
          }
          case NK::Or: {
            // unit propagation: one disjunct left whose complement is absent
            int open = -1;
            int count = 0;
            Deps why = d;
            for (int op : nc.ops) {
              if (s.nodes[x].label.test(op)) {
                count = -1;
                break;
              }
              if (s.nodes[x].label.test(complement[op])) {
                why = join(why, s.nodes[x].deps[complement[op]]);
              } else {
                open = op;
                ++count;
              }
            }
            if (count == 0) {
              s.clash = true;
              s.clash_deps = why;
            } else if (count == 1) {
              add(s, x, open, why);
            }
            break;
          }
          default:
            break;
        }
      }
    }
    worklist.clear();
  }

  // 0 = not blocked, 1 = directly blocked, 2 = indirectly blocked.
  std::vector<std::uint8_t> blocking(const State& s) const {
    std::vector<std::uint8_t> out(s.nodes.size(), 0);
    for (std::size_t x = 0; x < s.nodes.size(); ++x) {
      const Node& n = s.nodes[x];
      if (n.root) continue;
      if (out[n.parent] != 0) {
        out[x] = 2;
        continue;
      }
      for (int y = n.parent; y >= 0 && !s.nodes[y].root; y = s.nodes[y].parent) {
        if (s.nodes[y].label == n.label) {
          out[x] = 1;
          break;
        }
      }
    }
    return out;
  }

  bool has_neighbour(const State& s, int x, int r, int c) const {
    for (const auto& e : s.nodes[x].adj) {
      if (sub_role[e.role][r] && s.nodes[e.to].label.test(c)) return true;
    }
    return false;
  }

  struct Branch {
    State base;
    int node;
    int concept_id;
    std::size_t next;  // index of the next disjunct to try
    int level;
    Deps acc;  // clash dependencies of the alternatives tried so far, minus level
  };

  void requeue(State& s) {
    worklist.clear();
    for (std::size_t x = 0; x < s.nodes.size(); ++x) worklist.push_back(static_cast<int>(x));
  }

  /// Puts disjunct `b.next` of the branch into a copy of its base state.
  /// Earlier disjuncts are known to fail, so their complements are added too.
  State take_alternative(Branch& b, bool last) {
    State s = b.base;
    requeue(s);
    const auto& ops = concepts[b.concept_id].ops;
    const Deps or_deps = s.nodes[b.node].deps[b.concept_id];
    const Deps failed = join(or_deps, b.acc);
    for (std::size_t k = 0; k < b.next; ++k) add(s, b.node, complement[ops[k]], failed);
    const Deps d = last ? failed : with_level(or_deps, b.level);
    add(s, b.node, ops[b.next], d);
    ++b.next;
    return s;
  }

  bool run() {
    State s;
    for (std::size_t i = 0; i < std::max<std::size_t>(individuals.size(), 1); ++i) new_node(s, -1);
    for (auto [ind, c] : root_concepts) add(s, ind, c, nullptr);
    for (auto [a, b, r] : root_edges) connect(s, a, b, r, nullptr);
    requeue(s);

    std::vector<Branch> branches;
    int level = 0;
    for (;;) {
      saturate(s);
      if (s.clash) {
        ++stats.clashes;
        Deps d = s.clash_deps;
        bool resumed = false;
        while (!branches.empty()) {
          Branch& b = branches.back();
          if (!depends_on(d, b.level)) {
            branches.pop_back();
            continue;
          }
          b.acc = join(b.acc, without_level(d, b.level));
          const std::size_t n = concepts[b.concept_id].ops.size();
          if (b.next >= n) {
            d = join(b.acc, b.base.nodes[b.node].deps[b.concept_id]);
            branches.pop_back();
            continue;
          }
          const bool last = b.next + 1 == n;
          s = take_alternative(b, last);
          level = b.level;
          if (last) {
            branches.pop_back();
            level = b.level - 1;
          }
          resumed = true;
          break;
        }
        if (!resumed) return false;
        continue;
      }

      const auto blocked = blocking(s);
      bool applied = false;
      for (std::size_t x = 0; x < s.nodes.size() && !applied; ++x) {
        if (blocked[x] == 2) continue;
        int pick = -1;
        s.nodes[x].label.for_each([&](int c) {
          if (pick >= 0 || concepts[c].kind != NK::Or) return;
          for (int op : concepts[c].ops) {
            if (s.nodes[x].label.test(op)) return;
          }
          pick = c;
        });
        if (pick < 0) continue;
        ++stats.branches;
        Branch b{s, static_cast<int>(x), pick, 0, ++level, nullptr};
        s = take_alternative(b, false);
        branches.push_back(std::move(b));
        applied = true;
      }
      if (applied) continue;

      for (std::size_t x = 0; x < s.nodes.size() && !applied; ++x) {
        if (blocked[x] != 0) continue;
        int pick = -1;
        s.nodes[x].label.for_each([&](int c) {
          if (pick >= 0 || concepts[c].kind != NK::Exists) return;
          if (!has_neighbour(s, static_cast<int>(x), concepts[c].role, concepts[c].ops[0])) pick = c;
        });
        if (pick < 0) continue;
        const Deps d = s.nodes[x].deps[pick];
        const int y = new_node(s, static_cast<int>(x));
        connect(s, static_cast<int>(x), y, concepts[pick].role, d);
        add(s, y, concepts[pick].ops[0], d);
        applied = true;
      }
      if (!applied) return true;
    }
  }
};

Tableau::Tableau(const Ontology& o, const TableauConfig& cfg) : impl_(std::make_unique<Impl>()) {
  impl_->cfg = cfg;
  impl_->top();
  impl_->bottom();
  impl_->load(o);
}

Tableau::~Tableau() = default;

bool Tableau::satisfiable() { return impl_->run(); }

const TableauStats& Tableau::stats() const noexcept { return impl_->stats; }

}  // namespace gbox::detail
