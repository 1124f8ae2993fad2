#include "arrtool/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrtool {

namespace {

using Colors = std::vector<std::size_t>;
using Adjacency = std::vector<std::vector<char>>;

Adjacency adjacency(const IncidenceGraph& g) {
  Adjacency adj(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) adj[e.from][e.to] = 1;
  return adj;
}

std::vector<std::vector<VertexId>> neighbours(const IncidenceGraph& g) {
  std::vector<std::vector<VertexId>> nb(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : g.outgoing(v)) nb[v].push_back(g.terminal(e));
  return nb;
}

// Refines both graphs' colourings with a shared signature dictionary so that
// colour ids are comparable across the two graphs.
void joint_refine(const IncidenceGraph& a, const IncidenceGraph& b, Colors& ca, Colors& cb) {
  auto nba = neighbours(a);
  auto nbb = neighbours(b);
  auto count = [](const Colors& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); };
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> dict;
    auto sig = [&](const Colors& c, const std::vector<std::vector<VertexId>>& nb, VertexId v) {
      std::vector<std::size_t> s;
      for (VertexId w : nb[v]) s.push_back(c[w]);
      std::sort(s.begin(), s.end());
      return std::make_pair(c[v], std::move(s));
    };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sa, sb;
    for (VertexId v = 0; v < a.vertex_count(); ++v) sa.push_back(sig(ca, nba, v));
    for (VertexId v = 0; v < b.vertex_count(); ++v) sb.push_back(sig(cb, nbb, v));
    for (auto& s : sa) dict.emplace(s, 0);
    for (auto& s : sb) dict.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [k, id] : dict) id = next++;
    Colors na(ca.size()), nb2(cb.size());
    for (std::size_t v = 0; v < sa.size(); ++v) na[v] = dict[sa[v]];
    for (std::size_t v = 0; v < sb.size(); ++v) nb2[v] = dict[sb[v]];
    bool stable = count(na) == count(ca) && count(nb2) == count(cb);
    ca = std::move(na);
    cb = std::move(nb2);
    if (stable) break;
  }
}

Colors initial_colors(const IncidenceGraph& g) {
  Colors c(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    c[v] = 2 * g.degree(v) + (g.kind(v) == VertexKind::point ? 0 : 1);
  return c;
}

std::vector<EdgeId> edge_map_for(const IncidenceGraph& a, const IncidenceGraph& b, const std::vector<VertexId>& vm) {
  std::vector<EdgeId> em(a.edges().size());
  for (EdgeId e = 0; e < a.edges().size(); ++e) {
    VertexId from = vm[a.initial(e)];
    VertexId to = vm[a.terminal(e)];
    bool found = false;
    for (EdgeId f : b.outgoing(from))
      if (b.terminal(f) == to) {
        em[e] = f;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("edge image missing");
  }
  return em;
}

bool same_shape(const IncidenceGraph& a, const IncidenceGraph& b) {
  return a.point_count() == b.point_count() && a.line_count() == b.line_count() && a.pair_count() == b.pair_count();
}

}  // namespace

std::optional<Isomorphism> are_isomorphic(const IncidenceGraph& a, const IncidenceGraph& b) {
  if (!same_shape(a, b)) return std::nullopt;
  Colors ca = initial_colors(a), cb = initial_colors(b);
  joint_refine(a, b, ca, cb);
  {
    Colors sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  Adjacency adj_a = adjacency(a), adj_b = adjacency(b);

  // Visit a's vertices in BFS order so each new vertex usually has a mapped
  // neighbour, which prunes candidates early.
  std::vector<VertexId> order;
  std::vector<char> seen(a.vertex_count(), 0);
  for (VertexId s = 0; s < a.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (EdgeId e : a.outgoing(v))
        if (!seen[a.terminal(e)]) {
          seen[a.terminal(e)] = 1;
          q.push(a.terminal(e));
        }
    }
  }

  const std::size_t n = a.vertex_count();
  std::vector<VertexId> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    VertexId v = order[i];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        VertexId u = order[k];
        if (adj_a[v][u] != adj_b[w][map[u]]) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(i + 1)) return true;
      used[w] = 0;
      map[v] = SIZE_MAX;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return Isomorphism{map, edge_map_for(a, b, map)};
}

std::optional<Isomorphism> are_isomorphic(const OrderedIncidenceGraph& a, const OrderedIncidenceGraph& b,
                                          bool preserve_order) {
  if (!preserve_order) return are_isomorphic(a.graph, b.graph);
  const IncidenceGraph& ga = a.graph;
  const IncidenceGraph& gb = b.graph;
  if (!same_shape(ga, gb)) return std::nullopt;
  const std::size_t n = ga.vertex_count();

  // An order-preserving map on a connected component is fixed by the image of
  // one vertex, so try every root image per component.
  std::vector<VertexId> roots;
  {
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      roots.push_back(s);
      std::queue<VertexId> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : ga.outgoing(v))
          if (!seen[ga.terminal(e)]) {
            seen[ga.terminal(e)] = 1;
            q.push(ga.terminal(e));
          }
      }
    }
  }

  std::vector<VertexId> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);

  auto propagate = [&](VertexId root, VertexId image, std::vector<VertexId>& assigned) -> bool {
    auto assign = [&](VertexId v, VertexId w) {
      map[v] = w;
      used[w] = 1;
      assigned.push_back(v);
    };
    if (used[image] || ga.kind(root) != gb.kind(image)) return false;
    assign(root, image);
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      VertexId w = map[v];
      const auto& ov = a.order[v];
      const auto& ow = b.order[w];
      if (ov.size() != ow.size()) return false;
      for (std::size_t i = 0; i < ov.size(); ++i) {
        VertexId tv = ga.terminal(ov[i]);
        VertexId tw = gb.terminal(ow[i]);
        if (map[tv] != SIZE_MAX) {
          if (map[tv] != tw) return false;
        } else {
          if (used[tw] || ga.kind(tv) != gb.kind(tw)) return false;
          assign(tv, tw);
          q.push(tv);
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t c) -> bool {
    if (c == roots.size()) return true;
    for (VertexId w = 0; w < n; ++w) {
      std::vector<VertexId> assigned;
      if (propagate(roots[c], w, assigned) && place(c + 1)) return true;
      for (VertexId v : assigned) {
        used[map[v]] = 0;
        map[v] = SIZE_MAX;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return Isomorphism{map, edge_map_for(ga, gb, map)};
}

bool verify_isomorphism(const IncidenceGraph& a, const IncidenceGraph& b, const Isomorphism& iso) {
  if (!same_shape(a, b) || iso.vertex_map.size() != a.vertex_count() || iso.edge_map.size() != a.edges().size())
    return false;
  std::vector<char> hit(b.vertex_count(), 0);
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    VertexId w = iso.vertex_map[v];
    if (w >= b.vertex_count() || hit[w] || a.kind(v) != b.kind(w)) return false;
    hit[w] = 1;
  }
  for (EdgeId e = 0; e < a.edges().size(); ++e) {
    EdgeId f = iso.edge_map[e];
    if (f >= b.edges().size()) return false;
    if (b.initial(f) != iso.vertex_map[a.initial(e)] || b.terminal(f) != iso.vertex_map[a.terminal(e)]) return false;
    if (iso.edge_map[a.edge(e).conjugate] != b.edge(f).conjugate) return false;
  }
  return true;
}

namespace {

// Ordered-partition refinement used by the canonical labeller. Colours are
// ranks, so a refined colouring is again a cell order.
class Refiner {
 public:
  explicit Refiner(const IncidenceGraph& g) : nb_(neighbours(g)) {}

  Colors refine(Colors c) const {
    for (;;) {
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(c.size());
      for (std::size_t v = 0; v < c.size(); ++v) {
        std::vector<std::size_t> s;
        for (VertexId w : nb_[v]) s.push_back(c[w]);
        std::sort(s.begin(), s.end());
        sig[v] = {c[v], std::move(s)};
      }
      Colors next = rank(sig);
      if (distinct(next) == distinct(c)) return next;
      c = std::move(next);
    }
  }

  template <class Key>
  static Colors rank(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v)
      out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return out;
  }

  static std::size_t distinct(const Colors& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); }

 private:
  std::vector<std::vector<VertexId>> nb_;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const IncidenceGraph& g, const std::vector<std::string>& labels)
      : g_(g), labels_(labels), refiner_(g) {
    for (std::size_t i = 0; i < g.pair_count(); ++i) {
      const Edge& e = g.edge(point_to_line(i));
      undirected_.push_back({e.from, e.to});
    }
  }

  CanonicalForm run() {
    Colors start = Refiner::rank(labels_);
    search(refiner_.refine(start), {});
    return {best_labeling_, certificate(best_labeling_)};
  }

 private:
  using Encoding = std::vector<std::size_t>;

  std::string certificate(const Colors& lab) const {
    std::vector<std::string> by_pos(lab.size());
    for (std::size_t v = 0; v < lab.size(); ++v) by_pos[lab[v]] = labels_[v];
    std::ostringstream os;
    os << "v[";
    for (std::size_t i = 0; i < by_pos.size(); ++i) os << (i ? "," : "") << by_pos[i];
    os << "] e[";
    auto enc = edges_encoding(lab);
    for (std::size_t i = 0; i < enc.size(); i += 2) os << (i ? "," : "") << enc[i] << "-" << enc[i + 1];
    os << "]";
    return os.str();
  }

  Encoding edges_encoding(const Colors& lab) const {
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto [u, v] : undirected_) es.push_back(std::minmax(lab[u], lab[v]));
    std::sort(es.begin(), es.end());
    Encoding out;
    for (auto [x, y] : es) {
      out.push_back(x);
      out.push_back(y);
    }
    return out;
  }

  Encoding encode(const Colors& lab) const {
    // Labels are already sorted into the initial colour order, so the label
    // sequence by position is implied by the refinement; edges decide.
    return edges_encoding(lab);
  }

  static bool discrete(const Colors& c) { return Refiner::distinct(c) == c.size(); }

  // Orbit representatives of `cell` under stored automorphisms that fix
  // every vertex of `fixed`.
  std::vector<VertexId> orbit_filter(const std::vector<VertexId>& cell, const std::vector<VertexId>& fixed,
                                     const std::vector<VertexId>& explored) const {
    std::vector<std::size_t> parent(g_.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](VertexId v) { return aut[v] == v; });
      if (!fixes) continue;
      for (VertexId v = 0; v < aut.size(); ++v) parent[find(v)] = find(aut[v]);
    }
    std::vector<VertexId> keep;
    for (VertexId w : cell) {
      bool covered = std::any_of(explored.begin(), explored.end(), [&](VertexId u) { return find(u) == find(w); });
      if (!covered) keep.push_back(w);
    }
    return keep;
  }

  void search(const Colors& c, std::vector<VertexId> fixed) {
    if (discrete(c)) {
      Encoding enc = encode(c);
      if (!have_best_ || enc < best_encoding_) {
        have_best_ = true;
        best_encoding_ = std::move(enc);
        best_labeling_ = c;
      } else if (enc == best_encoding_) {
        // Two leaves with equal encodings differ by an automorphism.
        std::vector<VertexId> pos_to_v(c.size());
        for (VertexId v = 0; v < c.size(); ++v) pos_to_v[best_labeling_[v]] = v;
        std::vector<VertexId> aut(c.size());
        for (VertexId v = 0; v < c.size(); ++v) aut[v] = pos_to_v[c[v]];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }
    // First non-singleton cell in cell order.
    std::vector<std::size_t> size(c.size(), 0);
    for (std::size_t x : c) ++size[x];
    std::size_t target = 0;
    while (size[target] < 2) ++target;
    std::vector<VertexId> cell;
    for (VertexId v = 0; v < c.size(); ++v)
      if (c[v] == target) cell.push_back(v);

    std::vector<VertexId> explored;
    for (VertexId v : cell) {
      auto pending = orbit_filter({v}, fixed, explored);
      if (pending.empty()) continue;
      std::vector<std::pair<std::size_t, int>> keys(c.size());
      for (VertexId w = 0; w < c.size(); ++w) keys[w] = {c[w], w == v ? 0 : 1};
      auto child = refiner_.refine(Refiner::rank(keys));
      auto next_fixed = fixed;
      next_fixed.push_back(v);
      search(child, std::move(next_fixed));
      explored.push_back(v);
    }
  }

  const IncidenceGraph& g_;
  const std::vector<std::string>& labels_;
  Refiner refiner_;
  std::vector<std::pair<VertexId, VertexId>> undirected_;
  bool have_best_ = false;
  Encoding best_encoding_;
  Colors best_labeling_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const IncidenceGraph& graph, const std::vector<std::string>& vertex_labels) {
  if (vertex_labels.size() != graph.vertex_count()) throw std::invalid_argument("canonical_form: label count");
  std::vector<std::string> labels = vertex_labels;
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    labels[v] = (graph.kind(v) == VertexKind::point ? "p:" : "l:") + labels[v];
  return CanonicalSearch(graph, labels).run();
}

}  // namespace arrtool
