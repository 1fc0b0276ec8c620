#include "sfc/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

// AHU code of the tree rooted at `root` (children codes sorted, so two rooted
// trees get equal codes iff isomorphic).
std::string rooted_code(const LabelledGraph& g, int root, int parent) {
  std::vector<std::string> child;
  for (int w : g.neighbors(root))
    if (w != parent) child.push_back(rooted_code(g, w, root));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (auto& c : child) out += c;
  out += ")";
  return out;
}

// Center(s) of a tree: repeatedly peel leaves.
std::vector<int> tree_centers(const LabelledGraph& g) {
  std::map<int, int> deg;
  for (int v : g.vertices()) deg[v] = g.degree(v);
  std::vector<int> alive(g.vertices().begin(), g.vertices().end());
  while (alive.size() > 2) {
    std::vector<int> next;
    std::vector<int> peeled;
    for (int v : alive)
      if (deg[v] <= 1) peeled.push_back(v);
    std::set<int> gone(peeled.begin(), peeled.end());
    for (int v : alive)
      if (!gone.count(v)) next.push_back(v);
    for (int v : peeled)
      for (int w : g.neighbors(v))
        if (!gone.count(w)) --deg[w];
    alive = std::move(next);
  }
  return alive;
}

std::uint64_t edge_mask_apply_perm(std::uint64_t mask, const std::vector<int>& edge_perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < edge_perm.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out |= std::uint64_t{1} << edge_perm[i];
  return out;
}

// Precomputed permutation action on edge indices of K_n for all vertex perms.
struct EdgePermTable {
  int n;
  std::vector<std::pair<int, int>> pairs;          // lex ordered
  std::vector<std::vector<int>> perm_edge_maps;    // one map per vertex perm
  explicit EdgePermTable(int n_) : n(n_) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = static_cast<int>(i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> emap(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        int a = perm[pairs[i].first], b = perm[pairs[i].second];
        emap[i] = index[{std::min(a, b), std::max(a, b)}];
      }
      perm_edge_maps.push_back(std::move(emap));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::uint64_t canonical_mask(std::uint64_t mask) const {
    std::uint64_t best = mask;
    for (auto& emap : perm_edge_maps) best = std::min(best, edge_mask_apply_perm(mask, emap));
    return best;
  }
};

}  // namespace

std::string tree_code(const LabelledGraph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("tree_code: not a tree");
  std::string best;
  for (int c : tree_centers(tree)) {
    std::string code = rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string forest_code(const LabelledGraph& forest) {
  if (!forest.is_forest()) throw std::invalid_argument("forest_code: not a forest");
  std::vector<std::string> parts;
  for (auto& comp : forest.components()) {
    // induced component
    std::set<int> keep(comp.begin(), comp.end());
    std::vector<std::pair<int, int>> es;
    for (auto& e : forest.edges())
      if (keep.count(e.u)) es.emplace_back(e.u, e.v);
    parts.push_back(tree_code(LabelledGraph(comp, es)));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto& p : parts) out += p + "|";
  return out;
}

void enumerate_trees(int n, bool dedup, const std::function<bool(const LabelledGraph&)>& yield) {
  if (n < 1 || n > 10) throw CeilingExceeded("enumerate_trees: 1 <= n <= 10");
  std::set<std::string> seen;
  auto emit = [&](const LabelledGraph& g) {
    if (dedup) {
      std::string code = tree_code(g);
      if (!seen.insert(code).second) return true;
    }
    return yield(g);
  };
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  if (n == 1) {
    emit(LabelledGraph(ids, {}));
    return;
  }
  if (n == 2) {
    emit(LabelledGraph(ids, {{0, 1}}));
    return;
  }
  // Odometer over sequences in {0..n-1}^(n-2), decoded to trees: repeatedly
  // attach the smallest unused leaf to the current sequence element.
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int s : seq) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) {
          leaf = v;
          break;
        }
      edges.emplace_back(leaf, s);
      used[leaf] = true;
      --deg[s];
    }
    // final two unused vertices of degree 1
    std::vector<int> rem;
    for (int v = 0; v < n; ++v)
      if (!used[v] && deg[v] == 1) rem.push_back(v);
    edges.emplace_back(rem[0], rem[1]);
    if (!emit(LabelledGraph(ids, edges))) return;

    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

std::vector<LabelledGraph> enumerate_trees(int n, bool dedup) {
  std::vector<LabelledGraph> out;
  enumerate_trees(n, dedup, [&](const LabelledGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

void enumerate_forests(int n, bool no_isolated, bool dedup,
                       const std::function<bool(const LabelledGraph&)>& yield) {
  if (n < 1 || n > 9) throw CeilingExceeded("enumerate_forests: 1 <= n <= 9");
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<std::pair<int, int>> all_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all_pairs.emplace_back(a, b);

  std::set<std::string> seen;
  std::vector<std::pair<int, int>> chosen;
  bool stop = false;

  auto emit = [&]() {
    LabelledGraph g(ids, chosen);
    if (no_isolated)
      for (int v : g.vertices())
        if (g.degree(v) == 0) return;
    if (dedup && !seen.insert(forest_code(g)).second) return;
    if (!yield(g)) stop = true;
  };

  // Backtracking over lexicographic edge subsets; union-find prunes cycles.
  std::vector<int> parent(n);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (stop) return;
    emit();
    for (std::size_t i = from; i < all_pairs.size() && !stop; ++i) {
      auto [a, b] = all_pairs[i];
      // no path compression: the single-link undo below must be exact
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      int ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent[ra] = rb;
      chosen.push_back(all_pairs[i]);
      rec(i + 1);
      chosen.pop_back();
      parent[ra] = ra;  // sound: ra was a root before the join
    }
  };
  std::iota(parent.begin(), parent.end(), 0);
  rec(0);
}

std::vector<LabelledGraph> enumerate_forests(int n, bool no_isolated, bool dedup) {
  std::vector<LabelledGraph> out;
  enumerate_forests(n, no_isolated, dedup, [&](const LabelledGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

namespace {

// Disjoint union of tree class representatives, ids packed consecutively.
LabelledGraph assemble_forest(const std::vector<const LabelledGraph*>& comps) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  int offset = 0;
  for (auto* t : comps) {
    for (int v : t->vertices()) vs.push_back(v + offset);
    for (auto& e : t->edges()) es.emplace_back(e.u + offset, e.v + offset);
    offset += static_cast<int>(t->vertex_count());
  }
  return LabelledGraph(vs, es);
}

// Multisets of tree classes (each with >= 2 vertices), bounded either by total
// vertices (exact) or total edges (at most).
void forest_classes_impl(int max_size, bool by_edges, std::vector<LabelledGraph>& out) {
  std::vector<std::vector<LabelledGraph>> trees_by_n(11);
  int max_tree_n = by_edges ? max_size + 1 : max_size;
  for (int n = 2; n <= max_tree_n && n <= 10; ++n) trees_by_n[n] = enumerate_trees(n, true);

  std::vector<const LabelledGraph*> comps;
  // Components are chosen in non-decreasing (n, index) order so each multiset
  // appears exactly once.
  std::function<void(int, std::size_t, int)> rec = [&](int min_n, std::size_t min_idx,
                                                       int used) {
    if (!comps.empty()) {
      bool ok = by_edges ? used >= 1 : used == max_size;
      if (ok) out.push_back(assemble_forest(comps));
    }
    for (int n = min_n; n <= max_tree_n && n <= 10; ++n) {
      int cost = by_edges ? n - 1 : n;
      if (used + cost > max_size) break;
      std::size_t start = (n == min_n) ? min_idx : 0;
      for (std::size_t i = start; i < trees_by_n[n].size(); ++i) {
        comps.push_back(&trees_by_n[n][i]);
        rec(n, i, used + cost);
        comps.pop_back();
      }
    }
  };
  rec(2, 0, 0);
}

}  // namespace

std::vector<LabelledGraph> forest_classes_with_vertices(int n) {
  std::vector<LabelledGraph> out;
  forest_classes_impl(n, false, out);
  return out;
}

std::vector<LabelledGraph> forest_classes_with_edges(int max_edges) {
  std::vector<LabelledGraph> out;
  forest_classes_impl(max_edges, true, out);
  return out;
}

std::string graph_code(const LabelledGraph& g) {
  // min over all vertex orders of the edge-pair encoding
  int n = static_cast<int>(g.vertex_count());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& vs = g.vertices();
  std::string best;
  do {
    std::vector<std::pair<int, int>> es;
    for (auto& e : g.edges()) {
      int a = perm[static_cast<std::size_t>(
          std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin())];
      int b = perm[static_cast<std::size_t>(
          std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin())];
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    std::string enc = std::to_string(n) + ";";
    for (auto& [a, b] : es) enc += std::to_string(a) + "-" + std::to_string(b) + ",";
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string multidigraph_code(const MultiDigraph& g) {
  int n = static_cast<int>(g.vertex_count());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& vs = g.vertices();
  auto pos = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::string best;
  do {
    std::vector<std::pair<int, int>> ds;
    for (auto& d : g.darts()) ds.emplace_back(perm[pos(d.s)], perm[pos(d.t)]);
    std::sort(ds.begin(), ds.end());
    std::string enc = std::to_string(n) + ";";
    for (auto& [a, b] : ds) enc += std::to_string(a) + ">" + std::to_string(b) + ",";
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<LabelledGraph> graph_classes(int max_vertices) {
  if (max_vertices < 1 || max_vertices > 6)
    throw CeilingExceeded("graph_classes: 1 <= max_vertices <= 6");
  std::vector<LabelledGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    EdgePermTable table(n);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::uint64_t total = std::uint64_t{1} << table.pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (table.canonical_mask(mask) != mask) continue;  // keep min representative
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < table.pairs.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) es.push_back(table.pairs[i]);
      // classes on different vertex counts are distinct, so no cross-n dedup
      out.emplace_back(ids, es);
    }
  }
  return out;
}

std::vector<LabelledGraph> connected_graph_classes(int max_vertices) {
  std::vector<LabelledGraph> out;
  for (auto& g : graph_classes(max_vertices))
    if (g.is_connected()) out.push_back(g);
  return out;
}

namespace {

// All automorphisms of a small labelled graph on 0..n-1 (brute force).
std::vector<std::vector<int>> automorphisms(const LabelledGraph& g) {
  int n = static_cast<int>(g.vertex_count());
  std::set<std::pair<int, int>> edge_set;
  for (auto& e : g.edges()) edge_set.insert({e.u, e.v});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (auto& e : g.edges()) {
      int a = perm[e.u], b = perm[e.v];
      if (!edge_set.count({std::min(a, b), std::max(a, b)})) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Per-underlying-edge dart pattern: a darts u->v and b darts v->u.
struct DartPattern {
  int fwd;
  int rev;
};

}  // namespace

std::vector<MultiDigraph> enumerate_multidiforests(int max_edges, int max_mult) {
  if (max_edges < 1 || max_edges > 8)
    throw CeilingExceeded("enumerate_multidiforests: 1 <= max_edges <= 8");
  if (max_mult < 1) throw std::invalid_argument("enumerate_multidiforests: max_mult >= 1");
  std::vector<MultiDigraph> out;

  for (auto& forest : forest_classes_with_edges(max_edges)) {
    auto autos = automorphisms(forest);
    int m = static_cast<int>(forest.edge_count());
    std::vector<DartPattern> pat(m, {0, 0});

    // Encode an assignment under a vertex permutation for orbit filtering.
    auto encode = [&](const std::vector<int>& perm) {
      std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> enc;
      for (int i = 0; i < m; ++i) {
        const Edge& e = forest.edges()[i];
        int a = perm[e.u], b = perm[e.v];
        int fwd = pat[i].fwd, rev = pat[i].rev;
        if (a > b) {
          std::swap(a, b);
          std::swap(fwd, rev);
        }
        enc.push_back({{a, b}, {fwd, rev}});
      }
      std::sort(enc.begin(), enc.end());
      return enc;
    };

    std::function<void(int, int)> rec = [&](int i, int used) {
      if (i == m) {
        // keep only assignments minimal in their automorphism orbit
        auto id_enc = encode(autos.front());  // identity is first (sorted perms)
        for (auto& a : autos)
          if (encode(a) < id_enc) return;
        std::vector<std::pair<int, int>> darts;
        for (int j = 0; j < m; ++j) {
          const Edge& e = forest.edges()[j];
          for (int k = 0; k < pat[j].fwd; ++k) darts.emplace_back(e.u, e.v);
          for (int k = 0; k < pat[j].rev; ++k) darts.emplace_back(e.v, e.u);
        }
        out.emplace_back(forest.vertices(), darts);
        return;
      }
      for (int f = 0; f <= max_mult; ++f)
        for (int r = 0; r <= max_mult; ++r) {
          if (f + r == 0) continue;  // underlying edge must be realized
          if (used + f + r > max_edges) continue;
          pat[i] = {f, r};
          rec(i + 1, used + f + r);
        }
      pat[i] = {0, 0};
    };
    rec(0, 0);
  }
  return out;
}

std::vector<MultiDigraph> multidigraph_classes(int max_vertices, int max_darts, int max_mult) {
  if (max_vertices < 2 || max_vertices > 6)
    throw CeilingExceeded("multidigraph_classes: 2 <= max_vertices <= 6");
  std::vector<MultiDigraph> out;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> ordered_pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) ordered_pairs.emplace_back(a, b);
    std::vector<int> mult(ordered_pairs.size(), 0);
    std::set<std::string> seen;
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);

    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
      if (i == ordered_pairs.size()) {
        if (used == 0) return;
        std::vector<std::pair<int, int>> darts;
        for (std::size_t j = 0; j < ordered_pairs.size(); ++j)
          for (int k = 0; k < mult[j]; ++k) darts.push_back(ordered_pairs[j]);
        MultiDigraph g(ids, darts);
        for (int v : g.vertices())
          if (g.in_degree(v) + g.out_degree(v) == 0) return;  // no isolated vertices
        if (seen.insert(multidigraph_code(g)).second) out.push_back(std::move(g));
        return;
      }
      for (int k = 0; k <= max_mult && used + k <= max_darts; ++k) {
        mult[i] = k;
        rec(i + 1, used + k);
      }
      mult[i] = 0;
    };
    rec(0, 0);
  }
  return out;
}

}  // namespace sfc
