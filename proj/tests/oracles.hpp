#pragma once

// Brute-force reference implementations for cross-checking the library. These
// enumerate subsets directly from the definitions and favor obviousness over
// speed, so keep the inputs tiny. The vertex-decomposability oracle reuses the
// library's link/deletion operators; those are pinned separately by fixed
// cases, so a defect there shows up twice rather than hiding.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sfc/builders.hpp"
#include "sfc/complex.hpp"
#include "sfc/graph.hpp"

namespace oracle {

inline bool has(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Every subset of `ground` satisfying `pred`, reduced to its maximal members.
inline sfc::Complex complex_from_predicate(
    const std::vector<int>& ground,
    const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<std::vector<int>> good;
  const std::size_t n = ground.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) s.push_back(ground[i]);
    if (pred(s)) good.push_back(s);
  }
  std::vector<std::vector<int>> maximal;
  for (const auto& a : good) {
    bool inside = false;
    for (const auto& b : good) {
      if (a.size() >= b.size()) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) maximal.push_back(a);
  }
  if (maximal.empty()) return sfc::Complex::make_void(ground);
  return sfc::Complex::from_facets(ground, maximal);
}

inline std::vector<int> edge_ids(const sfc::LabelledGraph& g) {
  std::vector<int> ids;
  for (const sfc::Edge& e : g.edges()) ids.push_back(e.id);
  return ids;
}

inline bool degrees_within(const sfc::LabelledGraph& g,
                           const sfc::DegreeBounds& lam,
                           const std::vector<int>& sel) {
  std::map<int, int> deg;
  for (int id : sel) {
    const sfc::Edge* e = g.edge_by_id(id);
    ++deg[e->u];
    ++deg[e->v];
  }
  for (const auto& [v, d] : deg) {
    auto it = lam.find(v);
    if (d > (it == lam.end() ? 0 : it->second)) return false;
  }
  return true;
}

inline sfc::Complex brute_bounded_degree(const sfc::LabelledGraph& g,
                                         const sfc::DegreeBounds& lam) {
  return complex_from_predicate(edge_ids(g), [&](const std::vector<int>& s) {
    return degrees_within(g, lam, s);
  });
}

inline sfc::Complex brute_independence(const sfc::LabelledGraph& g) {
  return complex_from_predicate(g.vertices(), [&](const std::vector<int>& s) {
    for (const sfc::Edge& e : g.edges())
      if (has(s, e.u) && has(s, e.v)) return false;
    return true;
  });
}

inline sfc::Complex brute_non_cover(const sfc::LabelledGraph& g) {
  return complex_from_predicate(g.vertices(), [&](const std::vector<int>& s) {
    for (const sfc::Edge& e : g.edges())
      if (!has(s, e.u) && !has(s, e.v)) return true;
    return false;
  });
}

// Distinct targets and no directed cycle among the selected darts, by direct
// DFS cycle detection.
inline bool darts_form_directed_forest(const sfc::MultiDigraph& g,
                                       const std::vector<int>& sel) {
  std::set<int> targets;
  std::map<int, std::vector<int>> out;
  std::set<int> verts;
  for (int id : sel) {
    const sfc::Dart* d = g.dart_by_id(id);
    if (!targets.insert(d->t).second) return false;
    out[d->s].push_back(d->t);
    verts.insert(d->s);
    verts.insert(d->t);
  }
  std::map<int, int> color;  // 0 fresh, 1 active, 2 done
  std::function<bool(int)> cyclic = [&](int v) {
    color[v] = 1;
    for (int w : out[v]) {
      if (color[w] == 1) return true;
      if (color[w] == 0 && cyclic(w)) return true;
    }
    color[v] = 2;
    return false;
  };
  for (int v : verts)
    if (color[v] == 0 && cyclic(v)) return false;
  return true;
}

inline sfc::Complex brute_directed_tree(const sfc::MultiDigraph& g) {
  std::vector<int> ids;
  for (const sfc::Dart& d : g.darts()) ids.push_back(d.id);
  return complex_from_predicate(ids, [&](const std::vector<int>& s) {
    return darts_form_directed_forest(g, s);
  });
}

inline sfc::Complex brute_alexander_dual(const sfc::Complex& k) {
  return complex_from_predicate(k.ground(), [&](const std::vector<int>& s) {
    std::vector<int> comp;
    for (int v : k.ground())
      if (!has(s, v)) comp.push_back(v);
    return !k.contains(comp);
  });
}

inline bool is_facet_of(const sfc::Complex& k, const std::vector<int>& f) {
  for (const auto& g : k.facets())
    if (g == f) return true;
  return false;
}

// Vertex decomposability straight from the definition: a simplex (the void
// complex included), or some support vertex is shedding with decomposable
// link and deletion. Exponential; tiny inputs only.
inline bool brute_vertex_decomposable(const sfc::Complex& k) {
  if (k.is_void() || k.is_simplex()) return true;
  for (int v : k.support()) {
    sfc::Complex del = sfc::deletion(k, {v});
    bool shedding = true;
    for (const auto& f : del.facets())
      if (!is_facet_of(k, f)) {
        shedding = false;
        break;
      }
    if (!shedding) continue;
    if (brute_vertex_decomposable(sfc::link(k, {v})) &&
        brute_vertex_decomposable(del))
      return true;
  }
  return false;
}

// Reduced Euler characteristic: sum of (-1)^dim over every face, the empty
// face included. Equals the alternating sum of reduced Betti numbers.
inline long reduced_euler(const sfc::Complex& k) {
  if (k.is_void()) return 0;
  long chi = 0;
  const auto& ground = k.ground();
  const std::size_t n = ground.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) s.push_back(ground[i]);
    if (!k.contains(s)) continue;
    chi += (s.size() % 2 == 0) ? -1 : 1;  // (-1)^(|s|-1)
  }
  return chi;
}

}  // namespace oracle
