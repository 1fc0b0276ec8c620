#include "sfc/builders.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

constexpr std::uint64_t kFaceCeiling = 1u << 21;

// Enumerate the maximal faces of a hereditary family over items 0..m-1.
// `extendable(S, i)` must decide whether S + {i} stays in the family given
// that S already does. Visits every face once, so the family size is capped.
template <typename Ext>
std::vector<std::vector<int>> maximal_faces(int m, Ext extendable) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::uint64_t visited = 0;

  auto rec = [&](auto&& self, int start) -> void {
    if (++visited > kFaceCeiling) throw CeilingExceeded("face enumeration ceiling");
    bool maximal = true;
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(cur.begin(), cur.end(), i)) continue;
      if (extendable(cur, i)) {
        maximal = false;
        if (i >= start) {
          cur.push_back(i);
          self(self, i + 1);
          cur.pop_back();
        }
      }
    }
    if (maximal) out.push_back(cur);
  };
  rec(rec, 0);
  return out;
}

}  // namespace

DegreeBounds uniform_bounds(const LabelledGraph& g, int k) {
  DegreeBounds b;
  for (int v : g.vertices()) b[v] = k;
  return b;
}

DegreeBounds capped_bounds(const LabelledGraph& g, const DegreeBounds& bounds) {
  DegreeBounds b;
  for (int v : g.vertices()) b[v] = std::min(bounds.at(v), g.degree(v));
  return b;
}

DegreeBounds link_bounds(const LabelledGraph& g, const DegreeBounds& bounds, int edge_id) {
  const Edge* e = g.edge_by_id(edge_id);
  if (!e) throw std::domain_error("link_bounds: no such edge");
  DegreeBounds out;
  for (int v : g.vertices()) {
    int cut = (v == e->u || v == e->v) ? 1 : 0;
    out[v] = bounds.at(v) - cut;
    if (out[v] < 0) throw std::domain_error("link_bounds: bound went negative");
  }
  return out;
}

Complex bounded_degree_complex(const LabelledGraph& g, const DegreeBounds& bounds) {
  for (int v : g.vertices())
    if (!bounds.count(v)) throw std::domain_error("bounded_degree_complex: missing bound");

  const auto& edges = g.edges();
  int m = static_cast<int>(edges.size());
  std::vector<int> ground;
  for (const Edge& e : edges) ground.push_back(e.id);

  // degree induced by the current edge set, tracked incrementally would be
  // nicer but the corpora are small; recompute per query
  auto extendable = [&](const std::vector<int>& cur, int i) {
    const Edge& cand = edges[static_cast<std::size_t>(i)];
    int du = 1, dv = 1;
    for (int j : cur) {
      const Edge& e = edges[static_cast<std::size_t>(j)];
      if (e.u == cand.u || e.v == cand.u) ++du;
      if (e.u == cand.v || e.v == cand.v) ++dv;
    }
    return du <= bounds.at(cand.u) && dv <= bounds.at(cand.v);
  };

  std::vector<Face> facets;
  for (auto& idx : maximal_faces(m, extendable)) {
    Face f;
    for (int i : idx) f.push_back(edges[static_cast<std::size_t>(i)].id);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(ground), std::move(facets));
}

Complex k_matching_complex(const LabelledGraph& g, int k) {
  return bounded_degree_complex(g, uniform_bounds(g, k));
}

Complex independence_complex(const LabelledGraph& g) {
  const auto& vs = g.vertices();
  int m = static_cast<int>(vs.size());

  auto extendable = [&](const std::vector<int>& cur, int i) {
    for (int j : cur)
      if (g.find_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
        return false;
    return true;
  };

  std::vector<Face> facets;
  for (auto& idx : maximal_faces(m, extendable)) {
    Face f;
    for (int i : idx) f.push_back(vs[static_cast<std::size_t>(i)]);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(vs, std::move(facets));
}

Complex non_cover_complex(const LabelledGraph& g) {
  std::vector<Face> facets;
  for (const Edge& e : g.edges()) {
    Face f;
    for (int v : g.vertices())
      if (v != e.u && v != e.v) f.push_back(v);
    facets.push_back(std::move(f));
  }
  Complex k = Complex::from_facets(g.vertices(), std::move(facets));
  // distinct edges give incomparable complements, so nothing collapses
  assert(k.facet_count() == g.edges().size());
  return k;
}

bool is_directed_tree_face(const MultiDigraph& g, const std::vector<int>& dart_ids) {
  std::vector<Dart> sel;
  for (int id : dart_ids) {
    const Dart* d = g.dart_by_id(id);
    if (!d) throw std::domain_error("is_directed_tree_face: no such dart");
    sel.push_back(*d);
  }
  // pairwise distinct targets
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = i + 1; j < sel.size(); ++j)
      if (sel[i].t == sel[j].t) return false;
  // in-degree <= 1, so each vertex has a unique backward chain; a directed
  // cycle shows up either as a return to d.t or as a walk that never ends
  std::map<int, int> parent;  // target -> source
  for (const Dart& d : sel) parent[d.t] = d.s;
  for (const Dart& d : sel) {
    int u = d.s;
    std::size_t steps = 0;
    while (parent.count(u)) {
      u = parent[u];
      if (u == d.t) return false;
      if (++steps > sel.size()) return false;  // spinning in a cycle off d's chain
    }
  }
  return true;
}

Complex directed_tree_complex(const MultiDigraph& g) {
  const auto& darts = g.darts();
  int m = static_cast<int>(darts.size());
  std::vector<int> ground;
  for (const Dart& d : darts) ground.push_back(d.id);

  auto extendable = [&](const std::vector<int>& cur, int i) {
    const Dart& cand = darts[static_cast<std::size_t>(i)];
    std::map<int, int> parent;
    for (int j : cur) {
      const Dart& d = darts[static_cast<std::size_t>(j)];
      if (d.t == cand.t) return false;
      parent[d.t] = d.s;
    }
    parent[cand.t] = cand.s;
    // only the new dart can close a cycle
    int u = cand.s;
    while (true) {
      auto it = parent.find(u);
      if (it == parent.end()) return true;
      u = it->second;
      if (u == cand.t) return false;
    }
  };

  std::vector<Face> facets;
  for (auto& idx : maximal_faces(m, extendable)) {
    Face f;
    for (int i : idx) f.push_back(darts[static_cast<std::size_t>(i)].id);
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(std::move(ground), std::move(facets));
}

}  // namespace sfc
