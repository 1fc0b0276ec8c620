#pragma once

#include <map>

#include "sfc/complex.hpp"
#include "sfc/graph.hpp"

namespace sfc {

// Degree bound per vertex. Every vertex of the graph must be present.
using DegreeBounds = std::map<int, int>;

DegreeBounds uniform_bounds(const LabelledGraph& g, int k);

// Caps on the bounds change nothing: the complex only sees min(bound, degree).
DegreeBounds capped_bounds(const LabelledGraph& g, const DegreeBounds& bounds);

// Bounds for the graph g minus edge e, after taking the link of e:
// both endpoints of e lose one unit of budget.
DegreeBounds link_bounds(const LabelledGraph& g, const DegreeBounds& bounds, int edge_id);

// Complex on the edge ids of g whose faces are the edge subsets inducing
// degree at most bounds[v] at every vertex v.
Complex bounded_degree_complex(const LabelledGraph& g, const DegreeBounds& bounds);

// bounded_degree_complex with the uniform bound k; faces are the subgraphs
// with maximum degree <= k (k = 1 gives the matching complex).
Complex k_matching_complex(const LabelledGraph& g, int k);

// Complex on the vertices of g whose faces are the independent sets.
Complex independence_complex(const LabelledGraph& g);

// Complex on the vertices of g with one facet V \ {u,v} per edge {u,v};
// the faces are exactly the vertex sets that fail to cover some edge.
Complex non_cover_complex(const LabelledGraph& g);

// Complex on the dart ids of g whose faces are the dart subsets with
// pairwise distinct targets and no directed cycle.
Complex directed_tree_complex(const MultiDigraph& g);

bool is_directed_tree_face(const MultiDigraph& g, const std::vector<int>& dart_ids);

}  // namespace sfc
