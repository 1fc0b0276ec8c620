#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

// All enumerators yield in a fixed deterministic order. Callback variants stop
// early when the callback returns false; vector variants collect everything.

// Labelled trees on vertices 0..n-1 via bijective sequence decoding
// (n^(n-2) of them). dedup keeps one representative per isomorphism class,
// first occurrence wins. Soft ceiling n <= 10.
void enumerate_trees(int n, bool dedup, const std::function<bool(const LabelledGraph&)>& yield);
std::vector<LabelledGraph> enumerate_trees(int n, bool dedup);

// Forests on vertices 0..n-1 as acyclic edge subsets of the complete graph,
// backtracking order (lexicographic edge subsets). Soft ceiling n <= 9.
void enumerate_forests(int n, bool no_isolated, bool dedup,
                       const std::function<bool(const LabelledGraph&)>& yield);
std::vector<LabelledGraph> enumerate_forests(int n, bool no_isolated, bool dedup);

// One representative per forest isomorphism class, composed as multisets of
// tree class representatives (ids packed consecutively per component). Every
// component has >= 1 edge. Two bounds are supported:
//   by vertices: total vertex count == n
//   by edges:    total edge count in 1..max_edges
std::vector<LabelledGraph> forest_classes_with_vertices(int n);
std::vector<LabelledGraph> forest_classes_with_edges(int max_edges);

// Multidigraphs whose underlying simple graph is a forest without isolated
// vertices, 1..max_edges darts, per-ordered-pair multiplicity <= max_mult,
// one representative per isomorphism class.
std::vector<MultiDigraph> enumerate_multidiforests(int max_edges, int max_mult);

// General loop-free multidigraphs without isolated vertices, up to iso.
std::vector<MultiDigraph> multidigraph_classes(int max_vertices, int max_darts, int max_mult);

// All simple graphs on 1..max_vertices vertices up to isomorphism
// (brute-force canonical form; practical through max_vertices = 6).
std::vector<LabelledGraph> graph_classes(int max_vertices);
std::vector<LabelledGraph> connected_graph_classes(int max_vertices);

// Canonical codes (complete isomorphism invariants).
std::string tree_code(const LabelledGraph& tree);      // rooted-at-center form
std::string forest_code(const LabelledGraph& forest);  // sorted component codes
std::string graph_code(const LabelledGraph& g);        // min adjacency encoding over all orders
std::string multidigraph_code(const MultiDigraph& g);  // min dart encoding over all orders

}  // namespace sfc
