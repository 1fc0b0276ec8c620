#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sfc {

// Vertex labelling: vertex id -> non-negative bound. Ordered map so iteration
// is deterministic.
using Labelling = std::map<int, int>;

// Undirected simple edge, u < v. Edge ids are assigned once at construction
// (ascending lexicographic (u,v) order) and survive surgery unchanged.
struct Edge {
  int id;
  int u;
  int v;

  bool operator==(const Edge&) const = default;
};

class LabelledGraph {
 public:
  LabelledGraph() = default;
  // Vertices may be any distinct ints; edges are unordered pairs of distinct
  // known vertices, duplicates rejected. Labels, when present, must cover the
  // vertex set exactly and be non-negative.
  LabelledGraph(std::vector<int> vertices, const std::vector<std::pair<int, int>>& edges,
                std::optional<Labelling> labels = std::nullopt);

  // Rebuild a graph whose edge ids are already fixed (e.g. after surgery).
  static LabelledGraph from_edges(std::vector<int> vertices, std::vector<Edge> edges,
                                  std::optional<Labelling> labels = std::nullopt);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const;
  bool has_labels() const { return labels_.has_value(); }
  const Labelling& labels() const;
  int label(int v) const;

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  const Edge* find_edge(int u, int v) const;
  const Edge* edge_by_id(int id) const;
  std::vector<int> edges_at(int v) const;  // incident edge ids, ascending

  // Number of leaf neighbors of v.
  int leaf_count_at(int v) const;
  std::vector<int> leaves() const;
  std::vector<int> internal_vertices() const;  // degree > 1

  bool is_connected() const;  // vacuously true when empty
  bool is_forest() const;
  bool is_tree() const;
  std::vector<std::vector<int>> components() const;
  // |E| - |V| + #components; 0 exactly for forests
  int cyclomatic_number() const;
  // All simple cycles, each once, as a vertex sequence in cyclic order
  // starting at the cycle's smallest vertex.
  std::vector<std::vector<int>> simple_cycles() const;

  // Surgery. Ids of surviving vertices/edges never change.
  LabelledGraph remove_vertex(int v) const;
  LabelledGraph remove_vertices(const std::vector<int>& vs) const;
  LabelledGraph remove_edge(int edge_id) const;
  LabelledGraph with_labels(Labelling l) const;
  LabelledGraph without_labels() const;

  bool operator==(const LabelledGraph& o) const = default;

 private:
  std::vector<int> vertices_;  // sorted
  std::vector<Edge> edges_;    // ascending id == ascending (u,v) at construction
  std::optional<Labelling> labels_;
};

// Internal vertices adjacent to at most one internal vertex. Meaningful for
// forests (every tree with >= 2 edges has one) but defined for any graph.
std::vector<int> corner_vertices(const LabelledGraph& g);

// Path on n vertices (ids 0..n-1) with leaf_counts[i] extra leaves attached to
// path vertex i; leaf ids continue from n, grouped by path vertex.
LabelledGraph caterpillar(int n, const std::vector<int>& leaf_counts);

// Remove v; restrict the labelling. Requires labels present.
LabelledGraph restrict_label_vertex(const LabelledGraph& g, int v);
// Remove the edge; decrement both endpoint labels. Throws std::domain_error if
// either endpoint label is already 0.
LabelledGraph restrict_label_edge(const LabelledGraph& g, int edge_id);

// Subgraph on N[w]: w, its neighbors, and the edges from w. Labels restricted
// when present.
LabelledGraph star_graph(const LabelledGraph& g, int w);

// Vertex sets must be disjoint.
LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b);
// Copy with every id shifted by `offset` (helper for building disjoint unions).
LabelledGraph shift_ids(const LabelledGraph& g, int offset);

// ---------------------------------------------------------------------------

// Directed multigraph edge ("dart"). Parallel darts allowed, loops are not
// (constructions that would create one drop it instead; see contract_target).
struct Dart {
  int id;
  int s;
  int t;

  bool operator==(const Dart&) const = default;
};

class MultiDigraph {
 public:
  MultiDigraph() = default;
  // Dart ids are assigned 0..k-1 in the order given. Loops rejected.
  MultiDigraph(std::vector<int> vertices, const std::vector<std::pair<int, int>>& darts);

  // Rebuild a multidigraph whose dart ids are already fixed.
  static MultiDigraph from_darts(std::vector<int> vertices, std::vector<Dart> darts);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Dart>& darts() const { return darts_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t dart_count() const { return darts_.size(); }

  bool has_vertex(int v) const;
  const Dart* dart_by_id(int id) const;
  int in_degree(int v) const;
  int out_degree(int v) const;
  // Multiplicity of the ordered pair (s,t).
  int multiplicity(int s, int t) const;

  MultiDigraph remove_dart(int id) const;  // id stable for survivors

  // Underlying simple graph: u ~ v iff some dart joins them in either
  // direction. Loop darts would have no simple image; none exist by invariant.
  LabelledGraph underlying() const;
  bool underlying_is_forest() const;

  bool operator==(const MultiDigraph& o) const = default;

 private:
  std::vector<int> vertices_;  // sorted
  std::vector<Dart> darts_;    // ascending id
  friend MultiDigraph contract_target(const MultiDigraph& g, int dart_id);
};

// Contract dart e = (s,t): remove every dart targeting t (e included), then
// rewrite remaining occurrences of t to s. Darts t->s would become loops and
// are removed as well, so a multidiforest contracts to a multidiforest. The
// merged vertex keeps id s; surviving dart ids are unchanged. Parallel darts
// may appear. Throws std::out_of_range on unknown id.
MultiDigraph contract_target(const MultiDigraph& g, int dart_id);

// Stable 64-bit content hash (FNV over a canonical text encoding); used in
// instance descriptors and artifacts.
std::uint64_t graph_hash(const LabelledGraph& g);
std::uint64_t graph_hash(const MultiDigraph& g);

}  // namespace sfc
