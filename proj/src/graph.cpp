#include "sfc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace sfc {

namespace {

int position_of(const std::vector<int>& sorted_ids, int v) {
  auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), v);
  if (it == sorted_ids.end() || *it != v) return -1;
  return static_cast<int>(it - sorted_ids.begin());
}

// Tiny union-find over positions.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::uint64_t fnv_append(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

LabelledGraph::LabelledGraph(std::vector<int> vertices,
                             const std::vector<std::pair<int, int>>& edges,
                             std::optional<Labelling> labels)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");

  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("loop edge in simple graph");
    if (!has_vertex(a) || !has_vertex(b)) throw std::invalid_argument("edge endpoint unknown");
    norm.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    throw std::invalid_argument("duplicate edge");
  edges_.reserve(norm.size());
  for (std::size_t i = 0; i < norm.size(); ++i)
    edges_.push_back(Edge{static_cast<int>(i), norm[i].first, norm[i].second});

  if (labels_) {
    if (labels_->size() != vertices_.size())
      throw std::invalid_argument("labelling must cover the vertex set");
    for (auto& [v, k] : *labels_) {
      if (!has_vertex(v)) throw std::invalid_argument("label on unknown vertex");
      if (k < 0) throw std::invalid_argument("negative label");
    }
  }
}

LabelledGraph LabelledGraph::from_edges(std::vector<int> vertices, std::vector<Edge> edges,
                                        std::optional<Labelling> labels) {
  LabelledGraph g(std::move(vertices), {}, std::move(labels));
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop edge in simple graph");
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
      throw std::invalid_argument("edge endpoint unknown");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i].id == edges[i + 1].id) throw std::invalid_argument("duplicate edge id");
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : edges)
    if (!pairs.emplace(e.u, e.v).second) throw std::invalid_argument("duplicate edge");
  g.edges_ = std::move(edges);
  return g;
}

bool LabelledGraph::has_vertex(int v) const { return position_of(vertices_, v) >= 0; }

const Labelling& LabelledGraph::labels() const {
  if (!labels_) throw std::logic_error("graph carries no labelling");
  return *labels_;
}

int LabelledGraph::label(int v) const {
  auto& l = labels();
  auto it = l.find(v);
  if (it == l.end()) throw std::out_of_range("label of unknown vertex");
  return it->second;
}

int LabelledGraph::degree(int v) const {
  int d = 0;
  for (auto& e : edges_)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<int> LabelledGraph::neighbors(int v) const {
  std::vector<int> out;
  for (auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Edge* LabelledGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (auto& e : edges_)
    if (e.u == u && e.v == v) return &e;
  return nullptr;
}

const Edge* LabelledGraph::edge_by_id(int id) const {
  for (auto& e : edges_)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<int> LabelledGraph::edges_at(int v) const {
  std::vector<int> out;
  for (auto& e : edges_)
    if (e.u == v || e.v == v) out.push_back(e.id);
  return out;
}

int LabelledGraph::leaf_count_at(int v) const {
  int c = 0;
  for (int w : neighbors(v))
    if (degree(w) == 1) ++c;
  return c;
}

std::vector<int> LabelledGraph::leaves() const {
  std::vector<int> out;
  for (int v : vertices_)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> LabelledGraph::internal_vertices() const {
  std::vector<int> out;
  for (int v : vertices_)
    if (degree(v) > 1) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> LabelledGraph::components() const {
  UnionFind uf(vertices_.size());
  for (auto& e : edges_) uf.join(position_of(vertices_, e.u), position_of(vertices_, e.v));
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    by_root[uf.find(static_cast<int>(i))].push_back(vertices_[i]);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, vs] : by_root) out.push_back(vs);
  // deterministic: order components by smallest vertex id
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool LabelledGraph::is_connected() const { return components().size() <= 1; }

int LabelledGraph::cyclomatic_number() const {
  return static_cast<int>(edge_count()) - static_cast<int>(vertex_count()) +
         static_cast<int>(components().size());
}

bool LabelledGraph::is_forest() const { return cyclomatic_number() == 0; }

bool LabelledGraph::is_tree() const { return is_forest() && is_connected() && !vertices_.empty(); }

std::vector<std::vector<int>> LabelledGraph::simple_cycles() const {
  // DFS paths anchored at their smallest vertex; a cycle is recorded when the
  // path closes back to the anchor. Each cycle is found twice (once per
  // orientation), so keep only the orientation with the smaller second vertex.
  std::set<std::vector<int>> found;
  std::vector<int> path;
  std::vector<bool> on_path(vertices_.size(), false);

  std::function<void(int, int)> dfs = [&](int anchor_pos, int cur_pos) {
    for (int w : neighbors(vertices_[cur_pos])) {
      int wp = position_of(vertices_, w);
      if (wp < anchor_pos) continue;  // cycles are anchored at their min vertex
      if (wp == anchor_pos) {
        if (path.size() >= 3) {
          std::vector<int> cyc = path;
          if (cyc[1] > cyc.back())
            std::reverse(cyc.begin() + 1, cyc.end());
          found.insert(cyc);
        }
        continue;
      }
      if (on_path[wp]) continue;
      on_path[wp] = true;
      path.push_back(w);
      dfs(anchor_pos, wp);
      path.pop_back();
      on_path[wp] = false;
    }
  };

  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    path = {vertices_[i]};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[i] = true;
    dfs(static_cast<int>(i), static_cast<int>(i));
  }
  return {found.begin(), found.end()};
}

LabelledGraph LabelledGraph::remove_vertex(int v) const { return remove_vertices({v}); }

LabelledGraph LabelledGraph::remove_vertices(const std::vector<int>& vs) const {
  std::set<int> gone(vs.begin(), vs.end());
  for (int v : vs)
    if (!has_vertex(v)) throw std::out_of_range("remove_vertices: unknown vertex");
  LabelledGraph g;
  for (int v : vertices_)
    if (!gone.count(v)) g.vertices_.push_back(v);
  for (auto& e : edges_)
    if (!gone.count(e.u) && !gone.count(e.v)) g.edges_.push_back(e);
  if (labels_) {
    Labelling l;
    for (auto& [v, k] : *labels_)
      if (!gone.count(v)) l[v] = k;
    g.labels_ = std::move(l);
  }
  return g;
}

LabelledGraph LabelledGraph::remove_edge(int edge_id) const {
  if (!edge_by_id(edge_id)) throw std::out_of_range("remove_edge: unknown edge id");
  LabelledGraph g = *this;
  std::erase_if(g.edges_, [&](const Edge& e) { return e.id == edge_id; });
  return g;
}

LabelledGraph LabelledGraph::with_labels(Labelling l) const {
  LabelledGraph g = *this;
  g.labels_ = std::move(l);
  if (g.labels_->size() != g.vertices_.size())
    throw std::invalid_argument("labelling must cover the vertex set");
  for (auto& [v, k] : *g.labels_) {
    if (!g.has_vertex(v)) throw std::invalid_argument("label on unknown vertex");
    if (k < 0) throw std::invalid_argument("negative label");
  }
  return g;
}

LabelledGraph LabelledGraph::without_labels() const {
  LabelledGraph g = *this;
  g.labels_.reset();
  return g;
}

std::vector<int> corner_vertices(const LabelledGraph& g) {
  std::vector<int> out;
  for (int v : g.internal_vertices()) {
    int internal_neighbors = 0;
    for (int w : g.neighbors(v))
      if (g.degree(w) > 1) ++internal_neighbors;
    if (internal_neighbors <= 1) out.push_back(v);
  }
  return out;
}

LabelledGraph caterpillar(int n, const std::vector<int>& leaf_counts) {
  if (n < 1) throw std::invalid_argument("caterpillar: need at least one path vertex");
  if (static_cast<int>(leaf_counts.size()) != n)
    throw std::invalid_argument("caterpillar: one leaf count per path vertex");
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) vertices.push_back(i);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  int next = n;
  for (int i = 0; i < n; ++i) {
    if (leaf_counts[i] < 0) throw std::invalid_argument("caterpillar: negative leaf count");
    for (int j = 0; j < leaf_counts[i]; ++j) {
      vertices.push_back(next);
      edges.emplace_back(i, next);
      ++next;
    }
  }
  return LabelledGraph(vertices, edges);
}

LabelledGraph restrict_label_vertex(const LabelledGraph& g, int v) {
  (void)g.labels();  // require labels
  return g.remove_vertex(v);
}

LabelledGraph restrict_label_edge(const LabelledGraph& g, int edge_id) {
  const Edge* e = g.edge_by_id(edge_id);
  if (!e) throw std::out_of_range("restrict_label_edge: unknown edge id");
  Labelling l = g.labels();
  if (l.at(e->u) == 0 || l.at(e->v) == 0)
    throw std::domain_error("restrict_label_edge: endpoint label already 0");
  --l.at(e->u);
  --l.at(e->v);
  return g.remove_edge(edge_id).with_labels(std::move(l));
}

LabelledGraph star_graph(const LabelledGraph& g, int w) {
  if (!g.has_vertex(w)) throw std::out_of_range("star_graph: unknown vertex");
  std::vector<int> vs = g.neighbors(w);
  vs.push_back(w);
  std::sort(vs.begin(), vs.end());
  std::vector<std::pair<int, int>> es;
  for (int x : g.neighbors(w)) es.emplace_back(w, x);
  std::optional<Labelling> labels;
  if (g.has_labels()) {
    Labelling l;
    for (int v : vs) l[v] = g.label(v);
    labels = std::move(l);
  }
  return LabelledGraph(vs, es, labels);
}

LabelledGraph disjoint_union(const LabelledGraph& a, const LabelledGraph& b) {
  std::vector<int> vs = a.vertices();
  for (int v : b.vertices()) {
    if (a.has_vertex(v)) throw std::invalid_argument("disjoint_union: overlapping vertex ids");
    vs.push_back(v);
  }
  std::vector<std::pair<int, int>> es;
  for (auto& e : a.edges()) es.emplace_back(e.u, e.v);
  for (auto& e : b.edges()) es.emplace_back(e.u, e.v);
  std::optional<Labelling> labels;
  if (a.has_labels() && b.has_labels()) {
    Labelling l = a.labels();
    for (auto& [v, k] : b.labels()) l[v] = k;
    labels = std::move(l);
  }
  return LabelledGraph(vs, es, labels);
}

LabelledGraph shift_ids(const LabelledGraph& g, int offset) {
  std::vector<int> vs;
  for (int v : g.vertices()) vs.push_back(v + offset);
  std::vector<std::pair<int, int>> es;
  for (auto& e : g.edges()) es.emplace_back(e.u + offset, e.v + offset);
  std::optional<Labelling> labels;
  if (g.has_labels()) {
    Labelling l;
    for (auto& [v, k] : g.labels()) l[v + offset] = k;
    labels = std::move(l);
  }
  return LabelledGraph(vs, es, labels);
}

// ---------------------------------------------------------------------------

MultiDigraph::MultiDigraph(std::vector<int> vertices,
                           const std::vector<std::pair<int, int>>& darts)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");
  darts_.reserve(darts.size());
  for (std::size_t i = 0; i < darts.size(); ++i) {
    auto [s, t] = darts[i];
    if (s == t) throw std::invalid_argument("loop dart");
    if (!has_vertex(s) || !has_vertex(t)) throw std::invalid_argument("dart endpoint unknown");
    darts_.push_back(Dart{static_cast<int>(i), s, t});
  }
}

MultiDigraph MultiDigraph::from_darts(std::vector<int> vertices, std::vector<Dart> darts) {
  MultiDigraph g(std::move(vertices), {});
  for (const Dart& d : darts) {
    if (d.s == d.t) throw std::invalid_argument("loop dart");
    if (!g.has_vertex(d.s) || !g.has_vertex(d.t))
      throw std::invalid_argument("dart endpoint unknown");
  }
  std::sort(darts.begin(), darts.end(), [](const Dart& a, const Dart& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < darts.size(); ++i)
    if (darts[i].id == darts[i + 1].id) throw std::invalid_argument("duplicate dart id");
  g.darts_ = std::move(darts);
  return g;
}

bool MultiDigraph::has_vertex(int v) const { return position_of(vertices_, v) >= 0; }

const Dart* MultiDigraph::dart_by_id(int id) const {
  for (auto& d : darts_)
    if (d.id == id) return &d;
  return nullptr;
}

int MultiDigraph::in_degree(int v) const {
  int c = 0;
  for (auto& d : darts_)
    if (d.t == v) ++c;
  return c;
}

int MultiDigraph::out_degree(int v) const {
  int c = 0;
  for (auto& d : darts_)
    if (d.s == v) ++c;
  return c;
}

int MultiDigraph::multiplicity(int s, int t) const {
  int c = 0;
  for (auto& d : darts_)
    if (d.s == s && d.t == t) ++c;
  return c;
}

MultiDigraph MultiDigraph::remove_dart(int id) const {
  if (!dart_by_id(id)) throw std::out_of_range("remove_dart: unknown dart id");
  MultiDigraph g = *this;
  std::erase_if(g.darts_, [&](const Dart& d) { return d.id == id; });
  return g;
}

LabelledGraph MultiDigraph::underlying() const {
  std::set<std::pair<int, int>> pairs;
  for (auto& d : darts_) pairs.emplace(std::min(d.s, d.t), std::max(d.s, d.t));
  return LabelledGraph(vertices_, {pairs.begin(), pairs.end()});
}

bool MultiDigraph::underlying_is_forest() const { return underlying().is_forest(); }

MultiDigraph contract_target(const MultiDigraph& g, int dart_id) {
  const Dart* e = g.dart_by_id(dart_id);
  if (!e) throw std::out_of_range("contract_target: unknown dart id");
  int s = e->s, t = e->t;
  MultiDigraph out;
  for (int v : g.vertices())
    if (v != t) out.vertices_.push_back(v);
  for (auto& d : g.darts()) {
    if (d.t == t) continue;              // all darts into t go, e included
    if (d.s == t && d.t == s) continue;  // would become a loop at s
    Dart nd = d;
    if (nd.s == t) nd.s = s;
    out.darts_.push_back(nd);
  }
  return out;
}

std::uint64_t graph_hash(const LabelledGraph& g) {
  std::string enc = "G;";
  for (int v : g.vertices()) enc += std::to_string(v) + ",";
  enc += ";";
  for (auto& e : g.edges()) enc += std::to_string(e.u) + "-" + std::to_string(e.v) + ",";
  if (g.has_labels()) {
    enc += ";L";
    for (auto& [v, k] : g.labels()) enc += std::to_string(v) + ":" + std::to_string(k) + ",";
  }
  return fnv_append(14695981039346656037ull, enc);
}

std::uint64_t graph_hash(const MultiDigraph& g) {
  std::string enc = "D;";
  for (int v : g.vertices()) enc += std::to_string(v) + ",";
  enc += ";";
  for (auto& d : g.darts())
    enc += std::to_string(d.id) + ":" + std::to_string(d.s) + ">" + std::to_string(d.t) + ",";
  return fnv_append(14695981039346656037ull, enc);
}

}  // namespace sfc
