#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sfc/builders.hpp"
#include "sfc/complex.hpp"
#include "sfc/graph.hpp"

namespace sfc {

// v is a shedding vertex when every facet of the deletion is already a
// facet of k; ghosts and foreign ids are never shedding vertices.
bool is_shedding_vertex(const Complex& k, int v);

// Proof tree for vertex decomposability. Leaves name the base case that
// applied; a split records the shedding vertex and proofs for the link and
// the deletion. Vertex ids refer to the complex the certificate is for.
struct VdCert {
  enum class Tag { Void, Empty, Simplex, Split };
  Tag tag = Tag::Simplex;
  int vertex = -1;
  std::shared_ptr<const VdCert> link;
  std::shared_ptr<const VdCert> del;
};

// Re-checks a certificate against k from scratch: base tags must match k
// exactly, every split vertex must be shedding, and both branches must
// replay. Succeeds only on genuine proofs.
bool replay_certificate(const Complex& k, const VdCert& cert);

// Optional origin of a complex, used by candidate-ordering policies to pick
// shedding vertices the way the structure suggests. Never affects answers,
// only search order.
struct ShedContext {
  std::optional<std::pair<LabelledGraph, DegreeBounds>> bd;  // ground = edge ids
  std::optional<LabelledGraph> nc;                           // ground = vertices
  std::optional<MultiDigraph> dt;                            // ground = dart ids

  static ShedContext none() { return {}; }
  static ShedContext bounded_degree(LabelledGraph g, DegreeBounds b);
  static ShedContext non_cover(LabelledGraph g);
  static ShedContext directed_tree(MultiDigraph g);
};

class ShedPolicy {
 public:
  virtual ~ShedPolicy() = default;
  virtual std::string name() const = 0;
  // preferred candidates, best first; the solver appends the rest of the
  // support, so omissions cost time but never correctness
  virtual std::vector<int> candidates(const Complex& k, const ShedContext& ctx) const = 0;
  virtual ShedContext link_context(const ShedContext& ctx, int v) const;
  virtual ShedContext delete_context(const ShedContext& ctx, int v) const;
};

// Support vertices in ascending order, no context tracking.
const ShedPolicy& naive_policy();

// Orders candidates by the graph the complex came from: pendant edges at
// corner vertices for degree-bounded complexes, internal vertices for
// non-cover complexes, parallel darts and leaf darts for directed-tree
// complexes. Falls back to the naive order without a context.
const ShedPolicy& guided_policy();

const ShedPolicy& policy_by_name(const std::string& name);  // "naive" | "paper"

class VdSolver {
 public:
  struct Options {
    const ShedPolicy* policy = &naive_policy();
    // per solve() call; 0 = unlimited; exceeding throws BudgetExceeded
    std::uint64_t node_budget = 0;
    std::uint64_t iso_leaf_cap = 20000;
    int iso_max_support = 16;  // larger supports use plain support keys
  };

  struct Result {
    bool vd = false;
    std::shared_ptr<const VdCert> cert;  // set iff vd
  };

  VdSolver() : VdSolver(Options{}) {}
  explicit VdSolver(Options opt) : opt_(opt) {}

  Result solve(const Complex& k) { return solve(k, ShedContext::none()); }
  Result solve(const Complex& k, const ShedContext& ctx);

  // subproblems actually decided (memo hits excluded); thread-safe
  std::uint64_t nodes_explored() const { return nodes_; }
  void reset_stats() { nodes_ = 0; }

 private:
  struct MemoEntry {
    bool vd = false;
    std::shared_ptr<const VdCert> cert;  // canonical labels when iso-keyed
    bool iso = false;
  };

  Result solve_impl(const Complex& k, const ShedContext& ctx);

  static thread_local std::uint64_t call_nodes_;

  Options opt_;
  std::mutex mu_;
  std::unordered_map<std::string, MemoEntry> memo_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Root shedding vertex of some decomposition of k, if k is decomposable
// and is not a simplex (simplices decompose without shedding).
std::optional<int> find_decomposing_vertex(const Complex& k);

// Shelling search: an order on all facets where each facet meets the union
// of the earlier ones in a pure complex of codimension one. Non-pure
// complexes are allowed. More than max_facets facets throws CeilingExceeded.
struct ShellResult {
  bool shellable = false;
  std::vector<Face> order;  // set when shellable
  std::uint64_t nodes = 0;
};

ShellResult is_shellable(const Complex& k, std::size_t max_facets = 12);

// Full independent check that `order` really is a shelling of k.
bool replay_shelling(const Complex& k, const std::vector<Face>& order);

}  // namespace sfc
