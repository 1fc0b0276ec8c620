#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sfc/builders.hpp"
#include "sfc/complex.hpp"
#include "sfc/decomp.hpp"
#include "sfc/graph.hpp"
#include "sfc/homology.hpp"

namespace sfc {

// Batch checks that sweep a theorem over an exhaustively enumerated corpus.
// Every run is deterministic for a fixed config: same instance list, same
// order, same verdicts and artifacts (timings aside).

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct SuiteRow {
  std::string instance;     // isomorphism-class code / hash plus parameters
  Verdict verdict = Verdict::Skipped;
  double ms = 0.0;
  nlohmann::json artifact;  // FAIL: replayable bundle; SKIPPED: {"reason": ...}
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRow> rows;
  std::uint64_t solver_nodes = 0;  // decided subproblems across the suite
  double ms = 0.0;

  std::size_t count(Verdict v) const;
  bool ok() const { return count(Verdict::Fail) == 0; }
};

// Swap points so tests can replace a production piece with a deliberately
// broken one and confirm the suites catch it. Unset means "use the real
// implementation".
struct SuiteHooks {
  std::function<Complex(const LabelledGraph&, const DegreeBounds&)> bounded_degree;
  std::function<Complex(const LabelledGraph&)> non_cover;
  std::function<Complex(const MultiDigraph&)> directed_tree;
  std::function<VdSolver::Result(const Complex&, const ShedContext&)> decide_vd;
  std::function<bool(const Complex&, const VdCert&)> replay_vd;
  std::function<HomologyProfile(const Complex&)> homology;
  std::function<ShellResult(const Complex&, std::size_t)> shellability;
};

struct SuiteConfig {
  std::optional<int> max_edges;     // overrides the suite's corpus edge bound
  std::optional<int> max_vertices;  // overrides the suite's corpus vertex bound
  std::uint64_t node_budget = 0;    // per decision; 0 = unlimited
  std::string policy = "paper";     // candidate-order policy: "naive" | "paper"
  unsigned threads = 0;             // 0 = worker_count()
  SuiteHooks hooks;
};

// Suite ids, in the order run_all_suites executes them:
//   bd-forests          every bounded-degree complex of a forest is vertex
//                       decomposable; certificates replay
//   bd-cyclic           leafy-cycle condition forces vertex decomposability on
//                       cyclic graphs (hypothesis-guarded)
//   bd-identities       bounded-degree link/deletion/reduction identities
//   nc-characterization non-cover complex of a forest is vertex decomposable
//                       iff the forest is connected with <= 2 internal vertices
//   nc-spheres          non-cover complexes of forests are points or spheres
//   nc-suspension       removing a closed neighborhood suspends the non-cover
//                       complex; disjoint unions suspend joins; gluing shifts
//   nc-disjoint         non-cover complexes of disconnected graphs are neither
//                       shellable nor vertex decomposable
//   dt-forests          directed-tree complexes of multidiforests are vertex
//                       decomposable; certificates replay
//   dt-identities       directed-tree link = contraction, deletion = removal
//   ad-reflection       the non-cover complex is the Alexander dual of the
//                       independence complex; Betti numbers reflect
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg = {});
std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg = {});

}  // namespace sfc
