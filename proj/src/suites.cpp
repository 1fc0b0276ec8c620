#include "sfc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sfc/enumerate.hpp"
#include "sfc/errors.hpp"
#include "sfc/json_io.hpp"
#include "sfc/threading.hpp"

namespace sfc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

std::size_t SuiteResult::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.verdict == v) ++n;
  return n;
}

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string bounds_str(const DegreeBounds& b) {
  std::string s;
  for (const auto& [v, k] : b) {
    if (!s.empty()) s += ",";
    s += std::to_string(v) + ":" + std::to_string(k);
  }
  return s.empty() ? "-" : s;
}

json bounds_json(const DegreeBounds& b) {
  json j = json::object();
  for (const auto& [v, k] : b) j[std::to_string(v)] = k;
  return j;
}

SuiteRow pass_row(json note = nullptr) {
  SuiteRow r;
  r.verdict = Verdict::Pass;
  r.artifact = std::move(note);
  return r;
}

SuiteRow fail_row(json artifact) {
  SuiteRow r;
  r.verdict = Verdict::Fail;
  r.artifact = std::move(artifact);
  return r;
}

SuiteRow skip_row(std::string reason) {
  SuiteRow r;
  r.verdict = Verdict::Skipped;
  r.artifact = json{{"reason", std::move(reason)}};
  return r;
}

// Budget and ceiling exhaustion are reported per instance, never as a crash.
template <class F>
SuiteRow guarded(F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return skip_row(std::string("budget: ") + e.what());
  } catch (const CeilingExceeded& e) {
    return skip_row(std::string("ceiling: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// resolved implementations (production pieces unless a hook replaces them)

struct Pieces {
  std::function<Complex(const LabelledGraph&, const DegreeBounds&)> bd;
  std::function<Complex(const LabelledGraph&)> nc;
  std::function<Complex(const MultiDigraph&)> dt;
  std::function<VdSolver::Result(const Complex&, const ShedContext&)> vd;
  std::function<bool(const Complex&, const VdCert&)> replay;
  std::function<HomologyProfile(const Complex&)> hom;
  std::function<ShellResult(const Complex&, std::size_t)> shell;
};

VdSolver::Options solver_options(const SuiteConfig& cfg) {
  VdSolver::Options o;
  o.policy = &policy_by_name(cfg.policy);
  o.node_budget = cfg.node_budget;
  return o;
}

// `shared` may be null for suites that decide nothing or manage solvers
// per instance.
Pieces resolve(const SuiteConfig& cfg, VdSolver* shared) {
  Pieces p;
  const SuiteHooks& h = cfg.hooks;
  if (h.bounded_degree)
    p.bd = h.bounded_degree;
  else
    p.bd = [](const LabelledGraph& g, const DegreeBounds& b) {
      return bounded_degree_complex(g, b);
    };
  if (h.non_cover)
    p.nc = h.non_cover;
  else
    p.nc = [](const LabelledGraph& g) { return non_cover_complex(g); };
  if (h.directed_tree)
    p.dt = h.directed_tree;
  else
    p.dt = [](const MultiDigraph& g) { return directed_tree_complex(g); };
  if (h.decide_vd) {
    p.vd = h.decide_vd;
  } else if (shared) {
    p.vd = [shared](const Complex& k, const ShedContext& ctx) {
      return shared->solve(k, ctx);
    };
  } else {
    VdSolver::Options opts = solver_options(cfg);
    p.vd = [opts](const Complex& k, const ShedContext& ctx) {
      VdSolver local(opts);
      return local.solve(k, ctx);
    };
  }
  if (h.replay_vd)
    p.replay = h.replay_vd;
  else
    p.replay = [](const Complex& k, const VdCert& c) {
      return replay_certificate(k, c);
    };
  if (h.homology)
    p.hom = h.homology;
  else
    p.hom = [](const Complex& k) { return reduced_homology(k); };
  if (h.shellability)
    p.shell = h.shellability;
  else
    p.shell = [](const Complex& k, std::size_t cap) {
      return is_shellable(k, cap);
    };
  return p;
}

// ---------------------------------------------------------------------------
// scheduling

struct Instance {
  std::string id;
  std::function<SuiteRow()> run;
};

SuiteResult execute(std::string name, std::vector<Instance> work,
                    const SuiteConfig& cfg) {
  auto t0 = Clock::now();
  SuiteResult res;
  res.suite = std::move(name);
  std::function<SuiteRow(std::size_t)> one = [&work](std::size_t i) {
    auto ti = Clock::now();
    SuiteRow row = work[i].run();
    row.instance = work[i].id;
    row.ms = elapsed_ms(ti);
    return row;
  };
  res.rows = parallel_map<SuiteRow>(work.size(), cfg.threads, one);
  res.ms = elapsed_ms(t0);
  return res;
}

// ---------------------------------------------------------------------------
// counterexample minimization: greedy single-step deletions while the failure
// persists. A shrink candidate that throws (ceiling, budget) is not a witness.

template <class T>
T minimize_failure(T witness,
                   const std::function<std::vector<T>(const T&)>& shrinks,
                   const std::function<bool(const T&)>& still_fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const T& cand : shrinks(witness)) {
      bool bad = false;
      try {
        bad = still_fails(cand);
      } catch (...) {
        bad = false;
      }
      if (bad) {
        witness = cand;
        shrunk = true;
        break;
      }
    }
  }
  return witness;
}

std::vector<LabelledGraph> graph_shrinks(const LabelledGraph& g) {
  std::vector<LabelledGraph> out;
  for (const Edge& e : g.edges()) out.push_back(g.remove_edge(e.id));
  for (int v : g.vertices()) out.push_back(g.remove_vertex(v));
  return out;
}

DegreeBounds restrict_bounds(const DegreeBounds& b, const LabelledGraph& g) {
  DegreeBounds out;
  for (int v : g.vertices()) {
    auto it = b.find(v);
    if (it != b.end()) out[v] = it->second;
  }
  return out;
}

using BdInstance = std::pair<LabelledGraph, DegreeBounds>;

std::vector<BdInstance> bd_shrinks(const BdInstance& w) {
  std::vector<BdInstance> out;
  for (const LabelledGraph& g : graph_shrinks(w.first))
    out.push_back({g, restrict_bounds(w.second, g)});
  return out;
}

std::vector<MultiDigraph> digraph_shrinks(const MultiDigraph& m) {
  std::vector<MultiDigraph> out;
  for (const Dart& d : m.darts()) out.push_back(m.remove_dart(d.id));
  std::vector<int> busy;
  for (int v : m.vertices())
    if (m.in_degree(v) + m.out_degree(v) > 0) busy.push_back(v);
  if (busy.size() < m.vertices().size())
    out.push_back(MultiDigraph::from_darts(busy, m.darts()));
  return out;
}

// ---------------------------------------------------------------------------
// shared corpus pieces

// Every lambda with 0 <= lambda(v) <= deg(v), odometer order.
std::vector<DegreeBounds> all_bounds(const LabelledGraph& g) {
  std::vector<int> vs = g.vertices();
  std::vector<DegreeBounds> out;
  DegreeBounds cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vs.size()) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= g.degree(vs[i]); ++k) {
      cur[vs[i]] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

DegreeBounds ones_bounds(const LabelledGraph& g) {
  DegreeBounds b;
  for (int v : g.vertices()) b[v] = 1;
  return b;
}

// One new leaf on every vertex, so every non-leaf vertex ends up adjacent to
// at least one leaf.
LabelledGraph whiskered(const LabelledGraph& g) {
  int next = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<int> vs = g.vertices();
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v});
  for (int v : g.vertices()) {
    vs.push_back(next);
    es.push_back({v, next});
    ++next;
  }
  return LabelledGraph(vs, es);
}

std::vector<LabelledGraph> forests_with_vertices_upto(int lo, int hi) {
  std::vector<LabelledGraph> out;
  for (int n = lo; n <= hi; ++n)
    for (const LabelledGraph& f : forest_classes_with_vertices(n)) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// bd-forests: BD^lambda of a forest is vertex decomposable, certificate replays

json bd_fail_artifact(const Pieces& p, const LabelledGraph& g,
                      const DegreeBounds& lam,
                      const std::shared_ptr<const VdCert>& cert,
                      const std::string& why) {
  std::function<bool(const BdInstance&)> fails = [&p](const BdInstance& w) {
    Complex k = p.bd(w.first, w.second);
    auto r = p.vd(k, ShedContext::bounded_degree(w.first, w.second));
    if (!r.vd) return true;
    return !r.cert || !p.replay(k, *r.cert);
  };
  std::function<std::vector<BdInstance>(const BdInstance&)> steps = bd_shrinks;
  BdInstance min = minimize_failure<BdInstance>({g, lam}, steps, fails);
  json a;
  a["why"] = why;
  a["graph"] = graph_to_json(g);
  a["lambda"] = bounds_json(lam);
  a["complex"] = complex_to_json(p.bd(g, lam));
  if (cert) a["certificate"] = cert_to_json(*cert);
  a["minimized"] = {{"graph", graph_to_json(min.first)},
                    {"lambda", bounds_json(min.second)},
                    {"complex", complex_to_json(p.bd(min.first, min.second))}};
  return a;
}

SuiteRow check_bd_vd(const Pieces& p, const LabelledGraph& g,
                     const DegreeBounds& lam) {
  Complex k = p.bd(g, lam);
  auto res = p.vd(k, ShedContext::bounded_degree(g, lam));
  if (!res.vd)
    return fail_row(bd_fail_artifact(p, g, lam, res.cert,
                                     "expected vertex decomposable"));
  if (!res.cert || !p.replay(k, *res.cert))
    return fail_row(bd_fail_artifact(p, g, lam, res.cert,
                                     "certificate replay failed"));
  return pass_row();
}

SuiteResult suite_bd_forests(const SuiteConfig& cfg) {
  int max_edges = cfg.max_edges.value_or(7);
  VdSolver solver(solver_options(cfg));
  Pieces p = resolve(cfg, &solver);
  std::vector<Instance> work;
  for (const LabelledGraph& f : forest_classes_with_edges(max_edges)) {
    std::string head = "h=" + hash_hex(graph_hash(f)) +
                       ";n=" + std::to_string(f.vertices().size()) +
                       ";m=" + std::to_string(f.edges().size());
    for (const DegreeBounds& lam : all_bounds(f)) {
      work.push_back({head + ";lam=" + bounds_str(lam), [&p, f, lam] {
                        return guarded([&] { return check_bd_vd(p, f, lam); });
                      }});
    }
  }
  SuiteResult res = execute("bd-forests", std::move(work), cfg);
  res.solver_nodes = solver.nodes_explored();
  return res;
}

// ---------------------------------------------------------------------------
// bd-cyclic: if every cycle has a vertex whose adjacent-leaf count reaches its
// bound, BD^lambda is vertex decomposable. Instances whose lambda misses the
// condition are SKIPPED, not asserted.

bool leafy_cycle_condition(const LabelledGraph& g, const DegreeBounds& lam,
                           std::string* why) {
  for (const auto& cyc : g.simple_cycles()) {
    bool ok = false;
    for (int v : cyc) {
      auto it = lam.find(v);
      int need = it == lam.end() ? 0 : it->second;
      if (g.leaf_count_at(v) >= need) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      if (why) {
        std::string cs;
        for (int v : cyc) cs += (cs.empty() ? "" : ",") + std::to_string(v);
        *why = "hypothesis: cycle {" + cs +
               "} has no vertex with adjacent-leaf count >= lambda";
      }
      return false;
    }
  }
  return true;
}

SuiteResult suite_bd_cyclic(const SuiteConfig& cfg) {
  int max_n = cfg.max_vertices.value_or(5);
  int whisker_base = std::min(max_n + 1, 6);
  VdSolver solver(solver_options(cfg));
  Pieces p = resolve(cfg, &solver);
  std::vector<Instance> work;

  auto add = [&](const LabelledGraph& g, const DegreeBounds& lam,
                 const std::string& tag) {
    std::string id = tag + ";h=" + hash_hex(graph_hash(g)) +
                     ";n=" + std::to_string(g.vertices().size()) +
                     ";m=" + std::to_string(g.edges().size()) +
                     ";lam=" + bounds_str(lam);
    work.push_back({std::move(id), [&p, g, lam] {
                      return guarded([&]() -> SuiteRow {
                        std::string why;
                        if (!leafy_cycle_condition(g, lam, &why))
                          return skip_row(why);
                        return check_bd_vd(p, g, lam);
                      });
                    }});
  };

  // full lambda sweep over small cyclic connected graphs
  for (const LabelledGraph& g : connected_graph_classes(std::min(max_n, 6))) {
    int c = g.cyclomatic_number();
    if (c < 1 || c > 4) continue;
    for (const DegreeBounds& lam : all_bounds(g)) add(g, lam, "sweep");
  }
  // one whisker per vertex makes the condition hold at lambda == 1 everywhere
  for (const LabelledGraph& g : connected_graph_classes(whisker_base)) {
    int c = g.cyclomatic_number();
    if (c < 1 || c > 4) continue;
    LabelledGraph w = whiskered(g);
    add(w, ones_bounds(w), "whiskered");
  }
  // pinned shapes: a plain triangle misses the condition, a whiskered one and
  // a 4-cycle with two leaves on one corner meet it
  {
    LabelledGraph tri({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
    add(tri, ones_bounds(tri), "pinned-triangle");
    LabelledGraph wtri = whiskered(tri);
    add(wtri, ones_bounds(wtri), "pinned-whiskered-triangle");
    LabelledGraph c4ll({0, 1, 2, 3, 4, 5},
                       {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5}});
    DegreeBounds lam = ones_bounds(c4ll);
    lam[0] = 2;
    add(c4ll, lam, "pinned-c4-two-leaves");
  }

  SuiteResult res = execute("bd-cyclic", std::move(work), cfg);
  res.solver_nodes = solver.nodes_explored();
  return res;
}

// ---------------------------------------------------------------------------
// bd-identities: deletion(e) rebuilds on G - e, link(e) rebuilds on G - e with
// both endpoint bounds lowered, lambda(u) = 0 matches dropping u up to ghosts,
// and bounds above the degree never matter.

SuiteResult suite_bd_identities(const SuiteConfig& cfg) {
  int max_edges = cfg.max_edges.value_or(5);
  Pieces p = resolve(cfg, nullptr);
  std::vector<LabelledGraph> corpus = forest_classes_with_edges(max_edges);
  for (const LabelledGraph& g : graph_classes(6)) {
    if (g.cyclomatic_number() >= 1 &&
        static_cast<int>(g.edges().size()) <= max_edges)
      corpus.push_back(g);
  }

  std::vector<Instance> work;
  for (const LabelledGraph& g : corpus) {
    std::string head = "h=" + hash_hex(graph_hash(g)) +
                       ";n=" + std::to_string(g.vertices().size()) +
                       ";m=" + std::to_string(g.edges().size());
    for (const DegreeBounds& lam : all_bounds(g)) {
      work.push_back({head + ";lam=" + bounds_str(lam), [&p, g, lam] {
        return guarded([&]() -> SuiteRow {
          Complex k = p.bd(g, lam);
          auto mismatch = [&](const std::string& what, const Complex& got,
                              const Complex& want, KeyMode mode) {
            json a;
            a["why"] = what;
            a["graph"] = graph_to_json(g);
            a["lambda"] = bounds_json(lam);
            a["got"] = complex_to_json(got);
            a["want"] = complex_to_json(want);
            a["mode"] = mode == KeyMode::Exact ? "exact" : "support";
            return fail_row(a);
          };
          for (const Edge& e : g.edges()) {
            LabelledGraph ge = g.remove_edge(e.id);
            if (!k.contains(Face{e.id})) {
              // a zero bound at an endpoint makes e a ghost: dropping it from
              // the graph must not change the complex beyond the ghost itself
              Complex want = p.bd(ge, lam);
              if (canonical_key(k, KeyMode::Support) !=
                  canonical_key(want, KeyMode::Support))
                return mismatch("removing a ghost edge changed the complex", k,
                                want, KeyMode::Support);
              continue;
            }
            Complex del = deletion(k, Face{e.id});
            Complex del_want = p.bd(ge, lam);
            if (canonical_key(del, KeyMode::Exact) !=
                canonical_key(del_want, KeyMode::Exact))
              return mismatch("deletion(e) != rebuild on G - e", del, del_want,
                              KeyMode::Exact);
            Complex lk = link(k, Face{e.id});
            Complex lk_want = p.bd(ge, link_bounds(g, lam, e.id));
            if (canonical_key(lk, KeyMode::Exact) !=
                canonical_key(lk_want, KeyMode::Exact))
              return mismatch("link(e) != rebuild with lowered bounds", lk,
                              lk_want, KeyMode::Exact);
          }
          for (int u : g.vertices()) {
            auto it = lam.find(u);
            if (it == lam.end() || it->second != 0) continue;
            LabelledGraph gu = g.remove_vertex(u);
            Complex want = p.bd(gu, restrict_bounds(lam, gu));
            if (canonical_key(k, KeyMode::Support) !=
                canonical_key(want, KeyMode::Support))
              return mismatch("lambda(u)=0 != dropping u (up to ghosts)", k,
                              want, KeyMode::Support);
          }
          DegreeBounds raised = lam;
          for (auto& [v, b] : raised) b += g.degree(v) + 1;
          Complex hi = p.bd(g, raised);
          Complex capped = p.bd(g, capped_bounds(g, raised));
          if (canonical_key(hi, KeyMode::Exact) !=
              canonical_key(capped, KeyMode::Exact))
            return mismatch("bounds above the degree changed the complex", hi,
                            capped, KeyMode::Exact);
          return pass_row();
        });
      }});
    }
  }
  return execute("bd-identities", std::move(work), cfg);
}

// ---------------------------------------------------------------------------
// nc-characterization: for forests without isolated vertices, NC(F) is vertex
// decomposable iff F is connected with at most two internal vertices.

SuiteResult suite_nc_characterization(const SuiteConfig& cfg) {
  int max_n = cfg.max_vertices.value_or(8);
  VdSolver solver(solver_options(cfg));
  Pieces p = resolve(cfg, &solver);

  auto expected_vd = [](const LabelledGraph& f) {
    return f.is_connected() && f.internal_vertices().size() <= 2;
  };
  std::function<bool(const LabelledGraph&)> fails =
      [&p, expected_vd](const LabelledGraph& f) {
        if (f.edges().empty()) return false;
        Complex k = p.nc(f);
        auto r = p.vd(k, ShedContext::non_cover(f));
        if (r.vd != expected_vd(f)) return true;
        if (r.vd && (!r.cert || !p.replay(k, *r.cert))) return true;
        return false;
      };

  std::vector<Instance> work;
  for (const LabelledGraph& f : forests_with_vertices_upto(2, max_n)) {
    std::string id = "h=" + hash_hex(graph_hash(f)) +
                     ";n=" + std::to_string(f.vertices().size()) +
                     ";m=" + std::to_string(f.edges().size()) +
                     ";connected=" + (f.is_connected() ? "1" : "0") +
                     ";internal=" + std::to_string(f.internal_vertices().size());
    work.push_back({std::move(id), [&p, f, expected_vd, fails] {
      return guarded([&]() -> SuiteRow {
        Complex k = p.nc(f);
        bool want = expected_vd(f);
        auto res = p.vd(k, ShedContext::non_cover(f));
        std::string why;
        if (res.vd != want)
          why = want ? "expected vertex decomposable, decided not"
                     : "expected not vertex decomposable, decided yes";
        else if (res.vd && (!res.cert || !p.replay(k, *res.cert)))
          why = "certificate replay failed";
        if (why.empty()) return pass_row();
        std::function<std::vector<LabelledGraph>(const LabelledGraph&)> steps =
            graph_shrinks;
        LabelledGraph min = minimize_failure<LabelledGraph>(f, steps, fails);
        json a;
        a["why"] = why;
        a["graph"] = graph_to_json(f);
        a["complex"] = complex_to_json(k);
        if (res.cert) a["certificate"] = cert_to_json(*res.cert);
        a["minimized"] = {{"graph", graph_to_json(min)},
                          {"complex", complex_to_json(p.nc(min))}};
        return fail_row(a);
      });
    }});
  }
  SuiteResult res = execute("nc-characterization", std::move(work), cfg);
  res.solver_nodes = solver.nodes_explored();
  return res;
}

// ---------------------------------------------------------------------------
// nc-spheres: NC of a forest without isolated vertices is a homology point or
// a homology sphere, never anything else.

SuiteResult suite_nc_spheres(const SuiteConfig& cfg) {
  int max_n = cfg.max_vertices.value_or(9);
  Pieces p = resolve(cfg, nullptr);
  std::function<bool(const LabelledGraph&)> fails = [&p](const LabelledGraph& f) {
    if (f.edges().empty()) return false;
    SphereClass c = classify_point_or_sphere(p.hom(p.nc(f)));
    return c.kind == SphereKind::Neither;
  };
  std::vector<Instance> work;
  for (const LabelledGraph& f : forests_with_vertices_upto(2, max_n)) {
    std::string id = "h=" + hash_hex(graph_hash(f)) +
                     ";n=" + std::to_string(f.vertices().size()) +
                     ";m=" + std::to_string(f.edges().size());
    work.push_back({std::move(id), [&p, f, fails] {
      return guarded([&]() -> SuiteRow {
        Complex k = p.nc(f);
        HomologyProfile h = p.hom(k);
        SphereClass c = classify_point_or_sphere(h);
        if (c.kind != SphereKind::Neither) return pass_row();
        std::function<std::vector<LabelledGraph>(const LabelledGraph&)> steps =
            graph_shrinks;
        LabelledGraph min = minimize_failure<LabelledGraph>(f, steps, fails);
        json a;
        a["why"] = "reduced homology is neither a point nor a sphere";
        a["graph"] = graph_to_json(f);
        a["complex"] = complex_to_json(k);
        a["homology"] = homology_to_json(h);
        a["minimized"] = {{"graph", graph_to_json(min)},
                          {"homology", homology_to_json(p.hom(p.nc(min)))}};
        return fail_row(a);
      });
    }});
  }
  return execute("nc-spheres", std::move(work), cfg);
}

// ---------------------------------------------------------------------------
// nc-suspension: three homotopy-level consequences checked through homology.
//  (a) a leaf v with neighbor w of degree > 1: NC(G) looks like the
//      |N(w)|-fold suspension of NC(G - N[w]), provided an edge survives
//      outside the closed neighborhood (otherwise SKIPPED);
//  (b) disjoint unions: NC(G1 + G2) looks like the suspension of
//      NC(G1) * NC(G2);
//  (c) the covering decomposition behind (b): the two cone pieces glue along
//      their intersection with a one-dimension shift.

SuiteResult suite_nc_suspension(const SuiteConfig& cfg) {
  int max_n = cfg.max_vertices.value_or(8);
  Pieces p = resolve(cfg, nullptr);
  std::vector<Instance> work;

  // (a) corpus: every graph class up to 6 vertices, plus larger forests
  std::vector<LabelledGraph> corpus = graph_classes(std::min(max_n, 6));
  for (const LabelledGraph& f : forests_with_vertices_upto(7, max_n))
    corpus.push_back(f);

  for (const LabelledGraph& g : corpus) {
    for (int w : g.vertices()) {
      if (g.degree(w) <= 1) continue;
      bool leafy = false;
      for (int x : g.neighbors(w))
        if (g.degree(x) == 1) leafy = true;
      if (!leafy) continue;
      std::string id = "neighborhood;h=" + hash_hex(graph_hash(g)) +
                       ";n=" + std::to_string(g.vertices().size()) +
                       ";m=" + std::to_string(g.edges().size()) +
                       ";w=" + std::to_string(w);
      work.push_back({std::move(id), [&p, g, w] {
        return guarded([&]() -> SuiteRow {
          std::vector<int> closed = g.neighbors(w);
          closed.push_back(w);
          LabelledGraph rest = g.remove_vertices(closed);
          if (rest.edges().empty())
            return skip_row(
                "hypothesis: no edge survives outside the closed "
                "neighborhood of w");
          int r = g.degree(w);
          HomologyProfile base = p.hom(p.nc(rest));
          HomologyProfile full = p.hom(p.nc(g));
          if (check_suspension_shift(base, full, r)) return pass_row();
          std::function<bool(const LabelledGraph&)> fails =
              [&p, w](const LabelledGraph& h) {
                auto vs = h.vertices();
                if (std::find(vs.begin(), vs.end(), w) == vs.end())
                  return false;
                if (h.degree(w) <= 1) return false;
                bool leafy2 = false;
                for (int x : h.neighbors(w))
                  if (h.degree(x) == 1) leafy2 = true;
                if (!leafy2) return false;
                std::vector<int> cl = h.neighbors(w);
                cl.push_back(w);
                LabelledGraph hr = h.remove_vertices(cl);
                if (hr.edges().empty()) return false;
                return !check_suspension_shift(p.hom(p.nc(hr)),
                                               p.hom(p.nc(h)), h.degree(w));
              };
          std::function<std::vector<LabelledGraph>(const LabelledGraph&)>
              steps = graph_shrinks;
          LabelledGraph min = minimize_failure<LabelledGraph>(g, steps, fails);
          json a;
          a["why"] = "homology does not match the |N(w)|-fold suspension";
          a["graph"] = graph_to_json(g);
          a["w"] = w;
          a["shift"] = r;
          a["rest"] = graph_to_json(rest);
          a["rest_homology"] = homology_to_json(base);
          a["homology"] = homology_to_json(full);
          a["minimized"] = {{"graph", graph_to_json(min)}};
          return fail_row(a);
        });
      }});
    }
  }

  // (b)+(c) corpus: ordered-by-enumeration unordered pairs of small connected
  // graphs, grounds made disjoint by shifting the second factor
  std::vector<LabelledGraph> parts;
  for (const LabelledGraph& g : connected_graph_classes(std::min(max_n, 5)))
    if (!g.edges().empty()) parts.push_back(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      const LabelledGraph& g1 = parts[i];
      if (parts[i].vertices().size() + parts[j].vertices().size() > 9) continue;
      LabelledGraph g2 = shift_ids(parts[j], parts[i].vertices().back() + 1);
      LabelledGraph both = disjoint_union(g1, g2);
      std::string head = ";h1=" + hash_hex(graph_hash(g1)) +
                         ";h2=" + hash_hex(graph_hash(parts[j]));
      work.push_back({"disjoint-join" + head, [&p, g1, g2, both] {
        return guarded([&]() -> SuiteRow {
          HomologyProfile lhs = p.hom(p.nc(both));
          Complex joined = join(p.nc(g1), p.nc(g2));
          HomologyProfile rhs = shifted(p.hom(joined), 1);
          if (lhs == rhs) return pass_row();
          json a;
          a["why"] = "NC of the disjoint union is not the suspended join";
          a["g1"] = graph_to_json(g1);
          a["g2"] = graph_to_json(g2);
          a["union_homology"] = homology_to_json(lhs);
          a["suspended_join_homology"] = homology_to_json(rhs);
          return fail_row(a);
        });
      }});
      work.push_back({"gluing" + head, [&p, g1, g2, both] {
        return guarded([&]() -> SuiteRow {
          Complex k1 = join(simplex(g1.vertices()), p.nc(g2));
          Complex k2 = join(p.nc(g1), simplex(g2.vertices()));
          Complex whole = p.nc(both);
          json a;
          a["g1"] = graph_to_json(g1);
          a["g2"] = graph_to_json(g2);
          if (canonical_key(complex_union(k1, k2), KeyMode::Exact) !=
              canonical_key(whole, KeyMode::Exact)) {
            a["why"] = "cone pieces do not cover NC of the disjoint union";
            a["union"] = complex_to_json(complex_union(k1, k2));
            a["whole"] = complex_to_json(whole);
            return fail_row(a);
          }
          GluingReport rep = check_gluing(k1, k2);
          if (!rep.applicable || !rep.ok) {
            a["why"] = rep.applicable
                           ? "gluing shift mismatch"
                           : "gluing lemma unexpectedly inapplicable";
            a["detail"] = rep.detail;
            return fail_row(a);
          }
          return pass_row();
        });
      }});
    }
  }

  return execute("nc-suspension", std::move(work), cfg);
}

// ---------------------------------------------------------------------------
// nc-disjoint: a disconnected graph whose parts each hold an edge has a
// non-cover complex that is neither shellable nor vertex decomposable.

SuiteResult suite_nc_disjoint(const SuiteConfig& cfg) {
  const std::size_t shell_cap = 12;
  VdSolver solver(solver_options(cfg));
  Pieces p = resolve(cfg, &solver);

  std::vector<LabelledGraph> parts;
  for (const LabelledGraph& g :
       connected_graph_classes(std::min(cfg.max_vertices.value_or(5), 6)))
    if (!g.edges().empty()) parts.push_back(g);

  std::function<bool(const LabelledGraph&)> fails = [&p](const LabelledGraph& g) {
    // both endpoints of an edge share a component, so testing one suffices
    std::size_t edgy = 0;
    for (const auto& comp : g.components()) {
      for (const Edge& e : g.edges()) {
        if (std::find(comp.begin(), comp.end(), e.u) != comp.end()) {
          ++edgy;
          break;
        }
      }
    }
    if (edgy < 2) return false;
    Complex k = p.nc(g);
    if (k.facet_count() > 12) return false;
    if (p.shell(k, 12).shellable) return true;
    return p.vd(k, ShedContext::non_cover(g)).vd;
  };

  std::vector<Instance> work;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      LabelledGraph g2 = shift_ids(parts[j], parts[i].vertices().back() + 1);
      LabelledGraph both = disjoint_union(parts[i], g2);
      std::string id = "h1=" + hash_hex(graph_hash(parts[i])) +
                       ";h2=" + hash_hex(graph_hash(parts[j])) +
                       ";m=" + std::to_string(both.edges().size());
      work.push_back({std::move(id), [&p, both, shell_cap, fails] {
        return guarded([&]() -> SuiteRow {
          Complex k = p.nc(both);
          if (k.facet_count() > shell_cap)
            return skip_row("ceiling: " + std::to_string(k.facet_count()) +
                            " facets exceed the shelling search cap of " +
                            std::to_string(shell_cap));
          ShellResult sh = p.shell(k, shell_cap);
          auto res = p.vd(k, ShedContext::non_cover(both));
          if (!sh.shellable && !res.vd) return pass_row();
          std::function<std::vector<LabelledGraph>(const LabelledGraph&)>
              steps = graph_shrinks;
          LabelledGraph min = minimize_failure<LabelledGraph>(both, steps, fails);
          json a;
          a["why"] = sh.shellable ? "unexpected shelling order found"
                                  : "unexpectedly vertex decomposable";
          a["graph"] = graph_to_json(both);
          a["complex"] = complex_to_json(k);
          if (sh.shellable) {
            json ord = json::array();
            for (const auto& f : sh.order) ord.push_back(f);
            a["shelling"] = ord;
          }
          if (res.cert) a["certificate"] = cert_to_json(*res.cert);
          a["minimized"] = {{"graph", graph_to_json(min)}};
          return fail_row(a);
        });
      }});
    }
  }
  SuiteResult res = execute("nc-disjoint", std::move(work), cfg);
  res.solver_nodes = solver.nodes_explored();
  return res;
}

// ---------------------------------------------------------------------------
// dt-forests: the directed-tree complex of a multidiforest is vertex
// decomposable; certificates replay. Solvers are per instance so explored
// node counts compare cleanly across candidate policies.

SuiteResult suite_dt_forests(const SuiteConfig& cfg) {
  int max_darts = cfg.max_edges.value_or(6);
  Pieces p = resolve(cfg, nullptr);
  VdSolver::Options opts = solver_options(cfg);
  auto node_total = std::make_shared<std::atomic<std::uint64_t>>(0);

  std::function<VdSolver::Result(const Complex&, const ShedContext&)> decide;
  if (cfg.hooks.decide_vd) {
    decide = cfg.hooks.decide_vd;
  } else {
    decide = [opts, node_total](const Complex& k, const ShedContext& ctx) {
      VdSolver local(opts);
      auto r = local.solve(k, ctx);
      node_total->fetch_add(local.nodes_explored());
      return r;
    };
  }

  std::function<bool(const MultiDigraph&)> fails =
      [&p, decide](const MultiDigraph& m) {
        if (!m.underlying_is_forest()) return false;
        Complex k = p.dt(m);
        auto r = decide(k, ShedContext::directed_tree(m));
        if (!r.vd) return true;
        return !r.cert || !p.replay(k, *r.cert);
      };

  std::vector<Instance> work;
  for (const MultiDigraph& m : enumerate_multidiforests(max_darts, 2)) {
    std::string id = "h=" + hash_hex(graph_hash(m)) +
                     ";n=" + std::to_string(m.vertices().size()) +
                     ";darts=" + std::to_string(m.darts().size());
    work.push_back({std::move(id), [&p, m, decide, fails] {
      return guarded([&]() -> SuiteRow {
        Complex k = p.dt(m);
        auto res = decide(k, ShedContext::directed_tree(m));
        std::string why;
        if (!res.vd)
          why = "expected vertex decomposable";
        else if (!res.cert || !p.replay(k, *res.cert))
          why = "certificate replay failed";
        if (why.empty()) return pass_row();
        std::function<std::vector<MultiDigraph>(const MultiDigraph&)> steps =
            digraph_shrinks;
        MultiDigraph min = minimize_failure<MultiDigraph>(m, steps, fails);
        json a;
        a["why"] = why;
        a["multidigraph"] = multidigraph_to_json(m);
        a["complex"] = complex_to_json(k);
        if (res.cert) a["certificate"] = cert_to_json(*res.cert);
        a["minimized"] = {{"multidigraph", multidigraph_to_json(min)},
                          {"complex", complex_to_json(p.dt(min))}};
        return fail_row(a);
      });
    }});
  }
  SuiteResult res = execute("dt-forests", std::move(work), cfg);
  res.solver_nodes = node_total->load();
  return res;
}

// ---------------------------------------------------------------------------
// dt-identities: taking the link of a dart matches contracting it into its
// source (ghosts are exactly the darts the contraction discards), and
// deletion matches removing the dart.

SuiteResult suite_dt_identities(const SuiteConfig& cfg) {
  int max_darts = cfg.max_edges.value_or(5);
  Pieces p = resolve(cfg, nullptr);
  std::vector<Instance> work;
  for (const MultiDigraph& m :
       multidigraph_classes(std::min(cfg.max_vertices.value_or(6), 6),
                            max_darts, 2)) {
    std::string head = "h=" + hash_hex(graph_hash(m)) +
                       ";darts=" + std::to_string(m.darts().size());
    for (const Dart& d : m.darts()) {
      work.push_back({head + ";dart=" + std::to_string(d.id), [&p, m, d] {
        return guarded([&]() -> SuiteRow {
          Complex k = p.dt(m);
          json a;
          a["multidigraph"] = multidigraph_to_json(m);
          a["dart"] = d.id;

          // a single dart is always a directed tree, so it must be a face
          if (!k.contains(Face{d.id})) {
            a["why"] = "single dart is missing from the built complex";
            a["complex"] = complex_to_json(k);
            return fail_row(a);
          }

          Complex del = deletion(k, Face{d.id});
          Complex del_want = p.dt(m.remove_dart(d.id));
          if (canonical_key(del, KeyMode::Exact) !=
              canonical_key(del_want, KeyMode::Exact)) {
            a["why"] = "deletion(dart) != rebuild on the dart-removed graph";
            a["got"] = complex_to_json(del);
            a["want"] = complex_to_json(del_want);
            return fail_row(a);
          }

          MultiDigraph contracted = contract_target(m, d.id);
          Complex lk = link(k, Face{d.id});
          Complex lk_want = p.dt(contracted);
          if (canonical_key(lk, KeyMode::Support) !=
              canonical_key(lk_want, KeyMode::Support)) {
            a["why"] = "link(dart) != rebuild on the contracted graph";
            a["got"] = complex_to_json(lk);
            a["want"] = complex_to_json(lk_want);
            return fail_row(a);
          }

          std::set<int> ghosts;
          for (int v : lk.ghost_vertices()) ghosts.insert(v);
          std::set<int> dropped;
          for (const Dart& x : m.darts()) dropped.insert(x.id);
          for (const Dart& x : contracted.darts()) dropped.erase(x.id);
          dropped.erase(d.id);
          if (ghosts != dropped) {
            a["why"] = "link ghosts differ from the contraction's discards";
            a["ghosts"] = json(std::vector<int>(ghosts.begin(), ghosts.end()));
            a["dropped"] =
                json(std::vector<int>(dropped.begin(), dropped.end()));
            return fail_row(a);
          }
          return pass_row();
        });
      }});
    }
  }
  return execute("dt-identities", std::move(work), cfg);
}

// ---------------------------------------------------------------------------
// ad-reflection: the non-cover complex is the Alexander dual of the
// independence complex, and reduced Betti numbers reflect across the dual.
// Torsion reflection is recorded but only Betti mismatches fail.

SuiteResult suite_ad_reflection(const SuiteConfig& cfg) {
  Pieces p = resolve(cfg, nullptr);
  std::function<bool(const LabelledGraph&)> fails = [&p](const LabelledGraph& g) {
    if (g.edges().empty()) return false;
    Complex ncK = p.nc(g);
    if (canonical_key(alexander_dual(independence_complex(g)),
                      KeyMode::Exact) !=
        canonical_key(ncK, KeyMode::Exact))
      return true;
    return !check_alexander_duality(ncK).betti_ok;
  };
  std::vector<Instance> work;
  for (const LabelledGraph& g :
       graph_classes(std::min(cfg.max_vertices.value_or(6), 6))) {
    if (g.edges().empty()) continue;
    std::string id = "h=" + hash_hex(graph_hash(g)) +
                     ";n=" + std::to_string(g.vertices().size()) +
                     ";m=" + std::to_string(g.edges().size());
    work.push_back({std::move(id), [&p, g, fails] {
      return guarded([&]() -> SuiteRow {
        Complex ind = independence_complex(g);
        Complex ncK = p.nc(g);
        Complex dual = alexander_dual(ind);
        json a;
        a["graph"] = graph_to_json(g);
        if (canonical_key(dual, KeyMode::Exact) !=
            canonical_key(ncK, KeyMode::Exact)) {
          std::function<std::vector<LabelledGraph>(const LabelledGraph&)>
              steps = graph_shrinks;
          LabelledGraph min = minimize_failure<LabelledGraph>(g, steps, fails);
          a["why"] = "Alexander dual of the independence complex is not the "
                     "non-cover complex";
          a["independence"] = complex_to_json(ind);
          a["dual"] = complex_to_json(dual);
          a["non_cover"] = complex_to_json(ncK);
          a["minimized"] = {{"graph", graph_to_json(min)}};
          return fail_row(a);
        }
        DualityReport rep = check_alexander_duality(ncK);
        if (!rep.betti_ok) {
          std::function<std::vector<LabelledGraph>(const LabelledGraph&)>
              steps = graph_shrinks;
          LabelledGraph min = minimize_failure<LabelledGraph>(g, steps, fails);
          a["why"] = "Betti numbers do not reflect across the Alexander dual";
          a["detail"] = rep.detail;
          a["minimized"] = {{"graph", graph_to_json(min)}};
          return fail_row(a);
        }
        if (!rep.torsion_ok)
          return pass_row(json{{"torsion_note", rep.detail}});
        return pass_row();
      });
    }});
  }
  return execute("ad-reflection", std::move(work), cfg);
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "bd-forests",   "bd-cyclic",           "bd-identities",
      "nc-characterization", "nc-spheres",   "nc-suspension",
      "nc-disjoint",  "dt-forests",          "dt-identities",
      "ad-reflection",
  };
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "bd-forests") return suite_bd_forests(cfg);
  if (name == "bd-cyclic") return suite_bd_cyclic(cfg);
  if (name == "bd-identities") return suite_bd_identities(cfg);
  if (name == "nc-characterization") return suite_nc_characterization(cfg);
  if (name == "nc-spheres") return suite_nc_spheres(cfg);
  if (name == "nc-suspension") return suite_nc_suspension(cfg);
  if (name == "nc-disjoint") return suite_nc_disjoint(cfg);
  if (name == "dt-forests") return suite_dt_forests(cfg);
  if (name == "dt-identities") return suite_dt_identities(cfg);
  if (name == "ad-reflection") return suite_ad_reflection(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, cfg));
  return out;
}

}  // namespace sfc
