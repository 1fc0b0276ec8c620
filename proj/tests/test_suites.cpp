#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "sfc/builders.hpp"
#include "sfc/homology.hpp"
#include "sfc/suites.hpp"

using namespace sfc;

namespace {

SuiteConfig sized(std::optional<int> edges, std::optional<int> verts) {
  SuiteConfig cfg;
  cfg.max_edges = edges;
  cfg.max_vertices = verts;
  return cfg;
}

std::string signature(const SuiteResult& r) {
  std::string s;
  for (const SuiteRow& row : r.rows) s += row.instance + "=" + to_string(row.verdict) + ";";
  return s;
}

Complex drop_last_facet(const Complex& k) {
  if (k.facet_count() < 2) return k;
  std::vector<Face> fs = k.facets();
  fs.pop_back();
  return Complex::from_facets(k.ground(), fs);
}

std::shared_ptr<VdCert> fake_simplex_cert() {
  auto c = std::make_shared<VdCert>();
  c->tag = VdCert::Tag::Simplex;
  return c;
}

}  // namespace

TEST_CASE("suite registry") {
  const std::vector<std::string>& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(names.front() == "bd-forests");
  CHECK(names.back() == "ad-reflection");
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("runs are deterministic") {
  SuiteConfig cfg = sized(std::nullopt, 5);
  SuiteResult a = run_suite("nc-characterization", cfg);
  SuiteResult b = run_suite("nc-characterization", cfg);
  CHECK(a.rows.size() == b.rows.size());
  CHECK(signature(a) == signature(b));

  SuiteConfig dt = sized(3, std::nullopt);
  SuiteResult c = run_suite("dt-forests", dt);
  SuiteResult d = run_suite("dt-forests", dt);
  CHECK(signature(c) == signature(d));
  CHECK(c.solver_nodes == d.solver_nodes);
  CHECK(c.solver_nodes > 0);
}

TEST_CASE("all suites pass on small corpora") {
  struct Shape {
    const char* name;
    SuiteConfig cfg;
  };
  std::vector<Shape> shapes = {
      {"bd-forests", sized(3, std::nullopt)},
      {"bd-cyclic", sized(std::nullopt, 4)},
      {"bd-identities", sized(3, std::nullopt)},
      {"nc-characterization", sized(std::nullopt, 5)},
      {"nc-spheres", sized(std::nullopt, 5)},
      {"nc-suspension", sized(std::nullopt, 4)},
      {"nc-disjoint", sized(std::nullopt, 4)},
      {"dt-forests", sized(3, std::nullopt)},
      {"dt-identities", sized(3, 4)},
      {"ad-reflection", sized(std::nullopt, 4)},
  };
  for (const Shape& s : shapes) {
    SuiteResult r = run_suite(s.name, s.cfg);
    INFO(s.name);
    CHECK(r.suite == s.name);
    CHECK(!r.rows.empty());
    CHECK(r.ok());
    for (const SuiteRow& row : r.rows) CHECK(!row.instance.empty());
  }
}

TEST_CASE("tiny sweep across every suite") {
  SuiteConfig cfg = sized(2, 3);
  std::vector<SuiteResult> all = run_all_suites(cfg);
  REQUIRE(all.size() == suite_names().size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    INFO(all[i].suite);
    CHECK(all[i].suite == suite_names()[i]);
    CHECK(all[i].ok());
  }
}

TEST_CASE("hypothesis misses are skipped, not asserted") {
  SuiteResult r = run_suite("bd-cyclic", sized(std::nullopt, 4));
  bool saw_triangle = false, saw_whiskered = false, saw_c4 = false;
  for (const SuiteRow& row : r.rows) {
    if (row.instance.rfind("pinned-triangle;", 0) == 0) {
      saw_triangle = true;
      CHECK(row.verdict == Verdict::Skipped);
      CHECK(row.artifact.at("reason").get<std::string>().find("hypothesis") !=
            std::string::npos);
    }
    if (row.instance.rfind("pinned-whiskered-triangle;", 0) == 0) {
      saw_whiskered = true;
      CHECK(row.verdict == Verdict::Pass);
    }
    if (row.instance.rfind("pinned-c4-two-leaves;", 0) == 0) {
      saw_c4 = true;
      CHECK(row.verdict == Verdict::Pass);
    }
  }
  CHECK(saw_triangle);
  CHECK(saw_whiskered);
  CHECK(saw_c4);

  SuiteResult ns = run_suite("nc-suspension", sized(std::nullopt, 5));
  CHECK(ns.ok());
  std::size_t guarded = 0;
  for (const SuiteRow& row : ns.rows) {
    if (row.verdict != Verdict::Skipped) continue;
    ++guarded;
    CHECK(row.artifact.at("reason").get<std::string>().find("hypothesis") !=
          std::string::npos);
  }
  CHECK(guarded >= 1);
}

TEST_CASE("budget exhaustion skips instead of failing") {
  SuiteConfig cfg = sized(2, std::nullopt);
  cfg.node_budget = 1;
  SuiteResult r = run_suite("bd-forests", cfg);
  CHECK(r.ok());
  CHECK(r.count(Verdict::Skipped) >= 1);
  CHECK(r.count(Verdict::Pass) >= 1);  // base cases fit in one node
  for (const SuiteRow& row : r.rows) {
    if (row.verdict != Verdict::Skipped) continue;
    CHECK(row.artifact.at("reason").get<std::string>().rfind("budget", 0) == 0);
  }
}

TEST_CASE("suites catch a non-cover builder that loses a facet") {
  SuiteConfig clean = sized(std::nullopt, 4);
  SuiteConfig broken = clean;
  broken.hooks.non_cover = [](const LabelledGraph& g) {
    return drop_last_facet(non_cover_complex(g));
  };
  SuiteResult base = run_suite("ad-reflection", clean);
  SuiteResult r = run_suite("ad-reflection", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
  for (const SuiteRow& row : r.rows)
    if (row.verdict == Verdict::Fail) CHECK(row.artifact.is_object());
}

TEST_CASE("suites catch a bounded-degree builder that loses a facet") {
  SuiteConfig clean = sized(2, std::nullopt);
  SuiteConfig broken = clean;
  broken.hooks.bounded_degree = [](const LabelledGraph& g, const DegreeBounds& b) {
    return drop_last_facet(bounded_degree_complex(g, b));
  };
  SuiteResult base = run_suite("bd-identities", clean);
  SuiteResult r = run_suite("bd-identities", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
}

TEST_CASE("suites catch a directed-tree builder that loses a facet") {
  SuiteConfig clean = sized(2, std::nullopt);
  SuiteConfig broken = clean;
  broken.hooks.directed_tree = [](const MultiDigraph& m) {
    return drop_last_facet(directed_tree_complex(m));
  };
  SuiteResult base = run_suite("dt-identities", clean);
  SuiteResult r = run_suite("dt-identities", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
}

TEST_CASE("suites catch a decider that always says yes") {
  SuiteConfig clean = sized(std::nullopt, 5);
  SuiteConfig broken = clean;
  broken.hooks.decide_vd = [](const Complex&, const ShedContext&) {
    VdSolver::Result r;
    r.vd = true;
    r.cert = fake_simplex_cert();
    return r;
  };
  SuiteResult base = run_suite("nc-characterization", clean);
  SuiteResult r = run_suite("nc-characterization", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
}

TEST_CASE("suites catch a decider with inverted answers") {
  SuiteConfig clean = sized(2, std::nullopt);
  SuiteConfig broken = clean;
  broken.hooks.decide_vd = [](const Complex& k, const ShedContext& ctx) {
    VdSolver s;
    VdSolver::Result r = s.solve(k, ctx);
    r.vd = !r.vd;
    if (r.vd) {
      if (!r.cert) r.cert = fake_simplex_cert();
    } else {
      r.cert.reset();
    }
    return r;
  };
  SuiteResult base = run_suite("bd-forests", clean);
  SuiteResult r = run_suite("bd-forests", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
}

TEST_CASE("suites catch homology that invents torsion") {
  SuiteConfig clean = sized(std::nullopt, 4);
  SuiteConfig broken = clean;
  broken.hooks.homology = [](const Complex& k) {
    HomologyProfile h = reduced_homology(k);
    h.torsion[0].push_back(2);
    return h;
  };
  SuiteResult base = run_suite("nc-spheres", clean);
  SuiteResult r = run_suite("nc-spheres", broken);
  CHECK(base.ok());
  CHECK(r.count(Verdict::Fail) >= 1);
  CHECK(r.count(Verdict::Skipped) == base.count(Verdict::Skipped));
}
