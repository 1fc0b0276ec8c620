#include <optional>

#include "doctest.h"
#include "oracles.hpp"
#include "sfc/builders.hpp"
#include "sfc/decomp.hpp"
#include "sfc/enumerate.hpp"
#include "sfc/errors.hpp"

using namespace sfc;

namespace {

Complex path_complex() {
  return Complex::from_facets({0, 1, 2}, {{0, 1}, {1, 2}});
}

Complex two_disjoint_edges() {
  return Complex::from_facets({0, 1, 2, 3}, {{0, 1}, {2, 3}});
}

std::shared_ptr<VdCert> leaf_cert(VdCert::Tag tag) {
  auto c = std::make_shared<VdCert>();
  c->tag = tag;
  return c;
}

}  // namespace

TEST_CASE("shedding vertices") {
  Complex path = path_complex();
  CHECK(is_shedding_vertex(path, 0));
  CHECK(is_shedding_vertex(path, 2));
  CHECK(!is_shedding_vertex(path, 1));

  Complex m = two_disjoint_edges();
  for (int v : {0, 1, 2, 3}) CHECK(!is_shedding_vertex(m, v));

  // ghosts and unknown ids are never shedding
  Complex g = Complex::from_facets({0, 1, 2}, {{0, 1}});
  CHECK(!is_shedding_vertex(g, 2));
  CHECK(!is_shedding_vertex(g, 99));
}

TEST_CASE("base cases and their certificates") {
  VdSolver s;

  VdSolver::Result r = s.solve(Complex::make_void({0, 1}));
  CHECK(r.vd);
  REQUIRE(r.cert);
  CHECK(r.cert->tag == VdCert::Tag::Void);
  CHECK(replay_certificate(Complex::make_void({0, 1}), *r.cert));

  r = s.solve(Complex::make_empty({3}));
  CHECK(r.vd);
  CHECK(r.cert->tag == VdCert::Tag::Empty);
  CHECK(replay_certificate(Complex::make_empty({3}), *r.cert));

  r = s.solve(simplex({0, 1, 2}));
  CHECK(r.vd);
  CHECK(r.cert->tag == VdCert::Tag::Simplex);
  CHECK(replay_certificate(simplex({0, 1, 2}), *r.cert));

  // a sphere with a ghost vertex needs one split
  Complex s0g = Complex::from_facets({0, 1, 2}, {{0}, {1}});
  r = s.solve(s0g);
  CHECK(r.vd);
  CHECK(r.cert->tag == VdCert::Tag::Split);
  CHECK(replay_certificate(s0g, *r.cert));
}

TEST_CASE("solver agrees with the definition") {
  for (const std::string& pol : {std::string("naive"), std::string("paper")}) {
    VdSolver::Options opt;
    opt.policy = &policy_by_name(pol);
    VdSolver s(opt);

    for (const LabelledGraph& g : graph_classes(4)) {
      Complex k = independence_complex(g);
      VdSolver::Result r = s.solve(k);
      CHECK(r.vd == oracle::brute_vertex_decomposable(k));
      if (r.vd) CHECK(replay_certificate(k, *r.cert));
    }
    for (const LabelledGraph& f : forest_classes_with_vertices(5)) {
      Complex k = non_cover_complex(f);
      VdSolver::Result r = s.solve(k, ShedContext::non_cover(f));
      CHECK(r.vd == oracle::brute_vertex_decomposable(k));
      if (r.vd) CHECK(replay_certificate(k, *r.cert));
    }
    for (const MultiDigraph& m : enumerate_multidiforests(3, 2)) {
      Complex k = directed_tree_complex(m);
      VdSolver::Result r = s.solve(k, ShedContext::directed_tree(m));
      CHECK(r.vd == oracle::brute_vertex_decomposable(k));
      if (r.vd) CHECK(replay_certificate(k, *r.cert));
    }
    for (const LabelledGraph& f : forest_classes_with_edges(3)) {
      DegreeBounds b = uniform_bounds(f, 1);
      Complex k = bounded_degree_complex(f, b);
      VdSolver::Result r = s.solve(k, ShedContext::bounded_degree(f, b));
      CHECK(r.vd == oracle::brute_vertex_decomposable(k));
      if (r.vd) CHECK(replay_certificate(k, *r.cert));
    }
  }
}

TEST_CASE("a decomposable non-cover complex and its shedding vertex") {
  LabelledGraph g = caterpillar(2, {2, 1});
  Complex nc = non_cover_complex(g);
  VdSolver s;
  VdSolver::Result r = s.solve(nc);
  CHECK(r.vd);
  CHECK(replay_certificate(nc, *r.cert));

  std::optional<int> v = find_decomposing_vertex(nc);
  REQUIRE(v.has_value());
  CHECK(is_shedding_vertex(nc, *v));
  CHECK(s.solve(link(nc, {*v})).vd);
  CHECK(s.solve(deletion(nc, {*v})).vd);

  // the high-degree spine vertex works explicitly
  CHECK(is_shedding_vertex(nc, 0));
  CHECK(s.solve(link(nc, {0})).vd);
  CHECK(s.solve(deletion(nc, {0})).vd);

  CHECK(!find_decomposing_vertex(simplex({0, 1})).has_value());
  CHECK(!find_decomposing_vertex(two_disjoint_edges()).has_value());
}

TEST_CASE("two disjoint edges defeat both properties") {
  Complex m = two_disjoint_edges();
  VdSolver s;
  CHECK(!s.solve(m).vd);
  CHECK(!is_shellable(m).shellable);
}

TEST_CASE("certificates only replay against their own complex") {
  VdSolver s;
  Complex path = path_complex();
  VdSolver::Result r = s.solve(path);
  REQUIRE(r.vd);
  CHECK(replay_certificate(path, *r.cert));
  CHECK(!replay_certificate(two_disjoint_edges(), *r.cert));
  CHECK(!replay_certificate(simplex({0, 1, 2}), *r.cert));

  // fabricated certificates are rejected
  CHECK(!replay_certificate(path, *leaf_cert(VdCert::Tag::Simplex)));
  CHECK(!replay_certificate(path, *leaf_cert(VdCert::Tag::Void)));

  VdCert bogus;
  bogus.tag = VdCert::Tag::Split;
  bogus.vertex = 1;  // not a shedding vertex of the path
  bogus.link = leaf_cert(VdCert::Tag::Simplex);
  bogus.del = leaf_cert(VdCert::Tag::Simplex);
  CHECK(!replay_certificate(path, bogus));

  VdCert truncated;
  truncated.tag = VdCert::Tag::Split;
  truncated.vertex = 0;  // genuinely shedding, but the branches are wrong
  truncated.link = leaf_cert(VdCert::Tag::Void);
  truncated.del = leaf_cert(VdCert::Tag::Void);
  CHECK(!replay_certificate(path, truncated));
}

TEST_CASE("isomorphism memo reuses work across relabellings") {
  VdSolver s;
  Complex a = path_complex();
  s.solve(a);
  std::uint64_t after_first = s.nodes_explored();
  CHECK(after_first > 0);

  Complex b = Complex::from_facets({10, 11, 12}, {{10, 11}, {11, 12}});
  VdSolver::Result r = s.solve(b);
  CHECK(r.vd);
  CHECK(s.nodes_explored() == after_first);  // answered from the memo
  CHECK(replay_certificate(b, *r.cert));     // cert mapped back to b's labels

  s.reset_stats();
  CHECK(s.nodes_explored() == 0);
}

TEST_CASE("support keys when iso keys are disabled") {
  VdSolver::Options opt;
  opt.iso_max_support = 0;
  VdSolver s(opt);
  Complex a = path_complex();
  VdSolver::Result r = s.solve(a);
  CHECK(r.vd);
  CHECK(replay_certificate(a, *r.cert));
}

TEST_CASE("node budget") {
  VdSolver::Options opt;
  opt.node_budget = 1;
  VdSolver s(opt);
  CHECK_THROWS_AS(s.solve(non_cover_complex(caterpillar(4, {0, 0, 0, 0}))),
                  BudgetExceeded);
}

TEST_CASE("context mismatch never changes answers") {
  LabelledGraph star = caterpillar(1, {3});
  Complex k = independence_complex(caterpillar(4, {0, 0, 0, 0}));
  VdSolver::Options opt;
  opt.policy = &policy_by_name("paper");
  VdSolver guided(opt);
  VdSolver plain;
  CHECK(guided.solve(k, ShedContext::non_cover(star)).vd == plain.solve(k).vd);
}

TEST_CASE("shelling search and replay") {
  Complex path3 = Complex::from_facets({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  ShellResult r = is_shellable(path3);
  CHECK(r.shellable);
  REQUIRE(r.order.size() == 3);
  CHECK(replay_shelling(path3, r.order));
  CHECK(!replay_shelling(path3, {{0, 1}, {2, 3}, {1, 2}}));  // disconnected start
  CHECK(!replay_shelling(path3, {{0, 1}, {1, 2}}));          // missing a facet
  CHECK(!replay_shelling(path3, {{0, 1}, {0, 1}, {1, 2}}));  // duplicated facet

  ShellResult tetra = is_shellable(boundary({0, 1, 2, 3}));
  CHECK(tetra.shellable);
  CHECK(replay_shelling(boundary({0, 1, 2, 3}), tetra.order));

  // wedge of two triangles along a vertex: the second facet meets the first
  // in a point, not in an edge
  Complex wedge = Complex::from_facets({0, 1, 2, 3, 4}, {{0, 1, 2}, {2, 3, 4}});
  CHECK(!is_shellable(wedge).shellable);

  // non-pure but shellable: a triangle with a pendant edge
  Complex pend = Complex::from_facets({0, 1, 2, 3}, {{0, 1, 2}, {2, 3}});
  ShellResult pr = is_shellable(pend);
  CHECK(pr.shellable);
  CHECK(replay_shelling(pend, pr.order));

  CHECK_THROWS_AS(is_shellable(boundary({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})),
                  CeilingExceeded);
}

TEST_CASE("decomposable implies shellable on small instances") {
  VdSolver s;
  for (const LabelledGraph& g : graph_classes(4)) {
    Complex k = independence_complex(g);
    if (k.facet_count() > 12) continue;
    if (s.solve(k).vd) {
      ShellResult r = is_shellable(k);
      CHECK(r.shellable);
      CHECK(replay_shelling(k, r.order));
    }
  }
}
