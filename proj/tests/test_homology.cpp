#include <map>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sfc/builders.hpp"
#include "sfc/enumerate.hpp"
#include "sfc/homology.hpp"

using namespace sfc;

namespace {

HomologyProfile betti_only(std::map<int, long> b) {
  HomologyProfile h;
  h.betti = std::move(b);
  return h;
}

}  // namespace

TEST_CASE("degenerate complexes") {
  CHECK(reduced_homology(Complex::make_void({0, 1})).trivial());
  CHECK(reduced_homology(Complex::make_empty({0, 1})) == betti_only({{-1, 1}}));
  CHECK(reduced_homology(simplex({0})).trivial());
  CHECK(reduced_homology(simplex({0, 1, 2, 3})).trivial());
}

TEST_CASE("boundary spheres in every dimension") {
  CHECK(reduced_homology(boundary({0})) == betti_only({{-1, 1}}));
  CHECK(reduced_homology(boundary({0, 1})) == betti_only({{0, 1}}));
  CHECK(reduced_homology(boundary({0, 1, 2})) == betti_only({{1, 1}}));
  CHECK(reduced_homology(boundary({0, 1, 2, 3})) == betti_only({{2, 1}}));
  CHECK(reduced_homology(boundary({0, 1, 2, 3, 4, 5})) == betti_only({{4, 1}}));
}

TEST_CASE("face bookkeeping") {
  Complex k = Complex::from_facets({0, 1, 2}, {{0, 1}, {1, 2}});
  std::map<int, std::size_t> fc = face_counts(k);
  CHECK(fc[-1] == 1);
  CHECK(fc[0] == 3);
  CHECK(fc[1] == 2);
  CHECK(collect_faces(Complex::make_void({0})).empty());
  CHECK(collect_faces(Complex::make_empty({0})).size() == 1);
}

TEST_CASE("ghost vertices do not contribute") {
  // two facets over a larger ground set: the ghosts must be invisible
  Complex k = Complex::from_facets({0, 1, 2, 3, 4}, {{0}, {1}});
  CHECK(reduced_homology(k) == betti_only({{0, 1}}));
  CHECK(reduced_homology(k) == reduced_homology(restrict_to_support(k)));
}

TEST_CASE("circle from a join of two 0-spheres") {
  Complex c4 = join(boundary({0, 1}), boundary({2, 3}));
  CHECK(reduced_homology(c4) == betti_only({{1, 1}}));
}

TEST_CASE("projective plane has 2-torsion") {
  // 6-vertex triangulation: every edge lies in exactly two of these ten
  // triangles and every vertex link is a 5-cycle
  Complex rp2 = Complex::from_facets(
      {0, 1, 2, 3, 4, 5},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
       {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
  HomologyProfile h = reduced_homology(rp2);
  CHECK(h.betti.empty());
  REQUIRE(h.torsion.size() == 1);
  REQUIRE(h.torsion.count(1) == 1);
  CHECK(h.torsion.at(1) == std::vector<mpz_class>{2});
  CHECK(classify_point_or_sphere(h).kind == SphereKind::Neither);
}

TEST_CASE("euler characteristic consistency") {
  auto euler_from_profile = [](const HomologyProfile& h) {
    long x = 0;
    for (auto& [d, b] : h.betti) x += (d % 2 == 0 ? b : -b);
    return x;
  };
  for (const LabelledGraph& f : forest_classes_with_vertices(6)) {
    Complex nc = non_cover_complex(f);
    CHECK(euler_from_profile(reduced_homology(nc)) == oracle::reduced_euler(nc));
  }
  for (const LabelledGraph& g : graph_classes(4)) {
    Complex ind = independence_complex(g);
    CHECK(euler_from_profile(reduced_homology(ind)) == oracle::reduced_euler(ind));
  }
}

TEST_CASE("shift algebra") {
  HomologyProfile h;
  h.betti = {{0, 2}, {1, 1}};
  h.torsion = {{1, {2, 4}}};
  HomologyProfile s = shifted(h, 2);
  CHECK(s.betti == std::map<int, long>{{2, 2}, {3, 1}});
  CHECK(s.torsion.at(3) == std::vector<mpz_class>{2, 4});

  // suspension realizes the shift by one
  Complex s0 = boundary({0, 1});
  CHECK(check_suspension_shift(reduced_homology(s0),
                               reduced_homology(suspension(s0, 2, 3)), 1));
  // the empty complex suspends to a 0-sphere
  Complex e = Complex::make_empty({});
  CHECK(check_suspension_shift(reduced_homology(e),
                               reduced_homology(suspension(e, 0, 1)), 1));
  CHECK(!check_suspension_shift(reduced_homology(s0), reduced_homology(s0), 1));
}

TEST_CASE("point or sphere classification") {
  CHECK(classify_point_or_sphere(HomologyProfile{}).kind == SphereKind::Point);

  SphereClass s = classify_point_or_sphere(betti_only({{-1, 1}}));
  CHECK(s.kind == SphereKind::Sphere);
  CHECK(s.dim == -1);

  s = classify_point_or_sphere(betti_only({{3, 1}}));
  CHECK(s.kind == SphereKind::Sphere);
  CHECK(s.dim == 3);

  CHECK(classify_point_or_sphere(betti_only({{0, 2}})).kind == SphereKind::Neither);
  CHECK(classify_point_or_sphere(betti_only({{0, 1}, {1, 1}})).kind == SphereKind::Neither);

  // a star's non-cover complex is the boundary sphere on its leaves
  LabelledGraph star4 = caterpillar(1, {4});
  SphereClass st = classify_point_or_sphere(reduced_homology(non_cover_complex(star4)));
  CHECK(st.kind == SphereKind::Sphere);
  CHECK(st.dim == 2);
}

TEST_CASE("alexander duality reflection") {
  for (const LabelledGraph& g : graph_classes(4)) {
    if (g.edge_count() == 0) continue;
    DualityReport r = check_alexander_duality(non_cover_complex(g));
    CHECK(r.betti_ok);
    CHECK(r.torsion_ok);
  }
}

TEST_CASE("gluing two acyclic pieces") {
  // two cones filling a 4-cycle, glued along the two poles' common boundary:
  // the union is a 2-sphere, the intersection the equatorial circle
  Complex c4 = join(boundary({0, 1}), boundary({2, 3}));
  Complex north = cone(c4, 4);
  Complex south = cone(c4, 5);
  GluingReport r = check_gluing(north, south);
  CHECK(r.applicable);
  CHECK(r.ok);

  // non-acyclic piece: not applicable
  GluingReport bad = check_gluing(c4, cone(c4, 4));
  CHECK(!bad.applicable);

  // disjoint pieces intersect in the empty complex, whose suspension is S0;
  // the union (two points) agrees
  GluingReport far = check_gluing(simplex({0}), simplex({1}));
  CHECK(far.applicable);
  CHECK(far.ok);

  // a void piece gives a void intersection: not applicable
  GluingReport hollow = check_gluing(Complex::make_void({0}), simplex({1}));
  CHECK(!hollow.applicable);

  // two simplices sharing a point glue to a point-like union
  GluingReport wedge = check_gluing(simplex({0, 1}), simplex({1, 2}));
  CHECK(wedge.applicable);
  CHECK(wedge.ok);
}
