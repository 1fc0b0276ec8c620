#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sfc/builders.hpp"
#include "sfc/decomp.hpp"
#include "sfc/graph.hpp"
#include "sfc/json_io.hpp"

using namespace sfc;
using nlohmann::json;

TEST_CASE("graph round trips") {
  LabelledGraph g({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(graph_from_json(graph_to_json(g)) == g);

  LabelledGraph lab = g.with_labels({{0, 0}, {1, 2}, {2, 1}, {3, 0}});
  json j = graph_to_json(lab);
  CHECK(j.contains("labels"));
  CHECK(graph_from_json(j) == lab);

  // after surgery the edge ids are not the default lexicographic ones and
  // must be preserved explicitly
  LabelledGraph cut = g.remove_edge(1);
  json jc = graph_to_json(cut);
  LabelledGraph back = graph_from_json(jc);
  CHECK(back == cut);
  CHECK(back.edge_by_id(1) == nullptr);
  CHECK(back.edge_by_id(2) != nullptr);
}

TEST_CASE("graph json accepts plain pair lists") {
  json j = {{"vertices", {0, 1, 2}}, {"edges", {{0, 1}, {1, 2}}}};
  LabelledGraph g = graph_from_json(j);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0].id == 0);
}

TEST_CASE("multidigraph round trips") {
  MultiDigraph m({0, 1, 2}, {{0, 1}, {0, 1}, {2, 1}});
  CHECK(multidigraph_from_json(multidigraph_to_json(m)) == m);

  MultiDigraph cut = m.remove_dart(0);
  MultiDigraph back = multidigraph_from_json(multidigraph_to_json(cut));
  CHECK(back == cut);
  CHECK(back.dart_by_id(0) == nullptr);
  CHECK(back.multiplicity(0, 1) == 1);
}

TEST_CASE("complex round trips") {
  Complex k = Complex::from_facets({0, 1, 2, 5}, {{0, 1}, {1, 2}});
  CHECK(complex_from_json(complex_to_json(k)) == k);  // ghost 5 preserved

  CHECK(complex_from_json(complex_to_json(Complex::make_void({3}))) ==
        Complex::make_void({3}));
  CHECK(complex_from_json(complex_to_json(Complex::make_empty({3}))) ==
        Complex::make_empty({3}));

  json j = {{"ground", {0, 1}}, {"facets", json::array()}};
  CHECK(complex_from_json(j).is_void());
  json je = {{"ground", {0, 1}}, {"facets", {json::array()}}};
  CHECK(complex_from_json(je).is_empty_complex());
}

TEST_CASE("homology round trips") {
  HomologyProfile h;
  h.betti = {{-1, 1}, {2, 3}};
  h.torsion = {{1, {2, 8}}};
  CHECK(homology_from_json(homology_to_json(h)) == h);

  // torsion orders beyond 64 bits travel as decimal strings
  HomologyProfile big;
  big.torsion[3] = {mpz_class("1180591620717411303424")};  // 2^70
  json j = homology_to_json(big);
  CHECK(j["torsion"]["3"][0].is_string());
  CHECK(homology_from_json(j) == big);

  CHECK(homology_from_json(homology_to_json(HomologyProfile{})).trivial());
}

TEST_CASE("certificate round trips and still replays") {
  Complex k = non_cover_complex(caterpillar(2, {2, 1}));
  VdSolver s;
  VdSolver::Result r = s.solve(k);
  REQUIRE(r.vd);
  json j = cert_to_json(*r.cert);
  std::shared_ptr<const VdCert> back = cert_from_json(j);
  CHECK(replay_certificate(k, *back));
  CHECK(cert_to_json(*back) == j);

  json base = cert_to_json(VdCert{});
  CHECK(base["tag"] == "simplex");
  CHECK(cert_from_json(base)->tag == VdCert::Tag::Simplex);
}
