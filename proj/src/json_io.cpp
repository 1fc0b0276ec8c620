#include "sfc/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfc {

using nlohmann::json;

namespace {

bool default_edge_ids(const LabelledGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  if (!std::is_sorted(pairs.begin(), pairs.end())) return false;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (g.edges()[i].id != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

json graph_to_json(const LabelledGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  if (default_edge_ids(g)) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
  } else {
    json edges = json::array();
    for (const Edge& e : g.edges())
      edges.push_back(json{{"id", e.id}, {"u", e.u}, {"v", e.v}});
    j["edges"] = std::move(edges);
  }
  if (g.has_labels()) {
    json labels = json::object();
    for (auto& [v, k] : g.labels()) labels[std::to_string(v)] = k;
    j["labels"] = std::move(labels);
  }
  return j;
}

LabelledGraph graph_from_json(const json& j) {
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  std::optional<Labelling> labels;
  if (j.contains("labels")) {
    Labelling l;
    for (auto& [k, v] : j.at("labels").items()) l[std::stoi(k)] = v.get<int>();
    labels = std::move(l);
  }
  const json& edges = j.at("edges");
  if (!edges.empty() && edges.front().is_object()) {
    std::vector<Edge> es;
    for (const json& e : edges)
      es.push_back(Edge{e.at("id").get<int>(), e.at("u").get<int>(), e.at("v").get<int>()});
    return LabelledGraph::from_edges(std::move(vertices), std::move(es), std::move(labels));
  }
  std::vector<std::pair<int, int>> pairs;
  for (const json& e : edges) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return LabelledGraph(std::move(vertices), pairs, std::move(labels));
}

json multidigraph_to_json(const MultiDigraph& g) {
  json darts = json::array();
  for (const Dart& d : g.darts())
    darts.push_back(json{{"id", d.id}, {"s", d.s}, {"t", d.t}});
  return json{{"vertices", g.vertices()}, {"darts", std::move(darts)}};
}

MultiDigraph multidigraph_from_json(const json& j) {
  std::vector<Dart> darts;
  for (const json& d : j.at("darts"))
    darts.push_back(Dart{d.at("id").get<int>(), d.at("s").get<int>(), d.at("t").get<int>()});
  return MultiDigraph::from_darts(j.at("vertices").get<std::vector<int>>(), std::move(darts));
}

json complex_to_json(const Complex& k) {
  json facets = json::array();
  for (const Face& f : k.facets()) facets.push_back(f);
  return json{{"ground", k.ground()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const json& j) {
  std::vector<Face> facets;
  for (const json& f : j.at("facets")) facets.push_back(f.get<Face>());
  return Complex::from_facets(j.at("ground").get<std::vector<int>>(), facets);
}

json homology_to_json(const HomologyProfile& h) {
  json betti = json::object(), torsion = json::object();
  for (auto& [d, b] : h.betti) betti[std::to_string(d)] = b;
  for (auto& [d, t] : h.torsion) {
    json arr = json::array();
    for (const mpz_class& z : t) {
      if (z.fits_slong_p())
        arr.push_back(z.get_si());
      else
        arr.push_back(z.get_str());
    }
    torsion[std::to_string(d)] = std::move(arr);
  }
  return json{{"betti", std::move(betti)}, {"torsion", std::move(torsion)}};
}

HomologyProfile homology_from_json(const json& j) {
  HomologyProfile h;
  for (auto& [k, v] : j.at("betti").items()) h.betti[std::stoi(k)] = v.get<long>();
  for (auto& [k, v] : j.at("torsion").items()) {
    std::vector<mpz_class> t;
    for (const json& z : v)
      t.push_back(z.is_string() ? mpz_class(z.get<std::string>()) : mpz_class(z.get<long>()));
    h.torsion[std::stoi(k)] = std::move(t);
  }
  return h;
}

json cert_to_json(const VdCert& c) {
  switch (c.tag) {
    case VdCert::Tag::Void:
      return json{{"tag", "void"}};
    case VdCert::Tag::Empty:
      return json{{"tag", "empty"}};
    case VdCert::Tag::Simplex:
      return json{{"tag", "simplex"}};
    case VdCert::Tag::Split:
      return json{{"tag", "split"},
                  {"vertex", c.vertex},
                  {"link", c.link ? cert_to_json(*c.link) : json()},
                  {"del", c.del ? cert_to_json(*c.del) : json()}};
  }
  throw std::logic_error("unreachable");
}

std::shared_ptr<const VdCert> cert_from_json(const json& j) {
  auto c = std::make_shared<VdCert>();
  std::string tag = j.at("tag").get<std::string>();
  if (tag == "void") {
    c->tag = VdCert::Tag::Void;
  } else if (tag == "empty") {
    c->tag = VdCert::Tag::Empty;
  } else if (tag == "simplex") {
    c->tag = VdCert::Tag::Simplex;
  } else if (tag == "split") {
    c->tag = VdCert::Tag::Split;
    c->vertex = j.at("vertex").get<int>();
    c->link = cert_from_json(j.at("link"));
    c->del = cert_from_json(j.at("del"));
  } else {
    throw std::invalid_argument("unknown certificate tag: " + tag);
  }
  return c;
}

}  // namespace sfc
