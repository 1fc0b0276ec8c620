// sfc: build complexes from graphs, decide decomposability, compute homology,
// and sweep the verification suites.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sfc/builders.hpp"
#include "sfc/complex.hpp"
#include "sfc/decomp.hpp"
#include "sfc/errors.hpp"
#include "sfc/graph.hpp"
#include "sfc/homology.hpp"
#include "sfc/json_io.hpp"
#include "sfc/suites.hpp"
#include "sfc/threading.hpp"

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  if (path.empty() || path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

sfc::DegreeBounds parse_bounds(const std::vector<std::string>& kv) {
  sfc::DegreeBounds b;
  for (const std::string& s : kv) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("--lambda wants vertex:bound, got " + s);
    b[std::stoi(s.substr(0, colon))] = std::stoi(s.substr(colon + 1));
  }
  return b;
}

int cmd_build(const std::string& kind, const std::string& in_path,
              const std::vector<std::string>& lambda_kv, int uniform, int k) {
  json j = read_json(in_path);
  sfc::Complex out;
  if (kind == "dt") {
    out = sfc::directed_tree_complex(sfc::multidigraph_from_json(j));
  } else {
    sfc::LabelledGraph g = sfc::graph_from_json(j);
    if (kind == "bd") {
      sfc::DegreeBounds b;
      if (!lambda_kv.empty())
        b = parse_bounds(lambda_kv);
      else if (uniform >= 0)
        b = sfc::uniform_bounds(g, uniform);
      else if (g.has_labels())
        b = g.labels();
      else
        throw std::runtime_error(
            "bd needs bounds: --lambda v:k ..., --uniform k, or vertex labels "
            "in the input");
      out = sfc::bounded_degree_complex(g, b);
    } else if (kind == "m1") {
      out = sfc::k_matching_complex(g, 1);
    } else if (kind == "mk") {
      out = sfc::k_matching_complex(g, k);
    } else if (kind == "ind") {
      out = sfc::independence_complex(g);
    } else if (kind == "nc") {
      out = sfc::non_cover_complex(g);
    } else {
      throw std::runtime_error("unknown builder: " + kind);
    }
  }
  std::cout << sfc::complex_to_json(out).dump(2) << "\n";
  return 0;
}

int cmd_decide(const std::string& what, const std::string& in_path,
               const std::string& policy, std::uint64_t budget,
               const std::string& cert_path) {
  sfc::Complex k = sfc::complex_from_json(read_json(in_path));
  json out;
  json cert;
  if (what == "vd") {
    sfc::VdSolver::Options opt;
    opt.policy = &sfc::policy_by_name(policy);
    opt.node_budget = budget;
    sfc::VdSolver solver(opt);
    auto res = solver.solve(k);
    out["vd"] = res.vd;
    out["nodes"] = solver.nodes_explored();
    if (res.cert) {
      if (!sfc::replay_certificate(k, *res.cert))
        throw std::runtime_error("internal: certificate failed its replay");
      cert = sfc::cert_to_json(*res.cert);
    }
  } else if (what == "shellable") {
    auto res = sfc::is_shellable(k);
    out["shellable"] = res.shellable;
    out["nodes"] = res.nodes;
    if (res.shellable) {
      if (!sfc::replay_shelling(k, res.order))
        throw std::runtime_error("internal: shelling order failed its replay");
      json ord = json::array();
      for (const auto& f : res.order) ord.push_back(f);
      cert = json{{"order", ord}};
    }
  } else {
    throw std::runtime_error("unknown decision: " + what);
  }
  if (!cert_path.empty()) {
    if (cert.is_null())
      throw std::runtime_error("no certificate to emit: the answer is negative");
    std::ofstream f(cert_path);
    if (!f) throw std::runtime_error("cannot write " + cert_path);
    f << cert.dump(2) << "\n";
    out["certificate"] = cert_path;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_homology(const std::string& in_path) {
  sfc::Complex k = sfc::complex_from_json(read_json(in_path));
  std::cout << sfc::homology_to_json(sfc::reduced_homology(k)).dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& which, const sfc::SuiteConfig& cfg,
               const std::string& out_path) {
  std::vector<sfc::SuiteResult> results;
  if (which == "all") {
    results = sfc::run_all_suites(cfg);
  } else {
    results.push_back(sfc::run_suite(which, cfg));
  }

  std::ofstream out;
  std::filesystem::path artifact_dir;
  if (!out_path.empty()) {
    out.open(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    artifact_dir = std::filesystem::path(out_path).concat(".artifacts");
  }

  std::size_t total_fail = 0, total_skip = 0, total_pass = 0;
  for (const auto& res : results) {
    std::size_t p = res.count(sfc::Verdict::Pass);
    std::size_t f = res.count(sfc::Verdict::Fail);
    std::size_t s = res.count(sfc::Verdict::Skipped);
    total_pass += p;
    total_fail += f;
    total_skip += s;
    std::cout << res.suite << ": pass=" << p << " fail=" << f << " skip=" << s
              << " rows=" << res.rows.size() << " nodes=" << res.solver_nodes
              << " (" << static_cast<long>(res.ms) << " ms)\n";

    std::size_t artifact_idx = 0;
    std::size_t shown = 0;
    for (const auto& row : res.rows) {
      if (out.is_open()) {
        json line;
        line["suite"] = res.suite;
        line["instance"] = row.instance;
        line["verdict"] = sfc::to_string(row.verdict);
        line["ms"] = row.ms;
        if (row.verdict == sfc::Verdict::Fail && !row.artifact.is_null()) {
          std::filesystem::create_directories(artifact_dir);
          std::filesystem::path ap =
              artifact_dir / (res.suite + "-" + std::to_string(artifact_idx++) +
                              ".json");
          std::ofstream af(ap);
          af << row.artifact.dump(2) << "\n";
          line["artifact"] = ap.string();
        } else if (!row.artifact.is_null()) {
          line["artifact"] = row.artifact;
        }
        out << line.dump() << "\n";
      }
      if (row.verdict == sfc::Verdict::Fail && shown < 10) {
        std::cout << "  FAIL " << row.instance << "\n";
        if (!out.is_open())
          std::cout << "    " << row.artifact.dump() << "\n";
        ++shown;
      }
    }
    if (f > 10) std::cout << "  ... " << (f - 10) << " more failures\n";
  }
  std::cout << "total: pass=" << total_pass << " fail=" << total_fail
            << " skip=" << total_skip << "\n";
  return total_fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simplicial complexes from graphs: builders, decomposability, "
      "homology, verification sweeps"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "build a complex from a graph");
  std::string build_kind;
  build->add_option("kind", build_kind, "bd | m1 | mk | ind | nc | dt")
      ->required()
      ->check(CLI::IsMember({"bd", "m1", "mk", "ind", "nc", "dt"}));
  std::string build_in;
  build->add_option("--in", build_in, "input graph JSON (default: stdin)");
  std::vector<std::string> lambda_kv;
  build->add_option("--lambda", lambda_kv, "degree bounds as vertex:bound");
  int uniform = -1;
  build->add_option("--uniform", uniform, "uniform degree bound");
  int match_k = 1;
  build->add_option("--k", match_k, "matching bound for mk (default 1)");

  // decide
  auto* decide = app.add_subcommand("decide", "decide a complex property");
  std::string decide_what;
  decide->add_option("what", decide_what, "vd | shellable")
      ->required()
      ->check(CLI::IsMember({"vd", "shellable"}));
  std::string decide_in;
  decide->add_option("--in", decide_in, "input complex JSON (default: stdin)");
  std::string decide_policy = "paper";
  decide->add_option("--policy", decide_policy, "naive | paper")
      ->check(CLI::IsMember({"naive", "paper"}));
  std::uint64_t decide_budget = 0;
  decide->add_option("--budget", decide_budget,
                     "node budget, 0 = unlimited");
  std::string emit_cert;
  decide->add_option("--emit-certificate", emit_cert,
                     "write the certificate (vd) or shelling order JSON here");

  // homology
  auto* hom = app.add_subcommand("homology",
                                 "integer reduced homology of a complex");
  std::string hom_in;
  hom->add_option("--in", hom_in, "input complex JSON (default: stdin)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite id or 'all' (see --list)");
  bool list_suites = false;
  verify->add_flag("--list", list_suites, "list suite ids and exit");
  sfc::SuiteConfig cfg;
  int max_edges = -1, max_vertices = -1;
  verify->add_option("--max-edges", max_edges, "override the corpus edge bound");
  verify->add_option("--max-vertices", max_vertices,
                     "override the corpus vertex bound");
  verify->add_option("--budget", cfg.node_budget,
                     "per-decision node budget, 0 = unlimited");
  verify->add_option("--policy", cfg.policy, "naive | paper")
      ->check(CLI::IsMember({"naive", "paper"}));
  verify->add_option("--threads", cfg.threads,
                     "worker threads (default: SFC_THREADS or all cores)");
  std::string out_path;
  verify->add_option("--out", out_path,
                     "write a JSONL report here; failure artifacts go to "
                     "<out>.artifacts/");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(build_kind, build_in, lambda_kv, uniform, match_k);
    if (decide->parsed())
      return cmd_decide(decide_what, decide_in, decide_policy, decide_budget,
                        emit_cert);
    if (hom->parsed()) return cmd_homology(hom_in);
    if (verify->parsed()) {
      if (list_suites) {
        for (const auto& n : sfc::suite_names()) std::cout << n << "\n";
        return 0;
      }
      if (suite.empty())
        throw std::runtime_error("verify wants a suite id or 'all'");
      if (max_edges >= 0) cfg.max_edges = max_edges;
      if (max_vertices >= 0) cfg.max_vertices = max_vertices;
      return cmd_verify(suite, cfg, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
