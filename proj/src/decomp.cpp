#include "sfc/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

std::set<Face> facet_set(const Complex& k) {
  auto fs = k.facets();
  return std::set<Face>(fs.begin(), fs.end());
}

std::shared_ptr<const VdCert> leaf(VdCert::Tag tag) {
  auto c = std::make_shared<VdCert>();
  c->tag = tag;
  return c;
}

std::shared_ptr<const VdCert> split(int v, std::shared_ptr<const VdCert> link,
                                    std::shared_ptr<const VdCert> del) {
  auto c = std::make_shared<VdCert>();
  c->tag = VdCert::Tag::Split;
  c->vertex = v;
  c->link = std::move(link);
  c->del = std::move(del);
  return c;
}

std::shared_ptr<const VdCert> relabel_cert(const std::shared_ptr<const VdCert>& c,
                                           const std::map<int, int>& m) {
  if (!c || c->tag != VdCert::Tag::Split) return c;
  auto out = std::make_shared<VdCert>();
  out->tag = VdCert::Tag::Split;
  out->vertex = m.at(c->vertex);
  out->link = relabel_cert(c->link, m);
  out->del = relabel_cert(c->del, m);
  return out;
}

}  // namespace

bool is_shedding_vertex(const Complex& k, int v) {
  auto sup = k.support();
  if (!std::binary_search(sup.begin(), sup.end(), v)) return false;
  Complex del = deletion(k, Face{v});
  auto kf = facet_set(k);
  for (const Face& f : del.facets())
    if (!kf.count(f)) return false;
  return true;
}

bool replay_certificate(const Complex& k, const VdCert& cert) {
  switch (cert.tag) {
    case VdCert::Tag::Void:
      return k.is_void();
    case VdCert::Tag::Empty:
      return k.is_empty_complex();
    case VdCert::Tag::Simplex:
      return k.facet_count() == 1 && !k.is_empty_complex();
    case VdCert::Tag::Split: {
      if (!cert.link || !cert.del) return false;
      if (!is_shedding_vertex(k, cert.vertex)) return false;
      return replay_certificate(link(k, Face{cert.vertex}), *cert.link) &&
             replay_certificate(deletion(k, Face{cert.vertex}), *cert.del);
    }
  }
  return false;
}

ShedContext ShedContext::bounded_degree(LabelledGraph g, DegreeBounds b) {
  ShedContext c;
  c.bd.emplace(std::move(g), std::move(b));
  return c;
}

ShedContext ShedContext::non_cover(LabelledGraph g) {
  ShedContext c;
  c.nc.emplace(std::move(g));
  return c;
}

ShedContext ShedContext::directed_tree(MultiDigraph g) {
  ShedContext c;
  c.dt.emplace(std::move(g));
  return c;
}

ShedContext ShedPolicy::link_context(const ShedContext&, int) const { return {}; }
ShedContext ShedPolicy::delete_context(const ShedContext&, int) const { return {}; }

namespace {

class NaiveOrder final : public ShedPolicy {
 public:
  std::string name() const override { return "naive"; }
  std::vector<int> candidates(const Complex& k, const ShedContext&) const override {
    return k.support();
  }
};

class GuidedOrder final : public ShedPolicy {
 public:
  std::string name() const override { return "paper"; }

  std::vector<int> candidates(const Complex& k, const ShedContext& ctx) const override {
    if (ctx.bd) return bd_candidates(ctx.bd->first, ctx.bd->second);
    if (ctx.nc) return ctx.nc->internal_vertices();
    if (ctx.dt) return dt_candidates(*ctx.dt);
    return generic_candidates(k);
  }

  ShedContext link_context(const ShedContext& ctx, int v) const override {
    if (ctx.bd && ctx.bd->first.edge_by_id(v)) {
      const auto& [g, bounds] = *ctx.bd;
      try {
        return ShedContext::bounded_degree(g.remove_edge(v), link_bounds(g, bounds, v));
      } catch (const std::domain_error&) {
        return {};  // context drifted from the complex; keep searching blind
      }
    }
    if (ctx.dt && ctx.dt->dart_by_id(v))
      return ShedContext::directed_tree(contract_target(*ctx.dt, v));
    return {};
  }

  ShedContext delete_context(const ShedContext& ctx, int v) const override {
    if (ctx.bd && ctx.bd->first.edge_by_id(v)) {
      const auto& [g, bounds] = *ctx.bd;
      return ShedContext::bounded_degree(g.remove_edge(v), bounds);
    }
    if (ctx.dt && ctx.dt->dart_by_id(v))
      return ShedContext::directed_tree(ctx.dt->remove_dart(v));
    return {};
  }

 private:
  // apex vertices (in every facet) can never shed; try them last
  static std::vector<int> generic_candidates(const Complex& k) {
    std::vector<int> front, back;
    for (int v : k.support()) {
      bool apex = true;
      Bitset b = k.to_bits(Face{v});
      for (const Bitset& f : k.facet_bits())
        if (!b.is_subset_of(f)) {
          apex = false;
          break;
        }
      (apex ? back : front).push_back(v);
    }
    front.insert(front.end(), back.begin(), back.end());
    return front;
  }

  // cycle edges at a vertex with enough adjacent leaves, then pendant edges
  // at corner vertices, isolated edges in between
  static std::vector<int> bd_candidates(const LabelledGraph& g, const DegreeBounds& bounds) {
    std::vector<int> out;
    for (const auto& cyc : g.simple_cycles()) {
      std::set<int> on_cycle(cyc.begin(), cyc.end());
      for (int v : cyc) {
        auto it = bounds.find(v);
        if (it != bounds.end() && g.leaf_count_at(v) < it->second) continue;
        for (int w : g.neighbors(v))
          if (on_cycle.count(w)) out.push_back(g.find_edge(v, w)->id);
      }
    }
    for (const Edge& e : g.edges())
      if (g.degree(e.u) == 1 && g.degree(e.v) == 1) out.push_back(e.id);
    for (int w : corner_vertices(g)) {
      for (const Edge& e : g.edges()) {
        int other = (e.u == w) ? e.v : (e.v == w) ? e.u : -1;
        if (other >= 0 && g.degree(other) == 1 && g.degree(w) > 1) out.push_back(e.id);
      }
    }
    return out;
  }

  // one of each parallel pair; then per underlying leaf u with neighbor v:
  // dart u->v when both directions exist, or a dart w->v (w != u) when only
  // u->v does. Leaves with only v->u give a cone apex, which never sheds.
  static std::vector<int> dt_candidates(const MultiDigraph& g) {
    std::vector<int> out;
    const auto& ds = g.darts();
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (ds[i].s == ds[j].s && ds[i].t == ds[j].t) {
          out.push_back(ds[i].id);
          break;
        }
    LabelledGraph un = g.underlying();
    for (int u : un.leaves()) {
      int v = un.neighbors(u)[0];
      bool uv = g.multiplicity(u, v) > 0;
      bool vu = g.multiplicity(v, u) > 0;
      if (uv && vu) {
        for (const Dart& d : ds)
          if (d.s == u && d.t == v) out.push_back(d.id);
      } else if (uv) {
        for (const Dart& d : ds)
          if (d.t == v && d.s != u) out.push_back(d.id);
      }
    }
    return out;
  }
};

}  // namespace

const ShedPolicy& naive_policy() {
  static const NaiveOrder p;
  return p;
}

const ShedPolicy& guided_policy() {
  static const GuidedOrder p;
  return p;
}

const ShedPolicy& policy_by_name(const std::string& name) {
  if (name == "naive") return naive_policy();
  if (name == "paper") return guided_policy();
  throw std::domain_error("unknown policy: " + name);
}

thread_local std::uint64_t VdSolver::call_nodes_ = 0;

VdSolver::Result VdSolver::solve(const Complex& k, const ShedContext& ctx) {
  call_nodes_ = 0;
  return solve_impl(k, ctx);
}

VdSolver::Result VdSolver::solve_impl(const Complex& k, const ShedContext& ctx) {
  // the budget is per solve() call, so a shared solver stays deterministic
  // no matter how calls are spread over threads
  auto count_node = [this] {
    ++nodes_;
    if (opt_.node_budget && ++call_nodes_ > opt_.node_budget)
      throw BudgetExceeded("node budget exhausted");
  };

  if (k.is_void()) {
    count_node();
    return {true, leaf(VdCert::Tag::Void)};
  }
  if (k.is_empty_complex()) {
    count_node();
    return {true, leaf(VdCert::Tag::Empty)};
  }
  if (k.facet_count() == 1) {
    count_node();
    return {true, leaf(VdCert::Tag::Simplex)};
  }

  // memo key: isomorphism-strength for small supports, exact otherwise;
  // ghosts never matter here, so the key ignores them either way
  std::vector<int> sup = k.support();
  std::string key;
  std::map<int, int> to_canon, from_canon;
  bool iso = false;
  if (static_cast<int>(sup.size()) <= opt_.iso_max_support) {
    CanonicalForm form = canonical_form(k, opt_.iso_leaf_cap);
    key = form.key;
    if (form.iso_strength) {
      iso = true;
      for (std::size_t i = 0; i < sup.size(); ++i) {
        to_canon[sup[i]] = form.relabel[i];
        from_canon[form.relabel[i]] = sup[i];
      }
    }
  } else {
    key = canonical_key(k, KeyMode::Support);
  }

  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      const MemoEntry& e = it->second;
      if (!e.vd) return {false, nullptr};
      return {true, e.iso ? relabel_cert(e.cert, from_canon) : e.cert};
    }
  }

  count_node();

  // candidate order: policy suggestions first, rest of the support after
  std::vector<int> order = opt_.policy->candidates(k, ctx);
  {
    std::set<int> seen;
    std::vector<int> valid;
    for (int v : order)
      if (std::binary_search(sup.begin(), sup.end(), v) && seen.insert(v).second)
        valid.push_back(v);
    for (int v : sup)
      if (seen.insert(v).second) valid.push_back(v);
    order = std::move(valid);
  }

  Result res;
  for (int v : order) {
    if (!is_shedding_vertex(k, v)) continue;
    Result l = solve_impl(link(k, Face{v}), opt_.policy->link_context(ctx, v));
    if (!l.vd) continue;
    Result d = solve_impl(deletion(k, Face{v}), opt_.policy->delete_context(ctx, v));
    if (!d.vd) continue;
    res = {true, split(v, std::move(l.cert), std::move(d.cert))};
    break;
  }

  {
    std::lock_guard<std::mutex> lock(mu_);
    MemoEntry e;
    e.vd = res.vd;
    e.iso = iso;
    if (res.vd) e.cert = iso ? relabel_cert(res.cert, to_canon) : res.cert;
    memo_.emplace(std::move(key), std::move(e));
  }
  return res;
}

std::optional<int> find_decomposing_vertex(const Complex& k) {
  VdSolver solver;
  auto res = solver.solve(k);
  if (res.vd && res.cert->tag == VdCert::Tag::Split) return res.cert->vertex;
  return std::nullopt;
}

namespace {

// prefix condition at facet `f` given the earlier facets: every earlier
// intersection with f must sit inside one of size |f|-1
bool attaches(const Bitset& f, const std::vector<Bitset>& earlier) {
  std::size_t target = f.count() - 1;
  for (const Bitset& e : earlier) {
    Bitset c = f & e;
    bool covered = false;
    for (const Bitset& g : earlier)
      if ((f & g).count() == target && c.is_subset_of(g)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

ShellResult is_shellable(const Complex& k, std::size_t max_facets) {
  ShellResult out;
  const auto& fb = k.facet_bits();
  if (fb.size() > max_facets) throw CeilingExceeded("facet ceiling for shelling search");
  if (fb.size() <= 1) {  // void or a single facet: trivially shellable
    out.shellable = true;
    for (const Bitset& b : fb) out.order.push_back(k.to_face(b));
    return out;
  }

  std::size_t n = fb.size();
  // larger facets first tends to succeed sooner
  std::vector<std::size_t> by_size(n);
  for (std::size_t i = 0; i < n; ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return fb[a].count() > fb[b].count(); });

  std::set<std::uint64_t> dead;
  std::vector<std::size_t> picked;
  std::vector<Bitset> prefix;
  std::uint64_t mask = 0;

  auto rec = [&](auto&& self) -> bool {
    if (picked.size() == n) return true;
    if (dead.count(mask)) return false;
    ++out.nodes;
    for (std::size_t idx : by_size) {
      if (mask >> idx & 1) continue;
      if (!prefix.empty() && !attaches(fb[idx], prefix)) continue;
      picked.push_back(idx);
      prefix.push_back(fb[idx]);
      mask |= 1ull << idx;
      if (self(self)) return true;
      mask &= ~(1ull << idx);
      prefix.pop_back();
      picked.pop_back();
    }
    dead.insert(mask);
    return false;
  };

  out.shellable = rec(rec);
  if (out.shellable)
    for (std::size_t idx : picked) out.order.push_back(k.to_face(fb[idx]));
  return out;
}

bool replay_shelling(const Complex& k, const std::vector<Face>& order) {
  // the order must list exactly the facets of k, each once
  auto kf = facet_set(k);
  if (order.size() != kf.size()) return false;
  std::set<Face> seen;
  for (const Face& f : order) {
    Face s = f;
    std::sort(s.begin(), s.end());
    if (!kf.count(s) || !seen.insert(s).second) return false;
  }

  std::vector<Bitset> prefix;
  for (const Face& f : order) {
    Bitset b = k.to_bits(f);
    if (!prefix.empty() && !attaches(b, prefix)) return false;
    prefix.push_back(b);
  }
  return true;
}

}  // namespace sfc
