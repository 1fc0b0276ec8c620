#include "sfc/complex.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sfc {

namespace {

// Keep only maximal bitsets, canonically ordered, duplicates removed.
std::vector<Bitset> reduce_antichain(std::vector<Bitset> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) maximal = false;
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

Complex Complex::make_void(std::vector<int> ground) {
  Complex k;
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
    throw std::invalid_argument("duplicate ground vertex");
  k.ground_ = std::move(ground);
  return k;
}

Complex Complex::make_empty(std::vector<int> ground) {
  Complex k = make_void(std::move(ground));
  k.facets_.push_back(Bitset(k.ground_.size()));
  return k;
}

Complex Complex::from_facets(std::vector<int> ground, const std::vector<Face>& facets) {
  Complex k = make_void(std::move(ground));
  std::vector<Bitset> bits;
  bits.reserve(facets.size());
  for (const Face& f : facets) bits.push_back(k.to_bits(f));
  k.facets_ = reduce_antichain(std::move(bits));
  return k;
}

std::vector<Face> Complex::facets() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (const Bitset& b : facets_) out.push_back(to_face(b));
  return out;
}

int Complex::dim() const {
  if (is_void()) return -2;
  std::size_t best = 0;
  for (const Bitset& b : facets_) best = std::max(best, b.count());
  return static_cast<int>(best) - 1;
}

bool Complex::contains(const Face& f) const {
  if (is_void()) return false;
  Bitset b(ground_.size());
  for (int v : f) {
    int p = ground_position(v);
    if (p < 0) return false;
    b.set(static_cast<std::size_t>(p));
  }
  for (const Bitset& fc : facets_)
    if (b.is_subset_of(fc)) return true;
  return false;
}

std::vector<int> Complex::support() const {
  if (ground_.empty()) return {};
  Bitset u(ground_.size());
  for (const Bitset& b : facets_) u = u | b;
  return to_face(u);
}

std::vector<int> Complex::ghost_vertices() const {
  std::vector<int> sup = support();
  std::vector<int> out;
  std::set_difference(ground_.begin(), ground_.end(), sup.begin(), sup.end(),
                      std::back_inserter(out));
  return out;
}

int Complex::ground_position(int v) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
  if (it == ground_.end() || *it != v) return -1;
  return static_cast<int>(it - ground_.begin());
}

Face Complex::to_face(const Bitset& b) const {
  Face out;
  for (int p : b.bits()) out.push_back(ground_[static_cast<std::size_t>(p)]);
  return out;
}

Bitset Complex::to_bits(const Face& f) const {
  Bitset b(ground_.size());
  for (int v : f) {
    int p = ground_position(v);
    if (p < 0) throw std::invalid_argument("face vertex outside ground set");
    b.set(static_cast<std::size_t>(p));
  }
  if (b.count() != f.size()) throw std::invalid_argument("face has repeated vertices");
  return b;
}

Complex simplex(const Face& s) {
  return Complex::from_facets(s, {s});
}

Complex boundary(const Face& s) {
  std::vector<Face> facets;
  Face sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Face f;
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (j != i) f.push_back(sorted[j]);
    facets.push_back(f);
  }
  return Complex::from_facets(sorted, facets);  // s = {} gives VOID
}

Complex link(const Complex& k, const Face& f) {
  if (!k.contains(f)) throw std::invalid_argument("link: face not in complex");
  Bitset fb = k.to_bits(f);
  std::vector<int> new_ground;
  for (int v : k.ground())
    if (std::find(f.begin(), f.end(), v) == f.end()) new_ground.push_back(v);
  std::vector<Face> facets;
  for (const Bitset& fc : k.facet_bits())
    if (fb.is_subset_of(fc)) facets.push_back(k.to_face(fc.minus(fb)));
  return Complex::from_facets(new_ground, facets);
}

Complex deletion(const Complex& k, const Face& f) {
  if (!k.contains(f)) throw std::invalid_argument("deletion: face not in complex");
  if (f.empty()) return Complex::make_void(k.ground());  // every face contains {}
  Bitset fb = k.to_bits(f);
  std::vector<int> new_ground = k.ground();
  if (f.size() == 1)
    new_ground.erase(std::find(new_ground.begin(), new_ground.end(), f[0]));
  std::vector<Face> facets;
  for (const Bitset& fc : k.facet_bits()) {
    if (!fb.is_subset_of(fc)) {
      facets.push_back(k.to_face(fc));
    } else {
      // maximal subfaces of fc avoiding f: drop one element of f
      for (int v : f) {
        Bitset sub = fc;
        sub.reset(static_cast<std::size_t>(k.ground_position(v)));
        facets.push_back(k.to_face(sub));
      }
    }
  }
  return Complex::from_facets(new_ground, facets);
}

Complex join(const Complex& a, const Complex& b) {
  std::vector<int> ground = a.ground();
  for (int v : b.ground()) {
    if (a.ground_position(v) >= 0) throw std::invalid_argument("join: ground sets overlap");
    ground.push_back(v);
  }
  std::vector<Face> facets;
  for (const Bitset& fa : a.facet_bits())
    for (const Bitset& fb : b.facet_bits()) {
      Face f = a.to_face(fa);
      for (int v : b.to_face(fb)) f.push_back(v);
      facets.push_back(f);
    }
  return Complex::from_facets(ground, facets);
}

Complex cone(const Complex& k, int apex) { return join(k, simplex({apex})); }

Complex suspension(const Complex& k, int north, int south) {
  if (north == south) throw std::invalid_argument("suspension: poles must differ");
  return join(k, boundary({north, south}));
}

Complex alexander_dual(const Complex& k) {
  // s ∈ AD(K) iff V∖s ∉ K iff s contains no complement of a facet. Facets of
  // AD are complements of the minimal transversals of the facet complements.
  std::size_t n = k.ground_size();
  std::vector<Bitset> compl_sets;
  Bitset full(n);
  for (std::size_t i = 0; i < n; ++i) full.set(i);
  for (const Bitset& f : k.facet_bits()) compl_sets.push_back(full.minus(f));

  if (compl_sets.empty()) return simplex(k.ground());  // AD(VOID) = full simplex
  for (const Bitset& c : compl_sets)
    if (c.none()) return Complex::make_void(k.ground());  // V ∈ K: nothing qualifies

  // Enumerate minimal hitting sets of compl_sets by branching on the elements
  // of the first unhit set.
  std::vector<Bitset> transversals;
  Bitset chosen(n);
  std::function<void()> rec = [&]() {
    const Bitset* unhit = nullptr;
    for (const Bitset& c : compl_sets)
      if (!c.intersects(chosen)) {
        unhit = &c;
        break;
      }
    if (!unhit) {
      transversals.push_back(chosen);
      return;
    }
    for (int p : unhit->bits()) {
      chosen.set(static_cast<std::size_t>(p));
      rec();
      chosen.reset(static_cast<std::size_t>(p));
    }
  };
  rec();

  // Keep only minimal transversals, then complement.
  std::vector<Bitset> facets;
  for (std::size_t i = 0; i < transversals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < transversals.size() && minimal; ++j)
      if (i != j &&
          (transversals[j].is_subset_of(transversals[i]) && !(transversals[j] == transversals[i])))
        minimal = false;
    if (minimal) facets.push_back(full.minus(transversals[i]));
  }
  std::vector<Face> out;
  for (const Bitset& f : facets) out.push_back(k.to_face(f));
  return Complex::from_facets(k.ground(), out);
}

Complex complex_union(const Complex& a, const Complex& b) {
  std::vector<int> ground = a.ground();
  for (int v : b.ground())
    if (a.ground_position(v) < 0) ground.push_back(v);
  std::vector<Face> facets;
  for (const Bitset& f : a.facet_bits()) facets.push_back(a.to_face(f));
  for (const Bitset& f : b.facet_bits()) facets.push_back(b.to_face(f));
  return Complex::from_facets(ground, facets);
}

Complex complex_intersection(const Complex& a, const Complex& b) {
  std::vector<int> ground;
  for (int v : a.ground())
    if (b.ground_position(v) >= 0) ground.push_back(v);
  std::vector<Face> facets;
  for (const Bitset& fa : a.facet_bits()) {
    Face faf = a.to_face(fa);
    for (const Bitset& fb : b.facet_bits()) {
      Face fbf = b.to_face(fb);
      Face inter;
      std::set_intersection(faf.begin(), faf.end(), fbf.begin(), fbf.end(),
                            std::back_inserter(inter));
      facets.push_back(inter);
    }
  }
  if (a.is_void() || b.is_void()) facets.clear();
  return Complex::from_facets(ground, facets);
}

Complex restrict_to_support(const Complex& k) {
  std::vector<Face> facets;
  for (const Bitset& f : k.facet_bits()) facets.push_back(k.to_face(f));
  return Complex::from_facets(k.support(), facets);
}

namespace {

std::string encode_facets(const std::vector<std::vector<int>>& facets) {
  // facets given as sorted index lists; sort the list of lists
  std::vector<std::vector<int>> sorted = facets;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (auto& f : sorted) {
    for (int v : f) out += std::to_string(v) + ",";
    out += ";";
  }
  return out;
}

// Iterated refinement of vertex colors by facet membership structure.
// Returns color classes; refinement is label-independent.
std::vector<int> refine_colors(int n, const std::vector<std::vector<int>>& facets,
                               std::vector<int> color) {
  for (;;) {
    // signature: (old color, sorted multiset over incident facets of
    // (facet size, sorted color multiset of the facet))
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> inc;
      for (auto& f : facets) {
        if (std::find(f.begin(), f.end(), v) == f.end()) continue;
        std::vector<int> fc;
        fc.push_back(static_cast<int>(f.size()));
        for (int w : f) fc.push_back(color[w]);
        std::sort(fc.begin() + 1, fc.end());
        inc.push_back(std::move(fc));
      }
      std::sort(inc.begin(), inc.end());
      std::vector<int> flat{color[v]};
      for (auto& i : inc) {
        flat.push_back(-1);
        flat.insert(flat.end(), i.begin(), i.end());
      }
      sigs[v] = {std::move(flat), v};
    }
    // rank signatures
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
      next[sorted[i].second] = rank;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

// Individualization-refinement search for the minimal facet encoding over
// all vertex relabellings. Capped by leaf count; exhaustion yields a true
// canonical form, a cap hit is reported so callers can fall back soundly.
struct CanonSearch {
  int n;
  const std::vector<std::vector<int>>& facets;
  std::uint64_t leaf_cap;
  std::uint64_t leaves = 0;
  bool capped = false;
  std::string best;
  std::vector<int> best_color;

  void run(std::vector<int> color) {
    if (capped) return;
    color = refine_colors(n, facets, std::move(color));
    // branch on the lowest-colored non-singleton class
    std::vector<int> count(color.size(), 0);
    for (int c : color) ++count[static_cast<std::size_t>(c)];
    int cls = -1;
    for (int v = 0; v < n; ++v) {
      int c = color[static_cast<std::size_t>(v)];
      if (count[static_cast<std::size_t>(c)] > 1 && (cls == -1 || c < cls)) cls = c;
    }
    if (cls == -1) {
      // discrete coloring: color[v] is the canonical index of v
      if (++leaves > leaf_cap) {
        capped = true;
        return;
      }
      std::vector<std::vector<int>> relabeled;
      for (auto& f : facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(color[static_cast<std::size_t>(v)]);
        std::sort(g.begin(), g.end());
        relabeled.push_back(std::move(g));
      }
      std::string enc = encode_facets(relabeled);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_color = color;
      }
      return;
    }
    for (int v = 0; v < n && !capped; ++v) {
      if (color[static_cast<std::size_t>(v)] != cls) continue;
      std::vector<int> next = color;
      for (int w = 0; w < n; ++w)
        if (next[static_cast<std::size_t>(w)] >= cls) ++next[static_cast<std::size_t>(w)];
      next[static_cast<std::size_t>(v)] = cls;  // v alone keeps the low color
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Complex& k, std::uint64_t leaf_cap) {
  CanonicalForm out;
  out.support = k.support();
  int n = static_cast<int>(out.support.size());
  out.relabel.resize(static_cast<std::size_t>(n));

  if (k.is_void()) {
    out.key = "iso:void";
    return out;
  }
  if (k.is_empty_complex()) {
    out.key = "iso:empty";
    return out;
  }

  // facets over support positions
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[out.support[static_cast<std::size_t>(i)]] = i;
  std::vector<std::vector<int>> facets;
  for (const Bitset& b : k.facet_bits()) {
    std::vector<int> f;
    for (int v : k.to_face(b)) f.push_back(pos[v]);
    facets.push_back(std::move(f));
  }

  CanonSearch search{n, facets, leaf_cap, 0, false, {}, {}};
  search.run(std::vector<int>(static_cast<std::size_t>(n), 0));

  if (search.capped) {
    // fall back to exact strength over original ids (sound: equal keys still
    // imply equal complexes, only sharing across relabellings is lost)
    out.iso_strength = false;
    std::iota(out.relabel.begin(), out.relabel.end(), 0);
    std::string ids;
    for (int v : out.support) ids += std::to_string(v) + ",";
    out.key = "exact:" + ids + "|" + encode_facets(facets);
    return out;
  }

  out.relabel = search.best_color;
  out.key = "iso:" + search.best;
  return out;
}

std::string canonical_key(const Complex& k, KeyMode mode) {
  switch (mode) {
    case KeyMode::Exact: {
      std::string ids;
      for (int v : k.ground()) ids += std::to_string(v) + ",";
      std::vector<std::vector<int>> facets;
      for (const Bitset& b : k.facet_bits()) facets.push_back(k.to_face(b));
      return "g:" + ids + "|f:" + encode_facets(facets) +
             (k.is_void() ? "|void" : (k.is_empty_complex() ? "|empty" : ""));
    }
    case KeyMode::Support:
      return canonical_key(restrict_to_support(k), KeyMode::Exact);
    case KeyMode::Isomorphism: {
      CanonicalForm form = canonical_form(k);
      return form.key + "|ghosts:" + std::to_string(k.ghost_vertices().size()) +
             "|" + (k.is_void() ? "void" : "solid");
    }
  }
  return {};
}

}  // namespace sfc
