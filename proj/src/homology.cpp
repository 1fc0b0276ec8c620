#include "sfc/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sfc/errors.hpp"
#include "sfc/snf.hpp"

namespace sfc {

namespace {

constexpr std::size_t kDistinctFaceCeiling = 1u << 20;
constexpr std::uint64_t kSubsetWorkCeiling = 1u << 22;

std::vector<mpz_class> primary_decomposition(const std::vector<mpz_class>& factors) {
  std::vector<mpz_class> out;
  for (mpz_class n : factors) {
    if (n <= 1) continue;
    for (mpz_class p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      mpz_class q = 1;
      while (n % p == 0) {
        q *= p;
        n /= p;
      }
      out.push_back(q);
    }
    if (n > 1) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long get_betti(const HomologyProfile& h, int d) {
  auto it = h.betti.find(d);
  return it == h.betti.end() ? 0 : it->second;
}

std::vector<mpz_class> get_torsion(const HomologyProfile& h, int d) {
  auto it = h.torsion.find(d);
  return it == h.torsion.end() ? std::vector<mpz_class>{} : it->second;
}

}  // namespace

std::string to_string(const HomologyProfile& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [d, b] : h.betti) {
    os << (first ? "" : ", ") << "H_" << d << "=Z";
    if (b > 1) os << "^" << b;
    first = false;
  }
  for (auto& [d, t] : h.torsion) {
    os << (first ? "" : ", ") << "T_" << d << "=[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i].get_str();
    os << "]";
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<int, std::vector<Bitset>> collect_faces(const Complex& k) {
  std::map<int, std::vector<Bitset>> by_dim;
  if (k.is_void()) return by_dim;

  std::set<Bitset> seen;
  std::uint64_t work = 0;
  for (const Bitset& facet : k.facet_bits()) {
    std::vector<int> pos = facet.bits();
    if (pos.size() > 20) throw CeilingExceeded("facet too large for face enumeration");
    std::uint64_t subsets = 1ull << pos.size();
    if ((work += subsets) > kSubsetWorkCeiling)
      throw CeilingExceeded("face enumeration work ceiling");
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Bitset f(facet.width());
      for (std::size_t i = 0; i < pos.size(); ++i)
        if (mask >> i & 1) f.set(pos[i]);
      seen.insert(std::move(f));
      if (seen.size() > kDistinctFaceCeiling)
        throw CeilingExceeded("distinct face ceiling");
    }
  }
  for (const Bitset& f : seen) by_dim[static_cast<int>(f.count()) - 1].push_back(f);
  return by_dim;
}

std::map<int, std::size_t> face_counts(const Complex& k) {
  std::map<int, std::size_t> out;
  for (auto& [d, fs] : collect_faces(k)) out[d] = fs.size();
  return out;
}

HomologyProfile reduced_homology(const Complex& k) {
  HomologyProfile out;
  auto faces = collect_faces(k);
  if (faces.empty()) return out;  // void: zero chain complex

  int top = faces.rbegin()->first;

  // invariant factors of each boundary map ∂_d : C_d -> C_{d-1}
  std::map<int, std::vector<mpz_class>> factors;
  for (int d = 0; d <= top; ++d) {
    const auto& dom = faces[d];
    const auto& cod = faces[d - 1];
    std::map<Bitset, std::size_t> row;
    for (std::size_t i = 0; i < cod.size(); ++i) row[cod[i]] = i;

    IntMatrix m(cod.size(), std::vector<mpz_class>(dom.size(), 0));
    for (std::size_t j = 0; j < dom.size(); ++j) {
      std::vector<int> vs = dom[j].bits();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        Bitset sub = dom[j];
        sub.reset(vs[i]);
        m[row.at(sub)][j] = (i % 2 == 0) ? 1 : -1;
      }
    }
    factors[d] = smith_invariant_factors(std::move(m));
  }

  auto rank = [&](int d) -> long {
    auto it = factors.find(d);
    return it == factors.end() ? 0 : static_cast<long>(it->second.size());
  };

  for (int d = -1; d <= top; ++d) {
    long n = faces.count(d) ? static_cast<long>(faces[d].size()) : 0;
    long b = n - rank(d) - rank(d + 1);
    if (b != 0) out.betti[d] = b;
    if (auto it = factors.find(d + 1); it != factors.end()) {
      auto primary = primary_decomposition(it->second);
      if (!primary.empty()) out.torsion[d] = std::move(primary);
    }
  }
  return out;
}

HomologyProfile shifted(const HomologyProfile& h, int r) {
  HomologyProfile out;
  for (auto& [d, b] : h.betti) out.betti[d + r] = b;
  for (auto& [d, t] : h.torsion) out.torsion[d + r] = t;
  return out;
}

bool check_suspension_shift(const HomologyProfile& base, const HomologyProfile& suspended,
                            int r) {
  return shifted(base, r) == suspended;
}

SphereClass classify_point_or_sphere(const HomologyProfile& h) {
  if (h.trivial()) return {SphereKind::Point, 0};
  if (h.torsion.empty() && h.betti.size() == 1 && h.betti.begin()->second == 1)
    return {SphereKind::Sphere, h.betti.begin()->first};
  return {SphereKind::Neither, 0};
}

DualityReport check_alexander_duality(const Complex& k) {
  DualityReport rep;
  int n = static_cast<int>(k.ground().size());
  HomologyProfile hk = reduced_homology(k);
  HomologyProfile hd = reduced_homology(alexander_dual(k));

  std::ostringstream detail;
  for (int i = -1; i <= n; ++i) {
    long lhs = get_betti(hd, i);
    long rhs = get_betti(hk, n - 3 - i);
    if (lhs != rhs) {
      rep.betti_ok = false;
      detail << "betti_" << i << "(dual)=" << lhs << " vs betti_" << (n - 3 - i)
             << "=" << rhs << "; ";
    }
    auto tl = get_torsion(hd, i);
    auto tr = get_torsion(hk, n - 4 - i);
    if (tl != tr) {
      rep.torsion_ok = false;
      detail << "torsion mismatch at dual dim " << i << "; ";
    }
  }
  rep.detail = detail.str();
  return rep;
}

GluingReport check_gluing(const Complex& a, const Complex& b) {
  GluingReport rep;
  Complex inter = complex_intersection(a, b);
  if (inter.is_void()) {
    // the one-dimension shift below does not model a void overlap
    rep.detail = "intersection is void";
    return rep;
  }
  if (!reduced_homology(a).trivial() || !reduced_homology(b).trivial()) {
    rep.detail = "pieces are not acyclic";
    return rep;
  }
  rep.applicable = true;

  // Mayer-Vietoris with acyclic pieces: the union looks like the suspension
  // of the intersection
  HomologyProfile expect = shifted(reduced_homology(inter), 1);
  HomologyProfile got = reduced_homology(complex_union(a, b));
  rep.ok = (got == expect);
  if (!rep.ok)
    rep.detail = "union " + to_string(got) + " != shifted intersection " + to_string(expect);
  return rep;
}

}  // namespace sfc
