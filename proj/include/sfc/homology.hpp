#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "sfc/complex.hpp"

namespace sfc {

// Reduced integral homology, including dimension -1 (the empty complex {∅}
// has H_{-1} = Z). Only nonzero entries are stored. Torsion is kept in
// primary form (prime powers, ascending), so multiset equality is group
// isomorphism and direct sums are multiset unions.
struct HomologyProfile {
  std::map<int, long> betti;
  std::map<int, std::vector<mpz_class>> torsion;

  bool trivial() const { return betti.empty() && torsion.empty(); }
  bool operator==(const HomologyProfile&) const = default;
};

std::string to_string(const HomologyProfile& h);

// All faces of k grouped by dimension (the empty face has dimension -1).
// The void complex has no faces at all.
std::map<int, std::vector<Bitset>> collect_faces(const Complex& k);

std::map<int, std::size_t> face_counts(const Complex& k);

HomologyProfile reduced_homology(const Complex& k);

// Every group shifted up by r dimensions (suspension acts this way).
HomologyProfile shifted(const HomologyProfile& h, int r);

bool check_suspension_shift(const HomologyProfile& base, const HomologyProfile& suspended,
                            int r);

enum class SphereKind { Point, Sphere, Neither };

struct SphereClass {
  SphereKind kind = SphereKind::Neither;
  int dim = 0;  // set when kind == Sphere; -1 names the empty complex
};

// Point = all reduced homology vanishes; Sphere(d) = a single Z in
// dimension d and nothing else.
SphereClass classify_point_or_sphere(const HomologyProfile& h);

// Combinatorial Alexander duality over the ground set of k (|ground| = n):
// betti_i(dual) must equal betti_{n-3-i}(k), and by universal coefficients
// the torsion of the dual in dimension i must equal the torsion of k in
// dimension n-4-i.
struct DualityReport {
  bool betti_ok = true;
  bool torsion_ok = true;
  std::string detail;
};

DualityReport check_alexander_duality(const Complex& k);

// Mayer-Vietoris with two acyclic pieces overlapping in a non-void
// subcomplex: the union's homology must equal the intersection's shifted up
// one dimension (as for a suspension). Inputs failing the hypothesis are
// reported as not applicable rather than checked.
struct GluingReport {
  bool applicable = false;
  bool ok = false;
  std::string detail;
};

GluingReport check_gluing(const Complex& a, const Complex& b);

}  // namespace sfc
