#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sfc/bitset.hpp"

namespace sfc {

// A face: sorted vertex ids.
using Face = std::vector<int>;

// Finite simplicial complex, stored as the antichain of its facets over an
// explicit ground set. Two degenerate complexes are distinguished:
//   VOID  - no faces at all          (facet list empty)
//   EMPTY - exactly the face {}      (facet list is [{}]); this is the
//           0-facet simplex and realizes the (-1)-sphere.
// The ground set may contain vertices that support no face ("ghosts"); the
// actual vertex set of the complex is support().
class Complex {
 public:
  Complex() = default;  // VOID over the empty ground set

  static Complex make_void(std::vector<int> ground = {});
  static Complex make_empty(std::vector<int> ground = {});
  // Facets may be given redundantly; they are deduplicated, reduced to the
  // maximal antichain and canonically ordered. Every member must lie in the
  // ground set.
  static Complex from_facets(std::vector<int> ground, const std::vector<Face>& facets);

  const std::vector<int>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  const std::vector<Bitset>& facet_bits() const { return facets_; }
  std::vector<Face> facets() const;
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].none(); }
  bool is_simplex() const { return facets_.size() == 1; }

  // -2 for VOID, -1 for EMPTY, else max facet size - 1.
  int dim() const;

  bool contains(const Face& f) const;
  // Union of facets (the vertices that are actually 0-faces), ascending.
  std::vector<int> support() const;
  std::vector<int> ghost_vertices() const;

  // Position of v in the ground set, -1 if absent.
  int ground_position(int v) const;
  Face to_face(const Bitset& b) const;
  Bitset to_bits(const Face& f) const;  // throws on unknown vertex

  bool operator==(const Complex& o) const { return ground_ == o.ground_ && facets_ == o.facets_; }

 private:
  std::vector<int> ground_;     // sorted unique
  std::vector<Bitset> facets_;  // antichain, ascending numeric order
};

// Full simplex on the vertices of s (ground = s).
Complex simplex(const Face& s);
// All (|s|-1)-subsets of s: boundary of the simplex. boundary({}) = VOID,
// boundary({v}) = EMPTY over {v}.
Complex boundary(const Face& s);

// Faces tau disjoint from f with tau ∪ f a face; ground shrinks by f.
// Requires f ∈ K.
Complex link(const Complex& k, const Face& f);
// Faces not containing f; ground shrinks by f when f is a single vertex.
// Requires f ∈ K. ("delete" in the literature; renamed: C++ keyword.)
Complex deletion(const Complex& k, const Face& f);

// Ground sets must be disjoint. Facets are pairwise unions; join with VOID is
// VOID, join with simplex({}) (EMPTY) is the identity.
Complex join(const Complex& a, const Complex& b);

// Cone and suspension, as joins with a fresh simplex / sphere.
Complex cone(const Complex& k, int apex);
Complex suspension(const Complex& k, int north, int south);

// Alexander dual over the ground set V: { s ⊆ V : V∖s ∉ K }.
Complex alexander_dual(const Complex& k);

// Union / intersection of face families. Union requires equal-or-disjoint
// interpretations to make sense topologically; here it is the plain facet
// union over the union ground. Intersection ground is the ground
// intersection.
Complex complex_union(const Complex& a, const Complex& b);
Complex complex_intersection(const Complex& a, const Complex& b);

// Drop ghost vertices from the ground set.
Complex restrict_to_support(const Complex& k);

enum class KeyMode {
  Exact,        // equal ground set and equal facet family
  Support,      // ghost vertices ignored
  Isomorphism,  // equal up to a vertex relabelling
};

// Deterministic comparable token; equal tokens iff equal complexes under the
// chosen mode (Isomorphism mode may conservatively distinguish isomorphic
// complexes if the canonical search hits its internal cap; it never equates
// non-isomorphic ones).
std::string canonical_key(const Complex& k, KeyMode mode = KeyMode::Exact);

// Canonical form of the support-restricted facet family, with the relabelling
// that produced it: relabel[i] = canonical index of support vertex i. When the
// backtracking search exceeds leaf_cap the key falls back to exact strength
// and the relabelling is the identity (iso_strength = false).
struct CanonicalForm {
  std::string key;
  std::vector<int> support;  // ascending original vertex ids
  std::vector<int> relabel;  // same length as support
  bool iso_strength = true;
};
CanonicalForm canonical_form(const Complex& k, std::uint64_t leaf_cap = 20000);

}  // namespace sfc
