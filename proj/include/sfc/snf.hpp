#pragma once

#include <gmpxx.h>

#include <vector>

namespace sfc {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Invariant factors d1 | d2 | ... | dr of an integer matrix, each positive.
// Their count r is the rank; factors > 1 are the torsion coefficients when
// the matrix is a boundary map.
std::vector<mpz_class> smith_invariant_factors(IntMatrix m);

}  // namespace sfc
