#include "sfc/snf.hpp"

#include <cstddef>
#include <utility>

namespace sfc {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<mpz_class> smith_invariant_factors(IntMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> inv;

  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    // smallest nonzero entry of the trailing submatrix becomes the pivot;
    // a unit entry is already optimal, so stop looking at the first one
    std::size_t pi = k, pj = k;
    bool found = false, unit = false;
    for (std::size_t i = k; i < rows && !unit; ++i)
      for (std::size_t j = k; j < cols && !unit; ++j)
        if (m[i][j] != 0 && (!found || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0)) {
          pi = i;
          pj = j;
          found = true;
          unit = (m[i][j] == 1 || m[i][j] == -1);
        }
    if (!found) break;
    swap_rows(m, k, pi);
    swap_cols(m, k, pj);

    for (;;) {
      bool again = false;
      // truncated division leaves |remainder| < |pivot|, so swapping a
      // nonzero remainder into the pivot strictly shrinks it: terminates
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        mpz_class q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) {
          swap_rows(m, k, i);
          again = true;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        mpz_class q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) {
          swap_cols(m, k, j);
          again = true;
        }
      }
      if (again) continue;

      // pivot must divide the whole trailing submatrix; folding an offending
      // row into row k forces a smaller pivot on the next pass
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols && divides; ++j)
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
            divides = false;
          }
      if (divides) break;
    }

    if (m[k][k] < 0) m[k][k] = -m[k][k];
    inv.push_back(m[k][k]);
  }
  return inv;
}

}  // namespace sfc
