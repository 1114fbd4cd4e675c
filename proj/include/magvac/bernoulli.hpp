#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace magvac {

// Bernoulli numbers from the defining recurrence
//   sum_{j=0}^{m} C(m+1,j) B_j = 0,  B_0 = 1,
// carried in exact rational arithmetic and converted to double at the end.
// Convention: B_1 = -1/2; odd-index numbers vanish from B_3 on.
inline std::vector<double> bernoulli_table(int k_max) {
  if (k_max < 0)
    throw std::domain_error("bernoulli_table: k_max must be >= 0");
  std::vector<mpq_class> b(static_cast<size_t>(k_max) + 1);
  std::vector<double> out(static_cast<size_t>(k_max) + 1);
  b[0] = 1;
  out[0] = 1.0;
  for (int m = 1; m <= k_max; ++m) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += b[j] * binom;
      // C(m+1, j+1); the division is exact.
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / (m + 1);
    out[m] = b[m].get_d();
  }
  return out;
}

// Single even-index Bernoulli number. Odd indices are rejected rather than
// returned as zero so that a misindexed series coefficient fails loudly.
inline double bernoulli_number(int k) {
  if (k < 0 || k % 2 != 0)
    throw std::domain_error("bernoulli_number: k must be an even integer >= 0");
  return bernoulli_table(k)[static_cast<size_t>(k)];
}

// Second Bernoulli polynomial B_2(h) = h^2 - h + 1/6.
inline double bernoulli_poly2(double h) { return h * h - h + 1.0 / 6.0; }

}  // namespace magvac
