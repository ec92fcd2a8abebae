#ifndef LOCIND_TESTS_GENERATORS_HPP
#define LOCIND_TESTS_GENERATORS_HPP

#include <random>

#include "locind/exactla.hpp"
#include "locind/pbw.hpp"

namespace locind::gen {

/// Fixed seeds keep every property run reproducible.
inline std::mt19937& rng() {
  static thread_local std::mt19937 engine(0x10c1dU);
  return engine;
}

/// Canonical p/q (mpq_class(p, q) alone is not reduced).
inline ExactScalar q(long p, long d) {
  ExactScalar x(p, d);
  x.canonicalize();
  return x;
}

inline int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small rationals p/q, zero with probability about `zero_weight`.
inline ExactScalar rational(double zero_weight = 0.3) {
  if (std::bernoulli_distribution(zero_weight)(rng())) return 0;
  return q(integer(-5, 5), integer(1, 4));
}

inline SparseMatrix matrix(std::size_t rows, std::size_t cols, double zero_weight = 0.4) {
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rational(zero_weight));
  return m;
}

/// Matrix of prescribed rank: product of rows x k and k x cols factors.
inline SparseMatrix matrix_of_rank(std::size_t rows, std::size_t cols, std::size_t k) {
  for (;;) {
    const SparseMatrix m = matrix(rows, k, 0.1) * matrix(k, cols, 0.1);
    if (rank(m) == k) return m;
  }
}

inline Vector vector(std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = rational();
  return v;
}

/// Random element of U(g) of filtration degree <= max_degree with few terms.
inline UElt uelt(const UAlgebra& U, unsigned max_degree, int max_terms = 3) {
  UElt x(U.dim());
  const int terms = integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    PBWMonomial m(U.dim(), 0);
    unsigned budget = static_cast<unsigned>(integer(0, static_cast<int>(max_degree)));
    while (budget-- > 0) ++m[static_cast<std::size_t>(integer(0, static_cast<int>(U.dim()) - 1))];
    x = x + U.monomial(m, integer(-3, 3));
  }
  return x;
}

}  // namespace locind::gen

#endif  // LOCIND_TESTS_GENERATORS_HPP
