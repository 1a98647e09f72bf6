#include <cstdint>
#include <vector>

#include <omp.h>

#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Laplacian with the last row and column removed.
Matrix reduced_laplacian(const MultiGraph& g) {
  const std::size_t m = g.vertex_count() - 1;
  Matrix lap(m, std::vector<BigInt>(m, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.a < m) lap[e.a][e.a] += 1;
    if (e.b < m) lap[e.b][e.b] += 1;
    if (e.a < m && e.b < m) {
      lap[e.a][e.b] -= 1;
      lap[e.b][e.a] -= 1;
    }
  }
  return lap;
}

void eliminate_row(Matrix& a, std::size_t k, std::size_t i, const BigInt& previous) {
  const std::size_t m = a.size();
  BigInt t;
  for (std::size_t j = k + 1; j < m; ++j) {
    // a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous, exactly.
    mpz_mul(t.get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
    mpz_submul(t.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
    mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
  }
  a[i][k] = 0;
}

template <bool Parallel>
BigInt bareiss_determinant(Matrix a) {
  const std::size_t m = a.size();
  if (m == 0) return 1;
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && a[pivot][k] == 0) ++pivot;
      if (pivot == m) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    const auto rows = static_cast<std::int64_t>(m);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t i = static_cast<std::int64_t>(k) + 1; i < rows; ++i) {
        eliminate_row(a, k, static_cast<std::size_t>(i), previous);
      }
    } else {
      for (std::int64_t i = static_cast<std::int64_t>(k) + 1; i < rows; ++i) {
        eliminate_row(a, k, static_cast<std::size_t>(i), previous);
      }
    }
    previous = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

template <bool Parallel>
BigInt count_trees(const MultiGraph& g) {
  if (g.vertex_count() == 0) return 1;
  if (!g.is_connected()) throw Disconnected("spanning tree count requires a connected graph");
  return bareiss_determinant<Parallel>(reduced_laplacian(g));
}

}  // namespace

BigInt count_spanning_trees_kirchhoff(const MultiGraph& g) { return count_trees<true>(g); }

BigInt count_spanning_trees_kirchhoff_serial(const MultiGraph& g) {
  return count_trees<false>(g);
}

}  // namespace tutte
