#include "sqhnn/smith.hpp"

#include <algorithm>
#include <utility>

namespace sqhnn {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

IntMatrix to_big(const std::vector<std::vector<long long>>& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (long long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::vector<BigInt> diag;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (!found || babs(m[i][j]) < babs(m[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    }
    if (!found) break;
    std::swap(m[t], m[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: bring the smallest entry of row/column t in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] != 0 && babs(m[i][t]) < babs(m[bi][bj])) { bi = i; bj = t; }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] != 0 && babs(m[t][j]) < babs(m[bi][bj])) { bi = t; bj = j; }
        }
        std::swap(m[t], m[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold any offending row into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(babs(m[t][t]));
  }
  return diag;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& input, std::size_t cols) {
  IntMatrix m = input;
  const std::size_t rows = m.size();
  // u tracks the column operations: m_current = input * u.
  IntMatrix u(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, const BigInt& q, std::size_t src) {
    for (auto& row : m) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    for (std::size_t j = pc + 1; j < cols; ++j) {
      while (m[i][j] != 0) {
        const BigInt q = m[i][pc] / m[i][j];
        col_axpy(pc, q, j);
        col_swap(pc, j);
      }
    }
    if (m[i][pc] != 0) ++pc;
  }

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t j = pc; j < cols; ++j) {
    std::vector<BigInt> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sqhnn
