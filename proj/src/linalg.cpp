#include "latval/linalg.hpp"

#include "latval/errors.hpp"

#include <utility>

namespace latval::linalg {

Echelon rref(Rows rows, int ncols) {
  Echelon out;
  int r = 0;
  const int m = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Rat inv = 1 / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank(const Rows& rows, int ncols) { return static_cast<int>(rref(rows, ncols).pivots.size()); }

Rows span_basis(const Rows& vectors, int n) { return rref(vectors, n).rows; }

Rows nullspace(const Rows& rows, int n) {
  auto e = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : e.pivots) is_pivot[p] = true;
  Rows basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Solves the square system G y = b by Gauss-Jordan; G must be nonsingular.
RatVec solve_square(Rows g, RatVec b) {
  const int n = static_cast<int>(g.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && g[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular system in exact solve");
    std::swap(g[c], g[piv]);
    std::swap(b[c], b[piv]);
    Rat inv = 1 / g[c][c];
    for (int j = c; j < n; ++j) g[c][j] *= inv;
    b[c] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || g[i][c] == 0) continue;
      Rat f = g[i][c];
      for (int j = c; j < n; ++j) g[i][j] -= f * g[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

}  // namespace

RatVec project(const Rows& basis, const RatVec& x) {
  RatVec out(x.size(), Rat(0));
  if (basis.empty()) return out;
  const std::size_t k = basis.size();
  Rows g(k, RatVec(k));
  RatVec b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
    b[i] = dot(basis[i], x);
  }
  RatVec y = solve_square(std::move(g), std::move(b));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += y[i] * basis[i][j];
  return out;
}

std::optional<RatVec> coordinates(const Rows& basis, const RatVec& x) {
  if (basis.empty()) {
    if (is_zero(x)) return RatVec{};
    return std::nullopt;
  }
  const std::size_t k = basis.size();
  Rows g(k, RatVec(k));
  RatVec b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
    b[i] = dot(basis[i], x);
  }
  RatVec y = solve_square(std::move(g), std::move(b));
  RatVec back(x.size(), Rat(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < x.size(); ++j) back[j] += y[i] * basis[i][j];
  if (back != x) return std::nullopt;
  return y;
}

Rat determinant(Rows m) {
  const int n = static_cast<int>(m.size());
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Rat gram_determinant(const Rows& vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  Rows g(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = dot(vectors[i], vectors[j]);
  return determinant(std::move(g));
}

bool in_span(const Rows& basis, const RatVec& x, int n) {
  Rows all = basis;
  all.push_back(x);
  return rank(all, n) == rank(basis, n);
}

bool same_span(const Rows& a, const Rows& b, int n) {
  const int ra = rank(a, n);
  if (ra != rank(b, n)) return false;
  Rows all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(all, n) == ra;
}

std::vector<IntVec> saturated_lattice_basis(const Rows& vectors, int n) {
  Rows eq = nullspace(span_basis(vectors, n), n);
  const int m = static_cast<int>(eq.size());
  std::vector<std::vector<Int>> e(m, std::vector<Int>(n));
  for (int i = 0; i < m; ++i) {
    RatVec p = primitive(eq[i]);
    for (int j = 0; j < n; ++j) e[i][j] = p[j].get_num();
  }
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));  // u[col][row]
  for (int j = 0; j < n; ++j) u[j][j] = 1;

  auto combine = [&](int p, int j, const Int& s, const Int& t, const Int& x, const Int& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j
    for (int i = 0; i < m; ++i) {
      Int a = e[i][p], b = e[i][j];
      e[i][p] = s * a + t * b;
      e[i][j] = x * a + y * b;
    }
    for (int i = 0; i < n; ++i) {
      Int a = u[p][i], b = u[j][i];
      u[p][i] = s * a + t * b;
      u[j][i] = x * a + y * b;
    }
  };

  int p = 0;
  for (int row = 0; row < m && p < n; ++row) {
    for (int j = p + 1; j < n; ++j) {
      if (e[row][j] == 0) continue;
      Int a = e[row][p], b = e[row][j];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int bx = -b / g, ay = a / g;
      combine(p, j, s, t, bx, ay);
    }
    if (e[row][p] != 0) ++p;
  }
  std::vector<IntVec> basis;
  for (int j = p; j < n; ++j) {
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = to_int64(u[j][i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace latval::linalg
