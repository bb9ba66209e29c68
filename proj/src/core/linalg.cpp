#include "linalg.hpp"

#include "errors.hpp"

namespace exc::linalg {

QMat identity(int n) {
  QMat m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat mul(const QMat& a, const QMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat c(n, std::vector<Rat>(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

std::vector<Rat> row_times(const std::vector<Rat>& v, const QMat& m) {
  std::vector<Rat> out(m.empty() ? 0 : m[0].size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

QMat inverse(const QMat& a) {
  const int n = static_cast<int>(a.size());
  QMat m = a, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rat s = 1 / m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat t = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= t * m[c][j];
        inv[r][j] -= t * inv[c][j];
      }
    }
  }
  return inv;
}

Rat det(const QMat& a) {
  const int n = static_cast<int>(a.size());
  QMat m = a;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat t = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= t * m[c][j];
    }
  }
  return d;
}

ZMat hnf_basis(ZMat rows, int n) {
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][c] != 0 && (best < 0 || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best < 0) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (int j = c; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (int j = c; j < n; ++j) rows[r][j] = -rows[r][j];
    ++r;
  }
  if (r != n) throw DomainError("lattice is not of full rank");
  rows.resize(n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < c; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[c][c].get_mpz_t());
      if (q != 0)
        for (int j = c; j < n; ++j) rows[i][j] -= q * rows[c][j];
    }
  return rows;
}

std::vector<FVec> left_kernel(const FMat& m, std::uint64_t p) {
  // Solve M^T x = 0 by reduced row echelon form of M^T.
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  FMat t(cols, FVec(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j] % p;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < rows && r < cols; ++c) {
    size_t piv = r;
    while (piv < cols && t[piv][c] == 0) ++piv;
    if (piv == cols) continue;
    std::swap(t[piv], t[r]);
    std::uint64_t inv = invmod(t[r][c], p);
    for (auto& x : t[r]) x = mulmod(x, inv, p);
    for (size_t i = 0; i < cols; ++i) {
      if (i == r || t[i][c] == 0) continue;
      std::uint64_t f = t[i][c];
      for (size_t j = 0; j < rows; ++j) t[i][j] = (t[i][j] + p - mulmod(f, t[r][j], p)) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(rows, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<FVec> basis;
  for (size_t free = 0; free < rows; ++free) {
    if (is_pivot[free]) continue;
    FVec v(rows, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - t[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_mod_p(FMat m, std::uint64_t p) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = invmod(m[r][c] % p, p);
    for (size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = mulmod(m[i][c] % p, inv, p);
      if (!f) continue;
      for (size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] % p + p - mulmod(f, m[r][j] % p, p)) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace exc::linalg
