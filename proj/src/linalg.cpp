#include "dqv/linalg.hpp"

#include <exception>

#include <omp.h>

#include "dqv/multipoly.hpp"

namespace dqv {

AlgMatrix transpose(const AlgMatrix& m) {
  if (m.empty()) return {};
  AlgMatrix t(m[0].size(), std::vector<Alg>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

namespace {

// Returns the pivot row for column c at or below row r, or -1.
int find_pivot(const AlgMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t i = r; i < m.size(); ++i)
    if (!decide_zero(m[i][c])) return static_cast<int>(i);
  return -1;
}

template <bool Parallel>
int bareiss_rank(AlgMatrix& m, int threads) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Alg prev(1L);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    int p = find_pivot(m, r, c);
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[r]);
    const Alg inv = prev.inverse();
    const Alg piv = m[r][c];
    const std::vector<Alg>& prow = m[r];
    const long first = static_cast<long>(r + 1), last = static_cast<long>(rows);
    if constexpr (Parallel) {
      std::exception_ptr err;
      int failed_row = -1;
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
      for (long i = first; i < last; ++i) {
        try {
          auto& row = m[static_cast<std::size_t>(i)];
          for (std::size_t j = c + 1; j < cols; ++j) row[j] = (piv * row[j] - row[c] * prow[j]) * inv;
          row[c] = Alg();
        } catch (...) {
#pragma omp critical
          {
            // keep the lowest row index so the rethrown error is deterministic
            if (failed_row < 0 || i < failed_row) {
              failed_row = static_cast<int>(i);
              err = std::current_exception();
            }
          }
        }
      }
      if (err) std::rethrow_exception(err);
    } else {
      for (long i = first; i < last; ++i) {
        auto& row = m[static_cast<std::size_t>(i)];
        for (std::size_t j = c + 1; j < cols; ++j) row[j] = (piv * row[j] - row[c] * prow[j]) * inv;
        row[c] = Alg();
      }
    }
    prev = piv;
    ++r;
  }
  return static_cast<int>(r);
}

// Gauss-Jordan reduced row echelon form; returns pivot columns.
std::vector<int> rref(AlgMatrix& m) {
  std::vector<int> piv;
  const std::size_t rows = m.size();
  if (!rows) return piv;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    int p = find_pivot(m, r, c);
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[r]);
    Alg inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Alg f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

}  // namespace

int rank_serial(AlgMatrix m) { return bareiss_rank<false>(m, 1); }

int rank_parallel(AlgMatrix m, int threads) { return bareiss_rank<true>(m, threads); }

RankCertificate rank_certificate(const AlgMatrix& m) {
  RankCertificate cert;
  const std::size_t n = m.size();
  if (n == 0) return cert;
  const std::size_t cols = m[0].size();
  // Pivot columns of M^T are independent rows of M.
  AlgMatrix t = transpose(m);
  std::vector<int> prow = rref(t);
  cert.rank = static_cast<int>(prow.size());
  cert.rows = prow;
  // Independent columns among the chosen rows.
  AlgMatrix sub;
  for (int i : prow) sub.push_back(m[static_cast<std::size_t>(i)]);
  AlgMatrix sub2 = sub;
  cert.cols = rref(sub2);
  AlgMatrix minor;
  for (std::size_t a = 0; a < cert.rows.size(); ++a) {
    std::vector<Alg> row;
    for (int j : cert.cols) row.push_back(sub[a][static_cast<std::size_t>(j)]);
    minor.push_back(std::move(row));
  }
  cert.minor_det = det_alg(minor);
  // Left kernel: null space of M^T read off its RREF (t now holds it).
  std::vector<char> is_piv(n, 0);
  for (int c : prow) is_piv[static_cast<std::size_t>(c)] = 1;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<Alg> y(n, Alg());
    y[f] = Alg(1L);
    for (std::size_t k = 0; k < prow.size(); ++k) y[static_cast<std::size_t>(prow[k])] = -t[k][f];
    cert.left_kernel.push_back(std::move(y));
  }
  (void)cols;
  return cert;
}

bool verify_certificate(const AlgMatrix& m, const RankCertificate& c) {
  const std::size_t n = m.size();
  if (c.rows.size() != c.cols.size() || static_cast<int>(c.rows.size()) != c.rank) return false;
  if (static_cast<int>(c.left_kernel.size()) != static_cast<int>(n) - c.rank) return false;
  // recompute the minor independently
  AlgMatrix minor;
  for (int i : c.rows) {
    std::vector<Alg> row;
    for (int j : c.cols) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    minor.push_back(std::move(row));
  }
  if (c.rank > 0 && decide_zero(det_alg(minor))) return false;
  if (n == 0) return true;
  const std::size_t cols = m[0].size();
  // y * M = 0 for every kernel vector
  for (const auto& y : c.left_kernel) {
    for (std::size_t j = 0; j < cols; ++j) {
      Alg s;
      for (std::size_t i = 0; i < n; ++i)
        if (!y[i].is_zero()) s += y[i] * m[i][j];
      if (!s.is_zero()) return false;
    }
  }
  // independence: the kernel vectors restricted to the non-chosen rows form
  // an identity block
  std::vector<char> chosen(n, 0);
  for (int i : c.rows) chosen[static_cast<std::size_t>(i)] = 1;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!chosen[i]) free.push_back(i);
  if (free.size() != c.left_kernel.size()) return false;
  for (std::size_t a = 0; a < free.size(); ++a)
    for (std::size_t b = 0; b < free.size(); ++b) {
      const Alg& v = c.left_kernel[a][free[b]];
      if (a == b ? !v.is_one() : !v.is_zero()) return false;
    }
  return true;
}

}  // namespace dqv
