#include "gaussmap/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>

#include "gaussmap/errors.hpp"
#include "modarith.hpp"

namespace gaussmap {

namespace {

// --- audit state ----------------------------------------------------------

std::atomic<bool> g_audit_on{false};
std::atomic<std::uint64_t> g_audit_checks{0};
std::atomic<std::uint64_t> g_audit_mismatches{0};
std::mutex g_audit_mutex;
std::mt19937_64 g_audit_rng;

std::uint64_t draw_prime_30bit(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1u << 29, (1u << 30) - 1);
  for (;;) {
    std::uint64_t c = dist(rng) | 1;
    if (detail::is_prime_u64(c)) return c;
  }
}

void audit_check(const RatMatrix& m, long exact_rank) {
  if (!g_audit_on.load(std::memory_order_relaxed)) return;
  std::uint64_t primes[3];
  {
    std::lock_guard<std::mutex> lock(g_audit_mutex);
    for (auto& p : primes) p = draw_prime_30bit(g_audit_rng);
  }
  for (std::uint64_t p : primes) {
    long r = -1;
    for (int attempt = 0; attempt < 16; ++attempt) {
      try {
        r = modular_rank(m, p);
        break;
      } catch (const BadPrimeError&) {
        std::lock_guard<std::mutex> lock(g_audit_mutex);
        p = draw_prime_30bit(g_audit_rng);
      }
    }
    g_audit_checks.fetch_add(1, std::memory_order_relaxed);
    if (r != exact_rank) {
      g_audit_mismatches.fetch_add(1, std::memory_order_relaxed);
    }
  }
}

// --- integer elimination core ---------------------------------------------

using ZRow = std::vector<Integer>;

/// Row-scales away all denominators; scaling by positive rationals neither
/// changes the rank nor moves any zero entry, so pivot choices are
/// unaffected.
std::vector<ZRow> integer_image(const RatMatrix& m) {
  std::vector<ZRow> z(m.rows(), ZRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      z[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }
  return z;
}

long bareiss_rank(std::vector<ZRow> a, std::size_t cols) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        Integer rem;
        mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0) throw InternalError("fraction-free step not exact");
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return RatMatrix();
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw InternalError("ragged matrix rows");
  }
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

long rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  long r = bareiss_rank(integer_image(m), m.cols());
  audit_check(m, r);
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Reduced row echelon form over Q with the same pivot rule as rank().
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -a[i][j];
    }
    std::size_t first = 0;
    while (is_zero(v[first])) ++first;
    Rational inv = Rational(1) / v[first];
    for (Rational& x : v) x *= inv;
    basis.push_back(std::move(v));
  }
  return basis;
}

long modular_rank(const RatMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<std::uint64_t>> a(rows,
                                            std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = reduce_mod(m.at(i, j), p);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = detail::invmod(a[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = detail::mulmod(a[i][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + p - detail::mulmod(f, a[r][j], p)) % p;
      }
    }
    ++r;
  }
  return static_cast<long>(r);
}

long rank_fast(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const long full = static_cast<long>(std::min(m.rows(), m.cols()));
  for (std::uint64_t p : {1073741827ull, 1073741831ull, 1073741833ull}) {
    try {
      long r = modular_rank(m, p);
      if (r == full) {
        // Modular rank is a lower bound, so a full modular rank pins the
        // exact value without running the integer elimination.
        audit_check(m, full);
        return full;
      }
      break;
    } catch (const BadPrimeError&) {
      continue;
    }
  }
  return rank(m);
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a,
                                           const std::vector<Rational>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw InternalError("solve: size mismatch");
  std::vector<std::vector<Rational>> aug(rows,
                                         std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a.at(i, j);
    aug[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(aug[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(aug[piv], aug[r]);
    Rational inv = Rational(1) / aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(aug[i][c])) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero(aug[i][cols])) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    x[pivot_col[i]] = aug[i][cols];
  }
  return x;
}

std::vector<std::uint64_t> random_primes_30bit(std::size_t count,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    std::uint64_t p = draw_prime_30bit(rng);
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
      primes.push_back(p);
    }
  }
  return primes;
}

namespace rank_audit {

void enable(std::uint64_t seed) {
  std::lock_guard<std::mutex> lock(g_audit_mutex);
  g_audit_rng.seed(seed);
  g_audit_checks.store(0);
  g_audit_mismatches.store(0);
  g_audit_on.store(true);
}

void disable() { g_audit_on.store(false); }
bool enabled() { return g_audit_on.load(); }
std::uint64_t checks() { return g_audit_checks.load(); }
std::uint64_t mismatches() { return g_audit_mismatches.load(); }

}  // namespace rank_audit

}  // namespace gaussmap
