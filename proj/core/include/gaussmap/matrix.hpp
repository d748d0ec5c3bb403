#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

/// Dense rectangular matrix over the rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatMatrix transposed() const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over the rationals. Fraction-free Bareiss elimination with
/// deterministic pivoting: columns are processed left to right, and the
/// pivot is the first remaining row with a nonzero entry in that column.
long rank(const RatMatrix& m);

/// Basis of the right kernel {v : M v = 0}, one vector per free column in
/// column order, each normalized so its first nonzero coordinate is 1.
/// rank(M) + kernel size = column count.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// Rank of the image of M over F_p. Always <= the exact rank; equality
/// fails only for the finitely many primes dividing a full-rank minor.
/// Throws BadPrimeError when p divides some entry's denominator.
long modular_rank(const RatMatrix& m, std::uint64_t p);

/// Exact rank, with a single-prime modular squeeze: when the modular rank
/// hits min(rows, cols) the exact rank is already pinned and the exact
/// elimination is skipped. Falls back to rank() otherwise.
long rank_fast(const RatMatrix& m);

/// One exact solution of A x = b, or nullopt when the system is
/// inconsistent. When A has full column rank the solution is unique.
std::optional<std::vector<Rational>> solve(const RatMatrix& a,
                                           const std::vector<Rational>& b);

/// Distinct random 30-bit primes from a seeded generator; deterministic in
/// the seed.
std::vector<std::uint64_t> random_primes_30bit(std::size_t count,
                                               std::uint64_t seed);

/// Opt-in audit: while enabled, every exact rank computation is replayed
/// modulo 3 random 30-bit primes and the results compared. Counters are
/// global and thread-safe; enabling never changes any return value.
namespace rank_audit {
void enable(std::uint64_t seed);
void disable();
bool enabled();
std::uint64_t checks();
std::uint64_t mismatches();
}  // namespace rank_audit

}  // namespace gaussmap
