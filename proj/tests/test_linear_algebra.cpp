#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gaussmap/errors.hpp"
#include "gaussmap/matrix.hpp"

namespace {

using namespace gaussmap;

// Plain fraction-full Gaussian elimination, used as the rank oracle.
long naive_rank(RatMatrix m) {
  long r = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::swap(m.at(row, j), m.at(pivot, j));
    }
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (is_zero(m.at(i, col))) continue;
      Rational factor = m.at(i, col) / m.at(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    ++row;
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim,
                        bool fractions) {
  std::size_t rows = rng() % max_dim + 1;
  std::size_t cols = rng() % max_dim + 1;
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = fractions ? static_cast<long>(rng() % 9) + 1 : 1;
      m.at(i, j) = make_rational(num, den);
    }
  }
  return m;
}

std::vector<Rational> mat_apply(const RatMatrix& m,
                            const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i] += m.at(i, j) * v[j];
    }
  }
  return out;
}

struct AuditGuard {
  explicit AuditGuard(std::uint64_t seed) { rank_audit::enable(seed); }
  ~AuditGuard() { rank_audit::disable(); }
};

}  // namespace

TEST_CASE("frozen rank and kernel examples") {
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(kernel_basis(RatMatrix::identity(5)).empty());

  RatMatrix row = RatMatrix::from_rows({{Rational(1), Rational(1)}});
  CHECK(rank(row) == 1);
  auto ker = kernel_basis(row);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<Rational>{Rational(1), Rational(-1)});

  RatMatrix zero(3, 4);
  CHECK(rank(zero) == 0);
  CHECK(kernel_basis(zero).size() == 4);

  RatMatrix prop = RatMatrix::from_rows(
      {{Rational(2), Rational(4)}, {Rational(1), Rational(2)}});
  CHECK(rank(prop) == 1);
  CHECK(modular_rank(prop, 101) == 1);
  CHECK(modular_rank(RatMatrix::identity(5), 101) == 5);
}

TEST_CASE("hilbert and degenerate vandermonde ranks") {
  RatMatrix hilbert(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      hilbert.at(i, j) = make_rational(1, static_cast<long>(i + j + 1));
    }
  }
  CHECK(rank(hilbert) == 6);

  // Vandermonde nodes 1, 2, 3, 2: the repeated node drops the rank.
  std::vector<long> nodes{1, 2, 3, 2};
  RatMatrix vm(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < 4; ++j) {
      vm.at(i, j) = p;
      p *= Rational(nodes[i]);
    }
  }
  CHECK(rank(vm) == 3);
}

TEST_CASE("rank agrees with the elimination oracle on random matrices") {
  std::mt19937_64 rng(201);
  for (int it = 0; it < 300; ++it) {
    RatMatrix m = random_matrix(rng, 7, it % 2 == 0);
    long r = rank(m);
    CHECK(r == naive_rank(m));
    CHECK(r == rank(m.transposed()));
    CHECK(r == rank_fast(m));

    auto ker = kernel_basis(m);
    CHECK(r + static_cast<long>(ker.size()) ==
          static_cast<long>(m.cols()));
    for (const auto& v : ker) {
      for (const Rational& entry : mat_apply(m, v)) CHECK(is_zero(entry));
      auto first = std::find_if(v.begin(), v.end(), [](const Rational& q) {
        return !is_zero(q);
      });
      REQUIRE(first != v.end());
      CHECK(*first == 1);
    }
  }
}

TEST_CASE("rank is invariant under column permutation") {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 50; ++it) {
    RatMatrix m = random_matrix(rng, 6, true);
    std::vector<std::size_t> perm(m.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RatMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        p.at(i, j) = m.at(i, perm[j]);
      }
    }
    CHECK(rank(m) == rank(p));
  }
}

TEST_CASE("modular rank equals exact rank for small integer matrices") {
  // With entries in [-9, 9] and dimension <= 5, every nonzero minor is far
  // below 2^30, so no 30-bit prime can collapse it: equality is certain,
  // not merely probable.
  auto primes = random_primes_30bit(3, 424242);
  std::mt19937_64 rng(203);
  for (int it = 0; it < 1000; ++it) {
    RatMatrix m = random_matrix(rng, 5, false);
    long r = rank(m);
    for (std::uint64_t p : primes) {
      long mr = modular_rank(m, p);
      CHECK(mr <= r);
      CHECK(mr == r);
    }
  }
}

TEST_CASE("modular reduction rejects primes dividing a denominator") {
  RatMatrix m(1, 1);
  m.at(0, 0) = make_rational(1, 101);
  CHECK_THROWS_AS(modular_rank(m, 101), BadPrimeError);
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  std::mt19937_64 rng(204);
  for (int it = 0; it < 100; ++it) {
    RatMatrix m = random_matrix(rng, 6, true);
    std::vector<Rational> x(m.cols());
    for (auto& q : x) q = make_rational(static_cast<long>(rng() % 11) - 5);
    std::vector<Rational> b = mat_apply(m, x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(mat_apply(m, *sol) == b);
  }

  RatMatrix m = RatMatrix::from_rows({{Rational(1)}, {Rational(1)}});
  CHECK_FALSE(solve(m, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("random 30-bit primes are deterministic and prime-looking") {
  auto a = random_primes_30bit(5, 99);
  auto b = random_primes_30bit(5, 99);
  CHECK(a == b);
  CHECK(a != random_primes_30bit(5, 100));
  for (std::uint64_t p : a) {
    CHECK(p >= (1u << 29));
    CHECK(p < (1u << 30));
    for (std::uint64_t q = 2; q < 1000; ++q) CHECK(p % q != 0);
  }
  // All distinct.
  std::sort(a.begin(), a.end());
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
}

TEST_CASE("rank audit replays exact ranks modulo random primes") {
  CHECK_FALSE(rank_audit::enabled());
  {
    AuditGuard guard(7);  // enable() zeroes both counters
    CHECK(rank_audit::enabled());
    std::mt19937_64 rng(205);
    for (int it = 0; it < 20; ++it) {
      RatMatrix m = random_matrix(rng, 5, true);
      (void)rank(m);
    }
  }
  CHECK_FALSE(rank_audit::enabled());
  CHECK(rank_audit::checks() >= 20);
  CHECK(rank_audit::mismatches() == 0);
}
