#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hmds/code.hpp"
#include "hmds/linalg.hpp"

using namespace hmds;

namespace {

Matrix random_matrix(const GaloisField& F, std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = F.element(pick(rng));
  return m;
}

// Row space enumerated by brute force.
std::set<Vector> row_space(const GaloisField& F, const Matrix& m) {
  std::set<Vector> out;
  std::vector<std::uint32_t> coef(m.rows(), 0);
  while (true) {
    Vector v(m.cols(), F.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = F.add(v[j], F.mul(Fq(coef[i]), m(i, j)));
    out.insert(v);
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == F.order()) coef[k++] = 0;
    if (k == coef.size()) break;
  }
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("identity and zero matrices") {
  const GaloisField F(5, 1);
  CHECK(rref(F, Matrix::identity(4)) == Matrix::identity(4));
  CHECK(rank(F, Matrix::identity(4)) == 4);
  const auto k = kernel_basis(F, Matrix(1, 3));
  CHECK(k.size() == 3);
  CHECK(rank(F, Matrix(2, 5)) == 0);
}

TEST_CASE("displayed generator matrix has rank 3") {
  const GaloisField F(5, 1);
  const Matrix G = reference_generator_matrix();
  CHECK(G.rows() == 3);
  CHECK(G.cols() == 6);
  CHECK(rank(F, G) == 3);
}

TEST_CASE("from_rows rejects ragged input") {
  CHECK_THROWS_AS(Matrix::from_rows({{Fq(1), Fq(0)}, {Fq(1)}}), std::invalid_argument);
}

TEST_CASE("random matrices against brute force") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    CAPTURE(q);
    const auto [p, h] = *prime_power(q);
    const GaloisField F(p, h);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + trial % 3, c = 1 + (trial / 3) % 5;
      const Matrix m = random_matrix(F, rng, r, c);
      const std::size_t rk = rank(F, m);
      const auto space = row_space(F, m);
      REQUIRE(space.size() == ipow(q, rk));

      const Matrix e = rref(F, m);
      CHECK(same_row_space(F, m, e));
      for (std::size_t i = 0; i < e.rows(); ++i) CHECK(in_row_space(F, m, e.row(i)));
      for (const auto& v : space) CHECK(in_row_space(F, m, v));

      const auto kernel = kernel_basis(F, m);
      CHECK(kernel.size() == c - rk);
      for (const auto& v : kernel) {
        for (Fq x : multiply(F, m, v)) CHECK(x.is_zero());
      }
      if (!kernel.empty()) CHECK(rank(F, Matrix::from_rows(kernel)) == kernel.size());

      Vector x(c);
      std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
      for (auto& v : x) v = F.element(pick(rng));
      const Vector b = multiply(F, m, x);
      const auto sol = solve(F, m, b);
      REQUIRE(sol);
      CHECK(multiply(F, m, *sol) == b);
    }
  }
}

TEST_CASE("inconsistent system") {
  const GaloisField F(3, 1);
  const Matrix m = Matrix::from_rows({{Fq(1), Fq(1)}, {Fq(2), Fq(2)}});
  const Vector b{Fq(1), Fq(1)};
  CHECK_FALSE(solve(F, m, b));
  CHECK_THROWS_AS(solve(F, m, Vector{Fq(1)}), std::invalid_argument);
  CHECK_THROWS_AS(multiply(F, m, Vector{Fq(1)}), std::invalid_argument);
}

TEST_CASE("select_columns") {
  const Matrix m = Matrix::from_rows({{Fq(1), Fq(2), Fq(3)}, {Fq(4), Fq(0), Fq(1)}});
  const std::size_t idx[] = {2, 0};
  CHECK(m.select_columns(idx) == Matrix::from_rows({{Fq(3), Fq(1)}, {Fq(1), Fq(4)}}));
}

TEST_CASE("text round trip") {
  const GaloisField F(5, 1);
  const Matrix G = reference_generator_matrix();
  const std::string text = to_text(G);
  CHECK(matrix_from_text(F, text) == G);
  CHECK(to_text(Matrix::from_rows({{Fq(1), Fq(0)}, {Fq(4), Fq(2)}})) == "1 0\n4 2\n");
  CHECK_THROWS_AS(matrix_from_text(F, "1 2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text(F, "1 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text(F, "1 x\n"), std::invalid_argument);
}
