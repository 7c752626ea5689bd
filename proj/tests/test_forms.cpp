#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hmds/forms.hpp"

using namespace hmds;

namespace {

TernaryForm quadratic(std::uint32_t xx, std::uint32_t xy, std::uint32_t xz, std::uint32_t yy, std::uint32_t yz,
                      std::uint32_t zz) {
  return TernaryForm(2, {Fq(xx), Fq(xy), Fq(xz), Fq(yy), Fq(yz), Fq(zz)});
}

TernaryForm product(const GaloisField& F, const std::vector<TernaryForm>& fs) {
  TernaryForm r(0, {F.one()});
  for (const auto& f : fs) r = multiply(F, r, f);
  return r;
}

std::vector<Point2> zeros(const GaloisField& F, const TernaryForm& f) {
  std::vector<Point2> out;
  for (const auto& p : all_points<2>(F))
    if (f.evaluate(F, p).is_zero()) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("monomial indexing") {
  const auto mons = TernaryForm::monomials(2);
  CHECK(mons.size() == 6);
  CHECK(mons.front() == TernaryForm::Exponents{2, 0, 0});
  CHECK(mons[1] == TernaryForm::Exponents{1, 1, 0});
  CHECK(mons.back() == TernaryForm::Exponents{0, 0, 2});
  for (std::size_t e = 0; e < 6; ++e) {
    const auto all = TernaryForm::monomials(e);
    CHECK(all.size() == TernaryForm::monomial_count(e));
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(TernaryForm::index_of(e, all[i]) == i);
  }
  CHECK_THROWS_AS(TernaryForm(2, {Fq(1)}), std::invalid_argument);
}

TEST_CASE("linear forms of PG(2,q)") {
  const GaloisField F(5, 1);
  const auto forms = normalized_linear_forms(F);
  CHECK(forms.size() == 31);
  CHECK(forms.front() == TernaryForm::linear(Fq(1), Fq(0), Fq(0)));
  CHECK(forms[1] == TernaryForm::linear(Fq(1), Fq(0), Fq(1)));
  CHECK(forms.back() == TernaryForm::linear(Fq(0), Fq(0), Fq(1)));
  for (const auto& l : forms) CHECK(zeros(F, l).size() == 6);
}

TEST_CASE("factoring small forms over GF(5)") {
  const GaloisField F(5, 1);
  const auto x = TernaryForm::linear(Fq(1), Fq(0), Fq(0));
  const auto y = TernaryForm::linear(Fq(0), Fq(1), Fq(0));

  auto fx = extract_linear_factors(F, multiply(F, x, y));
  CHECK(fx.factors == std::vector{x, y});
  CHECK(fx.cofactor.degree() == 0);

  // x² + y² = (x + 2y)(x + 3y)
  auto sq = extract_linear_factors(F, quadratic(1, 0, 0, 1, 0, 0));
  CHECK(sq.factors ==
        std::vector{TernaryForm::linear(Fq(1), Fq(2), Fq(0)), TernaryForm::linear(Fq(1), Fq(3), Fq(0))});

  // xz − y² and x² − xy + 2y² have no linear factor.
  for (const auto& f : {quadratic(0, 0, 1, 4, 0, 0), quadratic(1, 4, 0, 2, 0, 0)}) {
    const auto r = extract_linear_factors(F, f);
    CHECK(r.factors.empty());
    CHECK(r.cofactor == f);
  }
  CHECK_THROWS_AS(extract_linear_factors(F, TernaryForm::zero(2)), std::invalid_argument);

  CHECK_FALSE(divide_exact(F, quadratic(0, 0, 1, 4, 0, 0), x));
  CHECK(divide_exact(F, multiply(F, x, y), y) == x);
}

TEST_CASE("product evaluates pointwise") {
  const GaloisField F(7, 1);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> pick(0, 6);
  const auto pts = all_points<2>(F);
  for (int i = 0; i < 50; ++i) {
    std::vector<Fq> a(6), b(10);
    for (auto& v : a) v = Fq(pick(rng));
    for (auto& v : b) v = Fq(pick(rng));
    const TernaryForm f(2, a), g(3, b);
    const auto h = multiply(F, f, g);
    CHECK(h.degree() == 5);
    for (const auto& p : pts) REQUIRE(h.evaluate(F, p) == F.mul(f.evaluate(F, p), g.evaluate(F, p)));
  }
}

TEST_CASE("factorisation reproduces random products") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    CAPTURE(q);
    const auto [p, h] = *prime_power(q);
    const GaloisField F(p, h);
    const auto lines = normalized_linear_forms(F);
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
    std::uniform_int_distribution<std::uint32_t> scalar(1, q - 1);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<TernaryForm> chosen;
      for (int k = 0; k < 1 + trial % 4; ++k) chosen.push_back(lines[pick(rng)]);
      TernaryForm f = product(F, chosen);
      const Fq c = Fq(scalar(rng));
      f = multiply(F, f, TernaryForm(0, {c}));
      const auto r = extract_linear_factors(F, f);
      CHECK(r.cofactor == TernaryForm(0, {c}));
      auto expected = chosen, got = r.factors;
      const auto by_coeffs = [](const TernaryForm& a, const TernaryForm& b) { return a.coeffs() < b.coeffs(); };
      std::sort(expected.begin(), expected.end(), by_coeffs);
      std::sort(got.begin(), got.end(), by_coeffs);
      CHECK(got == expected);
      CHECK(multiply(F, product(F, r.factors), r.cofactor) == f);
    }
  }
}

TEST_CASE("minimum-degree curve fitting") {
  const GaloisField F(5, 1);
  const auto pt = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return Point2::normalized(F, {Fq(a), Fq(b), Fq(c)});
  };

  const std::vector<Point2> on_line{pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1), pt(3, 3, 1), pt(3, 3, 1)};
  const auto fit1 = fit_min_degree_curve(F, on_line);
  CHECK(fit1.degree == 1);
  REQUIRE(fit1.forms.size() == 1);
  for (const auto& p : on_line) CHECK(fit1.forms[0].evaluate(F, p).is_zero());

  const std::vector<Point2> frame{pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)};
  const auto fit2 = fit_min_degree_curve(F, frame);
  CHECK(fit2.degree == 2);
  CHECK(fit2.forms.size() == 2);
  for (const auto& f : fit2.forms)
    for (const auto& p : frame) CHECK(f.evaluate(F, p).is_zero());

  // Six points of the conic xz = y² need degree 2 and a unique conic.
  std::vector<Point2> conic;
  for (std::uint32_t t = 0; t < 5; ++t) conic.push_back(pt(1, t, (t * t) % 5));
  conic.push_back(pt(0, 0, 1));
  const auto fit3 = fit_min_degree_curve(F, conic);
  CHECK(fit3.degree == 2);
  CHECK(fit3.forms.size() == 1);
  CHECK(extract_linear_factors(F, fit3.forms[0]).factors.empty());

  CHECK_THROWS_AS(fit_min_degree_curve(F, std::vector<Point2>{}), std::invalid_argument);
  CHECK(fit_min_degree_curve(F, all_points<2>(F)).degree == 6);
}
