#include "hmds/forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hmds/linalg.hpp"

namespace hmds {

TernaryForm::TernaryForm(std::size_t degree, std::vector<Fq> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != monomial_count(degree_)) throw std::invalid_argument("ternary form: wrong coefficient count");
}

std::size_t TernaryForm::index_of(std::size_t degree, const Exponents& e) {
  // Monomials with x-exponent > a come first: Σ_{a'=a+1}^{d} (d−a'+1).
  const std::size_t a = e[0];
  const std::size_t k = degree - a;  // number of x-exponents above a
  const std::size_t before = k * (k + 1) / 2;
  return before + (degree - a - e[1]);
}

std::vector<TernaryForm::Exponents> TernaryForm::monomials(std::size_t degree) {
  std::vector<Exponents> out;
  out.reserve(monomial_count(degree));
  for (std::size_t a = degree + 1; a-- > 0;)
    for (std::size_t b = degree - a + 1; b-- > 0;) out.push_back({a, b, degree - a - b});
  return out;
}

bool TernaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Fq c) { return c.is_zero(); });
}

Fq TernaryForm::evaluate(const GaloisField& F, const Point2& p) const {
  const auto mons = monomials(degree_);
  Fq acc;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    Fq term = coeffs_[i];
    for (std::size_t v = 0; v < 3; ++v) term = F.mul(term, F.pow(p[v], static_cast<std::int64_t>(mons[i][v])));
    acc = F.add(acc, term);
  }
  return acc;
}

Line2 TernaryForm::as_line(const GaloisField& F) const {
  if (degree_ != 1) throw std::invalid_argument("as_line: form is not linear");
  return Line2{Point2::normalized(F, {coeffs_[0], coeffs_[1], coeffs_[2]})};
}

TernaryForm multiply(const GaloisField& F, const TernaryForm& a, const TernaryForm& b) {
  const std::size_t d = a.degree() + b.degree();
  std::vector<Fq> c(TernaryForm::monomial_count(d));
  const auto ma = TernaryForm::monomials(a.degree());
  const auto mb = TernaryForm::monomials(b.degree());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const TernaryForm::Exponents e{ma[i][0] + mb[j][0], ma[i][1] + mb[j][1], ma[i][2] + mb[j][2]};
      auto& slot = c[TernaryForm::index_of(d, e)];
      slot = F.add(slot, F.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return TernaryForm(d, std::move(c));
}

std::optional<TernaryForm> divide_exact(const GaloisField& F, const TernaryForm& f, const TernaryForm& l) {
  if (l.degree() != 1 || l.is_zero()) throw std::invalid_argument("divide_exact: divisor must be a nonzero linear form");
  if (f.degree() == 0) return f.is_zero() ? std::optional<TernaryForm>(f) : std::nullopt;
  // Lead variable v: first nonzero coefficient of l. Eliminate every term
  // divisible by v, highest v-power first.
  std::size_t v = 0;
  while (l.coeffs()[v].is_zero()) ++v;
  const Fq lead_inv = F.inv(l.coeffs()[v]);

  const std::size_t d = f.degree();
  std::vector<Fq> rem = f.coeffs();
  std::vector<Fq> quo(TernaryForm::monomial_count(d - 1));
  const auto mons = TernaryForm::monomials(d);
  for (std::size_t k = d; k >= 1; --k) {
    for (const auto& m : mons) {
      if (m[v] != k) continue;
      const Fq c = rem[TernaryForm::index_of(d, m)];
      if (c.is_zero()) continue;
      const Fq qc = F.mul(c, lead_inv);
      auto mq = m;
      --mq[v];
      auto& qslot = quo[TernaryForm::index_of(d - 1, mq)];
      qslot = F.add(qslot, qc);
      for (std::size_t w = 0; w < 3; ++w) {
        if (l.coeffs()[w].is_zero()) continue;
        auto mr = mq;
        ++mr[w];
        auto& rslot = rem[TernaryForm::index_of(d, mr)];
        rslot = F.sub(rslot, F.mul(qc, l.coeffs()[w]));
      }
    }
  }
  if (!std::all_of(rem.begin(), rem.end(), [](Fq c) { return c.is_zero(); })) return std::nullopt;
  return TernaryForm(d - 1, std::move(quo));
}

std::vector<TernaryForm> normalized_linear_forms(const GaloisField& F) {
  std::vector<TernaryForm> out;
  const auto elems = F.elements();
  for (Fq b : elems)
    for (Fq c : elems) out.push_back(TernaryForm::linear(F.one(), b, c));
  for (Fq c : elems) out.push_back(TernaryForm::linear(F.zero(), F.one(), c));
  out.push_back(TernaryForm::linear(F.zero(), F.zero(), F.one()));
  return out;
}

LinearFactorization extract_linear_factors(const GaloisField& F, const TernaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero form");
  LinearFactorization r{{}, f};
  for (const auto& l : normalized_linear_forms(F)) {
    while (r.cofactor.degree() > 0) {
      auto quotient = divide_exact(F, r.cofactor, l);
      if (!quotient) break;
      r.factors.push_back(l);
      r.cofactor = std::move(*quotient);
    }
    if (r.cofactor.degree() == 0) break;
  }
  return r;
}

CurveFit fit_min_degree_curve(const GaloisField& F, std::span<const Point2> points) {
  if (points.empty()) throw std::invalid_argument("curve fit needs at least one point");
  const std::set<Point2> distinct_set(points.begin(), points.end());
  const std::vector<Point2> distinct(distinct_set.begin(), distinct_set.end());
  // Any point set of PG(2,q) lies on a curve of degree q+1.
  for (std::size_t e = 1; e <= F.order() + 1; ++e) {
    const auto mons = TernaryForm::monomials(e);
    Matrix m(distinct.size(), mons.size());
    for (std::size_t r = 0; r < distinct.size(); ++r) {
      for (std::size_t c = 0; c < mons.size(); ++c) {
        Fq term = F.one();
        for (std::size_t v = 0; v < 3; ++v)
          term = F.mul(term, F.pow(distinct[r][v], static_cast<std::int64_t>(mons[c][v])));
        m(r, c) = term;
      }
    }
    auto kernel = kernel_basis(F, m);
    if (kernel.empty()) continue;
    CurveFit fit{e, {}};
    for (auto& k : kernel) fit.forms.emplace_back(e, std::move(k));
    return fit;
  }
  throw std::logic_error("no curve of degree <= q+1 through the point set");
}

}  // namespace hmds
