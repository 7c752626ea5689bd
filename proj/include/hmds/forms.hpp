#pragma once

// Homogeneous ternary forms over GF(q): fitting a minimum-degree curve through
// points of PG(2,q) and splitting off linear factors.
//
// A form of degree e stores one coefficient per monomial x^a y^b z^c with
// a+b+c = e, in lexicographic order: x^e, x^{e-1}y, x^{e-1}z, x^{e-2}y², …, z^e.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hmds/field.hpp"
#include "hmds/geometry.hpp"

namespace hmds {

class TernaryForm {
 public:
  using Exponents = std::array<std::size_t, 3>;

  /// Throws std::invalid_argument if coeffs.size() != monomial_count(degree).
  TernaryForm(std::size_t degree, std::vector<Fq> coeffs);
  static TernaryForm zero(std::size_t degree) { return TernaryForm(degree, std::vector<Fq>(monomial_count(degree))); }
  /// a·x + b·y + c·z
  static TernaryForm linear(Fq a, Fq b, Fq c) { return TernaryForm(1, {a, b, c}); }

  static std::size_t monomial_count(std::size_t degree) { return (degree + 1) * (degree + 2) / 2; }
  static std::size_t index_of(std::size_t degree, const Exponents& e);
  static std::vector<Exponents> monomials(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  Fq coeff(const Exponents& e) const { return coeffs_[index_of(degree_, e)]; }
  bool is_zero() const;

  Fq evaluate(const GaloisField& F, const Point2& p) const;

  /// Degree-1 forms only; the line a·x + b·y + c·z = 0.
  Line2 as_line(const GaloisField& F) const;

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  std::size_t degree_;
  std::vector<Fq> coeffs_;
};

TernaryForm multiply(const GaloisField& F, const TernaryForm& a, const TernaryForm& b);

/// f / l when l divides f exactly, nullopt otherwise. l must be a nonzero
/// linear form.
std::optional<TernaryForm> divide_exact(const GaloisField& F, const TernaryForm& f, const TernaryForm& l);

/// The q²+q+1 linear forms whose first nonzero coefficient is 1, ordered
/// (1,b,c) by (b,c), then (0,1,c) by c, then (0,0,1).
std::vector<TernaryForm> normalized_linear_forms(const GaloisField& F);

struct LinearFactorization {
  std::vector<TernaryForm> factors;  // with multiplicity, in trial order
  TernaryForm cofactor;              // no linear factor left
};

/// Trial division by every normalised linear form. Throws
/// std::invalid_argument for the zero form.
LinearFactorization extract_linear_factors(const GaloisField& F, const TernaryForm& f);

struct CurveFit {
  std::size_t degree;
  std::vector<TernaryForm> forms;  // kernel basis of the degree-`degree` evaluation matrix
};

/// Smallest e ≥ 1 with a nonzero degree-e form vanishing on every point
/// (duplicates are ignored). Throws std::invalid_argument on an empty set.
CurveFit fit_min_degree_curve(const GaloisField& F, std::span<const Point2> points);

}  // namespace hmds
