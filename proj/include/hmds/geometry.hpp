#pragma once

// AG(2,q) view of GF(q²), arcs, transversals of ker(trace), and the small
// amount of PG(2,q) / PG(3,q) incidence geometry the decoder needs.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hmds/field.hpp"

namespace hmds {

struct AffinePoint2 {
  Fq x;
  Fq y;
  friend constexpr auto operator<=>(const AffinePoint2&, const AffinePoint2&) = default;
};

/// u0 + ε·u1 ↦ (u0, u1).
AffinePoint2 identify(const FieldTower& T, Fq2 u);

/// Determinant test on homogenised rows. Throws std::invalid_argument when
/// two points coincide.
bool collinear(const GaloisField& F, AffinePoint2 a, AffinePoint2 b, AffinePoint2 c);

/// ((α−β)/(γ−β))^{q−1} ≠ 1 for all pairwise-distinct α, β, γ. Throws
/// std::invalid_argument on duplicate elements.
bool arc_condition_holds(const FieldTower& T, std::span<const Fq2> elements);

/// q+1 for odd q, q+2 for even q.
std::uint32_t max_arc_size(std::uint32_t q);

/// Ordered arc Λ ⊂ GF(q²); the order fixes code coordinates.
class ArcSet {
 public:
  /// Checks distinctness, the arc condition, 3 ≤ N and the size bound.
  /// Throws std::invalid_argument otherwise.
  static ArcSet validated(const FieldTower& T, std::vector<Fq2> elements);

  const std::vector<Fq2>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  Fq2 operator[](std::size_t i) const { return elements_[i]; }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  explicit ArcSet(std::vector<Fq2> e) : elements_(std::move(e)) {}
  std::vector<Fq2> elements_;
};

struct ExplicitLambda {
  std::vector<Fq2> elements;
};
/// {u : N(u) = c}, c ≠ 0, in encoding order.
struct NormCircle {
  Fq c;
};
/// Backtracking extension in encoding order towards max_arc_size(q).
struct GreedyLambda {
  std::uint64_t node_budget = 2'000'000;
};
using LambdaStrategy = std::variant<ExplicitLambda, NormCircle, GreedyLambda>;

/// Throws std::invalid_argument when the result is not a valid arc of size ≥ 3.
ArcSet build_lambda(const FieldTower& T, const LambdaStrategy& strategy);

/// Λ = {ε³, ε⁴, ε⁸, ε¹⁵, ε¹⁶, ε²⁰} over FieldTower::reference_instance().
ArcSet reference_lambda(const FieldTower& T);

/// One representative per coset of T₀ = ker(trace).
class Transversal {
 public:
  /// Throws std::invalid_argument unless |S| = q and trace is a bijection S → GF(q).
  static Transversal validated(const FieldTower& T, std::vector<Fq2> elements);

  const std::vector<Fq2>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Fq2 u) const;
  /// The unique s ∈ S with trace(s) = t.
  Fq2 with_trace(Fq t) const { return by_trace_[t.value()]; }
  /// s₀, the element of S ∩ T₀.
  Fq2 zero_rep() const { return by_trace_[0]; }

  friend bool operator==(const Transversal& a, const Transversal& b) { return a.elements_ == b.elements_; }

 private:
  Transversal(std::vector<Fq2> e, std::vector<Fq2> by_trace) : elements_(std::move(e)), by_trace_(std::move(by_trace)) {}
  std::vector<Fq2> elements_;
  std::vector<Fq2> by_trace_;
};

enum class TransversalStrategy { subfield, unit_trace };

/// subfield: S = GF(q), odd q only. unit_trace: S = GF(q)·μ for the first μ
/// with trace(μ) = 1. Throws std::invalid_argument for subfield with even q.
Transversal build_transversal(const FieldTower& T, TransversalStrategy strategy);

/// Point of PG(Dim, q); coordinates normalised so the last nonzero one is 1.
template <std::size_t Dim>
class ProjPoint {
 public:
  using Coords = std::array<Fq, Dim + 1>;

  /// Throws std::invalid_argument for the zero vector.
  static ProjPoint normalized(const GaloisField& F, Coords c) {
    std::size_t k = Dim + 1;
    while (k > 0 && c[k - 1].is_zero()) --k;
    if (k == 0) throw std::invalid_argument("projective point with all coordinates zero");
    const Fq s = F.inv(c[k - 1]);
    for (auto& v : c) v = F.mul(s, v);
    return ProjPoint(c);
  }

  const Coords& coords() const { return c_; }
  Fq operator[](std::size_t i) const { return c_[i]; }
  /// Index of the last nonzero coordinate (which equals 1).
  std::size_t pivot() const {
    std::size_t k = Dim;
    while (c_[k].is_zero()) --k;
    return k;
  }

  friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  explicit ProjPoint(Coords c) : c_(c) {}
  Coords c_;
};

using Point2 = ProjPoint<2>;
using Point3 = ProjPoint<3>;

/// All points of PG(Dim, q), ordered by pivot position, then by the integer
/// value of the coordinates before the pivot.
template <std::size_t Dim>
std::vector<ProjPoint<Dim>> all_points(const GaloisField& F) {
  std::vector<ProjPoint<Dim>> out;
  const std::uint32_t q = F.order();
  for (std::size_t k = 0; k <= Dim; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= q;
    for (std::uint64_t n = 0; n < count; ++n) {
      typename ProjPoint<Dim>::Coords c{};
      std::uint64_t r = n;
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = Fq{static_cast<std::uint32_t>(r % q)};
        r /= q;
      }
      c[k] = F.one();
      out.push_back(ProjPoint<Dim>::normalized(F, c));
    }
  }
  return out;
}

/// Line a·x + b·y + c·z = 0 of PG(2,q), stored by its dual point (a, b, c).
struct Line2 {
  Point2 dual;
  friend constexpr auto operator<=>(const Line2&, const Line2&) = default;
};

/// Plane of PG(3,q) stored by its dual point.
struct Plane3 {
  Point3 dual;
  friend constexpr auto operator<=>(const Plane3&, const Plane3&) = default;
};

bool on_line(const GaloisField& F, const Line2& l, const Point2& p);
bool on_plane(const GaloisField& F, const Plane3& pi, const Point3& p);

/// All q²+q+1 lines of PG(2,q) in the order of all_points<2> on their duals.
std::vector<Line2> lines_of_plane(const GaloisField& F);

/// The q+1 points of `l`, in all_points<2> order.
std::vector<Point2> points_on_line(const GaloisField& F, const Line2& l);

/// Throws std::invalid_argument for equal points.
Line2 line_through(const GaloisField& F, const Point2& a, const Point2& b);

/// Throws std::invalid_argument when the points are collinear.
Plane3 span_plane(const GaloisField& F, const Point3& a, const Point3& b, const Point3& c);

}  // namespace hmds
