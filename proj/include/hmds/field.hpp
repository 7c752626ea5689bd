#pragma once

// Exact arithmetic in GF(p) ⊂ GF(q = p^h) ⊂ GF(q²).
//
// GF(q) elements are stored by their canonical integer Σ aᵢ·pⁱ, where Σ aᵢθⁱ is
// the polynomial form over GF(p) modulo gq. GF(q²) = GF(q)[ε]/(gq2) and its
// elements are pairs (u0, u1) meaning u0 + ε·u1, encoded as u0 + q·u1.
//
// Element types carry no reference to their field; every operation goes
// through the owning FieldTower (or its base GaloisField). Mixing elements of
// different towers is undefined.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmds {

/// Element of GF(q), canonical integer encoding.
class Fq {
 public:
  constexpr Fq() = default;
  constexpr explicit Fq(std::uint32_t v) : v_(static_cast<std::uint16_t>(v)) {}

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr auto operator<=>(Fq, Fq) = default;

 private:
  std::uint16_t v_ = 0;
};

/// Element u0 + ε·u1 of GF(q²).
struct Fq2 {
  Fq u0;
  Fq u1;

  constexpr bool is_zero() const { return u0.is_zero() && u1.is_zero(); }
  friend constexpr auto operator<=>(const Fq2&, const Fq2&) = default;
};

/// Largest supported q² (all verification is exhaustive).
inline constexpr std::uint32_t kMaxExtensionOrder = 1u << 16;

/// Ascending coefficient list of a polynomial (constant term first).
using Coeffs = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t n);

/// Returns (p, h) with q = p^h, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);

/// GF(q) with q = p^h, backed by precomputed addition/multiplication tables.
class GaloisField {
 public:
  /// `modulus` is the monic irreducible of degree h over GF(p); empty selects
  /// smallest_irreducible_over_prime, and it is ignored when h = 1. Throws std::invalid_argument when p is not
  /// prime or the modulus is not monic irreducible of degree h.
  GaloisField(std::uint32_t p, std::uint32_t h, Coeffs modulus = {});

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return h_; }
  std::uint32_t order() const { return q_; }
  const Coeffs& modulus() const { return modulus_; }

  /// Range-checked element construction.
  Fq element(std::uint32_t v) const;
  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }

  Fq add(Fq a, Fq b) const { return Fq{add_[idx(a, b)]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const { return Fq{neg_[a.value()]}; }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[idx(a, b)]}; }
  /// Throws std::domain_error for a = 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  /// Negative exponents invert first.
  Fq pow(Fq a, std::int64_t n) const;

  /// The image of an integer under Z → GF(p) ⊂ GF(q).
  Fq from_int(std::int64_t n) const;

  /// All elements in encoding order.
  std::vector<Fq> elements() const;

 private:
  std::size_t idx(Fq a, Fq b) const { return std::size_t{a.value()} * q_ + b.value(); }

  std::uint32_t p_;
  std::uint32_t h_;
  std::uint32_t q_;
  Coeffs modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

/// Irreducibility of a monic polynomial of degree ≥ 1 over GF(p), by
/// exhaustive trial division by monic polynomials of degree ≤ deg/2.
bool is_irreducible_over_prime(std::uint32_t p, const Coeffs& poly);

/// Smallest monic irreducible of degree h over GF(p), candidates ordered by
/// the integer Σ cᵢ·pⁱ of their non-leading coefficients.
Coeffs smallest_irreducible_over_prime(std::uint32_t p, std::uint32_t h);

/// The chain GF(p) ⊂ GF(q) ⊂ GF(q²) with basis {1, ε} of GF(q²) over GF(q).
class FieldTower {
 public:
  /// `gq2` is X² + c1·X + c0 given as {c0, c1, 1} with coefficients as GF(q)
  /// encodings. Throws std::invalid_argument if it is not monic irreducible,
  /// if q² exceeds kMaxExtensionOrder, or if the trace form on {1, ε} is
  /// degenerate.
  FieldTower(GaloisField base, Coeffs gq2);

  /// Default moduli for GF(q) and GF(q²) (smallest monic irreducibles).
  static FieldTower for_order(std::uint32_t q);

  /// q = 5 with GF(25) = GF(5)[X]/(X² − X + 2).
  static FieldTower reference_instance();

  const GaloisField& base() const { return base_; }
  std::uint32_t p() const { return base_.characteristic(); }
  std::uint32_t h() const { return base_.degree(); }
  std::uint32_t q() const { return base_.order(); }
  const Coeffs& gq() const { return base_.modulus(); }
  const Coeffs& gq2() const { return gq2_; }

  Fq2 zero() const { return {}; }
  Fq2 one() const { return {Fq{1}, Fq{0}}; }
  Fq2 epsilon() const { return {Fq{0}, Fq{1}}; }
  Fq2 embed(Fq a) const { return {a, Fq{0}}; }
  bool in_base(Fq2 a) const { return a.u1.is_zero(); }

  Fq2 add(Fq2 a, Fq2 b) const;
  Fq2 sub(Fq2 a, Fq2 b) const;
  Fq2 neg(Fq2 a) const;
  Fq2 mul(Fq2 a, Fq2 b) const;
  Fq2 scale(Fq k, Fq2 a) const;
  /// Throws std::domain_error for a = 0.
  Fq2 inv(Fq2 a) const;
  Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }
  Fq2 pow(Fq2 a, std::int64_t n) const;

  /// u ↦ u^q.
  Fq2 frobenius(Fq2 u) const;
  /// u ↦ u^q + u.
  Fq trace(Fq2 u) const;
  /// u ↦ u^{q+1}.
  Fq norm(Fq2 u) const;

  std::pair<Fq, Fq> decompose(Fq2 u) const { return {u.u0, u.u1}; }
  Fq2 compose(Fq u0, Fq u1) const { return {u0, u1}; }

  std::uint32_t encode(Fq2 u) const { return u.u0.value() + q() * u.u1.value(); }
  /// Throws std::out_of_range outside [0, q²).
  Fq2 decode(std::uint32_t n) const;

  /// All q² elements in encoding order.
  std::vector<Fq2> elements() const;

 private:
  GaloisField base_;
  Coeffs gq2_;
  Fq c0_;  // gq2 = X² + c1·X + c0
  Fq c1_;
};

}  // namespace hmds
