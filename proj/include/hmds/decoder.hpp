#pragma once

// Geometric decoding. A received word r is lifted to the points
// (λᵢ¹, λᵢ², rᵢ, 1) of PG(3,q), which lie on the cone with vertex
// Z∞ = (0,0,1,0) over Ξ = {(λᵢ¹, λᵢ², 0, 1)}. Codewords are exactly the
// sections of that cone by planes z = c1·x + c2·y + c0·t. The decoder looks
// for such a plane through some point P of a line ℓ ⊂ {z = 0} missing Ξ:
// it projects the lifted word from P, fits a minimum-degree curve to the
// image, and tests the linear components of that curve.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hmds/codespec.hpp"
#include "hmds/forms.hpp"
#include "hmds/geometry.hpp"

namespace hmds {

/// Throws std::invalid_argument on a length mismatch.
std::size_t hamming_distance(std::span<const Fq> a, std::span<const Fq> b);

using LiftedWord = std::vector<Point3>;

/// Throws std::invalid_argument unless r has length N.
LiftedWord lift(const CodeSpec& spec, std::span<const Fq> r);

/// Whether p lies on the cone with vertex Z∞ over Ξ.
bool on_cone(const CodeSpec& spec, const Point3& p);

/// (x, y, t) ↦ (x, y, 0, t).
Point3 embed_in_base_plane(const GaloisField& F, const Point2& p);

/// First line of the plane z = 0 (coordinates (x, y, t), lines_of_plane
/// order) containing no point of Ξ; nullopt when there is none.
std::optional<Line2> find_external_line(const CodeSpec& spec);

/// Projection of Q from P onto the coordinate hyperplane x_k = 0, where k is
/// P's last nonzero coordinate: Q − Q_k·P with coordinate k dropped. For an
/// affine P = (p₁, p₂, 0, 1) this is the plane at infinity t = 0 and
/// (λ¹, λ², r, 1) goes to (λ¹ − p₁, λ² − p₂, r). Throws
/// std::invalid_argument when P = Q.
Point2 project_from(const GaloisField& F, const Point3& P, const Point3& Q);

/// The plane z = c1·x + c2·y + c0·t.
struct PlaneCandidate {
  Fq c1;
  Fq c2;
  Fq c0;
  friend constexpr auto operator<=>(const PlaneCandidate&, const PlaneCandidate&) = default;
};

Word plane_to_codeword(const CodeSpec& spec, const PlaneCandidate& plane);
Message plane_to_message(const CodeSpec& spec, const PlaneCandidate& plane);
/// c1 = T(x), c2 = T(ε·x), c0 = N(x) + T(y).
PlaneCandidate message_to_plane(const CodeSpec& spec, const Message& m);
/// The plane whose section is `w`, or nullopt when w ∉ C.
std::optional<PlaneCandidate> codeword_to_plane(const CodeSpec& spec, std::span<const Fq> w);

struct DecodeWitness {
  Point3 center;           // P ∈ ℓ
  TernaryForm factor;      // linear factor of the fitted curve, in projected coordinates
  bool ambiguous = false;  // another factor at the same P also cleared the threshold
};

struct DecodeResult {
  Word codeword;
  Message message;
  PlaneCandidate plane;
  std::vector<std::size_t> corrected_positions;
  std::optional<DecodeWitness> witness;  // empty when the ml fallback produced the result
};

/// Precomputes ℓ and its points for repeated decoding.
class GeometricDecoder {
 public:
  explicit GeometricDecoder(CodeSpec spec);

  const CodeSpec& spec() const { return spec_; }
  const std::optional<Line2>& external_line() const { return line_; }

  /// nullopt is a decoding failure; malformed input throws.
  std::optional<DecodeResult> decode(std::span<const Fq> received) const;

 private:
  std::optional<DecodeResult> fallback(std::span<const Fq> received) const;

  CodeSpec spec_;
  std::optional<Line2> line_;
  std::vector<Point3> centers_;
};

std::optional<DecodeResult> geometric_decode(const CodeSpec& spec, std::span<const Fq> received);

struct MlResult {
  Word codeword;
  std::size_t distance = 0;
  bool tie = false;
};

/// Brute-force nearest codeword; ties broken towards the lexicographically
/// smallest symbol tuple.
class MlDecoder {
 public:
  /// Budget-checked.
  explicit MlDecoder(const CodeSpec& spec);
  MlResult decode(std::span<const Fq> received) const;

 private:
  std::vector<Word> codewords_;  // sorted
};

MlResult ml_decode(const CodeSpec& spec, std::span<const Fq> received);

}  // namespace hmds
