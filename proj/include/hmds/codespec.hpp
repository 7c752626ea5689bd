#pragma once

// A code instance: field tower, ordered arc Λ, transversal S.
//
// Text format (line-oriented, `#` starts a comment, blank lines ignored):
//
//   hermitian-mds v1
//   p=5
//   h=1
//   gq=...            (only when h > 1; ascending coefficients over GF(p))
//   gq2=2,4,1         (ascending coefficients over GF(q), canonical integers)
//   lambda=...        (GF(q²) encodings in coordinate order)
//   s=...             (GF(q²) encodings)
//
// write_codespec emits exactly this key order with no comments, so
// write ∘ read ∘ write is byte-identical.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmds/field.hpp"
#include "hmds/geometry.hpp"

namespace hmds {

using Word = std::vector<Fq>;

/// Element (x, y) of Ω = GF(q²) × S.
struct Message {
  Fq2 x;
  Fq2 y;
  friend constexpr auto operator<=>(const Message&, const Message&) = default;
};

/// Raised by exhaustive operations on instances too large to enumerate.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum |C| = q³ for exhaustive operations.
inline constexpr std::uint64_t kEnumerationBudget = 1u << 18;

class CodeSpec {
 public:
  /// Re-validates Λ and S against `tower`.
  CodeSpec(std::shared_ptr<const FieldTower> tower, const ArcSet& lambda, const Transversal& s);

  /// q = 5, gq2 = X² − X + 2, Λ = (ε³, ε⁴, ε⁸, ε¹⁵, ε¹⁶, ε²⁰), S = GF(5).
  static CodeSpec reference_instance();

  /// Default tower, given Λ strategy, S = GF(q) for odd q and unit_trace
  /// for even q unless overridden.
  static CodeSpec build(std::uint32_t q, const LambdaStrategy& lambda = GreedyLambda{},
                        std::optional<TransversalStrategy> s = std::nullopt);

  const FieldTower& tower() const { return *tower_; }
  const std::shared_ptr<const FieldTower>& tower_ptr() const { return tower_; }
  const GaloisField& field() const { return tower_->base(); }
  const ArcSet& lambda() const { return lambda_; }
  const Transversal& transversal() const { return s_; }
  std::size_t length() const { return lambda_.size(); }
  std::uint32_t q() const { return tower_->q(); }

  /// Throws BudgetExceeded when q³ > kEnumerationBudget.
  void require_enumerable() const;

 private:
  std::shared_ptr<const FieldTower> tower_;
  ArcSet lambda_;
  Transversal s_;
};

std::string write_codespec(const CodeSpec& spec);

/// Throws std::invalid_argument on malformed text or invalid parameters.
CodeSpec read_codespec(std::string_view text);

/// Comma-separated canonical integers, no spaces.
std::string format_list(std::span<const std::uint32_t> values);
std::string format_word(std::span<const Fq> word);

/// Parses "a,b,c" (whitespace around items tolerated). Throws
/// std::invalid_argument on malformed input.
std::vector<std::uint32_t> parse_list(std::string_view text);

}  // namespace hmds
