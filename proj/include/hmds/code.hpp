#pragma once

// The evaluation code C = {(F_λ₁(x,y,1), …, F_λN(x,y,1)) : (x,y) ∈ Ω} and
// the exhaustive checks run against it.

#include <cstdint>
#include <span>
#include <vector>

#include "hmds/codespec.hpp"
#include "hmds/linalg.hpp"

namespace hmds {

/// F_λ(x, y, 1) as N(x) + T(y) + T(λ·x).
Fq form_eval(const CodeSpec& spec, Fq2 lambda, Fq2 x, Fq2 y);

/// x^{q+1} + y^q + y + λ^q·x^q + λ·x, computed term by term in GF(q²).
/// Throws std::logic_error if the sum leaves GF(q).
Fq form_eval_literal(const FieldTower& T, Fq2 lambda, Fq2 x, Fq2 y);

/// Throws std::invalid_argument when m.y ∉ S.
Word encode(const CodeSpec& spec, const Message& m);

/// Ω in enumeration order: x by encoding, then y in S order.
std::vector<Message> messages(const CodeSpec& spec);

/// encode over messages(spec), same order. Budget-checked.
std::vector<Word> enumerate_codewords(const CodeSpec& spec);

std::size_t weight(std::span<const Fq> w);

/// First three independent codewords in Ω order, reduced to rref.
Matrix generator_matrix(const CodeSpec& spec);

/// The 3×6 matrix displayed for the q = 5 instance.
Matrix reference_generator_matrix();

/// Minimum nonzero weight by enumeration.
std::size_t min_distance(const CodeSpec& spec);

struct MdsCheck {
  std::size_t min_distance = 0;
  bool distance_criterion = false;  // d == N − 2
  bool minor_criterion = false;     // every 3 columns of G independent
  bool agree() const { return distance_criterion == minor_criterion; }
};

MdsCheck check_mds(const CodeSpec& spec);
/// Both criteria hold.
bool is_mds(const CodeSpec& spec);

/// counts[i] = A_i, i = 0..N.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

enum class WeightMethod { enumerate, formula };

WeightDistribution weight_distribution(const CodeSpec& spec, WeightMethod method);

/// A_i = C(N,i)(q−1) Σ_{j=0}^{i−N+2} (−1)^j C(i−1,j) q^{i−j−N+2} for
/// N−2 ≤ i ≤ N; 1 for i = 0; 0 otherwise.
std::int64_t mds_weight_formula(std::uint64_t q, std::size_t n, std::size_t i);

/// The expanded closed forms for the three nonzero weights.
struct ClosedForms {
  std::int64_t a_n_minus_2;
  std::int64_t a_n_minus_1;
  std::int64_t a_n;
};
ClosedForms closed_forms(std::int64_t q, std::int64_t n);

/// (0, s₀).
Message zero_message(const CodeSpec& spec);

/// Message whose codeword is encode(m1) + encode(m2), with y canonicalised into S.
Message msg_add(const CodeSpec& spec, const Message& m1, const Message& m2);

/// Message whose codeword is κ·encode(m).
Message msg_scale(const CodeSpec& spec, Fq kappa, const Message& m);

/// Messages in Ω at which every F_λ for λ in `lambdas` vanishes.
std::vector<Message> common_zeros(const CodeSpec& spec, std::span<const Fq2> lambdas);

/// |V(F_λ) ∩ V(F_μ) ∩ Ω|. Throws std::invalid_argument unless λ ≠ μ are both in Λ.
std::size_t pairwise_intersection_count(const CodeSpec& spec, Fq2 lambda, Fq2 mu);

/// common_zeros over all of Λ.
std::vector<Message> common_zero_set(const CodeSpec& spec);

}  // namespace hmds
