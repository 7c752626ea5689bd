#include "hmds/code.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hmds {

Fq form_eval(const CodeSpec& spec, Fq2 lambda, Fq2 x, Fq2 y) {
  const auto& T = spec.tower();
  const auto& F = T.base();
  const Fq v = F.add(F.add(T.norm(x), T.trace(y)), T.trace(T.mul(lambda, x)));
  assert(v == form_eval_literal(T, lambda, x, y));
  return v;
}

Fq form_eval_literal(const FieldTower& T, Fq2 lambda, Fq2 x, Fq2 y) {
  const auto q = static_cast<std::int64_t>(T.q());
  Fq2 s = T.pow(x, q + 1);
  s = T.add(s, T.pow(y, q));
  s = T.add(s, y);
  s = T.add(s, T.mul(T.pow(lambda, q), T.pow(x, q)));
  s = T.add(s, T.mul(lambda, x));
  if (!T.in_base(s)) throw std::logic_error("Hermitian form value outside GF(q)");
  return s.u0;
}

Word encode(const CodeSpec& spec, const Message& m) {
  if (!spec.transversal().contains(m.y)) throw std::invalid_argument("message y component is not in S");
  Word w;
  w.reserve(spec.length());
  for (Fq2 l : spec.lambda().elements()) w.push_back(form_eval(spec, l, m.x, m.y));
  return w;
}

std::vector<Message> messages(const CodeSpec& spec) {
  std::vector<Message> out;
  out.reserve(std::size_t{spec.q()} * spec.q() * spec.q());
  for (Fq2 x : spec.tower().elements())
    for (Fq2 y : spec.transversal().elements()) out.push_back({x, y});
  return out;
}

std::vector<Word> enumerate_codewords(const CodeSpec& spec) {
  spec.require_enumerable();
  std::vector<Word> out;
  for (const auto& m : messages(spec)) out.push_back(encode(spec, m));
  return out;
}

std::size_t weight(std::span<const Fq> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Fq a) { return !a.is_zero(); }));
}

Matrix generator_matrix(const CodeSpec& spec) {
  const auto& F = spec.field();
  std::vector<Vector> rows;
  for (const auto& m : messages(spec)) {
    auto candidate = rows;
    candidate.push_back(encode(spec, m));
    if (rank(F, Matrix::from_rows(candidate)) == candidate.size()) rows = std::move(candidate);
    if (rows.size() == 3) break;
  }
  if (rows.size() < 3) throw std::logic_error("code has dimension below 3");
  return rref(F, Matrix::from_rows(rows));
}

Matrix reference_generator_matrix() {
  auto row = [](std::initializer_list<std::uint32_t> v) {
    Vector out;
    for (auto x : v) out.emplace_back(x);
    return out;
  };
  return Matrix::from_rows({row({1, 1, 1, 1, 1, 1}), row({0, 1, 0, 2, 1, 2}), row({0, 0, 1, 2, 2, 1})});
}

std::size_t min_distance(const CodeSpec& spec) {
  std::size_t d = spec.length();
  for (const auto& w : enumerate_codewords(spec)) {
    const auto wt = weight(w);
    if (wt > 0) d = std::min(d, wt);
  }
  return d;
}

MdsCheck check_mds(const CodeSpec& spec) {
  MdsCheck r;
  r.min_distance = min_distance(spec);
  r.distance_criterion = r.min_distance + 2 == spec.length();
  const Matrix G = generator_matrix(spec);
  const auto& F = spec.field();
  const std::size_t n = spec.length();
  r.minor_criterion = true;
  for (std::size_t a = 0; a < n && r.minor_criterion; ++a)
    for (std::size_t b = a + 1; b < n && r.minor_criterion; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::size_t idx[] = {a, b, c};
        if (rank(F, G.select_columns(idx)) != 3) {
          r.minor_criterion = false;
          break;
        }
      }
  return r;
}

bool is_mds(const CodeSpec& spec) {
  const auto r = check_mds(spec);
  return r.distance_criterion && r.minor_criterion;
}

std::uint64_t WeightDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::int64_t mds_weight_formula(std::uint64_t q_, std::size_t n_, std::size_t i_) {
  const auto q = static_cast<std::int64_t>(q_);
  const auto n = static_cast<std::int64_t>(n_);
  const auto i = static_cast<std::int64_t>(i_);
  if (i == 0) return 1;
  if (i < n - 2 || i > n) return 0;
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j <= i - n + 2; ++j) {
    const std::int64_t term = binom(i - 1, j) * ipow(q, i - j - n + 2);
    sum += (j % 2 ? -term : term);
  }
  return binom(n, i) * (q - 1) * sum;
}

ClosedForms closed_forms(std::int64_t q, std::int64_t n) {
  return {
      (n * n - n) * (q - 1) / 2,
      n * q * q - (n * n - n) * q + n * n - 2 * n,
      q * q * q - n * q * q + ((n * n - n) * q - n * n + 3 * n) / 2,
  };
}

WeightDistribution weight_distribution(const CodeSpec& spec, WeightMethod method) {
  const std::size_t n = spec.length();
  WeightDistribution d{std::vector<std::uint64_t>(n + 1, 0)};
  if (method == WeightMethod::enumerate) {
    for (const auto& w : enumerate_codewords(spec)) ++d.counts[weight(w)];
  } else {
    for (std::size_t i = 0; i <= n; ++i) d.counts[i] = static_cast<std::uint64_t>(mds_weight_formula(spec.q(), n, i));
  }
  return d;
}

Message zero_message(const CodeSpec& spec) { return {spec.tower().zero(), spec.transversal().zero_rep()}; }

Message msg_add(const CodeSpec& spec, const Message& m1, const Message& m2) {
  const auto& T = spec.tower();
  // N(x0+x1) = N(x0) + N(x1) + T(x0^q·x1), so the trace correction is T(x0^q·x1).
  const Fq2 x = T.add(m1.x, m2.x);
  const Fq2 y = T.sub(T.add(m1.y, m2.y), T.mul(T.frobenius(m1.x), m2.x));
  return {x, spec.transversal().with_trace(T.trace(y))};
}

Message msg_scale(const CodeSpec& spec, Fq kappa, const Message& m) {
  const auto& T = spec.tower();
  const auto& F = T.base();
  const Fq t = F.add(F.mul(F.sub(kappa, F.mul(kappa, kappa)), T.norm(m.x)), F.mul(kappa, T.trace(m.y)));
  return {T.scale(kappa, m.x), spec.transversal().with_trace(t)};
}

std::vector<Message> common_zeros(const CodeSpec& spec, std::span<const Fq2> lambdas) {
  std::vector<Message> out;
  for (const auto& m : messages(spec)) {
    const bool all_zero =
        std::all_of(lambdas.begin(), lambdas.end(), [&](Fq2 l) { return form_eval(spec, l, m.x, m.y).is_zero(); });
    if (all_zero) out.push_back(m);
  }
  return out;
}

std::size_t pairwise_intersection_count(const CodeSpec& spec, Fq2 lambda, Fq2 mu) {
  const auto& e = spec.lambda().elements();
  if (lambda == mu) throw std::invalid_argument("pairwise intersection needs two distinct forms");
  if (std::find(e.begin(), e.end(), lambda) == e.end() || std::find(e.begin(), e.end(), mu) == e.end())
    throw std::invalid_argument("pairwise intersection: element not in Lambda");
  const Fq2 pair[] = {lambda, mu};
  return common_zeros(spec, pair).size();
}

std::vector<Message> common_zero_set(const CodeSpec& spec) { return common_zeros(spec, spec.lambda().elements()); }

}  // namespace hmds
