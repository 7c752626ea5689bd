#include "hmds/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "hmds/code.hpp"
#include "hmds/linalg.hpp"

namespace hmds {

std::size_t hamming_distance(std::span<const Fq> a, std::span<const Fq> b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

namespace {

void require_length(const CodeSpec& spec, std::span<const Fq> r) {
  if (r.size() != spec.length())
    throw std::invalid_argument("word has length " + std::to_string(r.size()) + ", expected " +
                                std::to_string(spec.length()));
  for (Fq a : r)
    if (a.value() >= spec.q()) throw std::invalid_argument("word symbol out of range");
}

Point3 vertex(const GaloisField& F) { return Point3::normalized(F, {F.zero(), F.zero(), F.one(), F.zero()}); }

}  // namespace

LiftedWord lift(const CodeSpec& spec, std::span<const Fq> r) {
  require_length(spec, r);
  const auto& F = spec.field();
  LiftedWord out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto [x, y] = identify(spec.tower(), spec.lambda()[i]);
    out.push_back(Point3::normalized(F, {x, y, r[i], F.one()}));
  }
  return out;
}

bool on_cone(const CodeSpec& spec, const Point3& p) {
  const auto& F = spec.field();
  if (p == vertex(F)) return true;
  if (p[3].is_zero()) return false;
  const AffinePoint2 base{p[0], p[1]};
  const auto& e = spec.lambda().elements();
  return std::any_of(e.begin(), e.end(), [&](Fq2 l) { return identify(spec.tower(), l) == base; });
}

Point3 embed_in_base_plane(const GaloisField& F, const Point2& p) {
  return Point3::normalized(F, {p[0], p[1], F.zero(), p[2]});
}

std::optional<Line2> find_external_line(const CodeSpec& spec) {
  const auto& F = spec.field();
  std::vector<Point2> xi;
  for (Fq2 l : spec.lambda().elements()) {
    const auto [x, y] = identify(spec.tower(), l);
    xi.push_back(Point2::normalized(F, {x, y, F.one()}));
  }
  for (const auto& line : lines_of_plane(F)) {
    const bool external = std::none_of(xi.begin(), xi.end(), [&](const Point2& p) { return on_line(F, line, p); });
    if (external) return line;
  }
  return std::nullopt;
}

Point2 project_from(const GaloisField& F, const Point3& P, const Point3& Q) {
  if (P == Q) throw std::invalid_argument("project_from: centre equals the projected point");
  const std::size_t k = P.pivot();
  Point2::Coords out{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == k) continue;
    out[j++] = F.sub(Q[i], F.mul(Q[k], P[i]));
  }
  return Point2::normalized(F, out);
}

Word plane_to_codeword(const CodeSpec& spec, const PlaneCandidate& plane) {
  const auto& F = spec.field();
  Word w;
  for (Fq2 l : spec.lambda().elements()) {
    const auto [x, y] = identify(spec.tower(), l);
    w.push_back(F.add(F.add(F.mul(plane.c1, x), F.mul(plane.c2, y)), plane.c0));
  }
  return w;
}

PlaneCandidate message_to_plane(const CodeSpec& spec, const Message& m) {
  const auto& T = spec.tower();
  return {T.trace(m.x), T.trace(T.mul(T.epsilon(), m.x)), T.base().add(T.norm(m.x), T.trace(m.y))};
}

Message plane_to_message(const CodeSpec& spec, const PlaneCandidate& plane) {
  const auto& T = spec.tower();
  const auto& F = T.base();
  // T(a0 + a1·ε) = c1 and T(ε·(a0 + a1·ε)) = c2, linear in (a0, a1).
  const Fq2 eps = T.epsilon();
  const Matrix system = Matrix::from_rows({{T.trace(T.one()), T.trace(eps)}, {T.trace(eps), T.trace(T.mul(eps, eps))}});
  const Fq rhs[] = {plane.c1, plane.c2};
  const auto sol = solve(F, system, rhs);
  if (!sol || rank(F, system) != 2) throw std::logic_error("trace pairing on {1, epsilon} is singular");
  const Fq2 a = T.compose((*sol)[0], (*sol)[1]);
  return {a, spec.transversal().with_trace(F.sub(plane.c0, T.norm(a)))};
}

std::optional<PlaneCandidate> codeword_to_plane(const CodeSpec& spec, std::span<const Fq> w) {
  require_length(spec, w);
  // Λ is an arc, so its first three points are affinely independent.
  const auto& F = spec.field();
  Matrix system(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [x, y] = identify(spec.tower(), spec.lambda()[i]);
    system(i, 0) = x;
    system(i, 1) = y;
    system(i, 2) = F.one();
  }
  const Fq rhs[] = {w[0], w[1], w[2]};
  const auto sol = solve(F, system, rhs);
  if (!sol) throw std::logic_error("first three arc points are collinear");
  const PlaneCandidate plane{(*sol)[0], (*sol)[1], (*sol)[2]};
  const Word section = plane_to_codeword(spec, plane);
  if (!std::equal(section.begin(), section.end(), w.begin())) return std::nullopt;
  return plane;
}

GeometricDecoder::GeometricDecoder(CodeSpec spec) : spec_(std::move(spec)), line_(find_external_line(spec_)) {
  if (line_)
    for (const auto& p : points_on_line(spec_.field(), *line_)) centers_.push_back(embed_in_base_plane(spec_.field(), p));
}

std::optional<DecodeResult> GeometricDecoder::decode(std::span<const Fq> received) const {
  require_length(spec_, received);
  if (!line_) return fallback(received);
  const auto& F = spec_.field();
  const std::size_t n = spec_.length();
  const LiftedWord lifted = lift(spec_, received);

  for (const Point3& center : centers_) {
    const std::size_t k = center.pivot();
    std::vector<Point2> projected;
    projected.reserve(n);
    for (const auto& Q : lifted) projected.push_back(project_from(F, center, Q));
    const Point2 vertex_image = project_from(F, center, vertex(F));

    const CurveFit fit = fit_min_degree_curve(F, projected);
    std::vector<TernaryForm> tried;
    std::optional<DecodeResult> hit;
    for (const auto& form : fit.forms) {
      for (const auto& factor : extract_linear_factors(F, form).factors) {
        if (std::find(tried.begin(), tried.end(), factor) != tried.end()) continue;
        tried.push_back(factor);
        // A line through the image of Z∞ lifts to a plane through the vertex.
        if (factor.evaluate(F, vertex_image).is_zero()) continue;
        const auto on = static_cast<std::size_t>(std::count_if(
            projected.begin(), projected.end(), [&](const Point2& p) { return factor.evaluate(F, p).is_zero(); }));
        if (2 * on <= n + 1) continue;
        if (hit) {
          hit->witness->ambiguous = true;
          continue;
        }
        // Plane spanned by the centre and two points of the factor's line.
        const auto pts = points_on_line(F, factor.as_line(F));
        auto back = [&](const Point2& p) {
          Point3::Coords c{};
          std::size_t j = 0;
          for (std::size_t i = 0; i < 4; ++i) c[i] = i == k ? F.zero() : p[j++];
          return Point3::normalized(F, c);
        };
        const Plane3 plane = span_plane(F, center, back(pts[0]), back(pts[1]));
        const auto& d = plane.dual;
        if (d[2].is_zero()) throw std::logic_error("decoded plane contains the cone vertex");
        const Fq s = F.neg(F.inv(d[2]));
        const PlaneCandidate candidate{F.mul(s, d[0]), F.mul(s, d[1]), F.mul(s, d[3])};

        DecodeResult r{plane_to_codeword(spec_, candidate), plane_to_message(spec_, candidate), candidate, {},
                       DecodeWitness{center, factor, false}};
        for (std::size_t i = 0; i < n; ++i)
          if (r.codeword[i] != received[i]) r.corrected_positions.push_back(i);
        hit = std::move(r);
      }
    }
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<DecodeResult> GeometricDecoder::fallback(std::span<const Fq> received) const {
  const auto ml = ml_decode(spec_, received);
  if (ml.tie || 2 * ml.distance + 3 > spec_.length()) return std::nullopt;
  const PlaneCandidate plane = *codeword_to_plane(spec_, ml.codeword);
  DecodeResult r{ml.codeword, plane_to_message(spec_, plane), plane, {}, std::nullopt};
  for (std::size_t i = 0; i < received.size(); ++i)
    if (r.codeword[i] != received[i]) r.corrected_positions.push_back(i);
  return r;
}

std::optional<DecodeResult> geometric_decode(const CodeSpec& spec, std::span<const Fq> received) {
  return GeometricDecoder(spec).decode(received);
}

MlDecoder::MlDecoder(const CodeSpec& spec) : codewords_(enumerate_codewords(spec)) {
  std::sort(codewords_.begin(), codewords_.end());
}

MlResult MlDecoder::decode(std::span<const Fq> received) const {
  MlResult best;
  bool first = true;
  for (const auto& c : codewords_) {
    const std::size_t d = hamming_distance(c, received);
    if (first || d < best.distance) {
      best = {c, d, false};
      first = false;
    } else if (d == best.distance) {
      best.tie = true;
    }
  }
  return best;
}

MlResult ml_decode(const CodeSpec& spec, std::span<const Fq> received) {
  require_length(spec, received);
  return MlDecoder(spec).decode(received);
}

}  // namespace hmds
