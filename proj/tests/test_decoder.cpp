#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hmds/code.hpp"
#include "hmds/decoder.hpp"

using namespace hmds;

namespace {

std::vector<Point2> xi_points(const CodeSpec& spec) {
  std::vector<Point2> out;
  for (Fq2 lam : spec.lambda().elements()) {
    const auto a = identify(spec.tower(), lam);
    out.push_back(Point2::normalized(spec.field(), {a.x, a.y, spec.field().one()}));
  }
  return out;
}

// Nearest codewords by direct enumeration.
std::pair<std::size_t, std::vector<Word>> nearest(const std::vector<Word>& code, const Word& r) {
  std::size_t best = r.size() + 1;
  std::vector<Word> at;
  for (const auto& c : code) {
    const std::size_t d = hamming_distance(c, r);
    if (d < best) {
      best = d;
      at.clear();
    }
    if (d == best) at.push_back(c);
  }
  return {best, at};
}

}  // namespace

TEST_CASE("hamming distance") {
  const Word a{Fq(0), Fq(1), Fq(2)}, b{Fq(0), Fq(2), Fq(2)}, c{Fq(1), Fq(2), Fq(0)};
  CHECK(hamming_distance(a, a) == 0);
  CHECK(hamming_distance(a, b) == 1);
  CHECK(hamming_distance(a, c) == 3);
  CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
  CHECK_THROWS_AS(hamming_distance(a, Word{Fq(0)}), std::invalid_argument);
}

TEST_CASE("lifting and the cone") {
  const auto spec = CodeSpec::reference_instance();
  const auto& F = spec.field();
  const Word r{Fq(1), Fq(2), Fq(3), Fq(4), Fq(0), Fq(1)};
  const auto lifted = lift(spec, r);
  REQUIRE(lifted.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto a = identify(spec.tower(), spec.lambda()[i]);
    CHECK(lifted[i].coords() == Point3::Coords{a.x, a.y, r[i], F.one()});
    CHECK(on_cone(spec, lifted[i]));
  }
  const auto vertex = Point3::normalized(F, {Fq(0), Fq(0), Fq(1), Fq(0)});
  CHECK(on_cone(spec, vertex));
  std::size_t affine_on_cone = 0;
  for (const auto& p : all_points<3>(F))
    if (p.pivot() == 3) affine_on_cone += on_cone(spec, p);
  CHECK(affine_on_cone == 6 * 5);
  CHECK_THROWS_AS(lift(spec, Word(5, Fq(0))), std::invalid_argument);
}

TEST_CASE("external lines") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto spec = CodeSpec::build(q);
    const auto& F = spec.field();
    const auto xi = xi_points(spec);
    std::size_t external = 0;
    std::optional<Line2> first;
    for (const auto& l : lines_of_plane(F)) {
      bool hit = false;
      for (const auto& p : xi) hit = hit || on_line(F, l, p);
      if (!hit) {
        ++external;
        if (!first) first = l;
      }
    }
    CHECK(find_external_line(spec) == first);
    if (q == 4) CHECK(external == 6);
    if (q % 2) CHECK(external == q * (q - 1) / 2);  // external lines of an oval
  }
}

TEST_CASE("projection from a point") {
  const GaloisField F(5, 1);
  const auto P = Point3::normalized(F, {Fq(0), Fq(0), Fq(0), Fq(1)});
  const auto Q = Point3::normalized(F, {Fq(1), Fq(2), Fq(3), Fq(1)});
  const auto pt = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return Point2::normalized(F, {Fq(a), Fq(b), Fq(c)});
  };
  CHECK(project_from(F, P, Q) == pt(1, 2, 3));
  CHECK_THROWS_AS(project_from(F, P, P), std::invalid_argument);

  const auto P2 = Point3::normalized(F, {Fq(1), Fq(3), Fq(0), Fq(1)});
  CHECK(project_from(F, P2, Q) == pt(0, 4, 3));

  // From a point at infinity the image drops coordinate k.
  const auto Pinf = Point3::normalized(F, {Fq(2), Fq(1), Fq(0), Fq(0)});
  CHECK(project_from(F, Pinf, Q) == pt(2, 3, 1));
}

TEST_CASE("planes, messages and codewords") {
  for (std::uint32_t q : {4u, 5u}) {
    const auto spec = CodeSpec::build(q);
    for (const auto& m : messages(spec)) {
      const auto plane = message_to_plane(spec, m);
      REQUIRE(plane_to_message(spec, plane) == m);
      const Word w = encode(spec, m);
      REQUIRE(plane_to_codeword(spec, plane) == w);
      REQUIRE(codeword_to_plane(spec, w) == plane);
    }
    Word bad = encode(spec, zero_message(spec));
    bad[0] = spec.field().one();
    CHECK_FALSE(codeword_to_plane(spec, bad));
  }
}

TEST_CASE("every single error is corrected at q=5") {
  const auto spec = CodeSpec::reference_instance();
  const auto& F = spec.field();
  const GeometricDecoder decoder(spec);
  REQUIRE(decoder.external_line());
  for (const auto& m : messages(spec)) {
    const Word c = encode(spec, m);
    {
      const auto clean = decoder.decode(c);
      REQUIRE(clean);
      REQUIRE(clean->codeword == c);
      REQUIRE(clean->corrected_positions.empty());
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      for (Fq e : F.elements()) {
        if (e.is_zero()) continue;
        Word r = c;
        r[i] = F.add(r[i], e);
        const auto res = decoder.decode(r);
        REQUIRE(res);
        REQUIRE(res->codeword == c);
        REQUIRE(res->message == m);
        REQUIRE(res->corrected_positions == std::vector<std::size_t>{i});
        REQUIRE(res->witness);
        REQUIRE(on_plane(F, Plane3{Point3::normalized(F, {Fq(0), Fq(0), F.one(), Fq(0)})}, res->witness->center));
      }
  }
}

TEST_CASE("maximum-likelihood decoding") {
  const auto spec = CodeSpec::reference_instance();
  const auto& F = spec.field();
  const auto code = enumerate_codewords(spec);

  Word c2;
  for (const auto& c : code)
    if (weight(c) == 4) {
      c2 = c;
      break;
    }
  Word r(6, F.zero());
  std::size_t kept = 0;
  for (std::size_t i = 0; i < 6 && kept < 2; ++i)
    if (!c2[i].is_zero()) {
      r[i] = c2[i];
      ++kept;
    }
  const auto ml = ml_decode(spec, r);
  CHECK(ml.distance == 2);
  CHECK(ml.tie);
  CHECK(ml.codeword == std::min(c2, Word(6, F.zero())));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint32_t> pick(0, 4);
  const MlDecoder dec(spec);
  for (int i = 0; i < 300; ++i) {
    Word w(6);
    for (auto& v : w) v = Fq(pick(rng));
    const auto [d, at] = nearest(code, w);
    const auto res = dec.decode(w);
    REQUIRE(res.distance == d);
    REQUIRE(res.tie == (at.size() > 1));
    REQUIRE(res.codeword == *std::min_element(at.begin(), at.end()));
  }
}

TEST_CASE("geometric and ml decoders agree inside the unique radius") {
  for (std::uint32_t q : {4u, 5u, 7u}) {
    CAPTURE(q);
    const auto spec = CodeSpec::build(q);
    const std::size_t n = spec.length();
    const std::size_t radius = (n - 3) / 2;
    const GeometricDecoder geo(spec);
    const MlDecoder ml(spec);
    std::mt19937_64 rng(q * 101);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 400; ++i) {
      Word w(n);
      for (auto& v : w) v = Fq(pick(rng));
      if (i % 2) {
        // Near a codeword.
        const auto msgs = messages(spec);
        w = encode(spec, msgs[std::uniform_int_distribution<std::size_t>(0, msgs.size() - 1)(rng)]);
        for (std::size_t k = 0; k < radius; ++k) w[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = Fq(pick(rng));
      }
      const auto m = ml.decode(w);
      const auto g = geo.decode(w);
      if (m.distance <= radius) {
        REQUIRE(g);
        REQUIRE(g->codeword == m.codeword);
      }
      if (g) {
        REQUIRE(codeword_to_plane(spec, g->codeword));
        REQUIRE(2 * (n - hamming_distance(g->codeword, w)) > n + 1);
        REQUIRE(hamming_distance(g->codeword, w) >= m.distance);
      }
    }
  }
}
