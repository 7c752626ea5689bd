#include "hmds/field.hpp"

#include <cassert>
#include <string>

namespace hmds {

namespace {

// Polynomials over GF(p), ascending coefficients, no trailing zeros except
// for the zero polynomial which is empty.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly digits(std::uint32_t v, std::uint32_t p, std::uint32_t h) {
  Poly d(h, 0);
  for (std::uint32_t i = 0; i < h; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  std::uint32_t e = p - 2;
  std::uint64_t b = a % p;
  while (e) {
    if (e & 1) r = static_cast<std::uint32_t>(r * b % p);
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - f} * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  trim(r);
  return r;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, h};
}

bool is_irreducible_over_prime(std::uint32_t p, const Coeffs& poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  // Every monic d of degree 1..n/2, enumerated via its non-leading digits.
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly d = digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(deg));
      d.push_back(1);
      if (poly_mod(f, d, p).empty()) return false;
    }
  }
  return true;
}

Coeffs smallest_irreducible_over_prime(std::uint32_t p, std::uint32_t h) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Coeffs f = digits(static_cast<std::uint32_t>(c), p, h);
    f.push_back(1);
    if (is_irreducible_over_prime(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // impossible for prime p
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t h, Coeffs modulus)
    : p_(p), h_(h), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (h == 0) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q * q > kMaxExtensionOrder) throw std::invalid_argument("field too large: q^2 must not exceed 65536");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (h == 1) {
    modulus_.clear();
  } else {
    if (modulus_.empty()) modulus_ = smallest_irreducible_over_prime(p, h);
    if (modulus_.size() != h + 1 || modulus_.back() != 1)
      throw std::invalid_argument("GF(q) modulus must be monic of degree " + std::to_string(h));
    for (auto c : modulus_)
      if (c >= p) throw std::invalid_argument("GF(q) modulus coefficient out of range");
    if (!is_irreducible_over_prime(p, modulus_)) throw std::invalid_argument("GF(q) modulus is reducible");
  }

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const Poly da = digits(a, p_, h_);
    Poly na(h_);
    for (std::uint32_t i = 0; i < h_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::uint16_t>(undigits(na, p_));
    for (std::uint32_t b = 0; b < q_; ++b) {
      const Poly db = digits(b, p_, h_);
      Poly s(h_);
      for (std::uint32_t i = 0; i < h_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(undigits(s, p_));

      Poly pa = da, pb = db;
      trim(pa);
      trim(pb);
      Poly m = poly_mul(pa, pb, p_);
      if (h_ > 1) m = poly_mod(m, modulus_, p_);
      else if (!m.empty()) m = {m[0] % p_};
      m.resize(h_, 0);
      mul_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(undigits(m, p_));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[std::size_t{a} * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
}

Fq GaloisField::element(std::uint32_t v) const {
  if (v >= q_) throw std::out_of_range("GF(" + std::to_string(q_) + ") element " + std::to_string(v) + " out of range");
  return Fq{v};
}

Fq GaloisField::inv(Fq a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return Fq{inv_[a.value()]};
}

Fq GaloisField::pow(Fq a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Fq r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq GaloisField::from_int(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  return Fq{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::vector<Fq> GaloisField::elements() const {
  std::vector<Fq> out;
  out.reserve(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out.emplace_back(v);
  return out;
}

FieldTower::FieldTower(GaloisField base, Coeffs gq2) : base_(std::move(base)), gq2_(std::move(gq2)) {
  const auto q = base_.order();
  if (std::uint64_t{q} * q > kMaxExtensionOrder) throw std::invalid_argument("q^2 must not exceed 65536");
  if (gq2_.size() != 3 || gq2_[2] != 1) throw std::invalid_argument("GF(q^2) modulus must be monic of degree 2");
  if (gq2_[0] >= q || gq2_[1] >= q) throw std::invalid_argument("GF(q^2) modulus coefficient out of range");
  c0_ = Fq{gq2_[0]};
  c1_ = Fq{gq2_[1]};
  for (Fq r : base_.elements()) {
    const Fq v = base_.add(base_.add(base_.mul(r, r), base_.mul(c1_, r)), c0_);
    if (v.is_zero()) throw std::invalid_argument("GF(q^2) modulus has a root in GF(q)");
  }
  // Nondegenerate trace pairing on {1, ε}; decoding inverts it.
  const Fq t1 = trace(one());
  const Fq te = trace(epsilon());
  const Fq tee = trace(mul(epsilon(), epsilon()));
  if (base_.sub(base_.mul(t1, tee), base_.mul(te, te)).is_zero())
    throw std::invalid_argument("trace form on {1, epsilon} is degenerate");
}

FieldTower FieldTower::for_order(std::uint32_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (std::uint64_t{q} * q > kMaxExtensionOrder)
    throw std::invalid_argument("q = " + std::to_string(q) + " unsupported: q^2 must not exceed 65536");
  const auto [p, h] = *pp;
  GaloisField base(p, h, h > 1 ? smallest_irreducible_over_prime(p, h) : Coeffs{});
  for (std::uint32_t c = 0; c < q * q; ++c) {
    const Fq c0{c % q};
    const Fq c1{c / q};
    bool has_root = false;
    for (Fq r : base.elements()) {
      if (base.add(base.add(base.mul(r, r), base.mul(c1, r)), c0).is_zero()) {
        has_root = true;
        break;
      }
    }
    if (has_root) continue;
    // Skip (never hit in practice) moduli whose trace form degenerates.
    try {
      return FieldTower(base, {c0.value(), c1.value(), 1});
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::logic_error("no quadratic irreducible found");
}

FieldTower FieldTower::reference_instance() {
  // X² − X + 2 over GF(5).
  return FieldTower(GaloisField(5, 1), {2, 4, 1});
}

Fq2 FieldTower::add(Fq2 a, Fq2 b) const { return {base_.add(a.u0, b.u0), base_.add(a.u1, b.u1)}; }
Fq2 FieldTower::sub(Fq2 a, Fq2 b) const { return {base_.sub(a.u0, b.u0), base_.sub(a.u1, b.u1)}; }
Fq2 FieldTower::neg(Fq2 a) const { return {base_.neg(a.u0), base_.neg(a.u1)}; }
Fq2 FieldTower::scale(Fq k, Fq2 a) const { return {base_.mul(k, a.u0), base_.mul(k, a.u1)}; }

Fq2 FieldTower::mul(Fq2 a, Fq2 b) const {
  // ε² = −c1·ε − c0
  const auto& F = base_;
  const Fq hi = F.mul(a.u1, b.u1);
  const Fq lo = F.sub(F.mul(a.u0, b.u0), F.mul(c0_, hi));
  const Fq mid = F.sub(F.add(F.mul(a.u0, b.u1), F.mul(a.u1, b.u0)), F.mul(c1_, hi));
  return {lo, mid};
}

Fq2 FieldTower::inv(Fq2 a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  // a⁻¹ = a^q / N(a)
  return scale(base_.inv(norm(a)), frobenius(a));
}

Fq2 FieldTower::pow(Fq2 a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Fq2 r = one();
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq2 FieldTower::frobenius(Fq2 u) const { return pow(u, q()); }

Fq FieldTower::trace(Fq2 u) const {
  const Fq2 t = add(frobenius(u), u);
  if (!in_base(t)) throw std::logic_error("trace left GF(q): field tower is inconsistent");
  return t.u0;
}

Fq FieldTower::norm(Fq2 u) const {
  const Fq2 n = mul(frobenius(u), u);
  if (!in_base(n)) throw std::logic_error("norm left GF(q): field tower is inconsistent");
  return n.u0;
}

Fq2 FieldTower::decode(std::uint32_t n) const {
  if (n >= q() * q()) throw std::out_of_range("GF(q^2) encoding " + std::to_string(n) + " out of range");
  return {Fq{n % q()}, Fq{n / q()}};
}

std::vector<Fq2> FieldTower::elements() const {
  std::vector<Fq2> out;
  out.reserve(std::size_t{q()} * q());
  for (std::uint32_t n = 0; n < q() * q(); ++n) out.push_back(decode(n));
  return out;
}

}  // namespace hmds
