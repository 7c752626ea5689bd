#include "hmds/geometry.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hmds/linalg.hpp"

namespace hmds {

AffinePoint2 identify(const FieldTower&, Fq2 u) { return {u.u0, u.u1}; }

bool collinear(const GaloisField& F, AffinePoint2 a, AffinePoint2 b, AffinePoint2 c) {
  if (a == b || a == c || b == c) throw std::invalid_argument("collinear: points must be distinct");
  const Fq det = F.sub(F.mul(F.sub(b.x, a.x), F.sub(c.y, a.y)), F.mul(F.sub(c.x, a.x), F.sub(b.y, a.y)));
  return det.is_zero();
}

bool arc_condition_holds(const FieldTower& T, std::span<const Fq2> e) {
  {
    std::set<Fq2> seen(e.begin(), e.end());
    if (seen.size() != e.size()) throw std::invalid_argument("arc candidate contains duplicate elements");
  }
  const std::int64_t exponent = T.q() - 1;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = 0; b < e.size(); ++b)
      for (std::size_t c = 0; c < e.size(); ++c) {
        if (a == b || b == c || a == c) continue;
        const Fq2 ratio = T.div(T.sub(e[a], e[b]), T.sub(e[c], e[b]));
        if (T.pow(ratio, exponent) == T.one()) return false;
      }
  return true;
}

std::uint32_t max_arc_size(std::uint32_t q) { return q % 2 ? q + 1 : q + 2; }

ArcSet ArcSet::validated(const FieldTower& T, std::vector<Fq2> elements) {
  if (elements.size() < 3) throw std::invalid_argument("arc must have at least 3 elements");
  if (elements.size() > max_arc_size(T.q()))
    throw std::invalid_argument("arc of size " + std::to_string(elements.size()) + " exceeds the bound " +
                                std::to_string(max_arc_size(T.q())));
  if (!arc_condition_holds(T, elements)) throw std::invalid_argument("elements do not form an arc");
  return ArcSet(std::move(elements));
}

namespace {

// Depth-first arc search over AG(2,q) in encoding order. blocked[v] counts
// the chosen secants through v.
class ArcSearch {
 public:
  ArcSearch(const FieldTower& T, std::uint64_t budget)
      : T_(T), n_(T.q() * T.q()), target_(max_arc_size(T.q())), budget_(budget), blocked_(n_, 0) {}

  std::vector<Fq2> run() {
    dfs(0);
    std::vector<Fq2> out;
    for (auto v : best_) out.push_back(T_.decode(v));
    return out;
  }

 private:
  void mark(std::uint32_t a, std::uint32_t b, int delta) {
    const Fq2 pa = T_.decode(a);
    const Fq2 dir = T_.sub(T_.decode(b), pa);
    for (Fq t : T_.base().elements()) blocked_[T_.encode(T_.add(pa, T_.scale(t, dir)))] += delta;
  }

  void dfs(std::uint32_t from) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (best_.size() >= target_ || nodes_ >= budget_) return;
    std::uint32_t free = 0;
    for (std::uint32_t v = from; v < n_; ++v) free += blocked_[v] == 0;
    if (chosen_.size() + free <= best_.size()) return;
    for (std::uint32_t v = from; v < n_; ++v) {
      if (blocked_[v] != 0) continue;
      if (++nodes_ > budget_) return;
      for (auto c : chosen_) mark(c, v, +1);
      chosen_.push_back(v);
      dfs(v + 1);
      chosen_.pop_back();
      for (auto c : chosen_) mark(c, v, -1);
      if (best_.size() >= target_) return;
    }
  }

  const FieldTower& T_;
  std::uint32_t n_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> blocked_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

ArcSet build_lambda(const FieldTower& T, const LambdaStrategy& strategy) {
  struct Visitor {
    const FieldTower& T;
    std::vector<Fq2> operator()(const ExplicitLambda& s) const { return s.elements; }
    std::vector<Fq2> operator()(const NormCircle& s) const {
      if (s.c.is_zero()) throw std::invalid_argument("norm circle needs a nonzero norm value");
      std::vector<Fq2> out;
      for (Fq2 u : T.elements())
        if (T.norm(u) == s.c) out.push_back(u);
      return out;
    }
    std::vector<Fq2> operator()(const GreedyLambda& s) const {
      auto found = ArcSearch(T, s.node_budget).run();
      if (found.size() < 3) throw std::invalid_argument("arc search could not reach size 3");
      return found;
    }
  };
  return ArcSet::validated(T, std::visit(Visitor{T}, strategy));
}

ArcSet reference_lambda(const FieldTower& T) {
  std::vector<Fq2> e;
  for (int k : {3, 4, 8, 15, 16, 20}) e.push_back(T.pow(T.epsilon(), k));
  return ArcSet::validated(T, std::move(e));
}

bool Transversal::contains(Fq2 u) const { return std::find(elements_.begin(), elements_.end(), u) != elements_.end(); }

Transversal Transversal::validated(const FieldTower& T, std::vector<Fq2> elements) {
  if (elements.size() != T.q())
    throw std::invalid_argument("transversal must have exactly q = " + std::to_string(T.q()) + " elements");
  std::vector<Fq2> by_trace(T.q());
  std::vector<bool> hit(T.q(), false);
  for (Fq2 s : elements) {
    const Fq t = T.trace(s);
    if (hit[t.value()]) throw std::invalid_argument("two transversal elements share a coset of ker(trace)");
    hit[t.value()] = true;
    by_trace[t.value()] = s;
  }
  return Transversal(std::move(elements), std::move(by_trace));
}

Transversal build_transversal(const FieldTower& T, TransversalStrategy strategy) {
  std::vector<Fq2> s;
  if (strategy == TransversalStrategy::subfield) {
    if (T.p() == 2) throw std::invalid_argument("GF(q) lies in ker(trace) for even q; not a transversal");
    for (Fq c : T.base().elements()) s.push_back(T.embed(c));
  } else {
    const auto all = T.elements();
    const auto mu = std::find_if(all.begin(), all.end(), [&](Fq2 u) { return T.trace(u) == T.base().one(); });
    if (mu == all.end()) throw std::logic_error("trace is not surjective");
    for (Fq c : T.base().elements()) s.push_back(T.scale(c, *mu));
  }
  return Transversal::validated(T, std::move(s));
}

bool on_line(const GaloisField& F, const Line2& l, const Point2& p) {
  Fq acc;
  for (std::size_t i = 0; i < 3; ++i) acc = F.add(acc, F.mul(l.dual[i], p[i]));
  return acc.is_zero();
}

bool on_plane(const GaloisField& F, const Plane3& pi, const Point3& p) {
  Fq acc;
  for (std::size_t i = 0; i < 4; ++i) acc = F.add(acc, F.mul(pi.dual[i], p[i]));
  return acc.is_zero();
}

std::vector<Line2> lines_of_plane(const GaloisField& F) {
  std::vector<Line2> out;
  for (const auto& d : all_points<2>(F)) out.push_back(Line2{d});
  return out;
}

std::vector<Point2> points_on_line(const GaloisField& F, const Line2& l) {
  std::vector<Point2> out;
  for (const auto& p : all_points<2>(F))
    if (on_line(F, l, p)) out.push_back(p);
  return out;
}

Line2 line_through(const GaloisField& F, const Point2& a, const Point2& b) {
  if (a == b) throw std::invalid_argument("line_through: points coincide");
  const Matrix m = Matrix::from_rows({{a.coords().begin(), a.coords().end()}, {b.coords().begin(), b.coords().end()}});
  const auto k = kernel_basis(F, m);
  return Line2{Point2::normalized(F, {k[0][0], k[0][1], k[0][2]})};
}

Plane3 span_plane(const GaloisField& F, const Point3& a, const Point3& b, const Point3& c) {
  const Matrix m = Matrix::from_rows({{a.coords().begin(), a.coords().end()},
                                      {b.coords().begin(), b.coords().end()},
                                      {c.coords().begin(), c.coords().end()}});
  const auto k = kernel_basis(F, m);
  if (k.size() != 1) throw std::invalid_argument("span_plane: points are collinear");
  return Plane3{Point3::normalized(F, {k[0][0], k[0][1], k[0][2], k[0][3]})};
}

}  // namespace hmds
