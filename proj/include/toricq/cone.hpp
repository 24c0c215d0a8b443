#pragma once

// Rational polyhedral cones in canonical form. Every conversion between
// generators and inequalities goes through the double description method.

#include "toricq/sublattice.hpp"

#include <set>
#include <span>
#include <vector>

namespace toricq {

namespace detail {

/// Output of the double description method for {x : <a_i, x> >= 0}: a basis
/// of the lineality space and the extreme rays of the pointed part, both
/// as primitive integer vectors (rays are unique only modulo lineality).
struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

inline DoubleDescription double_description(std::size_t n, std::span<const IntVector> inequalities) {
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < n; ++i) lin.push_back(IntVector::unit(n, i));
  std::vector<IntVector> rays;
  std::vector<std::vector<bool>> zero;  // zero[r][k]: inequality k tight on ray r
  std::size_t seen = 0;

  for (const IntVector& a : inequalities) {
    if (a.rank() != n) throw RankMismatch("double_description: inequality rank mismatch");
    if (a.is_zero()) {
      for (auto& z : zero) z.push_back(true);
      ++seen;
      continue;
    }

    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pick = i;
        break;
      }

    if (pick < lin.size()) {
      // The hyperplane cuts the lineality space: shrink it by one dimension
      // and turn the removed direction into a new ray.
      IntVector l0 = lin[pick];
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = -l0;
        al0 = -al0;
      }
      std::vector<IntVector> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        next_lin.push_back((al0 * lin[i] - dot(a, lin[i]) * l0).primitive());
      }
      lin = std::move(next_lin);
      for (std::size_t r = 0; r < rays.size(); ++r) {
        rays[r] = (al0 * rays[r] - dot(a, rays[r]) * l0).primitive();
        zero[r].push_back(true);
      }
      // Inequalities seen before this one vanish on the lineality space.
      std::vector<bool> z(seen, true);
      z.push_back(false);
      rays.push_back(l0);
      zero.push_back(std::move(z));
      ++seen;
      continue;
    }

    std::vector<Integer> s(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) s[r] = dot(a, rays[r]);

    std::vector<IntVector> next_rays;
    std::vector<std::vector<bool>> next_zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] < 0) continue;
      next_rays.push_back(rays[r]);
      auto z = zero[r];
      z.push_back(s[r] == 0);
      next_zero.push_back(std::move(z));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        const std::size_t m = seen;
        std::vector<bool> common(m);
        for (std::size_t k = 0; k < m; ++k) common[k] = zero[p][k] && zero[q][k];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t k = 0; k < m; ++k)
            if (common[k] && !zero[r][k]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        next_rays.push_back((s[p] * rays[q] - s[q] * rays[p]).primitive());
        common.push_back(true);
        next_zero.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    zero = std::move(next_zero);
    ++seen;
  }
  return {std::move(lin), std::move(rays)};
}

/// Primitive integer multiple of the Euclidean projection of v onto the
/// orthogonal complement of span(w_i).
inline IntVector project_off(const IntVector& v, const std::vector<IntVector>& w) {
  if (w.empty()) return v.primitive();
  const std::size_t k = w.size(), n = v.rank();
  RationalMatrix gram(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(w[i], w[j]));
    rhs[i] = Rational(dot(w[i], v));
  }
  const std::vector<Rational> c = solve_rational(std::move(gram), std::move(rhs));
  std::vector<Rational> p(n);
  Integer denom_lcm = 1;
  for (std::size_t j = 0; j < n; ++j) {
    p[j] = Rational(v[j]);
    for (std::size_t i = 0; i < k; ++i) p[j] -= c[i] * Rational(w[i][j]);
    const Integer d = denominator(p[j]);
    denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
  }
  IntVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = numerator(p[j] * Rational(denom_lcm));
  return out.primitive();
}

inline std::vector<IntVector> sorted_unique(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

class Cone;

struct PointClassification {
  enum class Kind { Outside, OnFace, Relint };
  Kind kind = Kind::Outside;
  std::vector<Cone> face;  ///< minimal face containing the point (OnFace only; one element)
};

/// Rational polyhedral cone. Canonical data: primitive extreme rays of the
/// pointed part C ∩ L^⊥ in sorted order and the HNF of the lineality lattice
/// L ∩ Z^n. Facet normals are projected into span(C), so they are canonical
/// as well.
class Cone {
 public:
  Cone() = default;

  static Cone zero(std::size_t n) { return from_generators({}, n); }

  static Cone from_generators(std::span<const IntVector> gens, std::size_t n) {
    for (const auto& g : gens)
      if (g.rank() != n) throw RankMismatch("cone generator has rank " + std::to_string(g.rank()) +
                                            ", expected " + std::to_string(n));
    // Dual pass: C^vee = cone(facet normals) + span(C)^perp.
    auto dual = detail::double_description(n, gens);
    std::vector<IntVector> ineqs = dual.rays;
    for (const auto& w : dual.lineality) {
      ineqs.push_back(w);
      ineqs.push_back(-w);
    }
    // Primal pass: extreme rays and lineality of C itself.
    auto primal = detail::double_description(n, ineqs);

    Cone c;
    c.rank_ = n;
    c.lineality_ = Sublattice::from_generators(n, primal.lineality).saturation();
    c.orthogonal_ = Sublattice::from_generators(n, dual.lineality).saturation();
    const auto lin_basis = c.lineality_.basis();
    const auto orth_basis = c.orthogonal_.basis();
    for (const auto& r : primal.rays) {
      IntVector p = detail::project_off(r, lin_basis);
      if (!p.is_zero()) c.rays_.push_back(std::move(p));
    }
    for (const auto& f : dual.rays) {
      IntVector p = detail::project_off(f, orth_basis);
      if (!p.is_zero()) c.facets_.push_back(std::move(p));
    }
    c.rays_ = detail::sorted_unique(std::move(c.rays_));
    c.facets_ = detail::sorted_unique(std::move(c.facets_));
    c.dim_ = n - c.orthogonal_.rank();
    return c;
  }

  static Cone from_generators(std::initializer_list<IntVector> gens, std::size_t n) {
    std::vector<IntVector> v(gens);
    return from_generators(v, n);
  }

  /// {x : <a, x> >= 0 for all a}.
  static Cone from_inequalities(std::span<const IntVector> ineqs, std::size_t n) {
    auto dd = detail::double_description(n, ineqs);
    std::vector<IntVector> gens = dd.rays;
    for (const auto& l : dd.lineality) {
      gens.push_back(l);
      gens.push_back(-l);
    }
    return from_generators(gens, n);
  }

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const Sublattice& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  /// span(C)^perp ∩ Z^n, the equations of the cone.
  const Sublattice& orthogonal() const { return orthogonal_; }
  /// Saturated lattice span(C) ∩ Z^n.
  Sublattice span_lattice() const { return orthogonal_.orthogonal(); }

  bool is_pointed() const { return lineality_.rank() == 0; }
  bool is_zero() const { return dim_ == 0; }

  /// Rays together with ± a basis of the lineality lattice.
  std::vector<IntVector> generators() const {
    std::vector<IntVector> g = rays_;
    for (const auto& l : lineality_.basis()) {
      g.push_back(l);
      g.push_back(-l);
    }
    return g;
  }

  /// All inequalities (facets and ± equations) cutting out the cone.
  std::vector<IntVector> inequalities() const {
    std::vector<IntVector> h = facets_;
    for (const auto& w : orthogonal_.basis()) {
      h.push_back(w);
      h.push_back(-w);
    }
    return h;
  }

  bool contains(const IntVector& v) const {
    check_rank(v);
    for (const auto& w : orthogonal_.basis())
      if (dot(w, v) != 0) return false;
    for (const auto& u : facets_)
      if (dot(u, v) < 0) return false;
    return true;
  }

  bool contains(const Cone& other) const {
    if (other.rank_ != rank_) throw RankMismatch("cone rank mismatch");
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool relint_contains(const IntVector& v) const {
    if (!contains(v)) return false;
    for (const auto& u : facets_)
      if (dot(u, v) == 0) return false;
    return true;
  }

  Cone dual() const {
    std::vector<IntVector> g = facets_;
    for (const auto& w : orthogonal_.basis()) {
      g.push_back(w);
      g.push_back(-w);
    }
    return from_generators(g, rank_);
  }

  /// Smallest face of this cone containing all of `vs` (which must lie in it).
  Cone minimal_face_containing(std::span<const IntVector> vs) const {
    std::vector<const IntVector*> tight;
    for (const auto& u : facets_) {
      bool all_zero = true;
      for (const auto& v : vs)
        if (dot(u, v) != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) tight.push_back(&u);
    }
    std::vector<IntVector> gens;
    for (const auto& r : rays_) {
      bool on = true;
      for (const auto* u : tight)
        if (dot(*u, r) != 0) {
          on = false;
          break;
        }
      if (on) gens.push_back(r);
    }
    for (const auto& l : lineality_.basis()) {
      gens.push_back(l);
      gens.push_back(-l);
    }
    return from_generators(gens, rank_);
  }

  Cone minimal_face_containing(const Cone& sub) const {
    const auto g = sub.generators();
    return minimal_face_containing(std::span<const IntVector>(g));
  }

  bool is_face_of(const Cone& c) const {
    if (c.rank_ != rank_) throw RankMismatch("cone rank mismatch");
    if (!c.contains(*this)) return false;
    return c.minimal_face_containing(*this) == *this;
  }

  /// All faces ordered by (dim, rays). Requires a pointed cone.
  std::vector<Cone> faces() const {
    if (!is_pointed()) throw Error("faces: cone " + str() + " is not pointed");
    std::set<Cone> found{*this};
    std::vector<Cone> frontier{*this};
    while (!frontier.empty()) {
      Cone f = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& u : f.facets_) {
        std::vector<IntVector> gens;
        for (const auto& r : f.rays_)
          if (dot(u, r) == 0) gens.push_back(r);
        Cone g = from_generators(gens, rank_);
        if (found.insert(g).second) frontier.push_back(std::move(g));
      }
    }
    return {found.begin(), found.end()};
  }

  PointClassification classify(const IntVector& v) const {
    check_rank(v);
    if (!contains(v)) return {PointClassification::Kind::Outside, {}};
    if (relint_contains(v)) return {PointClassification::Kind::Relint, {}};
    const IntVector one[] = {v};
    return {PointClassification::Kind::OnFace, {minimal_face_containing(std::span<const IntVector>(one))}};
  }

  /// Primitive lattice point in the relative interior (sum of the rays).
  IntVector relint_point() const {
    IntVector s(rank_);
    for (const auto& r : rays_) s += r;
    return s.primitive();
  }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.rays_ <=> b.rays_; c != 0) return c;
    return a.lineality_ <=> b.lineality_;
  }

  std::string str() const {
    std::string s = "cone(";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (i) s += ",";
      s += rays_[i].str();
    }
    s += ")";
    if (lineality_.rank()) s += "+lin" + lineality_.str();
    return s;
  }

 private:
  void check_rank(const IntVector& v) const {
    if (v.rank() != rank_) throw RankMismatch("vector of rank " + std::to_string(v.rank()) +
                                              " tested against cone of rank " + std::to_string(rank_));
  }

  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  Sublattice lineality_;
  std::vector<IntVector> facets_;
  Sublattice orthogonal_;
};

inline Cone dual_cone(const Cone& c) { return c.dual(); }

inline Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw RankMismatch("intersect: rank mismatch");
  std::vector<IntVector> h = a.inequalities();
  for (auto& x : b.inequalities()) h.push_back(std::move(x));
  return Cone::from_inequalities(h, a.rank());
}

inline Cone image_cone(const IntMatrix& p, const Cone& c) {
  if (p.cols() != c.rank()) throw RankMismatch("image_cone: map has " + std::to_string(p.cols()) +
                                               " columns, cone has rank " + std::to_string(c.rank()));
  std::vector<IntVector> g;
  for (const auto& x : c.generators()) g.push_back(p * x);
  return Cone::from_generators(g, p.rows());
}

}  // namespace toricq
