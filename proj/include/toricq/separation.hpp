#pragma once

// Identifications that every morphism to a separated space must make on a
// toric prevariety, and their comparison with the fibers of the
// separating map to a fan.

#include "toricq/morphism.hpp"

#include <numeric>

namespace toricq {

struct ProjectedPrevariety {
  FanSystem system;
  ToricMorphism morphism;  ///< source fan -> system, induced by the lattice map
};

/// Charts P(sigma_i) for the maximal cones, glued along P(sigma_i ∩ sigma_j).
inline ProjectedPrevariety project_prevariety(const Fan& source, const IntMatrix& p) {
  const auto& cones = source.maximal_cones();
  std::vector<Cone> charts;
  for (const auto& c : cones) {
    Cone img = image_cone(p, c);
    if (!img.is_pointed()) throw Error("project_prevariety: image " + img.str() + " of " + c.str() + " is not pointed");
    charts.push_back(std::move(img));
  }
  GluingTable gluing;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      gluing.emplace(std::pair{i, j}, image_cone(p, intersect(cones[i], cones[j])));
  FanSystem system = FanSystem::build(std::move(charts), gluing, p.rows());
  std::vector<std::size_t> identity_charts(cones.size());
  std::iota(identity_charts.begin(), identity_charts.end(), std::size_t{0});
  ToricMorphism m = toric_morphism(p, source.system(), system, identity_charts);
  return {std::move(system), std::move(m)};
}

/// The morphism to a fan induced by the identity of the lattice.
inline ToricMorphism comparison_morphism(const FanSystem& system, const Fan& target) {
  if (system.rank() != target.rank()) throw RankMismatch("comparison_morphism: rank mismatch");
  return toric_morphism(IntMatrix::identity(system.rank()), system, target.system());
}

/// Whether the one-parameter subgroup of `weight` lies in the kernel of P,
/// i.e. whether the morphism defined by P is constant on its orbits.
inline bool invariance_check(const IntVector& weight, const IntMatrix& p) {
  if (weight.rank() != p.cols()) throw RankMismatch("invariance_check: rank mismatch");
  return (p * weight).is_zero();
}

/// Class of orbits with a subtorus lattice K: (a, t) ~ (b, t') iff a and b
/// are both members and t'/t lies in T_K.
struct IdentificationClass {
  std::vector<OrbitIndex> orbits;
  Sublattice subtorus;

  friend bool operator==(const IdentificationClass&, const IdentificationClass&) = default;
};

/// Same-t identification of two orbit families, with the curve that forced it.
struct FamilyIdentification {
  OrbitIndex a;
  OrbitIndex b;
  OrbitIndex curve_orbit;  ///< the family whose limits are a and b
  IntVector direction;
  char rule = '1';
};

struct IdentificationPartition {
  std::vector<IdentificationClass> classes;  ///< ordered by first member
  std::vector<OrbitIndex> orbits;            ///< orbits of the underlying system
  std::vector<FamilyIdentification> identifications;

  std::optional<std::size_t> class_of(const OrbitIndex& o) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::binary_search(classes[i].orbits.begin(), classes[i].orbits.end(), o)) return i;
    return std::nullopt;
  }

  bool identified(const OrbitPoint& a, const OrbitPoint& b) const {
    auto ca = class_of(a.orbit), cb = class_of(b.orbit);
    if (!ca || ca != cb) return false;
    return in_subtorus(b.coset * a.coset.inverse(), classes[*ca].subtorus);
  }

  /// Class structure only; the identification log is not compared.
  friend bool operator==(const IdentificationPartition& x, const IdentificationPartition& y) {
    return x.classes == y.classes && x.orbits == y.orbits;
  }
};

namespace detail {

/// Orbits hit by the limits of lambda_v(s) · (o, t); independent of t.
inline std::vector<OrbitIndex> limit_orbits(const FanSystem& space, const OrbitIndex& o, const IntVector& v) {
  std::vector<OrbitIndex> out;
  for (const auto& q : one_param_limits(space, v, OrbitPoint::make(o, TorusElement::identity(space.rank()))))
    out.push_back(q.orbit);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// One relative-interior vector per face of every chart and of every
/// pairwise chart intersection.
inline std::vector<IntVector> test_vectors(const FanSystem& space) {
  std::set<IntVector> vs;
  auto add_faces = [&](const Cone& c) {
    for (const auto& f : c.faces())
      if (!f.is_zero()) vs.insert(f.relint_point());
  };
  for (const auto& c : space.charts()) add_faces(c);
  for (std::size_t i = 0; i < space.chart_count(); ++i)
    for (std::size_t j = i + 1; j < space.chart_count(); ++j) add_faces(intersect(space.chart(i), space.chart(j)));
  return {vs.begin(), vs.end()};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root so class representatives follow orbit order.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Fixpoint of two rules over the orbit classes of `space`, starting from
/// `initial` (or from singletons with K = N_sigma):
///  R1  a torus curve with several limits identifies those limits (same t);
///  R2  the limits of the curves through a class are identified with each
///      other and inherit the class's subtorus.
inline IdentificationPartition forced_identifications(const FanSystem& space,
                                                      const IdentificationPartition* initial = nullptr) {
  const auto& orbits = space.orbits();
  const std::size_t n = orbits.size();
  auto index_of = [&](const OrbitIndex& o) {
    return static_cast<std::size_t>(std::lower_bound(orbits.begin(), orbits.end(), o) - orbits.begin());
  };

  detail::UnionFind uf(n);
  std::vector<Sublattice> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = orbits[i].cone.span_lattice();
  IdentificationPartition result;
  result.orbits = orbits;

  if (initial) {
    if (initial->orbits != orbits) throw Error("forced_identifications: partition belongs to a different space");
    for (const auto& cls : initial->classes) {
      std::size_t root = index_of(cls.orbits.front());
      for (const auto& o : cls.orbits) root = uf.unite(root, index_of(o));
      k[root] = (k[root] + cls.subtorus).saturation();
    }
  }

  // Merges the classes of `members` and adds `extra` to their subtorus.
  // Returns whether anything changed.
  auto merge = [&](const std::vector<std::size_t>& members, const Sublattice& extra) {
    std::set<std::size_t> roots;
    for (std::size_t m : members) roots.insert(uf.find(m));
    const std::size_t root = *roots.begin();
    Sublattice acc = extra;
    for (std::size_t r : roots) acc = acc + k[r];
    for (std::size_t m : members) acc = acc + orbits[m].cone.span_lattice();
    acc = acc.saturation();
    for (std::size_t r : roots) uf.unite(root, r);
    const bool changed = roots.size() > 1 || acc != k[root];
    k[root] = std::move(acc);
    return changed;
  };

  const auto vectors = detail::test_vectors(space);
  const auto torus = space.find_orbit(Cone::zero(space.rank()));

  // R1
  for (const auto& v : vectors) {
    const auto lim = detail::limit_orbits(space, *torus, v);
    if (lim.size() < 2) continue;
    std::vector<std::size_t> members;
    for (const auto& l : lim) members.push_back(index_of(l));
    merge(members, Sublattice::zero(space.rank()));
    for (std::size_t i = 1; i < lim.size(); ++i) result.identifications.push_back({lim.front(), lim[i], *torus, v, '1'});
  }

  // R2
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (uf.find(c) != c) continue;
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (uf.find(i) == c) members.push_back(i);
      for (const auto& v : vectors) {
        std::vector<std::size_t> lim;
        for (std::size_t m : members) {
          const auto own = detail::limit_orbits(space, orbits[m], v);
          for (std::size_t i = 1; i < own.size(); ++i)
            if (uf.find(index_of(own[i])) != uf.find(index_of(own.front())))
              result.identifications.push_back({own.front(), own[i], orbits[m], v, '2'});
          for (const auto& l : own) lim.push_back(index_of(l));
        }
        if (lim.empty()) continue;
        const Sublattice inherited = k[uf.find(c)];
        if (merge(lim, inherited)) changed = true;
      }
    }
  }

  std::map<std::size_t, IdentificationClass> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].orbits.push_back(orbits[i]);
  for (auto& [root, cls] : by_root) {
    cls.subtorus = k[root];
    result.classes.push_back(std::move(cls));
  }
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& a, const auto& b) { return a.orbits.front() < b.orbits.front(); });
  return result;
}

struct PartitionComparison {
  bool matches = false;
  std::vector<std::string> report;
};

/// Whether the classes are exactly the fibers of kappa over each orbit,
/// cosets included.
inline PartitionComparison partition_matches_fibers(const IdentificationPartition& part, const ToricMorphism& kappa) {
  if (kappa.source().orbits() != part.orbits)
    throw Error("partition_matches_fibers: the morphism's source is not the partition's space");
  PartitionComparison out{true, {}};
  auto fail = [&](std::string why) {
    out.matches = false;
    out.report.push_back(std::move(why));
  };

  for (const auto& cls : part.classes) {
    std::set<OrbitIndex> targets;
    for (const auto& o : cls.orbits) targets.insert(kappa.assigned(o));
    if (targets.size() != 1) {
      fail("class of " + cls.orbits.front().cone.str() + " maps to " + std::to_string(targets.size()) + " orbits");
      continue;
    }
    const Cone& gamma = targets.begin()->cone;
    const Sublattice expected = preimage(kappa.map(), gamma.span_lattice());
    if (expected != cls.subtorus)
      fail("class of " + cls.orbits.front().cone.str() + " has subtorus " + cls.subtorus.str() +
           " but the fiber subtorus is " + expected.str());
    else
      out.report.push_back("class of " + cls.orbits.front().cone.str() + " -> " + gamma.str() + " ok");
  }

  std::set<OrbitIndex> image;
  for (const auto& [o, t] : kappa.cone_assignment()) image.insert(t);
  for (const auto& gamma : image) {
    const OrbitPoint y = OrbitPoint::make(gamma, TorusElement::identity(kappa.target().rank()));
    const auto pieces = fiber_pieces(kappa, y);
    std::vector<OrbitIndex> piece_orbits;
    for (const auto& p : pieces) piece_orbits.push_back(p.orbit);
    std::sort(piece_orbits.begin(), piece_orbits.end());
    const auto cls = piece_orbits.empty() ? std::nullopt : part.class_of(piece_orbits.front());
    if (!cls || part.classes[*cls].orbits != piece_orbits) {
      fail("fiber over " + gamma.cone.str() + " is not a single class");
      continue;
    }
    for (const auto& p : pieces)
      if (p.subtorus != part.classes[*cls].subtorus) fail("fiber piece on " + p.orbit.cone.str() + " has a different subtorus");
  }
  return out;
}

}  // namespace toricq
