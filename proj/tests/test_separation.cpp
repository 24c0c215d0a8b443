#include <gtest/gtest.h>

#include "support.hpp"

using namespace toricq;

namespace {

const QuotientExample& ex() {
  static const QuotientExample value = worked_example();
  return value;
}

const IdentificationPartition& ytilde_partition() {
  static const IdentificationPartition value = forced_identifications(ex().ytilde);
  return value;
}

OrbitIndex orbit(const FanSystem& s, std::size_t chart, const Cone& c) { return s.canonical(chart, c); }

}  // namespace

TEST(Projection, ChartsAreImages) {
  EXPECT_EQ(ex().ytilde.charts(), (std::vector<Cone>{ex().tau1, ex().tau2}));
  EXPECT_FALSE(ex().ytilde.separated());
  EXPECT_EQ(ex().ytilde.gluing(0, 1), ex().zero3);
  EXPECT_TRUE(invariance_check(ex().weight, ex().lattice_map));
  EXPECT_FALSE(invariance_check(ex().weight, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TEST(Identifications, WorkedExamplePartition) {
  const auto& part = ytilde_partition();
  EXPECT_EQ(detail::class_shapes(part), expected_example_classes(ex()));
  const auto c = part.class_of(orbit(ex().ytilde, 1, ex().rho4));
  ASSERT_TRUE(c);
  EXPECT_EQ(part.classes[*c].orbits.size(), 2u);
  EXPECT_TRUE(partition_matches_fibers(part, ex().kappa).matches);
}

TEST(Identifications, Idempotent) {
  const auto& part = ytilde_partition();
  EXPECT_EQ(forced_identifications(ex().ytilde, &part), part);
}

TEST(Identifications, SubtoriSaturatedAndContainIsotropy) {
  for (const auto& cls : ytilde_partition().classes) {
    EXPECT_TRUE(cls.subtorus.is_saturated());
    for (const auto& o : cls.orbits) EXPECT_TRUE(cls.subtorus.contains(o.cone.span_lattice()));
  }
}

TEST(Identifications, RuleOneRecordsAreLimits) {
  const auto& part = ytilde_partition();
  ASSERT_FALSE(part.identifications.empty());
  for (const auto& id : part.identifications) {
    const auto start = distinguished_point(ex().ytilde, id.curve_orbit.chart, id.curve_orbit.cone);
    const auto lim = one_param_limits(ex().ytilde, id.direction, start);
    std::set<OrbitIndex> hit;
    for (const auto& p : lim) hit.insert(p.orbit);
    EXPECT_TRUE(hit.count(id.a) && hit.count(id.b));
  }
}

TEST(Identifications, EquivariantAndMatchesKappa) {
  const auto& part = ytilde_partition();
  const auto a = orbit(ex().ytilde, 0, ex().tau1);
  const auto b = orbit(ex().ytilde, 1, ex().rho4);
  support::rng(51);
  for (int s = 0; s < 50; ++s) {
    const TorusElement t = support::random_torus(3);
    const std::vector<Rational> params{support::random_rational(), support::random_rational()};
    const auto plane = Sublattice::from_generators(3, {IntVector{1, 0, 0}, IntVector{0, 1, 0}});
    const auto line = Sublattice::from_generators(3, {IntVector{0, 0, 1}});
    const TorusElement u = s % 3 == 0   ? t * subtorus_element(plane, params)
                           : s % 3 == 1 ? t * subtorus_element(line, std::span(params).first(1))
                                        : support::random_torus(3);
    const OrbitPoint p = OrbitPoint::make(a, t), q = OrbitPoint::make(b, u);
    const bool same = apply_morphism(ex().kappa, p) == apply_morphism(ex().kappa, q);
    ASSERT_EQ(part.identified(p, q), same);
    ASSERT_TRUE(part.identified(OrbitPoint::make(a, t), OrbitPoint::make(b, t)));
  }
}

TEST(Identifications, DoubledOriginLine) {
  const Cone r = Cone::from_generators({IntVector{1}}, 1);
  const auto doubled = build_fan_system({r, r}, {}, 1);
  const auto part = forced_identifications(doubled);
  ASSERT_EQ(part.classes.size(), 2u);
  EXPECT_EQ(part.classes[1].orbits.size(), 2u);
  EXPECT_EQ(part.classes[1].subtorus, Sublattice::full(1));
  const Fan line = build_fan({r}, 1);
  EXPECT_TRUE(partition_matches_fibers(part, comparison_morphism(doubled, line)).matches);
}

TEST(Identifications, SeparatedSpaceHasTrivialPartition) {
  const auto u = build_fan_system({ex().tau1, ex().rho3}, {}, 3);
  EXPECT_TRUE(u.separated());
  const TorusElement t{Rational(2), Rational(3), Rational(5)};
  EXPECT_EQ(one_param_limits(u, IntVector{1, 1, 0}, OrbitPoint::make(*u.find_orbit(ex().zero3), t)).size(), 1u);
  const auto part = forced_identifications(u);
  EXPECT_EQ(part.classes.size(), u.orbits().size());
  for (const auto& cls : part.classes) EXPECT_EQ(cls.subtorus, cls.orbits.front().cone.span_lattice());
  const auto kappa = comparison_morphism(u, ex().affine3);
  EXPECT_TRUE(partition_matches_fibers(part, kappa).matches);
  std::set<OrbitIndex> images;
  for (const auto& o : u.orbits()) images.insert(kappa.assigned(o));
  EXPECT_EQ(images.size(), u.orbits().size());
}

TEST(Identifications, CollapsingMapDoesNotMatch) {
  const Fan point = build_fan({}, 0);
  const auto collapse = toric_morphism(IntMatrix(0, 3), ex().ytilde, point.system());
  EXPECT_FALSE(partition_matches_fibers(ytilde_partition(), collapse).matches);
}

TEST(Verification, ReportPassesAndVariantFails) {
  const auto report = verify_paper_example();
  ASSERT_EQ(report.checks.size(), 7u);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name;
  const auto variant = verify_paper_example(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_FALSE(variant.passed());
  EXPECT_FALSE(variant.checks.front().passed);
}
