#pragma once

// The C^*-action on C^2 x (C^*)^2 ∪ (C^*)^2 x C^2 with weight (1,1,0,-1),
// its toric quotient to C^3, and the two-chart prevariety through which the
// quotient factors.

#include "toricq/separation.hpp"

namespace toricq {

struct QuotientExample {
  IntMatrix lattice_map;  ///< Z^4 -> Z^3
  IntVector weight;       ///< one-parameter subgroup of the action

  Cone zero4, sigma1, sigma2;
  Cone zero3, rho1, rho2, rho3, rho4, tau1, tau2, delta;
  Cone cone13, cone23;  ///< cone(e1,e3), cone(e2,e3)

  Fan x;             ///< fan with maximal cones sigma1, sigma2
  Fan affine3;       ///< fan of C^3
  FanSystem ytilde;  ///< charts tau1, tau2 glued along the torus
  ToricMorphism pi, pitilde, kappa;
};

inline IntMatrix example_lattice_map() { return IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}}; }

inline QuotientExample worked_example(const IntMatrix& lattice_map = example_lattice_map()) {
  QuotientExample ex;
  ex.lattice_map = lattice_map;
  ex.weight = IntVector{1, 1, 0, -1};
  auto e4 = [](std::size_t i) { return IntVector::unit(4, i); };
  auto e3 = [](std::size_t i) { return IntVector::unit(3, i); };
  ex.zero4 = Cone::zero(4);
  ex.sigma1 = Cone::from_generators({e4(0), e4(1)}, 4);
  ex.sigma2 = Cone::from_generators({e4(2), e4(3)}, 4);
  ex.zero3 = Cone::zero(3);
  ex.rho1 = Cone::from_generators({e3(0)}, 3);
  ex.rho2 = Cone::from_generators({e3(1)}, 3);
  ex.rho3 = Cone::from_generators({e3(2)}, 3);
  ex.rho4 = Cone::from_generators({IntVector{1, 1, 0}}, 3);
  ex.tau1 = image_cone(lattice_map, ex.sigma1);
  ex.tau2 = image_cone(lattice_map, ex.sigma2);
  ex.delta = Cone::from_generators({e3(0), e3(1), e3(2)}, 3);
  ex.cone13 = Cone::from_generators({e3(0), e3(2)}, 3);
  ex.cone23 = Cone::from_generators({e3(1), e3(2)}, 3);

  ex.x = Fan::build({ex.sigma1, ex.sigma2}, 4);
  ex.affine3 = Fan::build({ex.delta}, 3);
  auto projected = project_prevariety(ex.x, lattice_map);
  ex.ytilde = std::move(projected.system);
  ex.pitilde = std::move(projected.morphism);
  ex.pi = toric_morphism(lattice_map, ex.x, ex.affine3);
  ex.kappa = comparison_morphism(ex.ytilde, ex.affine3);
  return ex;
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

namespace detail {

inline std::vector<std::pair<std::vector<Cone>, Sublattice>> class_shapes(const IdentificationPartition& part) {
  std::vector<std::pair<std::vector<Cone>, Sublattice>> out;
  for (const auto& cls : part.classes) {
    std::vector<Cone> cones;
    for (const auto& o : cls.orbits) cones.push_back(o.cone);
    std::sort(cones.begin(), cones.end());
    out.emplace_back(std::move(cones), cls.subtorus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Fiber of kappa over t·y_gamma has exactly the expected (orbit cone, K)
/// pieces, and each piece contains t·ytilde of its orbit.
inline bool fiber_has_shape(const QuotientExample& ex, const Cone& gamma, const TorusElement& t,
                            const std::vector<Cone>& piece_cones, const Sublattice& k, std::string& detail) {
  const OrbitPoint y = OrbitPoint::make(*ex.affine3.system().find_orbit(gamma), t);
  const auto pieces = fiber_pieces(ex.kappa, y);
  std::vector<Cone> got;
  bool ok = pieces.size() == piece_cones.size();
  for (const auto& p : pieces) {
    got.push_back(p.orbit.cone);
    ok = ok && p.subtorus == k && p.has_rational_representative();
    ok = ok && p.contains(OrbitPoint::make(p.orbit, t));
  }
  std::sort(got.begin(), got.end());
  auto want = piece_cones;
  std::sort(want.begin(), want.end());
  ok = ok && got == want;
  detail = "fiber over " + gamma.str() + " at t=" + t.str() + ": " + std::to_string(pieces.size()) + " piece(s), K=" +
           (pieces.empty() ? std::string("-") : pieces.front().subtorus.str());
  return ok;
}

}  // namespace detail

/// Checks of the kappa-fibers over t·y_0, t·y_rho_i, t·y_tau1 and y_delta.
inline bool check_example_fibers(const QuotientExample& ex, const TorusElement& t, std::vector<std::string>& details) {
  bool ok = true;
  std::string d;
  auto run = [&](const Cone& gamma, const TorusElement& at, std::vector<Cone> pieces, const Sublattice& k) {
    ok = detail::fiber_has_shape(ex, gamma, at, pieces, k, d) && ok;
    details.push_back(d);
  };
  run(ex.zero3, t, {ex.zero3}, Sublattice::zero(3));
  run(ex.rho1, t, {ex.rho1}, ex.rho1.span_lattice());
  run(ex.rho2, t, {ex.rho2}, ex.rho2.span_lattice());
  run(ex.rho3, t, {ex.rho3}, ex.rho3.span_lattice());
  run(ex.tau1, t, {ex.tau1, ex.rho4}, Sublattice::from_generators(3, {IntVector{1, 0, 0}, IntVector{0, 1, 0}}));
  run(ex.delta, TorusElement::identity(3), {ex.tau2}, Sublattice::full(3));
  return ok;
}

inline std::vector<std::pair<std::vector<Cone>, Sublattice>> expected_example_classes(const QuotientExample& ex) {
  std::vector<std::pair<std::vector<Cone>, Sublattice>> want = {
      {{ex.zero3}, Sublattice::zero(3)},
      {{ex.rho1}, ex.rho1.span_lattice()},
      {{ex.rho2}, ex.rho2.span_lattice()},
      {{ex.rho3}, ex.rho3.span_lattice()},
      {{ex.rho4, ex.tau1}, Sublattice::from_generators(3, {IntVector{1, 0, 0}, IntVector{0, 1, 0}})},
      {{ex.tau2}, Sublattice::full(3)},
  };
  for (auto& [cones, k] : want) std::sort(cones.begin(), cones.end());
  std::sort(want.begin(), want.end());
  return want;
}

/// Runs the whole pipeline on the worked example and records one check per
/// step. With a lattice map other than the default the checks still run
/// against the expected values of the default.
inline VerificationReport verify_paper_example(const IntMatrix& lattice_map = example_lattice_map()) {
  VerificationReport report;
  auto step = [&](std::string name, auto&& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.passed = body(r.details);
    } catch (const std::exception& e) {
      r.details.push_back(std::string("error: ") + e.what());
    }
    report.checks.push_back(std::move(r));
  };

  std::optional<QuotientExample> built;
  try {
    built = worked_example(lattice_map);
  } catch (const std::exception& e) {
    report.checks.push_back({"build", false, {std::string("error: ") + e.what()}});
    return report;
  }
  const QuotientExample& ex = *built;
  const TorusElement t{Rational(2), Rational(3), Rational(5)};

  step("invariance", [&](auto& d) {
    const bool killed = invariance_check(ex.weight, ex.lattice_map);
    const Sublattice ker = kernel_saturated(ex.lattice_map);
    d.push_back("P*w = " + (ex.lattice_map * ex.weight).str());
    d.push_back("ker P = " + ker.str());
    return killed && ker == Sublattice::from_generators(4, {ex.weight});
  });

  step("image", [&](auto& d) {
    const auto img = image_constructible(ex.pi);
    std::vector<Cone> want_present{ex.zero3, ex.rho1, ex.rho2, ex.rho3, ex.tau1, ex.delta};
    std::vector<Cone> want_absent{ex.cone13, ex.cone23};
    std::sort(want_present.begin(), want_present.end());
    std::sort(want_absent.begin(), want_absent.end());
    d.push_back(std::to_string(img.present.size()) + " orbits present, " + std::to_string(img.absent.size()) + " absent");
    const auto via_kappa = image_constructible(ex.kappa);
    return img.present == want_present && img.absent == want_absent && via_kappa.present == img.present;
  });

  step("fibers", [&](auto& d) {
    return check_example_fibers(ex, TorusElement::identity(3), d) && check_example_fibers(ex, t, d);
  });

  step("limits", [&](auto& d) {
    const IntVector v{1, 1, 0};
    const auto torus = OrbitPoint::make(*ex.ytilde.find_orbit(ex.zero3), t);
    const auto lim = one_param_limits(ex.ytilde, v, torus);
    std::vector<OrbitPoint> want{OrbitPoint::make(ex.ytilde.canonical(0, ex.tau1), t),
                                 OrbitPoint::make(ex.ytilde.canonical(1, ex.rho4), t)};
    std::sort(want.begin(), want.end());
    const auto sep = one_param_limits(ex.affine3, v, OrbitPoint::make(*ex.affine3.system().find_orbit(ex.zero3), t));
    d.push_back("prevariety: " + std::to_string(lim.size()) + " limit point(s)");
    d.push_back("affine space: " + std::to_string(sep.size()) + " limit point(s)");
    return lim == want && sep.size() == 1 && sep.front().orbit.cone == ex.tau1;
  });

  step("codimension", [&](auto& d) {
    const auto codim = complement_codim(image_constructible(ex.pi));
    d.push_back("complement codimension " + (codim ? std::to_string(*codim) : std::string("inf")));
    return codim == std::optional<std::size_t>(2);
  });

  std::optional<IdentificationPartition> part;
  step("identifications", [&](auto& d) {
    part = forced_identifications(ex.ytilde);
    d.push_back(std::to_string(part->classes.size()) + " classes");
    return detail::class_shapes(*part) == expected_example_classes(ex);
  });

  step("partition", [&](auto& d) {
    if (!part) part = forced_identifications(ex.ytilde);
    auto cmp = partition_matches_fibers(*part, ex.kappa);
    d = cmp.report;
    return cmp.matches;
  });
  return report;
}

}  // namespace toricq
