#pragma once

// Rational points of split tori and monomial equation solving.

#include "toricq/sublattice.hpp"

#include <span>
#include <variant>
#include <vector>

namespace toricq {

/// Point of the torus (Q^*)^n in coordinates t = sum_i lambda_{e_i}(t_i).
class TorusElement {
 public:
  TorusElement() = default;
  explicit TorusElement(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
      if (c == 0) throw Error("torus coordinates must be nonzero");
  }
  TorusElement(std::initializer_list<Rational> coords) : TorusElement(std::vector<Rational>(coords)) {}

  static TorusElement identity(std::size_t n) { return TorusElement(std::vector<Rational>(n, Rational(1))); }

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_identity() const {
    for (const auto& c : coords_)
      if (c != 1) return false;
    return true;
  }

  /// chi^u(t) = prod_i t_i^{u_i}
  Rational character(const IntVector& u) const {
    if (u.rank() != rank()) throw RankMismatch("character: rank mismatch");
    Rational r = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      if (u[i] != 0) r *= rpow(coords_[i], to_int64(u[i]));
    return r;
  }

  TorusElement inverse() const {
    std::vector<Rational> c;
    c.reserve(rank());
    for (const auto& x : coords_) c.emplace_back(Rational(1) / x);
    return TorusElement(std::move(c));
  }

  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    if (a.rank() != b.rank()) throw RankMismatch("torus product: rank mismatch");
    std::vector<Rational> c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) c[i] = a[i] * b[i];
    return TorusElement(std::move(c));
  }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Rational> coords_;
};

/// Torus homomorphism induced by an exponent matrix A (r x c):
/// (A * t)_j = prod_i t_i^{A[j][i]}. Equivalently the map induced on tori by
/// the lattice map A : Z^c -> Z^r.
inline TorusElement monomial_map(const IntMatrix& a, const TorusElement& t) {
  if (a.cols() != t.rank()) throw RankMismatch("monomial_map: rank mismatch");
  std::vector<Rational> out(a.rows(), Rational(1));
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i)
      if (a(j, i) != 0) out[j] *= rpow(t[i], to_int64(a(j, i)));
  return TorusElement(std::move(out));
}

/// One-parameter subgroup lambda_v evaluated at s.
inline TorusElement one_parameter(const IntVector& v, const Rational& s) {
  std::vector<Rational> c;
  c.reserve(v.rank());
  for (const auto& x : v) c.push_back(rpow(s, to_int64(x)));
  return TorusElement(std::move(c));
}

/// Element of the subtorus T_K given by prod_i lambda_{b_i}(s_i) over a basis.
inline TorusElement subtorus_element(const Sublattice& k, std::span<const Rational> params) {
  TorusElement t = TorusElement::identity(k.ambient_rank());
  const auto basis = k.basis();
  for (std::size_t i = 0; i < basis.size() && i < params.size(); ++i)
    t = t * one_parameter(basis[i], params[i]);
  return t;
}

/// Whether t lies in the subtorus with cocharacter lattice sat(K).
inline bool in_subtorus(const TorusElement& t, const Sublattice& k) {
  for (const auto& u : k.orthogonal().basis())
    if (t.character(u) != 1) return false;
  return true;
}

/// Solution set representative * (solutions of the homogeneous system).
/// The homogeneous solution group has identity component T_kernel and
/// `components` connected components over C.
struct CosetSolution {
  TorusElement representative;
  Sublattice kernel;
  Integer components = 1;
};

/// Solutions exist over C but none has rational coordinates. Carries the
/// defining data so membership can still be tested.
struct NoRationalPoint {
  IntMatrix equations;
  std::vector<Rational> targets;
  Sublattice kernel;
  Integer components = 1;

  bool contains(const TorusElement& s) const { return monomial_map(equations, s).coords() == targets; }
};

/// No solutions at all: a reduced equation reads 1 = q with q != 1.
struct Inconsistent {
  std::size_t reduced_row = 0;
  Rational reduced_target;
};

using TorusSolution = std::variant<CosetSolution, NoRationalPoint, Inconsistent>;

/// Finds all s in the torus with prod_i s_i^{M[j][i]} = target[j] for every row j.
inline TorusSolution solve_torus_equation(const IntMatrix& m, std::span<const Rational> target) {
  if (target.size() != m.rows()) throw RankMismatch("solve_torus_equation: target size mismatch");
  for (const auto& q : target)
    if (q == 0) throw Error("solve_torus_equation: target entries must be nonzero");

  const std::size_t c = m.cols();
  const SmithForm f = smith_normal_form(m);
  const TorusElement reduced = monomial_map(f.u, TorusElement(std::vector<Rational>(target.begin(), target.end())));

  for (std::size_t j = f.rank; j < m.rows(); ++j)
    if (reduced[j] != 1) return Inconsistent{j, reduced[j]};

  std::vector<IntVector> kernel_gens;
  for (std::size_t j = f.rank; j < c; ++j) kernel_gens.push_back(f.v.column(j));
  Sublattice kernel = Sublattice::from_generators(c, kernel_gens);

  Integer components = 1;
  std::vector<Rational> w(c, Rational(1));
  bool rational = true;
  for (std::size_t j = 0; j < f.rank; ++j) {
    const Integer& d = f.d(j, j);
    components *= d;
    auto root = exact_rational_root(reduced[j], static_cast<std::uint64_t>(d));
    if (!root) {
      rational = false;
      continue;
    }
    w[j] = *root;
  }
  if (!rational)
    return NoRationalPoint{m, std::vector<Rational>(target.begin(), target.end()), std::move(kernel), components};
  return CosetSolution{monomial_map(f.v, TorusElement(std::move(w))), std::move(kernel), components};
}

inline TorusSolution solve_torus_equation(const IntMatrix& m, const TorusElement& target) {
  return solve_torus_equation(m, std::span<const Rational>(target.coords()));
}

}  // namespace toricq
