#pragma once

#include "toricq/normal_form.hpp"

#include <optional>
#include <span>
#include <vector>

namespace toricq {

/// Subgroup of Z^n stored by the nonzero rows of its Hermite normal form,
/// which makes equality structural.
class Sublattice {
 public:
  Sublattice() = default;

  static Sublattice zero(std::size_t n) { return Sublattice(n, IntMatrix(0, n)); }
  static Sublattice full(std::size_t n) { return Sublattice(n, IntMatrix::identity(n)); }

  static Sublattice from_generators(std::size_t n, std::span<const IntVector> gens) {
    if (gens.empty()) return zero(n);
    HermiteForm f = hermite_normal_form(IntMatrix::from_rows(gens, n));
    IntMatrix b(f.rank, n);
    for (std::size_t i = 0; i < f.rank; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = f.h(i, j);
    return Sublattice(n, std::move(b));
  }
  static Sublattice from_generators(std::size_t n, std::initializer_list<IntVector> gens) {
    std::vector<IntVector> v(gens);
    return from_generators(n, v);
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis_matrix() const { return basis_; }
  std::vector<IntVector> basis() const { return basis_.row_vectors(); }

  /// Integer coordinates of v in the stored basis, if v lies in the lattice.
  std::optional<std::vector<Integer>> coordinates(const IntVector& v) const {
    if (v.rank() != ambient_) throw RankMismatch("Sublattice: rank mismatch");
    IntVector w = v;
    std::vector<Integer> coeffs(rank());
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      while (basis_(i, col) == 0) ++col;
      if (w[col] % basis_(i, col) != 0) return std::nullopt;
      coeffs[i] = w[col] / basis_(i, col);
      for (std::size_t j = col; j < ambient_; ++j) w[j] -= coeffs[i] * basis_(i, j);
    }
    if (!w.is_zero()) return std::nullopt;
    return coeffs;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  bool contains(const Sublattice& other) const {
    for (std::size_t i = 0; i < other.rank(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Representative of v modulo this lattice with pivot entries in [0, pivot).
  IntVector reduce(IntVector v) const {
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      while (basis_(i, col) == 0) ++col;
      const Integer q = floor_div(v[col], basis_(i, col));
      for (std::size_t j = col; j < ambient_; ++j) v[j] -= q * basis_(i, j);
    }
    return v;
  }

  /// Lattice of dual vectors vanishing on this lattice; always saturated.
  Sublattice orthogonal() const;

  Sublattice saturation() const { return orthogonal().orthogonal(); }

  bool is_saturated() const {
    if (rank() == 0) return true;
    for (const auto& d : smith_normal_form(basis_).invariant_factors())
      if (d != 1) return false;
    return true;
  }

  friend Sublattice operator+(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_ != b.ambient_) throw RankMismatch("Sublattice sum: rank mismatch");
    std::vector<IntVector> gens = a.basis();
    for (auto& v : b.basis()) gens.push_back(std::move(v));
    return from_generators(a.ambient_, gens);
  }

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend auto operator<=>(const Sublattice& a, const Sublattice& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    return a.basis() <=> b.basis();
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ",";
      s += basis_.row(i).str();
    }
    return s + ">";
  }

 private:
  Sublattice(std::size_t n, IntMatrix basis) : ambient_(n), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

/// {v in Z^c : M v = 0}. The kernel of an integer map is always saturated.
inline Sublattice kernel_saturated(const IntMatrix& m) {
  const std::size_t c = m.cols();
  if (m.rows() == 0) return Sublattice::full(c);
  HermiteForm f = hermite_normal_form(m.transposed());
  std::vector<IntVector> gens;
  for (std::size_t i = f.rank; i < c; ++i) gens.push_back(f.u.row(i));
  return Sublattice::from_generators(c, gens);
}

inline Sublattice Sublattice::orthogonal() const {
  if (rank() == 0) return full(ambient_);
  return kernel_saturated(basis_);
}

/// Image M(L) of a sublattice of Z^c in Z^r.
inline Sublattice image(const IntMatrix& m, const Sublattice& l) {
  if (l.ambient_rank() != m.cols()) throw RankMismatch("image: rank mismatch");
  std::vector<IntVector> gens;
  for (const auto& b : l.basis()) gens.push_back(m * b);
  return Sublattice::from_generators(m.rows(), gens);
}

/// {v in Z^c : M v in L}.
inline Sublattice preimage(const IntMatrix& m, const Sublattice& l) {
  if (l.ambient_rank() != m.rows()) throw RankMismatch("preimage: rank mismatch");
  const std::size_t c = m.cols(), k = l.rank();
  IntMatrix neg_basis_t(m.rows(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) neg_basis_t(j, i) = -l.basis_matrix()(i, j);
  Sublattice joint = kernel_saturated(m.hcat(neg_basis_t));
  std::vector<IntVector> gens;
  for (const auto& v : joint.basis()) {
    IntVector head(c);
    for (std::size_t j = 0; j < c; ++j) head[j] = v[j];
    gens.push_back(std::move(head));
  }
  return Sublattice::from_generators(c, gens);
}

/// Whether M(Z^c) + L = Z^r.
inline bool surjective_modulo(const IntMatrix& m, const Sublattice& l) {
  IntMatrix joint = m.hcat(l.basis_matrix().transposed());
  SmithForm f = smith_normal_form(joint);
  if (f.rank != m.rows()) return false;
  for (const auto& d : f.invariant_factors())
    if (d != 1) return false;
  return true;
}

/// Index [Z^r : M(Z^c) + L], or 0 when the cokernel is infinite.
inline Integer cokernel_index_modulo(const IntMatrix& m, const Sublattice& l) {
  IntMatrix joint = m.hcat(l.basis_matrix().transposed());
  SmithForm f = smith_normal_form(joint);
  if (f.rank != m.rows()) return 0;
  Integer index = 1;
  for (const auto& d : f.invariant_factors()) index *= d;
  return index;
}

}  // namespace toricq
