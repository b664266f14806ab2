#pragma once

// The nine dihedral (Norton-Sakuma) algebras as exact multiplication tables,
// with checks for the fusion rules, associativity of the form, the Miyamoto
// involutions and the inclusions between types.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/qlin.hpp"

namespace tpg::dihedral {

using qlin::Matrix;
using qlin::Rational;
using qlin::Vector;

enum class Type { T1A, T2A, T2B, T3A, T3C, T4A, T4B, T5A, T6A };

const std::array<Type, 9>& all_types();
std::string_view name(Type t);
/// Accepts "2A", "6a", ...; throws std::invalid_argument otherwise.
Type parse_type(std::string_view s);
std::size_t dimension(Type t);

/// Basis vectors are named a0, a1, a-1, a2, a-2, a3 (polygon axes), a_rho,
/// a_rho2, a_rho3 (further axes) and u_rho, v_rho, w_rho, u_rho2.
struct BasisLabel {
  std::string name;
  bool axis = false;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AxiomViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DihedralAlgebra {
 public:
  DihedralAlgebra(Type t, std::vector<BasisLabel> basis, std::vector<std::vector<Vector>> mult, Matrix gram);

  Type type() const { return type_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  /// Throws std::out_of_range for unknown labels.
  std::size_t index_of(std::string_view label) const;
  Vector e(std::string_view label) const;
  std::vector<std::string> axis_labels() const;

  /// Product of two basis vectors.
  const Vector& table(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const Matrix& gram() const { return gram_; }

  /// Bilinear extensions; throw qlin::DimensionError on length mismatch.
  Vector product(const Vector& u, const Vector& v) const;
  Rational inner(const Vector& u, const Vector& v) const;
  /// Matrix of x -> u*x (column j is u*e_j).
  Matrix ad(const Vector& u) const;

 private:
  Type type_;
  std::vector<BasisLabel> basis_;
  std::vector<std::vector<Vector>> mult_;
  Matrix gram_;
};

/// Signs applied to the extra (non-axis) basis vectors by the relabeling
/// a_i -> a_{1-i}. Every sign defaults to +1.
struct BuildOptions {
  std::map<std::string, int> swap_signs;
};

/// Complete table: printed entries, the smaller-type tables they contain,
/// closure under the dihedral relabelings and, for inner products that are
/// never printed, the unique solution of the associativity equations.
/// Throws ConstructionError on any conflict or underdetermined entry.
DihedralAlgebra build(Type t, const BuildOptions& opts = {});

/// The eigenvalues allowed for axes, in the order 1, 0, 1/4, 1/32.
const std::array<Rational, 4>& axis_eigenvalues();

struct Eigenspace {
  Rational value;
  std::vector<Vector> basis;
};

/// Eigenspaces of ad(axis) for the nonzero-dimensional members of
/// {1, 0, 1/4, 1/32}. Throws AxiomViolation if they do not span the algebra
/// or the 1-eigenspace is not spanned by the axis.
std::vector<Eigenspace> ad_spectrum(const DihedralAlgebra& a, std::string_view axis);

struct CheckReport {
  std::string check;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Eigenvalues allowed in the product of a mu- and a nu-eigenvector.
std::vector<Rational> fusion_rule(const Rational& mu, const Rational& nu);

CheckReport check_fusion(const DihedralAlgebra& a, std::string_view axis);
/// (e_i*e_j, e_k) == (e_i, e_j*e_k) for every basis triple.
CheckReport check_m1(const DihedralAlgebra& a);
/// tau(axis) and sigma(axis) preserve the product (and tau the form).
CheckReport check_miyamoto(const DihedralAlgebra& a, std::string_view axis);
/// 4A, 4B and 6A only; throws std::invalid_argument otherwise.
CheckReport check_inclusion(const DihedralAlgebra& a);

/// tau(axis) as a matrix acting on coordinate columns.
Matrix miyamoto_tau(const DihedralAlgebra& a, std::string_view axis);

/// The relabelings a_i -> a_{-i}, a_i -> a_{2-i} and a_i -> a_{1-i} as
/// signed permutation matrices on the basis.
std::vector<Matrix> symmetry_maps(const DihedralAlgebra& a);

/// Every check above for every axis, plus the PSD test of the Gram matrix.
std::vector<CheckReport> verify_all(const DihedralAlgebra& a);

/// Human-readable linear combination, e.g. "1/8*a0 + 1/8*a1 - 1/8*a_rho".
std::string format(const DihedralAlgebra& a, const Vector& v);

/// Labels, multiplication table and Gram matrix as JSON text.
std::string to_json(const DihedralAlgebra& a);

}  // namespace tpg::dihedral
