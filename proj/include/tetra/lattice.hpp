#pragma once

// The rank-4 lattice L with its Klein four-group symmetry, the sublattices
// L1, L2 (preimages of the self-dual codes C1, C2), L12 = L1 ∩ L2 and
// M = 3L, together with the norm-preserving bijection Psi: L1 -> L2.
//
// Vectors are stored by their integer coordinates in the orthogonal
// eigenbasis u0..u3, in which the Gram matrix is diag(a, b, c, d).
// Standard coordinates (the basis of L in which K4 acts by signed
// permutations) appear only in project_mod3 and to_standard.

#include "tetra/arith.hpp"
#include "tetra/codes.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

struct LatticeVector {
  std::array<std::int64_t, 4> x{0, 0, 0, 0};

  LatticeVector() = default;
  LatticeVector(std::int64_t x0, std::int64_t x1, std::int64_t x2, std::int64_t x3) : x{x0, x1, x2, x3} {}

  std::int64_t operator[](std::size_t i) const { return x[i]; }
  bool is_zero() const { return x == std::array<std::int64_t, 4>{0, 0, 0, 0}; }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector operator*(std::int64_t s) const;

  auto operator<=>(const LatticeVector&) const = default;
};

std::string to_string(const LatticeVector& v);

/// Row-major 4x4 integer matrix; lattice generators are its columns.
using IntMatrix = std::array<std::array<std::int64_t, 4>, 4>;
using RationalMatrix = std::array<std::array<Rational, 4>, 4>;

IntMatrix from_columns(const std::array<LatticeVector, 4>& cols);
LatticeVector column(const IntMatrix& m, std::size_t j);
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
std::int64_t determinant(const IntMatrix& m);

/// Column-style Hermite normal form: H = A*U with U unimodular, H upper
/// triangular with positive diagonal and 0 <= H[i][j] < H[i][i] for j > i.
/// Requires a nonsingular matrix (std::invalid_argument otherwise).
IntMatrix hermite_normal_form(const IntMatrix& a);

class Lattice {
 public:
  Lattice(std::string name, const IntMatrix& generators);

  const std::string& name() const { return name_; }
  const IntMatrix& generators() const { return generators_; }
  const IntMatrix& hnf() const { return hnf_; }
  /// |det| of the generator matrix (covolume relative to Z^4 in eigen coordinates).
  std::int64_t covolume() const;

  bool contains(const LatticeVector& v) const;
  /// Integer coordinates of v in the HNF basis; throws std::invalid_argument
  /// when v is not in the lattice.
  std::array<std::int64_t, 4> hnf_coordinates(const LatticeVector& v) const;

  /// Index of this lattice inside `super`; throws if it is not a sublattice.
  std::int64_t index_in(const Lattice& super) const;

  /// Image under a diagonal sign matrix (a K4 element or any reflection).
  Lattice transformed(const std::array<int, 4>& signs, std::string name) const;

 private:
  std::string name_;
  IntMatrix generators_;
  IntMatrix hnf_;
};

bool lattice_eq(const Lattice& x, const Lattice& y);

/// Gram parameters of L in its standard basis.
struct GramParams {
  Rational r, alpha, beta, gamma;
  bool operator==(const GramParams&) const = default;
};

/// Throws std::invalid_argument if any resulting coordinate is <= 0.
ParamPoint abcd_from_gram(const GramParams& g);
GramParams gram_from_abcd(const ParamPoint& p);

/// Gram matrix of L in the standard basis.
RationalMatrix gram_matrix(const GramParams& g);

struct Family {
  Lattice L;
  Lattice L1;
  Lattice L2;
  Lattice M;
  Lattice L12;
};

/// The five lattices. Their generator matrices do not depend on (a, b, c, d).
const Family& build_family();

/// Columns are a basis of L in the standard basis (det = +-1).
const IntMatrix& standard_basis_matrix();
/// The same basis l0..l3 in eigen coordinates.
const IntMatrix& eigen_generator_matrix();
/// Columns u0..u3 in the standard basis (entries +-1/4).
const RationalMatrix& eigenbasis_matrix();

RationalMatrix to_rational(const IntMatrix& m);
RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y);
/// Throws std::invalid_argument on a singular matrix.
RationalMatrix inverse(const RationalMatrix& m);

/// The generators m0..m3 of M listed by Conway and Sloane's construction.
Lattice m_generator_lattice();
/// Conway-Sloane L- (spans L2).
Lattice conway_sloane_minus();
/// Conway-Sloane L+; diag(1,-1,1,1) maps it onto L1.
Lattice conway_sloane_plus();
/// The reflection diag(1,-1,1,1) relating L+ to L1.
constexpr std::array<int, 4> kPlusReflection{1, -1, 1, 1};

/// Standard coordinates of v in L; throws std::invalid_argument for v not in L.
std::array<long, 4> to_standard(const LatticeVector& v);

/// The reduction L -> L/3L = F_3^4.
F3Vector project_mod3(const LatticeVector& v);

/// All v in A with |phi(v)| = v0^2 + v1^2 + v2^2 + v3^2 <= budget, in
/// lexicographic order of coordinates.
std::vector<LatticeVector> enumerate(const Lattice& a, std::int64_t budget);

ExponentVector phi(const LatticeVector& v);
Rational norm2(const LatticeVector& v, const ParamPoint& p);
Rational inner(const LatticeVector& v, const LatticeVector& w, const ParamPoint& p);
/// a*v0*w0 + b*v1*w1 + c*v2*w2 + d*v3*w3 as a polynomial.
ParamPolynomial inner_poly(const LatticeVector& v, const LatticeVector& w);

/// Element of L1/M: Zero, or +-[rep_i].
struct CosetLabel {
  int index = -1;  // -1 for the class of M
  int sign = 0;    // +1 or -1 when index >= 0

  static CosetLabel zero() { return {}; }
  static CosetLabel of(int i, int s) { return {i, s}; }
  bool is_zero() const { return index < 0; }
  CosetLabel negated() const { return is_zero() ? *this : CosetLabel{index, -sign}; }

  auto operator<=>(const CosetLabel&) const = default;
};

std::string to_string(const CosetLabel& c);

/// [0], +[v0], -[v0], ..., -[v3].
const std::array<CosetLabel, 9>& all_labels();

/// Representatives rep_0..rep_3 of L1/M in eigen coordinates.
const std::array<LatticeVector, 4>& coset_reps();
/// Their images g_i(rep_i), representatives of L2/M.
const std::array<LatticeVector, 4>& coset_reps_l2();

/// Throws std::invalid_argument when v is not in L1.
CosetLabel coset_label(const LatticeVector& v);
/// Same for L2 with representatives g_i(rep_i).
CosetLabel coset_label_l2(const LatticeVector& v);

/// Identity on M, g_i on the classes +-[rep_i]. Throws on v not in L1.
LatticeVector psi(const LatticeVector& v);
/// Inverse of psi; throws on w not in L2.
LatticeVector psi_inv(const LatticeVector& w);

}  // namespace tetra
