#pragma once

// Ternary codes in F_3^4 and the Klein four-group acting on them.
//
// Residues are stored canonically in {0, 1, 2}; a printed -1 is 2.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

struct F3Vector {
  std::array<std::uint8_t, 4> x{0, 0, 0, 0};

  F3Vector() = default;
  /// Reduces arbitrary integers mod 3 (so -1 -> 2).
  F3Vector(long x0, long x1, long x2, long x3);

  std::uint8_t operator[](std::size_t i) const { return x[i]; }
  bool is_zero() const { return x == std::array<std::uint8_t, 4>{0, 0, 0, 0}; }

  F3Vector operator+(const F3Vector& o) const;
  F3Vector scaled(unsigned s) const;

  auto operator<=>(const F3Vector&) const = default;
};

/// Standard bilinear form mod 3.
std::uint8_t dot(const F3Vector& u, const F3Vector& v);

/// Balanced representation, e.g. "(1,0,-1,-1)".
std::string to_string(const F3Vector& v);

/// A two-dimensional subspace of F_3^4, identified by its element set.
class TernaryCode {
 public:
  /// Span of two independent vectors; throws std::invalid_argument if dependent.
  TernaryCode(const F3Vector& g0, const F3Vector& g1);

  const std::array<F3Vector, 9>& elements() const { return elements_; }
  /// Reduced row-echelon basis, which is canonical for the subspace.
  const std::array<F3Vector, 2>& generators() const { return generators_; }

  bool contains(const F3Vector& v) const;
  bool self_dual() const;
  /// Number of common elements (3 means a one-dimensional intersection).
  int intersection_size(const TernaryCode& o) const;

  bool operator==(const TernaryCode& o) const { return elements_ == o.elements_; }
  bool operator<(const TernaryCode& o) const { return elements_ < o.elements_; }

 private:
  std::array<F3Vector, 9> elements_;
  std::array<F3Vector, 2> generators_;
};

/// Klein four-group element g0..g3 in both coordinate systems: a signed
/// permutation in the standard basis of L and a diagonal sign matrix in the
/// eigenbasis.
struct K4Element {
  int id;
  std::array<std::array<int, 4>, 4> standard;
  std::array<int, 4> eigen_signs;

  F3Vector apply(const F3Vector& v) const;
  std::array<long, 4> apply_standard(const std::array<long, 4>& v) const;
  std::array<long, 4> apply_eigen(const std::array<long, 4>& v) const;
};

const std::array<K4Element, 4>& k4_elements();
const K4Element& k4(int i);

/// All 130 two-dimensional subspaces of F_3^4, in element-set order.
std::vector<TernaryCode> two_dimensional_codes();

/// The eight self-dual codes, ordered C1..C8 as in the classical listing.
std::vector<TernaryCode> all_selfdual_codes();

/// The classical generator pair of C_{index+1}, in balanced form.
std::array<F3Vector, 2> reference_generators(int index);

TernaryCode k4_act_code(const K4Element& g, const TernaryCode& c);

/// Orbits under K4 as sorted lists of indices into `codes`.
std::vector<std::vector<int>> orbit_partition(const std::vector<TernaryCode>& codes);

/// Pairs (i, j), i < j, with one-dimensional intersection.
std::vector<std::pair<int, int>> intersection_graph(const std::vector<TernaryCode>& codes);

/// Whether `edges` on `n` vertices is exactly the complete bipartite graph
/// between `left` and its complement.
bool is_complete_bipartite(int n, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<int>& left);

/// The code words v_i of C1 and w_i = g_i(v_i) of C2.
const std::array<F3Vector, 4>& codeword_c1();
const std::array<F3Vector, 4>& codeword_c2();

/// The unique g in K4 with g(v) in C2, for nonzero v in C1. Throws
/// std::invalid_argument for v outside C1 or v = 0, std::logic_error if the
/// uniqueness fails.
const K4Element& match_element(const F3Vector& v);

}  // namespace tetra
