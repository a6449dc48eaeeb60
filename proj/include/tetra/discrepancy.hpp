#pragma once

// The discrepancy delta = (Theta11(L1) - Theta11(L2)) / 128, its coset
// decomposition over L1/M, and the non-isometry certificate built from the
// first nonvanishing coefficient of delta.

#include "tetra/arith.hpp"
#include "tetra/lattice.hpp"
#include "tetra/theta.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

enum class DeltaRoute {
  FromTheta,      // (theta11(L1) - theta11(L2)) / 128
  FromPsiKernel,  // (1/8) sum over L1 x L1 of <l,k>^2 - <Psi l, Psi k>^2
};

const char* to_string(DeltaRoute r);

/// Pair of class indices i < j in {0, 1, 2, 3}.
struct ClassPair {
  int i;
  int j;
  ClassPair(int i, int j);
  auto operator<=>(const ClassPair&) const = default;
};

const std::array<ClassPair, 6>& all_class_pairs();

FormalQSeries delta_series(std::int64_t budget, DeltaRoute route = DeltaRoute::FromPsiKernel);

/// Sum over (l, k) in [x] x [y] of (<l,k>^2 - <Psi l, Psi k>^2) q^{phi(l)+phi(k)},
/// without the 1/8 normalization of delta.
FormalQSeries delta_labels(const CosetLabel& x, const CosetLabel& y, std::int64_t budget);

/// delta_labels(+[v_i], +[v_j]).
FormalQSeries delta_class(const ClassPair& cp, std::int64_t budget);

/// The four coset relations, checked over all 9 x 9 label pairs.
struct RelationReport {
  bool ok = true;
  int checked = 0;
  std::string relation;  // which relation failed, e.g. "symmetry"
  std::optional<CosetLabel> first;
  std::optional<CosetLabel> second;
  std::optional<ExponentVector> witness;
};

RelationReport check_relations(std::int64_t budget);

/// The seven vectors v0..v6 that are minimal in their classes.
const std::array<LatticeVector, 7>& tabulated_minimal_vectors();
/// Class index of the tabulated vector v_idx (v4 in [v0], v5 in [v1], v6 in [v3]).
int tabulated_class(int idx);

/// Minimal elements (no strict predecessor under the suffix order of phi)
/// of a class within the budget shell, in lexicographic order.
std::vector<LatticeVector> minimal_vectors(const CosetLabel& label, std::int64_t budget);

/// Minimal elements of the full, infinite class. Since 12*Z^4 lies in M,
/// reducing coordinates into [-6, 6] never increases phi componentwise, so
/// every minimal vector lies in that box and the box search is exhaustive.
std::vector<LatticeVector> minimal_vectors_complete(const CosetLabel& label);

struct MinimalPairRow {
  int i;
  int j;
  ExponentVector sum;
  bool minimal;
};

/// phi(v_i) + phi(v_j) for every pair of tabulated minimal vectors in
/// distinct classes (18 rows). Throws std::logic_error if the brute-force
/// minimal vectors within the budget disagree with the tabulated ones.
std::vector<MinimalPairRow> minimal_pair_table(std::int64_t budget);

/// Smallest budget accepted by the minimal-pair search and certify.
inline constexpr std::int64_t kCertifyMinBudget = 36;

/// phi(v0) + phi(v2) and phi(v2) + phi(v5).
const ExponentVector& leading_exponent_v0v2();
const ExponentVector& leading_exponent_v2v5();
/// -12(b-a)(d-c) and -96a(c-b).
const ParamPolynomial& leading_coefficient_v0v2();
const ParamPolynomial& leading_coefficient_v2v5();

enum class Verdict { NonIsometric, Inconclusive };

const char* to_string(Verdict v);

struct CertificateTerm {
  ExponentVector exponent;
  ParamPolynomial polynomial;
  Rational value;
};

struct Certificate {
  ParamPoint params;
  ParamPoint sorted_params;
  /// sorted_params[k] == params[permutation[k]].
  std::array<int, 4> permutation;
  std::int64_t budget;
  std::optional<Rational> min_exponent;
  std::vector<CertificateTerm> terms;
  Rational total;
  Verdict verdict;
};

/// Certifies that L1 and L2 are not isometric at p. Parameters are sorted
/// into increasing order first; a repeated coordinate yields Inconclusive.
/// Throws std::invalid_argument for budget < kCertifyMinBudget and
/// std::logic_error if an internal cross-check fails.
Certificate certify(const ParamPoint& p, std::int64_t budget);

/// Same, reusing a precomputed delta_series.
Certificate certify(const ParamPoint& p, const FormalQSeries& delta);

}  // namespace tetra
