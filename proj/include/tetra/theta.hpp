#pragma once

// Representation-number series and the degree-two invariant Theta_{1,1}.
//
// Theta_{1,1} is defined through squares of weighted theta series
//   32 * sum_{i<j} Theta_{x_i x_j}^2 + sum_i Theta_{4x_i^2 - |x|^2}^2,
// which expands into a sum over ordered pairs (l, k) of lattice vectors.
// In eigen coordinates the orthonormal coordinate x_i of l is sqrt(s_i)*l_i
// with s = (a, b, c, d); the products that appear only ever involve s_i,
// never sqrt(s_i), so every pair contributes a rational polynomial.

#include "tetra/arith.hpp"
#include "tetra/lattice.hpp"

#include <cstdint>

namespace tetra {

enum class PairKernel {
  Defining,  // the sum-of-squares expression, expanded per pair
  Pairwise,  // 16<l,k>^2 - 4|l|^2|k|^2
};

const char* to_string(PairKernel k);

/// Coefficient polynomial contributed by the ordered pair (l, k).
ParamPolynomial pair_kernel(PairKernel kernel, const LatticeVector& l, const LatticeVector& k);

/// Number of vectors of A per exponent vector, up to the budget.
FormalQSeries rep_series(const Lattice& a, std::int64_t budget);

/// Sum over ordered pairs (l, k) in A with |phi(l) + phi(k)| <= budget of
/// kernel(l, k) q^{phi(l)+phi(k)}.
FormalQSeries theta11(const Lattice& a, std::int64_t budget, PairKernel kernel = PairKernel::Pairwise);

/// Floating-point value of the series at q = exp(-2*pi*t). Diagnostic only.
double evaluate_at(const FormalQSeries& series, const ParamPoint& p, const Rational& t);

}  // namespace tetra
