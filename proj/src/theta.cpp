#include "tetra/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tetra {

namespace {

ParamPolynomial norm_poly(const LatticeVector& v) { return inner_poly(v, v); }

ParamPolynomial defining_kernel(const LatticeVector& l, const LatticeVector& k) {
  ParamPolynomial total;
  // 32 * sum_{i<j} x_i x_j y_i y_j with x_i x_j y_i y_j = s_i s_j l_i l_j k_i k_j.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const std::int64_t c = 32 * l[i] * l[j] * k[i] * k[j];
      if (c == 0) continue;
      Monomial m{0, 0, 0, 0};
      m[i] = 1;
      m[j] = 1;
      total.add_term(m, Rational(static_cast<long>(c)));
    }
  // sum_i (4 x_i^2 - |l|^2)(4 y_i^2 - |k|^2) with x_i^2 = s_i l_i^2.
  const ParamPolynomial nl = norm_poly(l);
  const ParamPolynomial nk = norm_poly(k);
  for (std::size_t i = 0; i < 4; ++i) {
    const ParamPolynomial s = ParamPolynomial::variable(i);
    const ParamPolynomial fl = s * Rational(static_cast<long>(4 * l[i] * l[i])) - nl;
    const ParamPolynomial fk = s * Rational(static_cast<long>(4 * k[i] * k[i])) - nk;
    total += fl * fk;
  }
  return total;
}

ParamPolynomial pairwise_kernel(const LatticeVector& l, const LatticeVector& k) {
  const ParamPolynomial ip = inner_poly(l, k);
  return ip * ip * Rational(16) - norm_poly(l) * norm_poly(k) * Rational(4);
}

}  // namespace

const char* to_string(PairKernel k) { return k == PairKernel::Defining ? "defining" : "pairwise"; }

ParamPolynomial pair_kernel(PairKernel kernel, const LatticeVector& l, const LatticeVector& k) {
  return kernel == PairKernel::Defining ? defining_kernel(l, k) : pairwise_kernel(l, k);
}

FormalQSeries rep_series(const Lattice& a, std::int64_t budget) {
  FormalQSeries s(budget);
  const ParamPolynomial one = ParamPolynomial::constant(1);
  for (const auto& v : enumerate(a, budget)) s.add(phi(v), one);
  return s;
}

FormalQSeries theta11(const Lattice& a, std::int64_t budget, PairKernel kernel) {
  FormalQSeries s(budget);
  const auto vectors = enumerate(a, budget);
  for (const auto& l : vectors) {
    const ExponentVector el = phi(l);
    for (const auto& k : vectors) {
      const ExponentVector e = el + phi(k);
      if (e.component_sum() > budget) continue;
      s.add(e, pair_kernel(kernel, l, k));
    }
  }
  return s;
}

double evaluate_at(const FormalQSeries& series, const ParamPoint& p, const Rational& t) {
  if (sgn(t) <= 0) throw std::invalid_argument("evaluate_at: t must be positive");
  const double scale = 2.0 * std::numbers::pi * t.get_d();
  double total = 0.0;
  for (const auto& term : series_collapse(series, p))
    total += term.coefficient.get_d() * std::exp(-scale * term.exponent.get_d());
  return total;
}

}  // namespace tetra
