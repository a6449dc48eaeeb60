#pragma once

// Exact scalars over the parameter space (a, b, c, d), exponent vectors with
// the suffix-sum partial order, and truncated q-series indexed by exponent
// vectors. A q-exponent stays symbolic (an ExponentVector) until a
// ParamPoint is chosen; series_collapse performs that evaluation.

#include "tetra/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tetra {

/// A point (a, b, c, d) of the parameter space. All coordinates are
/// strictly positive; construction throws std::invalid_argument otherwise.
class ParamPoint {
 public:
  ParamPoint(Rational a, Rational b, Rational c, Rational d);
  explicit ParamPoint(const std::array<Rational, 4>& v) : ParamPoint(v[0], v[1], v[2], v[3]) {}

  const Rational& a() const { return v_[0]; }
  const Rational& b() const { return v_[1]; }
  const Rational& c() const { return v_[2]; }
  const Rational& d() const { return v_[3]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  const std::array<Rational, 4>& values() const { return v_; }

  /// 0 < a < b < c < d.
  bool admissible() const;
  bool pairwise_distinct() const;

  bool operator==(const ParamPoint&) const = default;

 private:
  std::array<Rational, 4> v_;
};

/// phi-image of a lattice vector: the squared eigenbasis coordinates.
struct ExponentVector {
  std::array<std::int64_t, 4> n{0, 0, 0, 0};

  ExponentVector() = default;
  ExponentVector(std::int64_t n0, std::int64_t n1, std::int64_t n2, std::int64_t n3);

  std::int64_t operator[](std::size_t i) const { return n[i]; }
  std::int64_t component_sum() const { return n[0] + n[1] + n[2] + n[3]; }

  ExponentVector operator+(const ExponentVector& o) const;

  // Lexicographic; used only as a storage order, never as the dominance order.
  auto operator<=>(const ExponentVector&) const = default;
};

std::string to_string(const ExponentVector& e);

enum class Dominance { Less, Greater, Equal, Incomparable };

const char* to_string(Dominance d);

/// Suffix-sum partial order: e precedes f iff every tail sum
/// e_i + ... + e_3 is at most the corresponding tail sum of f.
Dominance exp_cmp(const ExponentVector& e, const ExponentVector& f);

/// e strictly precedes f.
inline bool precedes(const ExponentVector& e, const ExponentVector& f) {
  return exp_cmp(e, f) == Dominance::Less;
}

/// a*n0 + b*n1 + c*n2 + d*n3.
Rational sigma(const ExponentVector& e, const ParamPoint& p);

/// Sampled check of "e strictly precedes f  <=>  sigma(e,p) < sigma(f,p) for
/// every admissible p". Every sample must be admissible and the list must be
/// non-empty (std::invalid_argument otherwise).
bool cer_lem_check(const ExponentVector& e, const ExponentVector& f,
                   std::span<const ParamPoint> samples);

/// Exponents of a^i b^j c^k d^l.
using Monomial = std::array<std::uint8_t, 4>;

/// Polynomial in (a, b, c, d) with rational coefficients. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
class ParamPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  ParamPolynomial() = default;
  static ParamPolynomial constant(const Rational& c);
  /// The i-th parameter (0 -> a, ..., 3 -> d).
  static ParamPolynomial variable(std::size_t i);
  /// s0*a + s1*b + s2*c + s3*d.
  static ParamPolynomial linear(const std::array<Rational, 4>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  ParamPolynomial& operator+=(const ParamPolynomial& o);
  ParamPolynomial& operator-=(const ParamPolynomial& o);
  ParamPolynomial& operator*=(const Rational& s);
  friend ParamPolynomial operator+(ParamPolynomial x, const ParamPolynomial& y) { return x += y; }
  friend ParamPolynomial operator-(ParamPolynomial x, const ParamPolynomial& y) { return x -= y; }
  friend ParamPolynomial operator*(ParamPolynomial x, const Rational& s) { return x *= s; }
  friend ParamPolynomial operator*(const Rational& s, ParamPolynomial x) { return x *= s; }
  friend ParamPolynomial operator*(const ParamPolynomial& x, const ParamPolynomial& y);
  ParamPolynomial operator-() const;

  bool operator==(const ParamPolynomial&) const = default;

 private:
  Terms terms_;
};

Rational poly_eval(const ParamPolynomial& q, const ParamPoint& p);

/// Expanded form with variables a, b, c, d, e.g. "-12*a*c + 12*a*d".
std::string to_string(const ParamPolynomial& q);

/// Truncated q-series: exponent vector -> polynomial coefficient. Only
/// exponent vectors with component sum <= budget may be stored; zero
/// coefficients are dropped.
class FormalQSeries {
 public:
  using Terms = std::map<ExponentVector, ParamPolynomial>;

  explicit FormalQSeries(std::int64_t budget = 0);

  std::int64_t budget() const { return budget_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Zero polynomial for absent exponents.
  ParamPolynomial coefficient(const ExponentVector& e) const;

  /// Accumulates c at e. Throws std::out_of_range when e exceeds the budget.
  void add(const ExponentVector& e, const ParamPolynomial& c);

  /// The same series restricted to a smaller budget.
  FormalQSeries truncated(std::int64_t budget) const;

  FormalQSeries& operator*=(const Rational& s);
  bool operator==(const FormalQSeries&) const = default;

 private:
  std::int64_t budget_;
  Terms terms_;
};

/// Pointwise sum; both series must share a budget (std::invalid_argument).
FormalQSeries series_add(const FormalQSeries& s, const FormalQSeries& t);
FormalQSeries series_sub(const FormalQSeries& s, const FormalQSeries& t);

struct CollapsedTerm {
  Rational exponent;
  Rational coefficient;
  bool operator==(const CollapsedTerm&) const = default;
};

/// Evaluates exponents and coefficients at p, merging equal exponents.
/// Result is sorted by exponent and holds no zero coefficients.
std::vector<CollapsedTerm> series_collapse(const FormalQSeries& s, const ParamPoint& p);

}  // namespace tetra
