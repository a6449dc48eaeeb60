#include "tetra/arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tetra {

ParamPoint::ParamPoint(Rational a, Rational b, Rational c, Rational d)
    : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& x : v_) {
    x.canonicalize();
    if (sgn(x) <= 0) throw std::invalid_argument("parameter must be positive, got " + to_string(x));
  }
}

bool ParamPoint::admissible() const { return v_[0] < v_[1] && v_[1] < v_[2] && v_[2] < v_[3]; }

bool ParamPoint::pairwise_distinct() const {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (v_[i] == v_[j]) return false;
  return true;
}

ExponentVector::ExponentVector(std::int64_t n0, std::int64_t n1, std::int64_t n2, std::int64_t n3)
    : n{n0, n1, n2, n3} {
  for (auto x : n)
    if (x < 0) throw std::invalid_argument("exponent vector entries must be non-negative");
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  ExponentVector r;
  for (std::size_t i = 0; i < 4; ++i) r.n[i] = n[i] + o.n[i];
  return r;
}

std::string to_string(const ExponentVector& e) {
  std::ostringstream os;
  os << '(' << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
  return os.str();
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Greater: return "Greater";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Dominance exp_cmp(const ExponentVector& e, const ExponentVector& f) {
  bool e_le_f = true;
  bool f_le_e = true;
  std::int64_t se = 0;
  std::int64_t sf = 0;
  for (int i = 3; i >= 0; --i) {
    se += e[i];
    sf += f[i];
    if (se > sf) e_le_f = false;
    if (sf > se) f_le_e = false;
  }
  // Equal tail sums at every position force equal components.
  if (e_le_f && f_le_e) return Dominance::Equal;
  if (e_le_f) return Dominance::Less;
  if (f_le_e) return Dominance::Greater;
  return Dominance::Incomparable;
}

Rational sigma(const ExponentVector& e, const ParamPoint& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += p[i] * Rational(static_cast<long>(e[i]));
  return s;
}

bool cer_lem_check(const ExponentVector& e, const ExponentVector& f,
                   std::span<const ParamPoint> samples) {
  if (samples.empty()) throw std::invalid_argument("cer_lem_check needs at least one sample");
  for (const auto& p : samples)
    if (!p.admissible()) throw std::invalid_argument("cer_lem_check sample is not admissible");
  const bool ordered = precedes(e, f);
  const bool always_smaller = std::all_of(samples.begin(), samples.end(),
                                          [&](const ParamPoint& p) { return sigma(e, p) < sigma(f, p); });
  return ordered == always_smaller;
}

// ---------------------------------------------------------------------------

ParamPolynomial ParamPolynomial::constant(const Rational& c) {
  ParamPolynomial q;
  q.add_term({0, 0, 0, 0}, c);
  return q;
}

ParamPolynomial ParamPolynomial::variable(std::size_t i) {
  if (i > 3) throw std::out_of_range("parameter index");
  Monomial m{0, 0, 0, 0};
  m[i] = 1;
  ParamPolynomial q;
  q.add_term(m, 1);
  return q;
}

ParamPolynomial ParamPolynomial::linear(const std::array<Rational, 4>& coeffs) {
  ParamPolynomial q;
  for (std::size_t i = 0; i < 4; ++i) {
    Monomial m{0, 0, 0, 0};
    m[i] = 1;
    q.add_term(m, coeffs[i]);
  }
  return q;
}

int ParamPolynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m[0] + m[1] + m[2] + m[3]);
  return deg;
}

Rational ParamPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamPolynomial& ParamPolynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ParamPolynomial operator*(const ParamPolynomial& x, const ParamPolynomial& y) {
  ParamPolynomial r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint8_t>(mx[i] + my[i]);
      r.add_term(m, cx * cy);
    }
  return r;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Rational poly_eval(const ParamPolynomial& q, const ParamPoint& p) {
  Rational total = 0;
  for (const auto& [m, c] : q.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < m[i]; ++k) t *= p[i];
    total += t;
  }
  return total;
}

std::string to_string(const ParamPolynomial& q) {
  if (q.is_zero()) return "0";
  static constexpr char kNames[4] = {'a', 'b', 'c', 'd'};
  // Highest degree first, then by variable order a > b > c > d.
  std::vector<std::pair<Monomial, Rational>> terms(q.terms().begin(), q.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int dx = x.first[0] + x.first[1] + x.first[2] + x.first[3];
    const int dy = y.first[0] + y.first[1] + y.first[2] + y.first[3];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool is_const = m == Monomial{0, 0, 0, 0};
    bool need_star = false;
    if (is_const || mag != 1) {
      os << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < m[i]; ++k) {
        if (need_star) os << '*';
        os << kNames[i];
        need_star = true;
      }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

FormalQSeries::FormalQSeries(std::int64_t budget) : budget_(budget) {
  if (budget < 0) throw std::invalid_argument("series budget must be non-negative");
}

ParamPolynomial FormalQSeries::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamPolynomial{} : it->second;
}

void FormalQSeries::add(const ExponentVector& e, const ParamPolynomial& c) {
  if (e.component_sum() > budget_)
    throw std::out_of_range("exponent " + to_string(e) + " exceeds series budget");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalQSeries FormalQSeries::truncated(std::int64_t budget) const {
  if (budget > budget_) throw std::invalid_argument("cannot truncate to a larger budget");
  FormalQSeries r(budget);
  for (const auto& [e, c] : terms_)
    if (e.component_sum() <= budget) r.terms_.emplace(e, c);
  return r;
}

FormalQSeries& FormalQSeries::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

FormalQSeries series_add(const FormalQSeries& s, const FormalQSeries& t) {
  if (s.budget() != t.budget()) throw std::invalid_argument("series budgets differ");
  FormalQSeries r = s;
  for (const auto& [e, c] : t.terms()) r.add(e, c);
  return r;
}

FormalQSeries series_sub(const FormalQSeries& s, const FormalQSeries& t) {
  if (s.budget() != t.budget()) throw std::invalid_argument("series budgets differ");
  FormalQSeries r = s;
  for (const auto& [e, c] : t.terms()) r.add(e, -c);
  return r;
}

std::vector<CollapsedTerm> series_collapse(const FormalQSeries& s, const ParamPoint& p) {
  std::map<Rational, Rational> merged;
  for (const auto& [e, c] : s.terms()) merged[sigma(e, p)] += poly_eval(c, p);
  std::vector<CollapsedTerm> out;
  out.reserve(merged.size());
  for (auto& [x, c] : merged)
    if (sgn(c) != 0) out.push_back({x, c});
  return out;
}

}  // namespace tetra
