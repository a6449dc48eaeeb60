#include "tetra/lattice.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tetra {

namespace {

struct Egcd {
  std::int64_t g, s, t;  // s*x + t*y = g >= 0
};

Egcd extended_gcd(std::int64_t x, std::int64_t y) {
  std::int64_t old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::int64_t det3(const IntMatrix& m, int skip_col) {
  int c[3];
  for (int j = 0, k = 0; j < 4; ++j)
    if (j != skip_col) c[k++] = j;
  return m[1][c[0]] * (m[2][c[1]] * m[3][c[2]] - m[2][c[2]] * m[3][c[1]]) -
         m[1][c[1]] * (m[2][c[0]] * m[3][c[2]] - m[2][c[2]] * m[3][c[0]]) +
         m[1][c[2]] * (m[2][c[0]] * m[3][c[1]] - m[2][c[1]] * m[3][c[0]]);
}

LatticeVector apply_signs(const std::array<int, 4>& signs, const LatticeVector& v) {
  return {signs[0] * v[0], signs[1] * v[1], signs[2] * v[2], signs[3] * v[3]};
}

}  // namespace

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  return {x[0] + o.x[0], x[1] + o.x[1], x[2] + o.x[2], x[3] + o.x[3]};
}
LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  return {x[0] - o.x[0], x[1] - o.x[1], x[2] - o.x[2], x[3] - o.x[3]};
}
LatticeVector LatticeVector::operator-() const { return {-x[0], -x[1], -x[2], -x[3]}; }
LatticeVector LatticeVector::operator*(std::int64_t s) const { return {s * x[0], s * x[1], s * x[2], s * x[3]}; }

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ')';
  return os.str();
}

IntMatrix from_columns(const std::array<LatticeVector, 4>& cols) {
  IntMatrix m{};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = cols[j][i];
  return m;
}

LatticeVector column(const IntMatrix& m, std::size_t j) { return {m[0][j], m[1][j], m[2][j], m[3][j]}; }

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

std::int64_t determinant(const IntMatrix& m) {
  std::int64_t d = 0;
  for (int j = 0; j < 4; ++j) d += ((j % 2) ? -1 : 1) * m[0][j] * det3(m, j);
  return d;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  if (determinant(a) == 0) throw std::invalid_argument("hermite_normal_form: singular matrix");
  IntMatrix h = a;
  auto combine = [&h](std::size_t p, std::size_t q, std::int64_t a11, std::int64_t a12, std::int64_t a21,
                      std::int64_t a22) {
    // (col p, col q) <- (a11*col p + a21*col q, a12*col p + a22*col q)
    for (std::size_t i = 0; i < 4; ++i) {
      const std::int64_t cp = h[i][p], cq = h[i][q];
      h[i][p] = a11 * cp + a21 * cq;
      h[i][q] = a12 * cp + a22 * cq;
    }
  };
  for (int row = 3; row >= 0; --row) {
    const auto r = static_cast<std::size_t>(row);
    for (std::size_t col = 0; col < r; ++col) {
      const std::int64_t x = h[r][r], y = h[r][col];
      if (y == 0) continue;
      const auto [g, s, t] = extended_gcd(x, y);
      combine(r, col, s, -y / g, t, x / g);
    }
    if (h[r][r] < 0)
      for (std::size_t i = 0; i < 4; ++i) h[i][r] = -h[i][r];
  }
  for (int row = 3; row >= 0; --row) {
    const auto r = static_cast<std::size_t>(row);
    for (std::size_t j = r + 1; j < 4; ++j) {
      const std::int64_t q = floor_div(h[r][j], h[r][r]);
      if (q == 0) continue;
      for (std::size_t i = 0; i <= r; ++i) h[i][j] -= q * h[i][r];
    }
  }
  return h;
}

// ---------------------------------------------------------------------------

Lattice::Lattice(std::string name, const IntMatrix& generators)
    : name_(std::move(name)), generators_(generators), hnf_(hermite_normal_form(generators)) {}

std::int64_t Lattice::covolume() const { return hnf_[0][0] * hnf_[1][1] * hnf_[2][2] * hnf_[3][3]; }

namespace {

bool solve_upper(const IntMatrix& h, const LatticeVector& v, std::array<std::int64_t, 4>& x) {
  for (int row = 3; row >= 0; --row) {
    const auto r = static_cast<std::size_t>(row);
    std::int64_t rhs = v[r];
    for (std::size_t j = r + 1; j < 4; ++j) rhs -= h[r][j] * x[j];
    if (rhs % h[r][r] != 0) return false;
    x[r] = rhs / h[r][r];
  }
  return true;
}

}  // namespace

bool Lattice::contains(const LatticeVector& v) const {
  std::array<std::int64_t, 4> x{};
  return solve_upper(hnf_, v, x);
}

std::array<std::int64_t, 4> Lattice::hnf_coordinates(const LatticeVector& v) const {
  std::array<std::int64_t, 4> x{};
  if (!solve_upper(hnf_, v, x)) throw std::invalid_argument(to_string(v) + " is not in " + name_);
  return x;
}

std::int64_t Lattice::index_in(const Lattice& super) const {
  for (std::size_t j = 0; j < 4; ++j)
    if (!super.contains(column(generators_, j)))
      throw std::invalid_argument(name_ + " is not a sublattice of " + super.name_);
  return covolume() / super.covolume();
}

Lattice Lattice::transformed(const std::array<int, 4>& signs, std::string name) const {
  IntMatrix g = generators_;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] *= signs[i];
  return Lattice(std::move(name), g);
}

bool lattice_eq(const Lattice& x, const Lattice& y) { return x.hnf() == y.hnf(); }

// ---------------------------------------------------------------------------

ParamPoint abcd_from_gram(const GramParams& g) {
  const Rational quarter(1, 4);
  std::array<Rational, 4> v{quarter * (g.r - g.alpha - g.beta - g.gamma), quarter * (g.r - g.alpha + g.beta + g.gamma),
                            quarter * (g.r + g.alpha - g.beta + g.gamma), quarter * (g.r + g.alpha + g.beta - g.gamma)};
  for (const auto& x : v)
    if (sgn(x) <= 0) throw std::invalid_argument("Gram parameters are not positive definite");
  return ParamPoint(v);
}

GramParams gram_from_abcd(const ParamPoint& p) {
  GramParams g;
  g.r = p.a() + p.b() + p.c() + p.d();
  g.alpha = p.c() + p.d() - p.a() - p.b();
  g.beta = p.b() + p.d() - p.a() - p.c();
  g.gamma = p.b() + p.c() - p.a() - p.d();
  return g;
}

RationalMatrix gram_matrix(const GramParams& g) {
  return {{{g.r, g.alpha, g.beta, g.gamma},
           {g.alpha, g.r, -g.gamma, -g.beta},
           {g.beta, -g.gamma, g.r, -g.alpha},
           {g.gamma, -g.beta, -g.alpha, g.r}}};
}

const IntMatrix& standard_basis_matrix() {
  static const IntMatrix s{{{1, 0, 1, 1}, {-1, 1, 1, 0}, {1, 1, 0, 1}, {0, -1, -1, -1}}};
  return s;
}

const IntMatrix& eigen_generator_matrix() {
  static const IntMatrix b{{{-1, 1, -1, -1}, {3, -1, -1, 1}, {-1, -1, 1, -1}, {1, 3, 3, 3}}};
  return b;
}

const RationalMatrix& eigenbasis_matrix() {
  static const RationalMatrix u = [] {
    const IntMatrix signs{{{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}}};
    RationalMatrix m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = Rational(static_cast<long>(signs[i][j]), 4);
    return m;
  }();
  return u;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[i][j] = Rational(static_cast<long>(m[i][j]));
  return r;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      r[i][j] = 0;
      for (std::size_t k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  RationalMatrix a = m;
  RationalMatrix inv;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) inv[i][j] = (i == j) ? 1 : 0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && sgn(a[piv][col]) == 0) ++piv;
    if (piv == 4) throw std::invalid_argument("inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < 4; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < 4; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const Family& build_family() {
  static const Family family = [] {
    const IntMatrix& b = eigen_generator_matrix();
    const std::array<LatticeVector, 4> l{column(b, 0), column(b, 1), column(b, 2), column(b, 3)};
    return Family{
        Lattice("L", b),
        Lattice("L1", from_columns({l[0], l[1], l[2] * 3, l[3] * 3})),
        Lattice("L2", from_columns({l[0], l[1] * 3, l[2], l[3] * 3})),
        Lattice("M", from_columns({l[0] * 3, l[1] * 3, l[2] * 3, l[3] * 3})),
        Lattice("L12", from_columns({l[0], l[1] * 3, l[2] * 3, l[3] * 3})),
    };
  }();
  return family;
}

Lattice m_generator_lattice() {
  return Lattice("M(m0..m3)", from_columns({LatticeVector(-3, 3, 3, 3), LatticeVector(3, -3, 3, 3),
                                            LatticeVector(3, 3, -3, 3), LatticeVector(3, 3, 3, -3)}));
}

Lattice conway_sloane_minus() {
  return Lattice("L-", IntMatrix{{{-3, 1, 1, 1}, {-1, -3, -1, 1}, {-1, 1, -3, -1}, {-1, -1, 1, -3}}});
}

Lattice conway_sloane_plus() {
  const Lattice printed("L1 (column form)", IntMatrix{{{3, 1, 1, 1}, {1, -3, 1, -1}, {-1, 1, 3, -1}, {-1, -1, 1, 3}}});
  return printed.transformed(kPlusReflection, "L+");
}

std::array<long, 4> to_standard(const LatticeVector& v) {
  static const RationalMatrix b_inv = inverse(to_rational(eigen_generator_matrix()));
  const IntMatrix& s = standard_basis_matrix();
  std::array<long, 4> basis_coords{};
  for (std::size_t i = 0; i < 4; ++i) {
    Rational x = 0;
    for (std::size_t j = 0; j < 4; ++j) x += b_inv[i][j] * Rational(static_cast<long>(v[j]));
    if (x.get_den() != 1) throw std::invalid_argument(to_string(v) + " is not in L");
    basis_coords[i] = x.get_num().get_si();
  }
  std::array<long, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += s[i][j] * basis_coords[j];
  return out;
}

F3Vector project_mod3(const LatticeVector& v) {
  const auto s = to_standard(v);
  return F3Vector(s[0], s[1], s[2], s[3]);
}

std::vector<LatticeVector> enumerate(const Lattice& a, std::int64_t budget) {
  if (budget < 0) throw std::invalid_argument("enumerate: negative budget");
  std::vector<LatticeVector> out;
  LatticeVector v;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t depth, std::int64_t remaining) {
    if (depth == 4) {
      if (a.contains(v)) out.push_back(v);
      return;
    }
    auto bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(remaining)));
    while (bound * bound > remaining) --bound;
    while ((bound + 1) * (bound + 1) <= remaining) ++bound;
    for (std::int64_t x = -bound; x <= bound; ++x) {
      v.x[depth] = x;
      rec(depth + 1, remaining - x * x);
    }
    v.x[depth] = 0;
  };
  rec(0, budget);
  return out;
}

ExponentVector phi(const LatticeVector& v) {
  return ExponentVector(v[0] * v[0], v[1] * v[1], v[2] * v[2], v[3] * v[3]);
}

Rational norm2(const LatticeVector& v, const ParamPoint& p) { return sigma(phi(v), p); }

Rational inner(const LatticeVector& v, const LatticeVector& w, const ParamPoint& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += p[i] * Rational(static_cast<long>(v[i] * w[i]));
  return s;
}

ParamPolynomial inner_poly(const LatticeVector& v, const LatticeVector& w) {
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = Rational(static_cast<long>(v[i] * w[i]));
  return ParamPolynomial::linear(c);
}

// ---------------------------------------------------------------------------

std::string to_string(const CosetLabel& c) {
  if (c.is_zero()) return "[0]";
  return std::string(c.sign > 0 ? "+" : "-") + "[v" + std::to_string(c.index) + "]";
}

const std::array<CosetLabel, 9>& all_labels() {
  static const std::array<CosetLabel, 9> labels{CosetLabel::zero(),   CosetLabel::of(0, 1),  CosetLabel::of(0, -1),
                                                CosetLabel::of(1, 1), CosetLabel::of(1, -1), CosetLabel::of(2, 1),
                                                CosetLabel::of(2, -1), CosetLabel::of(3, 1), CosetLabel::of(3, -1)};
  return labels;
}

const std::array<LatticeVector, 4>& coset_reps() {
  static const std::array<LatticeVector, 4> reps{LatticeVector(-1, 3, -1, 1), LatticeVector(1, -1, -1, 3),
                                                 LatticeVector(3, 1, -1, -1), LatticeVector(-1, -1, -3, -1)};
  return reps;
}

const std::array<LatticeVector, 4>& coset_reps_l2() {
  static const std::array<LatticeVector, 4> reps = [] {
    std::array<LatticeVector, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = apply_signs(k4(i).eigen_signs, coset_reps()[i]);
    return r;
  }();
  return reps;
}

namespace {

CosetLabel label_in(const Lattice& sub, const std::array<LatticeVector, 4>& reps, const LatticeVector& v) {
  if (!sub.contains(v)) throw std::invalid_argument(to_string(v) + " is not in " + sub.name());
  const Lattice& m = build_family().M;
  if (m.contains(v)) return CosetLabel::zero();
  for (int i = 0; i < 4; ++i) {
    if (m.contains(v - reps[i])) return CosetLabel::of(i, 1);
    if (m.contains(v + reps[i])) return CosetLabel::of(i, -1);
  }
  throw std::logic_error("no coset representative matches " + to_string(v));
}

}  // namespace

CosetLabel coset_label(const LatticeVector& v) { return label_in(build_family().L1, coset_reps(), v); }

CosetLabel coset_label_l2(const LatticeVector& v) { return label_in(build_family().L2, coset_reps_l2(), v); }

LatticeVector psi(const LatticeVector& v) {
  const CosetLabel c = coset_label(v);
  return c.is_zero() ? v : apply_signs(k4(c.index).eigen_signs, v);
}

LatticeVector psi_inv(const LatticeVector& w) {
  const CosetLabel c = coset_label_l2(w);
  return c.is_zero() ? w : apply_signs(k4(c.index).eigen_signs, w);
}

}  // namespace tetra
