#include "oracle.hpp"
#include "tetra/codes.hpp"
#include "tetra/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace tetra;

namespace {

IntMatrix to_int(const oracle::Mat& m) { return m; }

LatticeVector lv(const oracle::Vec& v) { return {v[0], v[1], v[2], v[3]}; }

const ParamPoint& schiemann() {
  static const ParamPoint p(1, 7, 13, 19);
  return p;
}

}  // namespace

TEST_CASE("determinant and HNF") {
  CHECK(determinant(eigen_generator_matrix()) == -16);
  CHECK(std::abs(determinant(standard_basis_matrix())) == 1);
  const IntMatrix h = hermite_normal_form(eigen_generator_matrix());
  for (int i = 0; i < 4; ++i) {
    CHECK(h[i][i] > 0);
    for (int j = 0; j < i; ++j) CHECK(h[i][j] == 0);
    for (int j = i + 1; j < 4; ++j) CHECK((h[i][j] >= 0 && h[i][j] < h[i][i]));
  }
  IntMatrix singular{};
  CHECK_THROWS_AS(hermite_normal_form(singular), std::invalid_argument);
}

TEST_CASE("HNF is invariant under unimodular column operations") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3), mult(-3, 3);
  for (const auto& base : {oracle::L(), oracle::L1(), oracle::L2(), oracle::M()}) {
    IntMatrix g = to_int(base);
    const Lattice ref("ref", g);
    for (int step = 0; step < 20; ++step) {
      const int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const int k = mult(rng);
      for (int r = 0; r < 4; ++r) g[r][i] += k * g[r][j];
      if (step % 5 == 0)
        for (int r = 0; r < 4; ++r) std::swap(g[r][i], g[r][j]);
    }
    CHECK(hermite_normal_form(g) == ref.hnf());
    CHECK(lattice_eq(Lattice("mixed", g), ref));
  }
}

TEST_CASE("family indices and Conway-Sloane matrices") {
  const Family& f = build_family();
  CHECK(f.L.covolume() == 16);
  CHECK(f.L1.index_in(f.L) == 9);
  CHECK(f.L2.index_in(f.L) == 9);
  CHECK(f.L12.index_in(f.L1) == 3);
  CHECK(f.L12.index_in(f.L2) == 3);
  CHECK(f.M.index_in(f.L12) == 3);
  CHECK(f.M.index_in(f.L) == 81);
  CHECK_THROWS_AS(f.L.index_in(f.L1), std::invalid_argument);
  CHECK_THROWS_AS(f.L1.index_in(f.L2), std::invalid_argument);
  CHECK(lattice_eq(m_generator_lattice(), f.M));
  CHECK(lattice_eq(conway_sloane_minus(), f.L2));
  CHECK(lattice_eq(conway_sloane_plus().transformed(kPlusReflection, "L+'"), f.L1));
  CHECK_FALSE(lattice_eq(f.L1, f.L2));
}

TEST_CASE("membership agrees with Cramer's rule") {
  const Family& f = build_family();
  const std::array<std::pair<const Lattice*, oracle::Mat>, 4> pairs{
      {{&f.L, oracle::L()}, {&f.L1, oracle::L1()}, {&f.L2, oracle::L2()}, {&f.M, oracle::M()}}};
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (const auto& [lat, mat] : pairs)
    for (int k = 0; k < 2000; ++k) {
      const oracle::Vec v{coord(rng), coord(rng), coord(rng), coord(rng)};
      REQUIRE(lat->contains(lv(v)) == oracle::contains(mat, v));
    }
  CHECK(f.L1.contains({3, 1, -1, -1}));
  CHECK_FALSE(f.M.contains({1, 0, 0, 0}));
  CHECK(f.M.contains({12, 0, 0, 0}));
}

TEST_CASE("enumerate") {
  const Family& f = build_family();
  CHECK(enumerate(f.L1, 12).size() == 9);
  CHECK(enumerate(f.M, 35) == std::vector<LatticeVector>{LatticeVector{}});
  CHECK(enumerate(f.L1, 40).size() == 65);
  for (const auto& [lat, mat] : {std::pair{&f.L1, oracle::L1()}, std::pair{&f.L2, oracle::L2()}}) {
    const auto got = enumerate(*lat, 20);
    std::vector<LatticeVector> want;
    for (const auto& v : oracle::enumerate(mat, 20)) want.push_back(lv(v));
    CHECK(got == want);
  }
  CHECK_THROWS_AS(enumerate(f.L1, -1), std::invalid_argument);
}

TEST_CASE("Gram parameters round trip") {
  std::mt19937 rng(23);
  for (int k = 0; k < 20; ++k) {
    const ParamPoint p(oracle::random_admissible(rng));
    const GramParams g = gram_from_abcd(p);
    CHECK(abcd_from_gram(g) == p);
    CHECK(g.r == p.a() + p.b() + p.c() + p.d());
    // the eigenbasis diagonalizes the Gram matrix to diag(a, b, c, d)
    const RationalMatrix gm = gram_matrix(g);
    const RationalMatrix& u = eigenbasis_matrix();
    RationalMatrix ut;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ut[i][j] = u[j][i];
    const RationalMatrix d = multiply(multiply(ut, gm), u);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(d[i][j] == (i == j ? p[i] : Rational(0)));
  }
  CHECK_THROWS_AS(abcd_from_gram({1, 5, 0, 0}), std::invalid_argument);
}

TEST_CASE("basis change and K4 action") {
  const RationalMatrix lhs = multiply(inverse(eigenbasis_matrix()), to_rational(standard_basis_matrix()));
  CHECK(lhs == to_rational(eigen_generator_matrix()));
  const auto shell = enumerate(build_family().L, 12);
  for (const auto& v : shell) {
    const auto s = to_standard(v);
    for (int i = 0; i < 4; ++i) {
      Rational x = 0;
      for (int j = 0; j < 4; ++j) x += eigenbasis_matrix()[i][j] * Rational(v[j]);
      CHECK(x == s[i]);
    }
    for (const auto& g : k4_elements()) {
      const auto e = g.apply_eigen({v[0], v[1], v[2], v[3]});
      CHECK(g.apply_standard(s) == to_standard({e[0], e[1], e[2], e[3]}));
    }
  }
  CHECK_THROWS_AS(to_standard({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("reduction mod 3") {
  const Family& f = build_family();
  const auto l = enumerate(f.L, 8);
  for (const auto& v : l)
    for (const auto& w : l) REQUIRE(project_mod3(v + w) == project_mod3(v) + project_mod3(w));
  const auto sd = all_selfdual_codes();
  for (const auto& v : enumerate(f.L1, 40)) CHECK(sd[0].contains(project_mod3(v)));
  for (const auto& v : enumerate(f.L2, 40)) CHECK(sd[1].contains(project_mod3(v)));
  for (const auto& v : enumerate(f.M, 40)) CHECK(project_mod3(v).is_zero());
  for (int i = 0; i < 4; ++i) CHECK(project_mod3(coset_reps()[i]) == codeword_c1()[i]);
}

TEST_CASE("phi, norms and inner products") {
  const LatticeVector v0{-1, 3, -1, 1}, v2{3, 1, -1, -1};
  CHECK(phi(v0) == ExponentVector(1, 9, 1, 1));
  CHECK(norm2(v0, schiemann()) == 1 + 63 + 13 + 19);
  CHECK(inner(v0, v2, schiemann()) == -3 + 21 + 13 - 19);
  const auto a = ParamPolynomial::variable(0), b = ParamPolynomial::variable(1);
  const auto c = ParamPolynomial::variable(2), d = ParamPolynomial::variable(3);
  CHECK(inner_poly(v0, v2) == Rational(-3) * a + Rational(3) * b + c - d);
  CHECK(poly_eval(inner_poly(v0, v2), schiemann()) == inner(v0, v2, schiemann()));
}

TEST_CASE("coset labels") {
  const Family& f = build_family();
  CHECK(all_labels().size() == 9);
  CHECK(to_string(CosetLabel::zero()) == "[0]");
  CHECK(to_string(CosetLabel::of(0, 1)) == "+[v0]");
  CHECK(to_string(CosetLabel::of(2, -1)) == "-[v2]");
  for (int i = 0; i < 4; ++i) {
    CHECK(coset_label(coset_reps()[i]) == CosetLabel::of(i, 1));
    CHECK(coset_label(-coset_reps()[i]) == CosetLabel::of(i, -1));
    CHECK(coset_label_l2(coset_reps_l2()[i]) == CosetLabel::of(i, 1));
  }
  for (const auto& v : enumerate(f.L1, 60)) {
    const CosetLabel c = coset_label(v);
    const int o = oracle::class_index({v[0], v[1], v[2], v[3]});
    CHECK(c.index == o);
    CHECK(coset_label(-v) == c.negated());
  }
  CHECK_THROWS_AS(coset_label({1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(coset_label_l2({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("psi") {
  const Family& f = build_family();
  CHECK(psi({3, 1, -1, -1}) == LatticeVector{-3, -1, -1, -1});
  const auto shell = enumerate(f.L1, 60);
  std::set<LatticeVector> image;
  for (const auto& v : shell) {
    const LatticeVector w = psi(v);
    REQUIRE(f.L2.contains(w));
    CHECK(psi_inv(w) == v);
    CHECK(phi(w) == phi(v));
    CHECK(lv(oracle::psi({v[0], v[1], v[2], v[3]})) == w);
    image.insert(w);
  }
  CHECK(image.size() == shell.size());
  CHECK(std::set<LatticeVector>(image) == [&] {
    std::set<LatticeVector> s;
    for (const auto& w : enumerate(f.L2, 60)) s.insert(w);
    return s;
  }());
  // psi is not additive
  const LatticeVector v0 = coset_reps()[0], v2 = coset_reps()[2];
  CHECK(psi(v0 + v2) != psi(v0) + psi(v2));
  CHECK_THROWS_AS(psi({1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(psi_inv({1, 0, 0, 0}), std::invalid_argument);
}
