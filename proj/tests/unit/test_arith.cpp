#include "oracle.hpp"
#include "tetra/arith.hpp"

#include <doctest.h>

#include <random>

using namespace tetra;

namespace {

ParamPoint schiemann() { return ParamPoint(1, 7, 13, 19); }

std::vector<ParamPoint> random_points(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::vector<ParamPoint> out;
  for (int i = 0; i < n; ++i) out.emplace_back(oracle::random_admissible(rng));
  return out;
}

std::vector<ExponentVector> small_vectors(int max) {
  std::vector<ExponentVector> out;
  for (int a = 0; a <= max; ++a)
    for (int b = 0; b <= max; ++b)
      for (int c = 0; c <= max; ++c)
        for (int d = 0; d <= max; ++d) out.emplace_back(a, b, c, d);
  return out;
}

FormalQSeries random_series(std::mt19937& rng, std::int64_t budget) {
  std::uniform_int_distribution<int> comp(0, 3), coeff(-5, 5), var(0, 3);
  FormalQSeries s(budget);
  for (int k = 0; k < 12; ++k) {
    ExponentVector e(comp(rng), comp(rng), comp(rng), comp(rng));
    if (e.component_sum() > budget) continue;
    ParamPolynomial q = ParamPolynomial::variable(var(rng)) * Rational(coeff(rng)) + ParamPolynomial::constant(coeff(rng));
    s.add(e, q);
  }
  return s;
}

std::vector<CollapsedTerm> merge(const std::vector<CollapsedTerm>& x, const std::vector<CollapsedTerm>& y) {
  std::map<Rational, Rational> m;
  for (const auto& t : x) m[t.exponent] += t.coefficient;
  for (const auto& t : y) m[t.exponent] += t.coefficient;
  std::vector<CollapsedTerm> out;
  for (auto& [e, c] : m)
    if (c != 0) out.push_back({e, c});
  return out;
}

}  // namespace

TEST_CASE("parse_rational accepts only exact literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("19") == 19);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("2.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ParamPoint") {
  CHECK(schiemann().admissible());
  CHECK_FALSE(ParamPoint(7, 1, 13, 19).admissible());
  CHECK(ParamPoint(7, 1, 13, 19).pairwise_distinct());
  CHECK_FALSE(ParamPoint(1, 1, 2, 3).pairwise_distinct());
  CHECK_THROWS_AS(ParamPoint(0, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(ParamPoint(1, -2, 2, 3), std::invalid_argument);
}

TEST_CASE("exp_cmp examples") {
  CHECK(exp_cmp({1, 9, 1, 1}, {16, 0, 4, 4}) == Dominance::Incomparable);
  CHECK(exp_cmp({0, 0, 0, 0}, {0, 0, 0, 0}) == Dominance::Equal);
  CHECK(exp_cmp({10, 10, 2, 2}, {2, 10, 2, 10}) == Dominance::Less);
  CHECK(exp_cmp({2, 10, 2, 10}, {10, 10, 2, 2}) == Dominance::Greater);
  CHECK(exp_cmp({0, 0, 1, 0}, {0, 0, 0, 1}) == Dominance::Less);
  CHECK_THROWS_AS(ExponentVector(-1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("exp_cmp agrees with the suffix-sum definition and is a partial order") {
  const auto vs = small_vectors(4);
  for (const auto& e : vs)
    for (const auto& f : vs) {
      const bool le = oracle::suffix_le(e.n, f.n);
      const bool ge = oracle::suffix_le(f.n, e.n);
      const Dominance d = exp_cmp(e, f);
      Dominance expected = Dominance::Incomparable;
      if (le && ge)
        expected = Dominance::Equal;
      else if (le)
        expected = Dominance::Less;
      else if (ge)
        expected = Dominance::Greater;
      REQUIRE(d == expected);
      // antisymmetry
      if (d == Dominance::Equal) REQUIRE(e == f);
    }
  const auto ts = small_vectors(2);
  for (const auto& x : ts)
    for (const auto& y : ts) {
      if (!precedes(x, y)) continue;
      for (const auto& z : ts)
        if (precedes(y, z)) REQUIRE(precedes(x, z));
    }
}

TEST_CASE("sigma") {
  CHECK(sigma({10, 10, 2, 2}, schiemann()) == 144);
  CHECK(sigma({25, 5, 5, 1}, schiemann()) == 144);
  CHECK(sigma({0, 0, 0, 0}, ParamPoint(Rational(1, 3), 2, 5, 7)) == 0);
  CHECK(sigma({1, 2, 0, 0}, ParamPoint(Rational(1, 3), Rational(1, 2), 5, 7)) == Rational(4, 3));
}

TEST_CASE("cer_lem_check") {
  const auto samples = random_points(11, 20);
  CHECK(cer_lem_check({10, 10, 2, 2}, {2, 10, 10, 2}, samples));
  CHECK(cer_lem_check({3, 1, 4, 1}, {3, 1, 4, 1}, samples));
  CHECK(cer_lem_check({0, 0, 0, 1}, {0, 0, 1, 0}, samples));
  CHECK(cer_lem_check({1, 9, 1, 1}, {16, 0, 4, 4}, samples));
  CHECK_THROWS_AS(cer_lem_check({0, 0, 0, 1}, {0, 0, 1, 0}, std::vector<ParamPoint>{}), std::invalid_argument);
  const std::vector<ParamPoint> bad{ParamPoint(2, 1, 3, 4)};
  CHECK_THROWS_AS(cer_lem_check({0, 0, 0, 1}, {0, 0, 1, 0}, bad), std::invalid_argument);
}

TEST_CASE("strict predecessors have strictly smaller sigma at admissible points") {
  const auto samples = random_points(12, 20);
  const auto vs = small_vectors(3);
  for (const auto& e : vs)
    for (const auto& f : vs) {
      if (!precedes(e, f)) continue;
      for (const auto& p : samples) REQUIRE(sigma(e, p) < sigma(f, p));
    }
}

TEST_CASE("poly_eval") {
  const auto a = ParamPolynomial::variable(0), b = ParamPolynomial::variable(1);
  const auto c = ParamPolynomial::variable(2), d = ParamPolynomial::variable(3);
  const ParamPolynomial q1 = Rational(-12) * ((b - a) * (d - c));
  const ParamPolynomial q2 = Rational(-96) * (a * (c - b));
  CHECK(poly_eval(q1, schiemann()) == -432);
  CHECK(poly_eval(q2, schiemann()) == -576);
  CHECK(poly_eval(ParamPolynomial{}, schiemann()) == 0);
  CHECK(q1.degree() == 2);
  CHECK(ParamPolynomial{}.degree() == -1);
  CHECK((q1 - q1).is_zero());
  CHECK(to_string(b - a) == "-a + b");
  CHECK(to_string(q2) == "96*a*b - 96*a*c");
  CHECK(to_string(ParamPolynomial::constant(Rational(-3, 2))) == "-3/2");
}

TEST_CASE("series_add") {
  FormalQSeries s(4);
  s.add({1, 0, 0, 0}, ParamPolynomial::constant(2));
  FormalQSeries t(4);
  t.add({1, 0, 0, 0}, ParamPolynomial::constant(3));
  const FormalQSeries sum = series_add(s, t);
  CHECK(sum.size() == 1);
  CHECK(sum.coefficient({1, 0, 0, 0}) == ParamPolynomial::constant(5));
  CHECK(series_add(s, FormalQSeries(4)) == s);
  FormalQSeries neg = s;
  neg *= Rational(-1);
  CHECK(series_add(s, neg).empty());
  CHECK_THROWS_AS(series_add(s, FormalQSeries(5)), std::invalid_argument);
  CHECK_THROWS_AS(s.add({3, 2, 0, 0}, ParamPolynomial::constant(1)), std::out_of_range);
}

TEST_CASE("series_add is associative, commutative and compatible with collapse") {
  std::mt19937 rng(5);
  const auto points = random_points(6, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const FormalQSeries x = random_series(rng, 8), y = random_series(rng, 8), z = random_series(rng, 8);
    REQUIRE(series_add(x, y) == series_add(y, x));
    REQUIRE(series_add(series_add(x, y), z) == series_add(x, series_add(y, z)));
    for (const auto& p : points)
      REQUIRE(series_collapse(series_add(x, y), p) == merge(series_collapse(x, p), series_collapse(y, p)));
  }
}

TEST_CASE("series_collapse") {
  FormalQSeries s(40);
  s.add({10, 10, 2, 2}, ParamPolynomial::constant(-432));
  s.add({25, 5, 5, 1}, ParamPolynomial::constant(-576));
  const auto rows = series_collapse(s, schiemann());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == CollapsedTerm{144, -1008});
  CHECK(series_collapse(FormalQSeries(3), schiemann()).empty());

  FormalQSeries t(1);
  t.add({1, 0, 0, 0}, ParamPolynomial::variable(1) - ParamPolynomial::variable(0));
  CHECK(series_collapse(t, schiemann()) == std::vector<CollapsedTerm>{{1, 6}});

  // cancellation at a merged exponent drops the row
  FormalQSeries u(2);
  u.add({0, 1, 0, 0}, ParamPolynomial::constant(1));
  u.add({2, 0, 0, 0}, ParamPolynomial::constant(-1));
  CHECK(series_collapse(u, ParamPoint(1, 2, 3, 4)).empty());
}

TEST_CASE("truncation keeps low-order terms") {
  std::mt19937 rng(9);
  const FormalQSeries s = random_series(rng, 8);
  const FormalQSeries t = s.truncated(4);
  for (const auto& [e, c] : s.terms())
    if (e.component_sum() <= 4) CHECK(t.coefficient(e) == c);
  for (const auto& [e, c] : t.terms()) CHECK(e.component_sum() <= 4);
  CHECK_THROWS_AS(s.truncated(9), std::invalid_argument);
}
