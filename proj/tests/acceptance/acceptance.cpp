// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails or exceeds its time limit.

#include "oracle.hpp"
#include "tetra/codes.hpp"
#include "tetra/discrepancy.hpp"
#include "tetra/lattice.hpp"
#include "tetra/theta.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>

using namespace tetra;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, std::optional<double> limit_s,
               const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && limit_s && secs >= *limit_s) {
    o.ok = false;
    std::ostringstream s;
    s << "time limit " << *limit_s << " s exceeded";
    o.detail = s.str();
  }
  if (!o.ok) ++failures;
  std::printf("%s %-4s %-40s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<ParamPoint> random_points(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::vector<ParamPoint> out;
  for (int i = 0; i < n; ++i) out.emplace_back(oracle::random_admissible(rng));
  return out;
}

std::string str(const ParamPoint& p) {
  return to_string(p.a()) + " " + to_string(p.b()) + " " + to_string(p.c()) + " " + to_string(p.d());
}

}  // namespace

int main() {
  criterion("AC1", "code census", 1.0, [] {
    Outcome o;
    const auto all = two_dimensional_codes();
    int selfdual = 0;
    for (const auto& c : all) selfdual += c.self_dual();
    o.require(selfdual == 8, "self-dual count " + std::to_string(selfdual));
    const auto sd = all_selfdual_codes();
    o.require(sd.size() == 8, "listing size");
    const auto orbits = orbit_partition(sd);
    o.require(orbits == std::vector<std::vector<int>>{{0, 2, 4, 6}, {1, 3, 5, 7}}, "orbit partition");
    const auto edges = intersection_graph(sd);
    o.require(edges.size() == 16, "edge count " + std::to_string(edges.size()));
    o.require(is_complete_bipartite(8, edges, {0, 2, 4, 6}), "graph is not K4,4");
    return o;
  });

  criterion("AC2", "lattice structure", 1.0, [] {
    Outcome o;
    const Family& f = build_family();
    o.require(f.L1.index_in(f.L) == 9, "[L:L1]");
    o.require(f.L2.index_in(f.L) == 9, "[L:L2]");
    o.require(f.L12.index_in(f.L1) == 3, "[L1:L12]");
    o.require(lattice_eq(f.M, m_generator_lattice()), "3L != span{m_i}");
    o.require(lattice_eq(conway_sloane_minus(), f.L2), "L- does not span L2");
    o.require(lattice_eq(conway_sloane_plus().transformed(kPlusReflection, "reflected L+"), f.L1),
              "reflected L+ does not span L1");
    return o;
  });

  criterion("AC3", "isospectrality at budget 40", std::nullopt, [] {
    Outcome o;
    const Family& f = build_family();
    const FormalQSeries r1 = rep_series(f.L1, 40), r2 = rep_series(f.L2, 40);
    std::vector<ParamPoint> points{ParamPoint(1, 7, 13, 19), ParamPoint(1, 2, 3, 4)};
    for (const auto& p : random_points(2024, 10)) points.push_back(p);
    for (const auto& p : points) {
      const auto t0 = std::chrono::steady_clock::now();
      o.require(series_collapse(r1, p) == series_collapse(r2, p), "spectra differ at " + str(p));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(secs < 10.0, "slow point " + str(p));
    }
    o.require(r1.size() > 1, "empty spectrum");
    return o;
  });

  criterion("AC4", "kernel identity", std::nullopt, [] {
    Outcome o;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (int k = 0; k < 200; ++k) {
      const LatticeVector l{coord(rng), coord(rng), coord(rng), coord(rng)};
      const LatticeVector m{coord(rng), coord(rng), coord(rng), coord(rng)};
      o.require(pair_kernel(PairKernel::Defining, l, m) == pair_kernel(PairKernel::Pairwise, l, m),
                "kernels differ at " + to_string(l) + ", " + to_string(m));
    }
    const Lattice& l1 = build_family().L1;
    o.require(theta11(l1, 24, PairKernel::Defining) == theta11(l1, 24, PairKernel::Pairwise), "series differ");
    return o;
  });

  criterion("AC5", "coset relations at budget 24", std::nullopt, [] {
    Outcome o;
    const RelationReport r = check_relations(24);
    std::string where = r.relation;
    if (r.first && r.second) where += " at " + to_string(*r.first) + ", " + to_string(*r.second);
    o.require(r.ok, where);
    return o;
  });

  criterion("AC6", "class-pair decomposition", std::nullopt, [] {
    Outcome o;
    FormalQSeries sum(24);
    for (const auto& cp : all_class_pairs()) sum = series_add(sum, delta_class(cp, 24));
    const FormalQSeries d = delta_series(24, DeltaRoute::FromPsiKernel);
    o.require(sum == d, "sum of delta_class != delta");
    o.require(delta_series(24, DeltaRoute::FromTheta) == d, "routes differ");
    return o;
  });

  criterion("AC7", "minimal vectors at budget 36", std::nullopt, [] {
    Outcome o;
    const auto& v = tabulated_minimal_vectors();
    const std::array<std::vector<LatticeVector>, 4> expected{{{v[0], v[4]}, {v[1], v[5]}, {v[2]}, {v[3], v[6]}}};
    for (int i = 0; i < 4; ++i) {
      auto want = expected[i];
      std::sort(want.begin(), want.end());
      o.require(minimal_vectors(CosetLabel::of(i, 1), 36) == want, "class " + std::to_string(i));
    }
    return o;
  });

  criterion("AC8", "minimal pair table", std::nullopt, [] {
    Outcome o;
    const std::vector<std::tuple<int, int, ExponentVector>> expected{
        {0, 1, {2, 10, 2, 10}}, {0, 2, {10, 10, 2, 2}}, {0, 3, {2, 10, 10, 2}}, {0, 5, {17, 13, 5, 1}},
        {0, 6, {17, 13, 1, 5}}, {1, 2, {10, 2, 2, 10}}, {1, 3, {2, 2, 10, 10}}, {1, 4, {17, 1, 5, 13}},
        {1, 6, {17, 5, 1, 13}}, {2, 3, {10, 2, 10, 2}}, {2, 4, {25, 1, 5, 5}},  {2, 5, {25, 5, 5, 1}},
        {2, 6, {25, 5, 1, 5}},  {3, 4, {17, 1, 13, 5}}, {3, 5, {17, 5, 13, 1}}, {4, 5, {32, 4, 8, 4}},
        {4, 6, {32, 4, 4, 8}},  {5, 6, {32, 8, 4, 4}}};
    const auto rows = minimal_pair_table(36);
    o.require(rows.size() == expected.size(), "row count " + std::to_string(rows.size()));
    int minimal = 0;
    for (std::size_t k = 0; k < std::min(rows.size(), expected.size()); ++k) {
      const auto& [i, j, e] = expected[k];
      o.require(rows[k].i == i && rows[k].j == j && rows[k].sum == e, "row " + std::to_string(k));
      const bool want_min = e == ExponentVector(10, 10, 2, 2) || e == ExponentVector(25, 5, 5, 1);
      o.require(rows[k].minimal == want_min, "minimality of row " + std::to_string(k));
      minimal += rows[k].minimal;
    }
    o.require(minimal == 2, "minimal row count");
    return o;
  });

  criterion("AC9", "leading coefficients and certify", 60.0, [] {
    Outcome o;
    const FormalQSeries delta = delta_series(40);
    const auto a = ParamPolynomial::variable(0), b = ParamPolynomial::variable(1);
    const auto c = ParamPolynomial::variable(2), d = ParamPolynomial::variable(3);
    o.require(delta.coefficient({10, 10, 2, 2}) == Rational(-12) * ((b - a) * (d - c)), "coefficient at (10,10,2,2)");
    o.require(delta.coefficient({25, 5, 5, 1}) == Rational(-96) * (a * (c - b)), "coefficient at (25,5,5,1)");
    for (const auto& p : random_points(99, 50)) {
      const Certificate cert = certify(p, delta);
      o.require(cert.verdict == Verdict::NonIsometric && cert.total < 0, "certify failed at " + str(p));
    }
    const Certificate s = certify(ParamPoint(1, 7, 13, 19), delta);
    o.require(s.min_exponent == Rational(144), "minimal exponent at (1,7,13,19)");
    o.require(s.total == -1008, "total at (1,7,13,19) is " + to_string(s.total));
    return o;
  });

  criterion("AC10", "Psi on the budget-40 shell", std::nullopt, [] {
    Outcome o;
    const ParamPoint p(1, 7, 13, 19);
    const auto shell = enumerate(build_family().L1, 40);
    for (const auto& v : shell) {
      const LatticeVector w = psi(v);
      o.require(psi_inv(w) == v, "round trip at " + to_string(v));
      o.require(phi(w) == phi(v) && norm2(w, p) == norm2(v, p), "norm at " + to_string(v));
    }
    bool witnessed = false;
    for (const auto& x : shell) {
      for (const auto& y : shell)
        if (psi(x + y) != psi(x) + psi(y)) {
          o.detail = "Psi(" + to_string(x) + " + " + to_string(y) + ") = " + to_string(psi(x + y)) + " but Psi sum = " +
                     to_string(psi(x) + psi(y));
          witnessed = true;
          break;
        }
      if (witnessed) break;
    }
    o.require(witnessed, "no non-additivity witness");
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
