#include "tetra/verify.hpp"

#include "tetra/codes.hpp"
#include "tetra/discrepancy.hpp"
#include "tetra/lattice.hpp"
#include "tetra/theta.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tetra {

namespace {

using Check = std::function<std::string()>;  // empty string means pass

std::string check_codes_census() {
  const auto all = two_dimensional_codes();
  if (all.size() != 130) return "found " + std::to_string(all.size()) + " two-dimensional codes";
  const auto sd = std::count_if(all.begin(), all.end(), [](const TernaryCode& c) { return c.self_dual(); });
  if (sd != 8) return "found " + std::to_string(sd) + " self-dual codes";
  for (int i = 0; i < 8; ++i) {
    const auto g = reference_generators(i);
    if (all_selfdual_codes()[static_cast<std::size_t>(i)].generators() != g)
      return "C" + std::to_string(i + 1) + " generators differ";
  }
  return {};
}

std::string check_orbits() {
  const auto orbits = orbit_partition(all_selfdual_codes());
  const std::vector<std::vector<int>> expected{{0, 2, 4, 6}, {1, 3, 5, 7}};
  return orbits == expected ? std::string{} : "orbit partition differs";
}

std::string check_graph() {
  const auto codes = all_selfdual_codes();
  const auto edges = intersection_graph(codes);
  if (edges.size() != 16) return std::to_string(edges.size()) + " edges";
  if (!is_complete_bipartite(8, edges, {0, 2, 4, 6})) return "graph is not K(4,4) on the orbit partition";
  return {};
}

std::string check_matching() {
  const auto codes = all_selfdual_codes();
  for (const auto& v : codes[0].elements()) {
    if (v.is_zero()) continue;
    int hits = 0;
    for (const auto& g : k4_elements()) hits += codes[1].contains(g.apply(v));
    if (hits != 1) return to_string(v) + " has " + std::to_string(hits) + " matches";
  }
  for (int i = 0; i < 4; ++i) {
    if (match_element(codeword_c1()[i]).id != i) return "g" + std::to_string(i) + " does not match v" + std::to_string(i);
    if (k4(i).apply(codeword_c1()[i]) != codeword_c2()[i]) return "g_i(v_i) != w_i for i=" + std::to_string(i);
    if (k4(i).apply(codeword_c2()[i]) != codeword_c1()[i]) return "g_i(w_i) != v_i for i=" + std::to_string(i);
  }
  return {};
}

std::string check_basis_change() {
  const IntMatrix& s = standard_basis_matrix();
  const auto det = determinant(s);
  if (det != 1 && det != -1) return "det S = " + std::to_string(det);
  const RationalMatrix u_inv = inverse(eigenbasis_matrix());
  if (multiply(u_inv, to_rational(s)) != to_rational(eigen_generator_matrix())) return "U^-1 S differs from the generator matrix";
  for (const auto& g : k4_elements()) {
    RationalMatrix std_g;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) std_g[i][j] = g.standard[i][j];
    const RationalMatrix conj = multiply(multiply(u_inv, std_g), eigenbasis_matrix());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (conj[i][j] != (i == j ? Rational(g.eigen_signs[i]) : Rational(0)))
          return "g" + std::to_string(g.id) + " is not diagonal in the eigenbasis";
  }
  return {};
}

std::string check_indices() {
  const Family& f = build_family();
  if (f.L1.index_in(f.L) != 9) return "[L:L1] != 9";
  if (f.L2.index_in(f.L) != 9) return "[L:L2] != 9";
  if (f.L12.index_in(f.L1) != 3) return "[L1:L12] != 3";
  if (f.L12.index_in(f.L2) != 3) return "[L2:L12] != 3";
  if (f.M.index_in(f.L12) != 3) return "[L12:M] != 3";
  return {};
}

std::string check_lattice_identities() {
  const Family& f = build_family();
  if (!lattice_eq(f.M, m_generator_lattice())) return "span{3l_i} != span{m_i}";
  if (!lattice_eq(conway_sloane_minus(), f.L2)) return "L- != L2";
  if (!lattice_eq(conway_sloane_plus().transformed(kPlusReflection, "L+'"), f.L1)) return "diag(1,-1,1,1) L+ != L1";
  for (const auto& v : enumerate(f.L, 8))
    if (f.L1.contains(v) != all_selfdual_codes()[0].contains(project_mod3(v))) return "pi^-1(C1) != L1 at " + to_string(v);
  return {};
}

std::string check_isospectral(std::int64_t budget) {
  const Family& f = build_family();
  const FormalQSeries r1 = rep_series(f.L1, budget);
  const FormalQSeries r2 = rep_series(f.L2, budget);
  for (const auto& p : {ParamPoint(1, 7, 13, 19), ParamPoint(1, 2, 3, 4)})
    if (series_collapse(r1, p) != series_collapse(r2, p)) return "spectra differ at (" + to_string(p.a()) + ",...)";
  return {};
}

std::string check_theta_kernel() {
  const Family& f = build_family();
  const auto shell = enumerate(f.L, 12);
  for (const auto& l : shell)
    for (const auto& k : shell)
      if (pair_kernel(PairKernel::Defining, l, k) != pair_kernel(PairKernel::Pairwise, l, k))
        return "kernels differ at " + to_string(l) + ", " + to_string(k);
  if (theta11(f.L1, 24, PairKernel::Defining) != theta11(f.L1, 24, PairKernel::Pairwise)) return "series differ at budget 24";
  return {};
}

std::string check_routes() {
  if (delta_series(24, DeltaRoute::FromTheta) != delta_series(24, DeltaRoute::FromPsiKernel)) return "routes differ";
  return {};
}

std::string check_relations_anchor() {
  const RelationReport r = check_relations(24);
  if (r.ok) return {};
  return r.relation + " fails for " + to_string(*r.first) + ", " + to_string(*r.second) +
         (r.witness ? " at " + to_string(*r.witness) : "");
}

std::string check_class_sum() {
  FormalQSeries sum(24);
  for (const auto& cp : all_class_pairs()) sum = series_add(sum, delta_class(cp, 24));
  return sum == delta_series(24) ? std::string{} : "sum of class series differs from delta";
}

std::string check_min_vectors(std::int64_t budget) {
  const auto& tab = tabulated_minimal_vectors();
  for (int c = 0; c < 4; ++c) {
    std::vector<LatticeVector> expected;
    for (int idx = 0; idx < 7; ++idx)
      if (tabulated_class(idx) == c) expected.push_back(tab[static_cast<std::size_t>(idx)]);
    std::sort(expected.begin(), expected.end());
    auto shell = minimal_vectors(CosetLabel::of(c, 1), budget);
    auto full = minimal_vectors_complete(CosetLabel::of(c, 1));
    std::sort(shell.begin(), shell.end());
    std::sort(full.begin(), full.end());
    if (shell != expected) return "budget search differs for class [v" + std::to_string(c) + "]";
    if (full != expected) return "exhaustive search differs for class [v" + std::to_string(c) + "]";
  }
  return {};
}

std::string check_min_pairs(std::int64_t budget) {
  const auto rows = minimal_pair_table(budget);
  if (rows.size() != 18) return std::to_string(rows.size()) + " rows";
  std::vector<std::pair<int, int>> minimal;
  for (const auto& r : rows)
    if (r.minimal) minimal.emplace_back(r.i, r.j);
  if (minimal != std::vector<std::pair<int, int>>{{0, 2}, {2, 5}}) return "minimal rows differ";
  return {};
}

std::string check_main(std::int64_t budget) {
  const FormalQSeries delta = delta_series(budget);
  if (delta.coefficient(leading_exponent_v0v2()) != leading_coefficient_v0v2()) return "coefficient at (10,10,2,2)";
  if (delta.coefficient(leading_exponent_v2v5()) != leading_coefficient_v2v5()) return "coefficient at (25,5,5,1)";
  const Certificate c = certify(ParamPoint(1, 7, 13, 19), delta);
  if (c.verdict != Verdict::NonIsometric || *c.min_exponent != 144 || c.total != -1008)
    return "certificate at (1,7,13,19): exponent " + to_string(*c.min_exponent) + ", total " + to_string(c.total);
  return {};
}

}  // namespace

std::vector<AnchorResult> run_anchors(std::int64_t budget) {
  if (budget < kCertifyMinBudget) throw std::invalid_argument("verify needs budget >= 36");
  const std::vector<std::pair<std::string, Check>> checks{
      {"codes.census", check_codes_census},
      {"codes.orbits", check_orbits},
      {"codes.graph", check_graph},
      {"codes.matching", check_matching},
      {"lattice.basis_change", check_basis_change},
      {"lattice.indices", check_indices},
      {"lattice.identities", check_lattice_identities},
      {"lattice.isospectral", [budget] { return check_isospectral(budget); }},
      {"theta.kernel_identity", check_theta_kernel},
      {"delta.routes", check_routes},
      {"delta.relations", check_relations_anchor},
      {"delta.class_sum", check_class_sum},
      {"minimal.vectors", [budget] { return check_min_vectors(budget); }},
      {"minimal.pairs", [budget] { return check_min_pairs(budget); }},
      {"main.coefficients", [budget] { return check_main(budget); }},
  };
  std::vector<AnchorResult> results;
  for (const auto& [name, check] : checks) {
    try {
      std::string w = check();
      results.push_back({name, w.empty(), std::move(w)});
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
  return results;
}

}  // namespace tetra
