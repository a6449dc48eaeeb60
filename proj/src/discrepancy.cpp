#include "tetra/discrepancy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tetra {

namespace {

struct ShellEntry {
  LatticeVector v;
  LatticeVector image;  // psi(v)
  ExponentVector exponent;
  CosetLabel label;
};

std::vector<ShellEntry> labelled_shell(std::int64_t budget) {
  std::vector<ShellEntry> shell;
  for (const auto& v : enumerate(build_family().L1, budget))
    shell.push_back({v, psi(v), phi(v), coset_label(v)});
  return shell;
}

ParamPolynomial psi_kernel(const ShellEntry& l, const ShellEntry& k) {
  const ParamPolynomial x = inner_poly(l.v, k.v);
  const ParamPolynomial y = inner_poly(l.image, k.image);
  return x * x - y * y;
}

// Accumulates the unnormalized kernel over all pairs from xs x ys.
void accumulate_pairs(FormalQSeries& out, const std::vector<const ShellEntry*>& xs,
                      const std::vector<const ShellEntry*>& ys) {
  for (const ShellEntry* l : xs)
    for (const ShellEntry* k : ys) {
      const ExponentVector e = l->exponent + k->exponent;
      if (e.component_sum() > out.budget()) continue;
      out.add(e, psi_kernel(*l, *k));
    }
}

std::vector<const ShellEntry*> with_label(const std::vector<ShellEntry>& shell, const CosetLabel& label) {
  std::vector<const ShellEntry*> out;
  for (const auto& s : shell)
    if (s.label == label) out.push_back(&s);
  return out;
}

std::optional<ExponentVector> first_difference(const FormalQSeries& x, const FormalQSeries& y) {
  for (const auto& [e, c] : x.terms())
    if (y.coefficient(e) != c) return e;
  for (const auto& [e, c] : y.terms())
    if (x.coefficient(e) != c) return e;
  return std::nullopt;
}

std::vector<LatticeVector> minimal_among(const std::vector<LatticeVector>& candidates) {
  std::vector<LatticeVector> out;
  for (const auto& v : candidates) {
    const ExponentVector ev = phi(v);
    const bool dominated =
        std::any_of(candidates.begin(), candidates.end(), [&](const LatticeVector& u) { return precedes(phi(u), ev); });
    if (!dominated) out.push_back(v);
  }
  return out;
}

}  // namespace

const char* to_string(DeltaRoute r) { return r == DeltaRoute::FromTheta ? "theta" : "psi"; }

ClassPair::ClassPair(int i_, int j_) : i(i_), j(j_) {
  if (i < 0 || j > 3 || i >= j) throw std::invalid_argument("class pair needs 0 <= i < j <= 3");
}

const std::array<ClassPair, 6>& all_class_pairs() {
  static const std::array<ClassPair, 6> pairs{ClassPair(0, 1), ClassPair(0, 2), ClassPair(0, 3),
                                              ClassPair(1, 2), ClassPair(1, 3), ClassPair(2, 3)};
  return pairs;
}

FormalQSeries delta_series(std::int64_t budget, DeltaRoute route) {
  if (route == DeltaRoute::FromTheta) {
    const Family& f = build_family();
    FormalQSeries d = series_sub(theta11(f.L1, budget), theta11(f.L2, budget));
    d *= Rational(1, 128);
    return d;
  }
  const auto shell = labelled_shell(budget);
  std::vector<const ShellEntry*> all;
  for (const auto& s : shell) all.push_back(&s);
  FormalQSeries d(budget);
  accumulate_pairs(d, all, all);
  d *= Rational(1, 8);
  return d;
}

FormalQSeries delta_labels(const CosetLabel& x, const CosetLabel& y, std::int64_t budget) {
  const auto shell = labelled_shell(budget);
  FormalQSeries d(budget);
  accumulate_pairs(d, with_label(shell, x), with_label(shell, y));
  return d;
}

FormalQSeries delta_class(const ClassPair& cp, std::int64_t budget) {
  return delta_labels(CosetLabel::of(cp.i, 1), CosetLabel::of(cp.j, 1), budget);
}

RelationReport check_relations(std::int64_t budget) {
  const auto shell = labelled_shell(budget);
  const auto& labels = all_labels();
  std::map<std::pair<CosetLabel, CosetLabel>, FormalQSeries> table;
  for (const auto& x : labels)
    for (const auto& y : labels) {
      FormalQSeries d(budget);
      accumulate_pairs(d, with_label(shell, x), with_label(shell, y));
      table.emplace(std::make_pair(x, y), std::move(d));
    }
  auto at = [&](const CosetLabel& x, const CosetLabel& y) -> const FormalQSeries& { return table.at({x, y}); };

  RelationReport report;
  auto fail = [&](const char* relation, const CosetLabel& x, const CosetLabel& y, std::optional<ExponentVector> w) {
    report.ok = false;
    report.relation = relation;
    report.first = x;
    report.second = y;
    report.witness = w;
  };

  const FormalQSeries empty(budget);
  for (const auto& x : labels) {
    ++report.checked;
    if (auto w = first_difference(at(x, x), empty)) {
      fail("diagonal", x, x, w);
      return report;
    }
  }
  for (const auto& x : labels)
    for (const auto& y : labels) {
      ++report.checked;
      if (auto w = first_difference(at(x, y), at(y, x))) {
        fail("symmetry", x, y, w);
        return report;
      }
      ++report.checked;
      if (auto w = first_difference(at(x, y.negated()), at(x, y))) {
        fail("sign", x, y, w);
        return report;
      }
    }
  for (const auto& y : labels) {
    ++report.checked;
    if (auto w = first_difference(at(CosetLabel::zero(), y), empty)) {
      fail("zero-class", CosetLabel::zero(), y, w);
      return report;
    }
  }
  return report;
}

const std::array<LatticeVector, 7>& tabulated_minimal_vectors() {
  static const std::array<LatticeVector, 7> v{
      LatticeVector(-1, 3, -1, 1),  LatticeVector(1, -1, -1, 3), LatticeVector(3, 1, -1, -1),
      LatticeVector(-1, -1, -3, -1), LatticeVector(-4, 0, 2, -2), LatticeVector(4, 2, 2, 0),
      LatticeVector(-4, 2, 0, 2),
  };
  return v;
}

int tabulated_class(int idx) {
  static constexpr std::array<int, 7> cls{0, 1, 2, 3, 0, 1, 3};
  if (idx < 0 || idx > 6) throw std::out_of_range("tabulated minimal vector index");
  return cls[static_cast<std::size_t>(idx)];
}

std::vector<LatticeVector> minimal_vectors(const CosetLabel& label, std::int64_t budget) {
  std::vector<LatticeVector> members;
  for (const auto& v : enumerate(build_family().L1, budget))
    if (coset_label(v) == label) members.push_back(v);
  return minimal_among(members);
}

std::vector<LatticeVector> minimal_vectors_complete(const CosetLabel& label) {
  const Family& f = build_family();
  for (int i = 0; i < 4; ++i) {
    LatticeVector e;
    e.x[static_cast<std::size_t>(i)] = 12;
    if (!f.M.contains(e)) throw std::logic_error("12*Z^4 is not contained in M");
  }
  std::vector<LatticeVector> members;
  LatticeVector v;
  for (v.x[0] = -6; v.x[0] <= 6; ++v.x[0])
    for (v.x[1] = -6; v.x[1] <= 6; ++v.x[1])
      for (v.x[2] = -6; v.x[2] <= 6; ++v.x[2])
        for (v.x[3] = -6; v.x[3] <= 6; ++v.x[3])
          if (f.L1.contains(v) && coset_label(v) == label) members.push_back(v);
  return minimal_among(members);
}

std::vector<MinimalPairRow> minimal_pair_table(std::int64_t budget) {
  if (budget < kCertifyMinBudget) throw std::invalid_argument("minimal_pair_table needs budget >= 36");
  const auto& tab = tabulated_minimal_vectors();
  for (int c = 0; c < 4; ++c) {
    auto found = minimal_vectors(CosetLabel::of(c, 1), budget);
    std::vector<LatticeVector> expected;
    for (int idx = 0; idx < 7; ++idx)
      if (tabulated_class(idx) == c) expected.push_back(tab[static_cast<std::size_t>(idx)]);
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    if (found != expected)
      throw std::logic_error("minimal vectors of class [v" + std::to_string(c) + "] differ from the table");
  }

  std::vector<MinimalPairRow> rows;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      if (tabulated_class(i) == tabulated_class(j)) continue;
      rows.push_back({i, j, phi(tab[static_cast<std::size_t>(i)]) + phi(tab[static_cast<std::size_t>(j)]), false});
    }
  for (auto& r : rows)
    r.minimal = std::none_of(rows.begin(), rows.end(), [&](const MinimalPairRow& o) { return precedes(o.sum, r.sum); });
  return rows;
}

const ExponentVector& leading_exponent_v0v2() {
  static const ExponentVector e(10, 10, 2, 2);
  return e;
}

const ExponentVector& leading_exponent_v2v5() {
  static const ExponentVector e(25, 5, 5, 1);
  return e;
}

const ParamPolynomial& leading_coefficient_v0v2() {
  static const ParamPolynomial q = [] {
    const auto a = ParamPolynomial::variable(0), b = ParamPolynomial::variable(1);
    const auto c = ParamPolynomial::variable(2), d = ParamPolynomial::variable(3);
    return Rational(-12) * ((b - a) * (d - c));
  }();
  return q;
}

const ParamPolynomial& leading_coefficient_v2v5() {
  static const ParamPolynomial q = [] {
    const auto a = ParamPolynomial::variable(0), b = ParamPolynomial::variable(1);
    const auto c = ParamPolynomial::variable(2);
    return Rational(-96) * (a * (c - b));
  }();
  return q;
}

const char* to_string(Verdict v) { return v == Verdict::NonIsometric ? "NonIsometric" : "Inconclusive"; }

Certificate certify(const ParamPoint& p, std::int64_t budget) {
  if (budget < kCertifyMinBudget) throw std::invalid_argument("certify needs budget >= 36");
  return certify(p, delta_series(budget, DeltaRoute::FromPsiKernel));
}

Certificate certify(const ParamPoint& p, const FormalQSeries& delta) {
  if (delta.budget() < kCertifyMinBudget) throw std::invalid_argument("certify needs budget >= 36");

  std::array<int, 4> perm{0, 1, 2, 3};
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) { return p[x] < p[y]; });
  const ParamPoint sorted(p[perm[0]], p[perm[1]], p[perm[2]], p[perm[3]]);

  Certificate cert{p, sorted, perm, delta.budget(), std::nullopt, {}, Rational(0), Verdict::Inconclusive};
  if (!p.pairwise_distinct()) return cert;

  if (delta.coefficient(leading_exponent_v0v2()) != leading_coefficient_v0v2())
    throw std::logic_error("coefficient at (10,10,2,2) is not -12(b-a)(d-c)");
  if (delta.coefficient(leading_exponent_v2v5()) != leading_coefficient_v2v5())
    throw std::logic_error("coefficient at (25,5,5,1) is not -96a(c-b)");

  const auto collapsed = series_collapse(delta, sorted);
  if (collapsed.empty()) throw std::logic_error("delta vanishes on the budget shell");
  const Rational expected = std::min(sigma(leading_exponent_v0v2(), sorted), sigma(leading_exponent_v2v5(), sorted));
  if (collapsed.front().exponent != expected)
    throw std::logic_error("first exponent of delta is " + to_string(collapsed.front().exponent) + ", expected " +
                           to_string(expected));

  cert.min_exponent = expected;
  for (const auto& [e, poly] : delta.terms())
    if (sigma(e, sorted) == expected) cert.terms.push_back({e, poly, poly_eval(poly, sorted)});
  cert.total = collapsed.front().coefficient;
  cert.verdict = sgn(cert.total) != 0 ? Verdict::NonIsometric : Verdict::Inconclusive;
  return cert;
}

}  // namespace tetra
