#include "tetra/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tetra {

namespace {

std::uint8_t mod3(long v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

using Mat4 = std::array<std::array<int, 4>, 4>;

Mat4 multiply(const Mat4& x, const Mat4& y) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

std::array<K4Element, 4> make_k4() {
  const Mat4 id{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  const Mat4 g1{{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}}};
  const Mat4 g2{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}};
  return {{
      {0, id, {1, 1, 1, 1}},
      {1, g1, {-1, 1, -1, 1}},
      {2, g2, {-1, -1, 1, 1}},
      {3, multiply(g2, g1), {1, -1, -1, 1}},
  }};
}

// Reduced row-echelon basis of span{u, v}; throws if u, v are dependent.
std::array<F3Vector, 2> echelon(F3Vector u, F3Vector v) {
  std::array<F3Vector, 2> rows{u, v};
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < 2; ++col) {
    std::size_t piv = r;
    while (piv < 2 && rows[piv][col] == 0) ++piv;
    if (piv == 2) continue;
    std::swap(rows[r], rows[piv]);
    // Over F_3 every nonzero element is its own inverse.
    rows[r] = rows[r].scaled(rows[r][col]);
    for (std::size_t k = 0; k < 2; ++k)
      if (k != r && rows[k][col] != 0) rows[k] = rows[k] + rows[r].scaled(3 - rows[k][col]);
    ++r;
  }
  if (r < 2) throw std::invalid_argument("code generators are linearly dependent");
  return rows;
}

}  // namespace

F3Vector::F3Vector(long x0, long x1, long x2, long x3) : x{mod3(x0), mod3(x1), mod3(x2), mod3(x3)} {}

F3Vector F3Vector::operator+(const F3Vector& o) const {
  F3Vector r;
  for (std::size_t i = 0; i < 4; ++i) r.x[i] = static_cast<std::uint8_t>((x[i] + o.x[i]) % 3);
  return r;
}

F3Vector F3Vector::scaled(unsigned s) const {
  F3Vector r;
  for (std::size_t i = 0; i < 4; ++i) r.x[i] = static_cast<std::uint8_t>((x[i] * s) % 3);
  return r;
}

std::uint8_t dot(const F3Vector& u, const F3Vector& v) {
  unsigned s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += u[i] * v[i];
  return static_cast<std::uint8_t>(s % 3);
}

std::string to_string(const F3Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << (v[i] == 2 ? -1 : int(v[i]));
  os << ')';
  return os.str();
}

TernaryCode::TernaryCode(const F3Vector& g0, const F3Vector& g1) : generators_(echelon(g0, g1)) {
  std::size_t k = 0;
  for (unsigned s = 0; s < 3; ++s)
    for (unsigned t = 0; t < 3; ++t) elements_[k++] = generators_[0].scaled(s) + generators_[1].scaled(t);
  std::sort(elements_.begin(), elements_.end());
}

bool TernaryCode::contains(const F3Vector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

bool TernaryCode::self_dual() const {
  for (const auto& x : elements_)
    for (const auto& y : elements_)
      if (dot(x, y) != 0) return false;
  return true;
}

int TernaryCode::intersection_size(const TernaryCode& o) const {
  int n = 0;
  for (const auto& x : elements_) n += o.contains(x);
  return n;
}

F3Vector K4Element::apply(const F3Vector& v) const {
  std::array<long, 4> w{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[i] += standard[i][j] * long(v[j]);
  return F3Vector(w[0], w[1], w[2], w[3]);
}

std::array<long, 4> K4Element::apply_standard(const std::array<long, 4>& v) const {
  std::array<long, 4> w{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[i] += standard[i][j] * v[j];
  return w;
}

std::array<long, 4> K4Element::apply_eigen(const std::array<long, 4>& v) const {
  return {eigen_signs[0] * v[0], eigen_signs[1] * v[1], eigen_signs[2] * v[2], eigen_signs[3] * v[3]};
}

const std::array<K4Element, 4>& k4_elements() {
  static const std::array<K4Element, 4> group = make_k4();
  return group;
}

const K4Element& k4(int i) {
  if (i < 0 || i > 3) throw std::out_of_range("K4 index");
  return k4_elements()[static_cast<std::size_t>(i)];
}

std::vector<TernaryCode> two_dimensional_codes() {
  std::vector<F3Vector> nonzero;
  for (int i = 1; i < 81; ++i) nonzero.emplace_back(i % 3, (i / 3) % 3, (i / 9) % 3, (i / 27) % 3);
  std::set<TernaryCode> found;
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (nonzero[j] == nonzero[i].scaled(2)) continue;
      found.insert(TernaryCode(nonzero[i], nonzero[j]));
    }
  return {found.begin(), found.end()};
}

std::array<F3Vector, 2> reference_generators(int index) {
  static const std::array<std::array<F3Vector, 2>, 8> gens{{
      {F3Vector(1, 0, -1, -1), F3Vector(0, 1, 1, -1)},
      {F3Vector(1, 0, -1, 1), F3Vector(0, 1, 1, 1)},
      {F3Vector(1, 0, -1, 1), F3Vector(0, 1, -1, -1)},
      {F3Vector(1, 0, 1, 1), F3Vector(0, 1, 1, -1)},
      {F3Vector(1, 0, 1, -1), F3Vector(0, 1, 1, 1)},
      {F3Vector(1, 0, -1, -1), F3Vector(0, 1, -1, 1)},
      {F3Vector(1, 0, 1, 1), F3Vector(0, 1, -1, 1)},
      {F3Vector(1, 0, 1, -1), F3Vector(0, 1, -1, -1)},
  }};
  if (index < 0 || index > 7) throw std::out_of_range("self-dual code index");
  return gens[static_cast<std::size_t>(index)];
}

std::vector<TernaryCode> all_selfdual_codes() {
  std::vector<TernaryCode> self_dual;
  for (auto& c : two_dimensional_codes())
    if (c.self_dual()) self_dual.push_back(c);

  std::vector<TernaryCode> ordered;
  for (int i = 0; i < 8; ++i) {
    const auto g = reference_generators(i);
    const TernaryCode ref(g[0], g[1]);
    auto it = std::find(self_dual.begin(), self_dual.end(), ref);
    if (it == self_dual.end()) throw std::logic_error("reference code C" + std::to_string(i + 1) + " not found");
    ordered.push_back(*it);
  }
  if (self_dual.size() != ordered.size()) throw std::logic_error("unexpected number of self-dual codes");
  return ordered;
}

TernaryCode k4_act_code(const K4Element& g, const TernaryCode& c) {
  return TernaryCode(g.apply(c.generators()[0]), g.apply(c.generators()[1]));
}

std::vector<std::vector<int>> orbit_partition(const std::vector<TernaryCode>& codes) {
  const int n = static_cast<int>(codes.size());
  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit;
    for (const auto& g : k4_elements()) {
      const TernaryCode image = k4_act_code(g, codes[i]);
      auto it = std::find(codes.begin(), codes.end(), image);
      if (it == codes.end()) throw std::logic_error("K4 image leaves the code list");
      const int j = static_cast<int>(it - codes.begin());
      if (orbit_of[j] < 0) {
        orbit_of[j] = static_cast<int>(orbits.size());
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::pair<int, int>> intersection_graph(const std::vector<TernaryCode>& codes) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(codes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (codes[i].intersection_size(codes[j]) == 3) edges.emplace_back(i, j);
  return edges;
}

bool is_complete_bipartite(int n, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<int>& left) {
  std::vector<bool> in_left(static_cast<std::size_t>(n), false);
  for (int v : left) in_left[v] = true;
  std::set<std::pair<int, int>> expected;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (in_left[i] != in_left[j]) expected.emplace(i, j);
  return std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expected && edges.size() == expected.size();
}

const std::array<F3Vector, 4>& codeword_c1() {
  static const std::array<F3Vector, 4> v{F3Vector(1, -1, 1, 0), F3Vector(0, 1, 1, -1), F3Vector(-1, 0, 1, 1),
                                         F3Vector(-1, -1, 0, -1)};
  return v;
}

const std::array<F3Vector, 4>& codeword_c2() {
  static const std::array<F3Vector, 4> w{F3Vector(1, -1, 1, 0), F3Vector(1, 1, 0, -1), F3Vector(0, -1, -1, -1),
                                         F3Vector(1, 0, -1, 1)};
  return w;
}

const K4Element& match_element(const F3Vector& v) {
  static const std::vector<TernaryCode> codes = all_selfdual_codes();
  const TernaryCode& c1 = codes[0];
  const TernaryCode& c2 = codes[1];
  if (v.is_zero()) throw std::invalid_argument("match_element: zero vector");
  if (!c1.contains(v)) throw std::invalid_argument("match_element: " + to_string(v) + " is not in C1");
  const K4Element* found = nullptr;
  for (const auto& g : k4_elements()) {
    if (!c2.contains(g.apply(v))) continue;
    if (found) throw std::logic_error("match_element: more than one group element lands in C2");
    found = &g;
  }
  if (!found) throw std::logic_error("match_element: no group element lands in C2");
  return *found;
}

}  // namespace tetra
