#include "tetra/report.hpp"

#include <sstream>
#include <stdexcept>

namespace tetra {

Json to_json(const ParamPoint& p) {
  Json j = Json::array();
  for (const auto& x : p.values()) j.push_back(to_string(x));
  return j;
}

Json to_json(const ExponentVector& e) { return Json::array({e[0], e[1], e[2], e[3]}); }

Json to_json(const ParamPolynomial& q) {
  Json terms = Json::array();
  for (const auto& [m, c] : q.terms())
    terms.push_back({{"monomial", Json::array({m[0], m[1], m[2], m[3]})}, {"coefficient", to_string(c)}});
  return {{"text", to_string(q)}, {"terms", terms}};
}

Json to_json(const F3Vector& v) {
  Json j = Json::array();
  for (std::size_t i = 0; i < 4; ++i) j.push_back(v[i] == 2 ? -1 : int(v[i]));
  return j;
}

Json to_json(const TernaryCode& c) {
  Json elements = Json::array();
  for (const auto& e : c.elements()) elements.push_back(to_json(e));
  return {{"generators", Json::array({to_json(c.generators()[0]), to_json(c.generators()[1])})},
          {"self_dual", c.self_dual()},
          {"elements", elements}};
}

Json to_json(const Lattice& l) {
  Json gens = Json::array();
  Json hnf = Json::array();
  for (std::size_t j = 0; j < 4; ++j) {
    const auto g = column(l.generators(), j);
    const auto h = column(l.hnf(), j);
    gens.push_back(Json::array({g[0], g[1], g[2], g[3]}));
    hnf.push_back(Json::array({h[0], h[1], h[2], h[3]}));
  }
  return {{"lattice", l.name()}, {"generators", gens}, {"hnf", hnf}, {"covolume", l.covolume()}};
}

Json to_json(const std::vector<CollapsedTerm>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back({{"exponent", to_string(r.exponent)}, {"coefficient", to_string(r.coefficient)}});
  return j;
}

Json to_json(const Certificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"exponent_vector", to_json(t.exponent)}, {"polynomial", to_json(t.polynomial)}, {"value", to_string(t.value)}});
  return {{"params", to_json(c.params)},
          {"sorted_params", to_json(c.sorted_params)},
          {"permutation", c.permutation},
          {"budget", c.budget},
          {"min_exponent", c.min_exponent ? Json(to_string(*c.min_exponent)) : Json(nullptr)},
          {"terms", terms},
          {"total", to_string(c.total)},
          {"verdict", to_string(c.verdict)}};
}

ParamPoint param_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("parameter point must be a list of four rationals");
  std::array<Rational, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = parse_rational(j[i].get<std::string>());
  return ParamPoint(v);
}

ExponentVector exponent_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("exponent vector must have four entries");
  return ExponentVector(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
                        j[3].get<std::int64_t>());
}

ParamPolynomial polynomial_from_json(const Json& j) {
  ParamPolynomial q;
  for (const auto& t : j.at("terms")) {
    const auto& m = t.at("monomial");
    if (!m.is_array() || m.size() != 4) throw std::invalid_argument("monomial must have four exponents");
    Monomial mono{m[0].get<std::uint8_t>(), m[1].get<std::uint8_t>(), m[2].get<std::uint8_t>(), m[3].get<std::uint8_t>()};
    q.add_term(mono, parse_rational(t.at("coefficient").get<std::string>()));
  }
  return q;
}

std::string to_csv(const std::vector<CollapsedTerm>& rows) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (const auto& r : rows) os << to_string(r.exponent) << ',' << to_string(r.coefficient) << '\n';
  return os.str();
}

}  // namespace tetra
