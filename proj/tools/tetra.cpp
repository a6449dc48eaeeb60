// Command-line front end for the tetralattice library.
//
// Exit codes: 0 success, 1 error or failed check, 2 inconclusive certificate.

#include "tetra/codes.hpp"
#include "tetra/discrepancy.hpp"
#include "tetra/lattice.hpp"
#include "tetra/report.hpp"
#include "tetra/theta.hpp"
#include "tetra/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tetra;

struct RunConfig {
  std::string command;
  std::vector<std::string> params_text{"1", "7", "13", "19"};
  std::int64_t budget = 40;
  std::string format = "text";
  std::string out;
  std::string lattice = "L1";
  std::string kernel = "pairwise";
  std::string route = "psi";

  ParamPoint params() const {
    std::array<Rational, 4> v;
    for (std::size_t i = 0; i < 4; ++i) v[i] = parse_rational(params_text.at(i));
    return ParamPoint(v);
  }
  bool json() const { return format == "json"; }
  bool csv() const { return format == "csv"; }
};

std::string code_name(int i) { return "C" + std::to_string(i + 1); }

std::string balanced(const F3Vector& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += sep;
    s += std::to_string(v[i] == 2 ? -1 : int(v[i]));
  }
  return s;
}

const Lattice& lattice_by_name(const std::string& name) {
  const Family& f = build_family();
  if (name == "L") return f.L;
  if (name == "L1") return f.L1;
  if (name == "L2") return f.L2;
  if (name == "M") return f.M;
  if (name == "L12") return f.L12;
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

void print_series_text(std::ostream& os, const std::vector<CollapsedTerm>& rows) {
  os << "exponent coefficient\n";
  for (const auto& r : rows) os << to_string(r.exponent) << ' ' << to_string(r.coefficient) << '\n';
}

int cmd_codes_list(const RunConfig& cfg, std::ostream& os) {
  const auto codes = all_selfdual_codes();
  const auto orbits = orbit_partition(codes);
  if (cfg.json()) {
    Json list = Json::array();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      Json c = to_json(codes[i]);
      c["name"] = code_name(static_cast<int>(i));
      list.push_back(c);
    }
    Json orb = Json::array();
    for (const auto& o : orbits) {
      Json names = Json::array();
      for (int i : o) names.push_back(code_name(i));
      orb.push_back(names);
    }
    os << Json{{"codes", list}, {"orbits", orb}}.dump(2) << '\n';
  } else if (cfg.csv()) {
    os << "code,g1_0,g1_1,g1_2,g1_3,g2_0,g2_1,g2_2,g2_3\n";
    for (std::size_t i = 0; i < codes.size(); ++i)
      os << code_name(static_cast<int>(i)) << ',' << balanced(codes[i].generators()[0], ',') << ','
         << balanced(codes[i].generators()[1], ',') << '\n';
  } else {
    for (std::size_t i = 0; i < codes.size(); ++i)
      os << code_name(static_cast<int>(i)) << " = span{" << to_string(codes[i].generators()[0]) << ", "
         << to_string(codes[i].generators()[1]) << "}\n";
    os << "K4 orbits:";
    for (const auto& o : orbits) {
      os << " {";
      for (std::size_t k = 0; k < o.size(); ++k) os << (k ? "," : "") << code_name(o[k]);
      os << '}';
    }
    os << '\n';
  }
  return 0;
}

int cmd_codes_graph(const RunConfig& cfg, std::ostream& os) {
  const auto codes = all_selfdual_codes();
  const auto edges = intersection_graph(codes);
  const auto orbits = orbit_partition(codes);
  const bool bipartite = orbits.size() == 2 && is_complete_bipartite(8, edges, orbits[0]);
  if (cfg.json()) {
    Json list = Json::array();
    for (const auto& [i, j] : edges) list.push_back(Json::array({code_name(i), code_name(j)}));
    os << Json{{"edges", edges.size()}, {"bipartite", bipartite}, {"edge_list", list}}.dump(2) << '\n';
  } else if (cfg.csv()) {
    os << "u,v\n";
    for (const auto& [i, j] : edges) os << code_name(i) << ',' << code_name(j) << '\n';
  } else {
    for (const auto& [i, j] : edges) os << code_name(i) << " -- " << code_name(j) << '\n';
    os << edges.size() << " edges; complete bipartite on the K4 orbits: " << (bipartite ? "yes" : "no") << '\n';
  }
  return bipartite ? 0 : 1;
}

int cmd_pair_show(const RunConfig& cfg, std::ostream& os) {
  const Family& f = build_family();
  const std::vector<const Lattice*> lattices{&f.L, &f.L1, &f.L2, &f.M, &f.L12};
  const bool minus_ok = lattice_eq(conway_sloane_minus(), f.L2);
  const bool plus_ok = lattice_eq(conway_sloane_plus().transformed(kPlusReflection, "L+"), f.L1);
  if (cfg.json()) {
    Json list = Json::array();
    for (const Lattice* l : lattices) {
      Json j = to_json(*l);
      j["index_in_L"] = l->index_in(f.L);
      list.push_back(j);
    }
    os << Json{{"lattices", list},
               {"index_L12_in_L1", f.L12.index_in(f.L1)},
               {"conway_sloane_minus_equals_L2", minus_ok},
               {"conway_sloane_plus_reflected_equals_L1", plus_ok}}
              .dump(2)
       << '\n';
  } else if (cfg.csv()) {
    os << "lattice,covolume,index_in_L\n";
    for (const Lattice* l : lattices) os << l->name() << ',' << l->covolume() << ',' << l->index_in(f.L) << '\n';
  } else {
    for (const Lattice* l : lattices) {
      os << l->name() << " (index " << l->index_in(f.L) << " in L)\n  generators:";
      for (std::size_t j = 0; j < 4; ++j) os << ' ' << to_string(column(l->generators(), j));
      os << "\n  hnf:       ";
      for (std::size_t j = 0; j < 4; ++j) os << ' ' << to_string(column(l->hnf(), j));
      os << '\n';
    }
    os << "[L1:L12] = " << f.L12.index_in(f.L1) << '\n';
    os << "L- spans L2: " << (minus_ok ? "yes" : "no") << '\n';
    os << "diag(1,-1,1,1) L+ spans L1: " << (plus_ok ? "yes" : "no") << '\n';
  }
  return minus_ok && plus_ok ? 0 : 1;
}

int emit_series(const RunConfig& cfg, std::ostream& os, const std::string& what, const FormalQSeries& s,
                const ParamPoint& p, Json extra = Json::object()) {
  const auto rows = series_collapse(s, p);
  if (cfg.json()) {
    Json j{{"series", what}, {"params", to_json(p)}, {"budget", s.budget()}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["terms"] = to_json(rows);
    os << j.dump(2) << '\n';
  } else if (cfg.csv()) {
    os << to_csv(rows);
  } else {
    os << what << " at (" << to_string(p.a()) << ',' << to_string(p.b()) << ',' << to_string(p.c()) << ','
       << to_string(p.d()) << "), budget " << s.budget() << '\n';
    print_series_text(os, rows);
  }
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  const Lattice& l = lattice_by_name(cfg.lattice);
  return emit_series(cfg, os, "theta0(" + l.name() + ")", rep_series(l, cfg.budget), cfg.params(),
                     {{"lattice", l.name()}});
}

int cmd_isospectral(const RunConfig& cfg, std::ostream& os) {
  const Family& f = build_family();
  const ParamPoint p = cfg.params();
  const auto r1 = series_collapse(rep_series(f.L1, cfg.budget), p);
  const auto r2 = series_collapse(rep_series(f.L2, cfg.budget), p);
  const bool same = r1 == r2;
  if (cfg.json()) {
    os << Json{{"params", to_json(p)}, {"budget", cfg.budget}, {"isospectral", same}, {"L1", to_json(r1)}, {"L2", to_json(r2)}}
              .dump(2)
       << '\n';
  } else if (cfg.csv()) {
    os << "exponent,L1,L2\n";
    for (std::size_t i = 0; i < std::max(r1.size(), r2.size()); ++i) {
      const auto* x = i < r1.size() ? &r1[i] : nullptr;
      const auto* y = i < r2.size() ? &r2[i] : nullptr;
      os << to_string(x ? x->exponent : y->exponent) << ',' << (x ? to_string(x->coefficient) : "") << ','
         << (y ? to_string(y->coefficient) : "") << '\n';
    }
  } else {
    os << "L1 and L2 representation numbers up to budget " << cfg.budget << ": " << (same ? "identical" : "DIFFERENT")
       << " (" << r1.size() << " norms)\n";
  }
  return same ? 0 : 1;
}

int cmd_invariant(const RunConfig& cfg, std::ostream& os) {
  const Lattice& l = lattice_by_name(cfg.lattice);
  PairKernel k;
  if (cfg.kernel == "pairwise")
    k = PairKernel::Pairwise;
  else if (cfg.kernel == "defining")
    k = PairKernel::Defining;
  else
    throw std::invalid_argument("unknown kernel '" + cfg.kernel + "'");
  return emit_series(cfg, os, "theta11(" + l.name() + ")", theta11(l, cfg.budget, k), cfg.params(),
                     {{"lattice", l.name()}, {"kernel", to_string(k)}});
}

int cmd_delta(const RunConfig& cfg, std::ostream& os) {
  DeltaRoute route;
  if (cfg.route == "psi")
    route = DeltaRoute::FromPsiKernel;
  else if (cfg.route == "theta")
    route = DeltaRoute::FromTheta;
  else
    throw std::invalid_argument("unknown route '" + cfg.route + "'");
  const FormalQSeries d = delta_series(cfg.budget, route);
  Json symbolic = Json::array();
  for (const auto& [e, q] : d.terms()) symbolic.push_back({{"exponent_vector", to_json(e)}, {"polynomial", to_json(q)}});
  return emit_series(cfg, os, "delta", d, cfg.params(), {{"route", to_string(route)}, {"symbolic", symbolic}});
}

int cmd_certify(const RunConfig& cfg, std::ostream& os) {
  const Certificate c = certify(cfg.params(), cfg.budget);
  if (cfg.json()) {
    os << to_json(c).dump(2) << '\n';
  } else if (cfg.csv()) {
    os << "exponent_vector,polynomial,value\n";
    for (const auto& t : c.terms)
      os << '"' << to_string(t.exponent) << "\",\"" << to_string(t.polynomial) << "\"," << to_string(t.value) << '\n';
  } else {
    auto point = [](const ParamPoint& p) {
      return to_string(p.a()) + " " + to_string(p.b()) + " " + to_string(p.c()) + " " + to_string(p.d());
    };
    os << "params:        " << point(c.params) << '\n';
    os << "sorted params: " << point(c.sorted_params) << " (permutation " << c.permutation[0] << ' '
       << c.permutation[1] << ' ' << c.permutation[2] << ' ' << c.permutation[3] << ")\n";
    if (c.min_exponent) {
      os << "min exponent:  " << to_string(*c.min_exponent) << '\n';
      for (const auto& t : c.terms)
        os << "  " << to_string(t.exponent) << "  " << to_string(t.polynomial) << " = " << to_string(t.value) << '\n';
      os << "total:         " << to_string(c.total) << '\n';
    }
    os << "verdict:       " << to_string(c.verdict) << '\n';
  }
  return c.verdict == Verdict::NonIsometric ? 0 : 2;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto results = run_anchors(cfg.budget);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (cfg.json()) {
    Json list = Json::array();
    for (const auto& r : results) {
      Json j{{"anchor", r.anchor}, {"status", r.passed ? "pass" : "fail"}};
      if (!r.passed) j["witness"] = r.witness;
      list.push_back(j);
    }
    os << list.dump(2) << '\n';
  } else if (cfg.csv()) {
    os << "anchor,status\n";
    for (const auto& r : results) os << r.anchor << ',' << (r.passed ? "pass" : "fail") << '\n';
  } else {
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.anchor;
      if (!r.passed) os << "  (" << r.witness << ')';
      os << '\n';
    }
  }
  if (!all)
    for (const auto& r : results)
      if (!r.passed) {
        std::cerr << "first failing anchor: " << r.anchor << '\n';
        break;
      }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Isospectral lattice pairs in dimension 4: construction, invariants and non-isometry certificates"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--params", cfg.params_text, "Parameters a b c d as integers or n/d rationals")->expected(4);
  app.add_option("--budget", cfg.budget, "Truncation bound on the component sum of phi")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");

  auto* codes = app.add_subcommand("codes", "Self-dual ternary codes")->fallthrough();
  codes->require_subcommand(1);
  codes->add_subcommand("list", "List the eight self-dual codes and their K4 orbits")->fallthrough();
  codes->add_subcommand("graph", "Intersection graph of the self-dual codes")->fallthrough();
  auto* pair = app.add_subcommand("pair", "Lattice pair construction")->fallthrough();
  pair->require_subcommand(1);
  pair->add_subcommand("show", "Generator matrices, Hermite forms and indices")->fallthrough();
  auto* spectrum = app.add_subcommand("spectrum", "Representation numbers of a lattice")->fallthrough();
  spectrum->add_option("--lattice", cfg.lattice, "L, L1, L2, M or L12");
  app.add_subcommand("isospectral", "Compare the spectra of L1 and L2")->fallthrough();
  auto* invariant = app.add_subcommand("invariant", "Theta_{1,1} of a lattice")->fallthrough();
  invariant->add_option("--lattice", cfg.lattice, "L, L1, L2, M or L12");
  invariant->add_option("--kernel", cfg.kernel, "pairwise or defining");
  auto* delta = app.add_subcommand("delta", "Discrepancy series of the pair")->fallthrough();
  delta->add_option("--route", cfg.route, "psi or theta");
  app.add_subcommand("certify", "Non-isometry certificate")->fallthrough();
  app.add_subcommand("verify", "Run every built-in consistency check")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::ostringstream buffer;
  int status = 1;
  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "codes")
      status = sub->got_subcommand("list") ? cmd_codes_list(cfg, buffer) : cmd_codes_graph(cfg, buffer);
    else if (name == "pair")
      status = cmd_pair_show(cfg, buffer);
    else if (name == "spectrum")
      status = cmd_spectrum(cfg, buffer);
    else if (name == "isospectral")
      status = cmd_isospectral(cfg, buffer);
    else if (name == "invariant")
      status = cmd_invariant(cfg, buffer);
    else if (name == "delta")
      status = cmd_delta(cfg, buffer);
    else if (name == "certify")
      status = cmd_certify(cfg, buffer);
    else if (name == "verify")
      status = cmd_verify(cfg, buffer);
  } catch (const std::exception& e) {
    if (cfg.json())
      std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << cfg.out << '\n';
      return 1;
    }
    f << buffer.str();
  }
  return status;
}
