#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "tetraising/asymptotics.hpp"
#include "tetraising/geometry.hpp"
#include "tetraising/ising.hpp"
#include "tetraising/recoupling.hpp"
#include "tetraising/serialization.hpp"

using namespace tetraising;

namespace {

struct Common {
  bool csv = false;
  std::uint64_t seed = 1;
};

// "p" or "p/q" with no decimal point or comma
std::optional<ExactRational> try_rational(const std::string& s) {
  if (s.find_first_of(".,eE") != std::string::npos) return std::nullopt;
  try {
    return parse_rational(s);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

// "re", "re,im" or a rational
Complex parse_complex(const std::string& s) {
  if (auto r = try_rational(s)) return to_double(*r);
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw InvalidArgument("");
      return re;
    }
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw InvalidArgument("");
    const double im = std::stod(b, &used);
    if (used != b.size()) throw InvalidArgument("");
    return {re, im};
  } catch (const std::exception&) {
    throw InvalidArgument("malformed number '" + s + "'");
  }
}

std::optional<ExactCouplings> all_rational(const std::vector<std::string>& v) {
  std::vector<ExactRational> out;
  for (const auto& s : v) {
    auto r = try_rational(s);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return ExactCouplings(out);
}

Couplings all_complex(const std::vector<std::string>& v) {
  std::vector<Complex> out;
  for (const auto& s : v) out.push_back(parse_complex(s));
  return Couplings(out);
}

Graph load_graph(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidArgument("cannot read " + file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw InvalidArgument(std::string("bad graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return builtin_graph(name);
}

std::string complex_csv(const Complex& z) { return format_double(z.real()) + "," + format_double(z.imag()); }

void emit(const Common& c, const Json& j, const std::string& header, const std::vector<std::string>& rows) {
  if (c.csv) {
    std::cout << header << '\n';
    for (const auto& r : rows) std::cout << r << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

// couplings given on the command line, or drawn from the seed
std::vector<std::string> couplings_or_random(const std::vector<std::string>& given, int count, std::uint64_t seed,
                                             bool positive) {
  if (!given.empty()) return given;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(positive ? 1 : -9, 9), den(1, 9);
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < count) {
    const ExactRational r = make_rational(num(rng), den(rng));
    if (!positive && (r == 1 || r == -1)) continue;
    out.push_back(r.get_str());
  }
  return out;
}

void cmd_sixj(const Common& c, const std::array<int, 6>& t) {
  const TetraSpins s(t);
  const ExactRational w = racah_weight(s);
  const double value = is_admissible(s) ? sixj(s) : 0.0;
  Json j = weight_json(s, w);
  j["sixj"] = value;
  std::vector<std::string> fields;
  for (int x : t) fields.push_back(std::to_string(x));
  fields.push_back(w.get_num().get_str());
  fields.push_back(w.get_den().get_str());
  fields.push_back(format_double(value));
  emit(c, j, "t1,t2,t3,t4,t5,t6,weight_num,weight_den,sixj", {csv_row(fields)});
}

void cmd_loop_poly(const Common& c, const Graph& g, const std::vector<std::string>& eval) {
  const LoopPolynomial p = enumerate_cycles(g);
  Json j;
  j["graph"] = graph_json(g);
  j["cycles"] = loop_polynomial_json(p);
  std::vector<std::string> rows;
  for (const auto& cyc : p.cycles()) {
    std::string r;
    for (std::size_t i = 0; i < cyc.edges.size(); ++i) r += (i ? " " : "") + std::to_string(cyc.edges[i]);
    rows.push_back(r);
  }
  std::string header = "cycle";
  if (!eval.empty()) {
    if (auto exact = all_rational(eval)) {
      const ExactRational v = p.evaluate(*exact);
      j["value"] = rational_json(v);
      j["exact"] = true;
      rows = {v.get_str()};
      header = "value";
    } else {
      const Complex v = p.evaluate(all_complex(eval));
      j["value"] = complex_json(v);
      j["exact"] = false;
      rows = {complex_csv(v)};
      header = "re,im";
    }
  }
  emit(c, j, header, rows);
}

void cmd_ising(const Common& c, const Graph& g, const std::vector<std::string>& couplings) {
  const Complex z = ising_partition(g, all_complex(couplings));
  Json j;
  j["graph"] = g.name();
  j["Z"] = complex_json(z);
  emit(c, j, "re,im", {complex_csv(z)});
}

struct CheckArgs {
  std::string identity;
  std::string graph = "TETRA";
  std::string graph_file;
  std::vector<std::string> couplings;
  std::string direction = "forward";
};

void cmd_check(const Common& c, const CheckArgs& a) {
  const Graph g = load_graph(a.graph, a.graph_file);
  Json j;
  j["identity"] = a.identity;
  bool exact = false;
  std::string residual_text;
  auto set_exact = [&](const ExactRational& r) {
    exact = true;
    j["residual"] = rational_json(r);
    residual_text = r.get_str();
  };
  auto set_float = [&](const Complex& r) {
    j["residual"] = complex_json(r);
    residual_text = complex_csv(r);
  };

  const bool hyperbolic = a.identity == "hightemp" || a.identity == "lowtemp";
  const bool on_tetra = a.identity == "selfdual" || a.identity == "pachner" || a.identity == "scissor";
  const int edges = on_tetra ? 6 : g.edge_count();
  const auto values = couplings_or_random(a.couplings, edges, c.seed, hyperbolic);
  j["couplings"] = values;

  if (hyperbolic) {
    // rationals are exp(y_e) for the exact path; complex entries are y_e
    if (const auto w = all_rational(values)) {
      std::vector<HyperbolicPair> pairs;
      for (const auto& x : w->values()) pairs.push_back(HyperbolicPair::from_exp(x));
      const HyperbolicCouplings y(pairs);
      set_exact(a.identity == "hightemp" ? check_high_temp(g, y) : check_low_temp(g, y));
    } else {
      const Couplings y = all_complex(values);
      set_float(a.identity == "hightemp" ? check_high_temp(g, y) : check_low_temp(g, y));
    }
  } else if (a.identity == "westbury" || a.identity == "duality" || a.identity == "selfdual") {
    DualityDirection dir = DualityDirection::Forward;
    if (a.direction == "backward")
      dir = DualityDirection::Backward;
    else if (a.direction != "forward")
      throw InvalidArgument("direction must be forward or backward");
    if (auto exact_y = all_rational(values)) {
      if (a.identity == "westbury") set_exact(check_westbury(g, *exact_y));
      if (a.identity == "duality") set_exact(check_duality_on_p(g, *exact_y, dir));
      if (a.identity == "selfdual") set_exact(self_duality_residual(*exact_y));
    } else {
      const Couplings y = all_complex(values);
      if (a.identity == "westbury") set_float(check_westbury(g, y));
      if (a.identity == "duality") set_float(check_duality_on_p(g, y, dir));
      if (a.identity == "selfdual") set_float(self_duality_residual(y));
    }
  } else if (a.identity == "pachner" || a.identity == "scissor") {
    const Couplings y = all_complex(values);
    const LoopPolynomial pt = enumerate_cycles(builtin_graph(BuiltinGraph::Tetra));
    if (a.identity == "pachner") {
      const auto r = pachner_reduce(y);
      set_float(pt.evaluate(y) - r.factor * enumerate_cycles(builtin_graph(BuiltinGraph::Theta)).evaluate(r.reduced));
      Json reduced = Json::array();
      for (const auto& v : r.reduced.values()) reduced.push_back(complex_json(v));
      j["factor"] = complex_json(r.factor);
      j["reduced"] = reduced;
    } else {
      const Couplings z = scissor_transform(y);
      set_float(pt.evaluate(y) - pt.evaluate(z));
      Json image = Json::array();
      for (const auto& v : z.values()) image.push_back(complex_json(v));
      j["image"] = image;
    }
  } else {
    throw InvalidArgument("unknown identity '" + a.identity + "'");
  }
  j["exact"] = exact;
  emit(c, j, exact ? "identity,exact,residual" : "identity,exact,residual_re,residual_im",
       {csv_row({a.identity, exact ? "true" : "false", residual_text})});
}

struct ZeroArgs {
  std::string mode;
  std::vector<std::string> lengths;
  std::vector<double> points;
  int eps = 1;
  std::string branch = "+";
};

void cmd_zeros(const Common& c, const ZeroArgs& a) {
  ZeroSet z;
  std::vector<Complex> lengths;
  for (const auto& s : a.lengths) lengths.push_back(parse_complex(s));
  if (a.mode == "geometric" || a.mode == "pregeometric") {
    if (lengths.size() != 6) throw InvalidArgument("tetrahedron zeros need 6 lengths");
    TetraLengths t;
    std::copy(lengths.begin(), lengths.end(), t.l.begin());
    if (a.mode == "geometric") {
      z = geometric_zeros(t, a.eps);
    } else {
      if (a.branch != "+" && a.branch != "-") throw InvalidArgument("branch must be + or -");
      z = pregeometric_zeros(t, a.branch == "+" ? 1 : -1);
    }
  } else if (a.mode == "triangle") {
    if (lengths.size() != 3) throw InvalidArgument("triangle zeros need 3 lengths");
    z = triangle_zeros({{lengths[0], lengths[1], lengths[2]}}, a.eps);
  } else if (a.mode == "cevian") {
    if (a.points.size() != 8) throw InvalidArgument("cevian zeros need --points ax ay bx by cx cy ox oy");
    const auto& p = a.points;
    z = cevian_zeros({p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}, {p[6], p[7]});
    lengths.clear();
  } else {
    throw InvalidArgument("unknown mode '" + a.mode + "'");
  }
  const Json j = zero_set_json(z, lengths);
  std::vector<std::string> rows;
  const double residual = verify_zero(z);
  for (int e = 1; e <= static_cast<int>(z.y.size()); ++e)
    rows.push_back(csv_row({std::string(provenance_name(z.provenance)), std::to_string(z.epsilon), std::to_string(e),
                            complex_csv(z.y.at(e)), format_double(residual)}));
  emit(c, j, "provenance,epsilon,edge,re,im,residual", rows);
}

void cmd_asymptotics(const Common& c, const std::array<int, 6>& base, int lo, int hi, double shift) {
  const auto samples = asymptotic_sweep(TetraSpins(base), lo, hi, shift);
  Json j;
  j["base"] = base;
  j["shift"] = shift;
  Json arr = Json::array();
  std::vector<std::string> rows;
  for (const auto& s : samples) {
    arr.push_back({{"scale", s.scale},
                   {"spins", s.spins.twice_values()},
                   {"exact", s.exact},
                   {"estimate", s.estimate},
                   {"envelope", s.envelope},
                   {"abs_err", s.abs_err},
                   {"rel_envelope_err", s.rel_envelope_err}});
    rows.push_back(csv_row({std::to_string(s.scale), format_double(s.exact), format_double(s.estimate),
                            format_double(s.envelope), format_double(s.abs_err), format_double(s.rel_envelope_err)}));
  }
  j["samples"] = arr;
  j["relative_rms_error"] = samples.empty() ? 0.0 : relative_rms_error(samples);
  emit(c, j, "scale,exact,estimate,envelope,abs_err,rel_envelope_err", rows);
}

void cmd_figurate(const Common& c, int pmax, int qmax) {
  if (pmax < 1 || qmax < 1) throw InvalidArgument("pmax and qmax must be positive");
  Json arr = Json::array();
  std::vector<std::string> rows;
  for (int p = 1; p <= pmax; ++p) {
    const auto row = figurate_row(p, qmax);
    for (int q = 1; q <= qmax; ++q) {
      const std::string v = row[static_cast<std::size_t>(q - 1)].get_str();
      arr.push_back({{"p", p}, {"q", q}, {"T", v}});
      rows.push_back(csv_row({std::to_string(p), std::to_string(q), v}));
    }
  }
  emit(c, arr, "p,q,T", rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 6j symbols, Ising loop polynomials and their Fisher zeros"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--csv", common.csv, "Emit CSV instead of JSON");
  app.add_option("--seed", common.seed, "Seed for randomly drawn couplings");

  std::array<int, 6> spins{};
  auto* sixj_cmd = app.add_subcommand("sixj", "Exact Racah weight and 6j value");
  sixj_cmd->add_option("--spins", spins, "Six twice-spins 2j_1 .. 2j_6")->required();

  std::string graph = "TETRA", graph_file;
  std::vector<std::string> eval;
  auto* poly_cmd = app.add_subcommand("loop-poly", "Even subgraphs of a graph, optionally evaluated");
  poly_cmd->add_option("--graph", graph, "THETA, TRIANGLE, TETRA or TETRA_DUAL");
  poly_cmd->add_option("--graph-file", graph_file, "Graph JSON");
  poly_cmd->add_option("--eval", eval, "Couplings: rationals p/q (exact) or re,im");

  std::vector<std::string> couplings;
  auto* ising_cmd = app.add_subcommand("ising", "Ising partition function by spin enumeration");
  ising_cmd->add_option("--graph", graph, "Built-in graph name");
  ising_cmd->add_option("--graph-file", graph_file, "Graph JSON");
  ising_cmd->add_option("--couplings", couplings, "Couplings y_e as re or re,im")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Residual of an identity");
  check_cmd->add_option("--identity", check.identity, "westbury|hightemp|lowtemp|selfdual|duality|pachner|scissor")
      ->required()
      ->check(CLI::IsMember({"westbury", "hightemp", "lowtemp", "selfdual", "duality", "pachner", "scissor"}));
  check_cmd->add_option("--graph", check.graph, "Built-in graph name");
  check_cmd->add_option("--graph-file", check.graph_file, "Graph JSON");
  check_cmd->add_option("--couplings", check.couplings, "Rationals for the exact path, re,im otherwise");
  check_cmd->add_option("--direction", check.direction, "forward or backward (duality only)");

  ZeroArgs zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "Fisher zeros from lengths or points");
  zeros_cmd->add_option("--mode", zeros.mode, "geometric|pregeometric|triangle|cevian")
      ->required()
      ->check(CLI::IsMember({"geometric", "pregeometric", "triangle", "cevian"}));
  zeros_cmd->add_option("--lengths", zeros.lengths, "Edge lengths, re or re,im");
  zeros_cmd->add_option("--points", zeros.points, "Cevian mode: ax ay bx by cx cy ox oy");
  zeros_cmd->add_option("--eps", zeros.eps, "Branch sign +1 or -1");
  zeros_cmd->add_option("--branch", zeros.branch, "Pre-geometric root: + or -");

  std::vector<int> sweep;
  std::array<int, 6> base{2, 2, 2, 2, 2, 2};
  double shift = 0.5;
  auto* asym_cmd = app.add_subcommand("asymptotics", "Exact 6j against the Ponzano-Regge estimate");
  asym_cmd->add_option("--sweep", sweep, "min and max scale")->required()->expected(2);
  asym_cmd->add_option("--base", base, "Base twice-spins, scaled along the sweep");
  asym_cmd->add_option("--shift", shift, "Length shift j + shift");

  int pmax = 10, qmax = 10;
  auto* fig_cmd = app.add_subcommand("figurate", "Table of figurate numbers T(p, q)");
  fig_cmd->add_option("--pmax", pmax)->required();
  fig_cmd->add_option("--qmax", qmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sixj_cmd) cmd_sixj(common, spins);
    if (*poly_cmd) cmd_loop_poly(common, load_graph(graph, graph_file), eval);
    if (*ising_cmd) cmd_ising(common, load_graph(graph, graph_file), couplings);
    if (*check_cmd) cmd_check(common, check);
    if (*zeros_cmd) cmd_zeros(common, zeros);
    if (*asym_cmd) cmd_asymptotics(common, base, sweep[0], sweep[1], shift);
    if (*fig_cmd) cmd_figurate(common, pmax, qmax);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
