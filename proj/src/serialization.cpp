#include "tetraising/serialization.hpp"

#include <charconv>

namespace tetraising {

ExactRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-')
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  const BigInt d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  ExactRational r(BigInt(num), d);
  r.canonicalize();
  return r;
}

ExactRational pow2(int k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? ExactRational(BigInt(1), p) : ExactRational(p);
}

Json rational_json(const ExactRational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.a, e.b});
  return Json{{"name", g.name()}, {"vertex_count", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    return Graph(j.at("vertex_count").get<int>(), std::move(edges), j.value("name", std::string()));
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json loop_polynomial_json(const LoopPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.cycles()) out.push_back(c.edges);
  return out;
}

Json weight_json(const TetraSpins& s, const ExactRational& weight) {
  const auto t = s.twice_values();
  return Json{{"spins", std::vector<int>(t.begin(), t.end())}, {"weight", rational_json(weight)}};
}

Json zero_set_json(const ZeroSet& z, const std::vector<Complex>& lengths) {
  Json l = Json::array();
  for (const auto& v : lengths) l.push_back(v.imag() == 0.0 ? Json(v.real()) : complex_json(v));
  Json y = Json::array();
  for (const auto& v : z.y.values()) y.push_back(complex_json(v));
  Json out{{"provenance", provenance_name(z.provenance)},
           {"graph", builtin_name(z.graph)},
           {"lengths", l}};
  if (z.root != 0) out["branch"] = z.root > 0 ? "+" : "-";
  out["epsilon"] = z.epsilon;
  out["Y"] = y;
  out["residual"] = verify_zero(z);
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace tetraising
