#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tetraising/geometry.hpp"
#include "tetraising/graph.hpp"
#include "tetraising/recoupling.hpp"

namespace tetraising {

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."}
Json rational_json(const ExactRational& r);
/// [re, im]
Json complex_json(const Complex& z);

/// {name, vertex_count, edges: [[id, a, b], ...]}
Json graph_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Sorted edge-id arrays, in the polynomial's deterministic order.
Json loop_polynomial_json(const LoopPolynomial& p);

/// {"spins": [twice values], "weight": rational}
Json weight_json(const TetraSpins& s, const ExactRational& weight);

/// {lengths, branch, epsilon, Y, residual}; lengths may be empty.
Json zero_set_json(const ZeroSet& z, const std::vector<Complex>& lengths);

/// Joins already formatted fields with commas.
std::string csv_row(const std::vector<std::string>& fields);
/// Shortest round-trip decimal form of x.
std::string format_double(double x);

}  // namespace tetraising
