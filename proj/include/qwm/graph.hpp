#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <ostream>
#include <variant>
#include <vector>

#include "qwm/z2n.hpp"

// Graph families: Z_2^n-circulants, bunkbed graphs, complete graphs and
// Cartesian products, plus dense adjacency export for the oracle path.

namespace qwm {

enum class ScalingKind { Unnormalized, DegreeNormalized, ExplicitFactor };

struct Scaling {
  ScalingKind kind = ScalingKind::Unnormalized;
  double factor = 1.0;  // used only for ExplicitFactor

  static Scaling unnormalized() { return {ScalingKind::Unnormalized, 1.0}; }
  static Scaling degree_normalized() { return {ScalingKind::DegreeNormalized, 1.0}; }
  static Scaling explicit_factor(double s) { return {ScalingKind::ExplicitFactor, s}; }
};

struct GraphSpec;

/// Adjacency A[s][t] = f(s ^ t); f(0) = 1 encodes self-loops.
struct CirculantSpec {
  int n;
  BooleanFunctionZ2 f;
};

/// Two copies of Q_n joined per the connection circulant:
/// I (x) Q_n + X (x) A_f.  The copy bit is the vertex's bit n.
struct BunkbedSpec {
  int n;
  BooleanFunctionZ2 connection;
};

struct CompleteSpec {
  int q;
};

/// Cartesian product; vertex index is mixed-radix with factor 0 in the
/// least significant digit.
struct ProductSpec {
  std::vector<GraphSpec> factors;
};

struct GraphSpec {
  std::variant<CirculantSpec, BunkbedSpec, CompleteSpec, ProductSpec> family;
  Scaling scaling = Scaling::unnormalized();
};

GraphSpec hypercube_spec(int n);

/// Q_n plus the matching a <-> a ^ eta, scaled by 1/(n+1).
/// eta = 0 is allowed (self-loops); eta = e_j is rejected.
GraphSpec eta_cube_spec(int n, GroupElement eta);

GraphSpec bunkbed_spec(int n, BooleanFunctionZ2 connection);
GraphSpec complete_spec(int q);
GraphSpec hamming_spec(int n, int q);

std::size_t vertex_count(const GraphSpec& spec);

/// Regularity (row sum of the unnormalized adjacency).
std::size_t degree(const GraphSpec& spec);

/// The numeric factor applied to the unnormalized adjacency.
double scale_factor(const GraphSpec& spec);

/// Canonical circulant form, when one exists.  Bunkbeds always reduce
/// (dimension n+1); products of reducible factors reduce to the
/// concatenated-coordinate circulant; K_2 reduces to Circulant(1, {1}).
std::optional<CirculantSpec> reduce_to_circulant(const GraphSpec& spec);

inline constexpr std::size_t kDefaultOracleCap = 4096;

/// Dense symmetric adjacency including the scaling factor.
Eigen::MatrixXd dense_adjacency(const GraphSpec& spec, std::size_t cap = kDefaultOracleCap);

/// CSV export: a line with N, then N comma-separated rows.
void write_adjacency_csv(const Eigen::MatrixXd& adj, std::ostream& out);

}  // namespace qwm
