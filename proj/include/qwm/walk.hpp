#pragma once

#include <complex>
#include <vector>

#include "qwm/graph.hpp"

// Exact continuous-time evolution exp(-itA)|psi(0)>: an FWHT-based
// spectral path for circulant-reducible specs, a closed form for
// complete graphs, tensor composition for products, and a dense
// eigendecomposition oracle.

namespace qwm {

using cd = std::complex<double>;

struct AmplitudeVector {
  std::vector<cd> amp;
  double time = 0.0;

  double norm_sq() const;
};

struct InitialState {
  std::vector<std::pair<std::size_t, cd>> terms;  // (vertex, amplitude), unit norm

  static InitialState point(std::size_t vertex);
  static InitialState superposition(std::size_t v0, std::size_t v1);
  static InitialState from_amplitudes(const std::vector<cd>& amp);

  std::vector<cd> dense(std::size_t count) const;
};

/// Spectral evolution via FWHT; requires a circulant-reducible spec.
AmplitudeVector circulant_walk(const GraphSpec& spec, const InitialState& init, double t);

/// Closed-form K_q evolution (spectrum {q-1, -1 x (q-1)}), scale s on the adjacency.
AmplitudeVector complete_graph_walk(int q, const InitialState& init, double t, double s = 1.0);
AmplitudeVector complete_graph_walk(int q, double t);  // point start on vertex 0

/// Tensor product of factor walks evolved to a common time, factor 0 in
/// the least significant mixed-radix digit.
AmplitudeVector product_walk(const std::vector<AmplitudeVector>& factors);

/// Full symmetric eigendecomposition reference path.
AmplitudeVector dense_walk_oracle(const Eigen::MatrixXd& adj, const InitialState& init, double t);

/// Dispatcher: fastest applicable exact path for the spec.
AmplitudeVector walk(const GraphSpec& spec, const InitialState& init, double t,
                     std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace qwm
