#include "qwm/walk.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qwm {

double AmplitudeVector::norm_sq() const {
  double s = 0.0;
  for (const cd& a : amp) s += std::norm(a);
  return s;
}

InitialState InitialState::point(std::size_t vertex) { return {{{vertex, cd{1.0, 0.0}}}}; }

InitialState InitialState::superposition(std::size_t v0, std::size_t v1) {
  const double r = 1.0 / std::sqrt(2.0);
  return {{{v0, cd{r, 0.0}}, {v1, cd{r, 0.0}}}};
}

InitialState InitialState::from_amplitudes(const std::vector<cd>& amp) {
  InitialState init;
  for (std::size_t v = 0; v < amp.size(); ++v)
    if (amp[v] != cd{0.0, 0.0}) init.terms.push_back({v, amp[v]});
  return init;
}

std::vector<cd> InitialState::dense(std::size_t count) const {
  std::vector<cd> v(count, cd{0.0, 0.0});
  double norm = 0.0;
  for (const auto& [vertex, a] : terms) {
    if (vertex >= count) throw std::invalid_argument("InitialState: vertex out of range");
    v[vertex] += a;
  }
  for (const cd& a : v) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-9) throw std::invalid_argument("InitialState: not unit norm");
  return v;
}

AmplitudeVector circulant_walk(const GraphSpec& spec, const InitialState& init, double t) {
  const auto circ = reduce_to_circulant(spec);
  if (!circ) throw std::invalid_argument("circulant_walk: spec is not circulant-reducible");
  const std::size_t count = std::size_t{1} << circ->n;
  const double s = scale_factor(spec);
  const auto lambda = integer_spectrum(circ->f);

  std::vector<cd> v = init.dense(count);
  fwht_inplace(v);
  for (std::size_t a = 0; a < count; ++a) {
    const double theta = -t * s * static_cast<double>(lambda[a]);
    v[a] *= cd{std::cos(theta), std::sin(theta)};
  }
  fwht_inplace(v);
  const double inv = 1.0 / static_cast<double>(count);
  for (cd& x : v) x *= inv;
  return {std::move(v), t};
}

AmplitudeVector complete_graph_walk(int q, const InitialState& init, double t, double s) {
  if (q < 1) throw std::invalid_argument("complete_graph_walk: q must be >= 1");
  // exp(-its(J - I)) = e^{its} on the mean-zero part, e^{-its(q-1)} on the mean.
  std::vector<cd> v = init.dense(static_cast<std::size_t>(q));
  cd mean{0.0, 0.0};
  for (const cd& a : v) mean += a;
  mean /= static_cast<double>(q);
  const cd rot_perp{std::cos(t * s), std::sin(t * s)};
  const cd rot_mean{std::cos(t * s * (q - 1)), -std::sin(t * s * (q - 1))};
  for (cd& a : v) a = rot_perp * (a - mean) + rot_mean * mean;
  return {std::move(v), t};
}

AmplitudeVector complete_graph_walk(int q, double t) {
  return complete_graph_walk(q, InitialState::point(0), t, 1.0);
}

AmplitudeVector product_walk(const std::vector<AmplitudeVector>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_walk: no factors");
  for (const auto& f : factors)
    if (std::abs(f.time - factors[0].time) > 1e-12)
      throw std::invalid_argument("product_walk: mismatched factor times");
  std::vector<cd> acc{cd{1.0, 0.0}};
  for (const auto& f : factors) {
    std::vector<cd> next(acc.size() * f.amp.size());
    for (std::size_t j = 0; j < f.amp.size(); ++j)
      for (std::size_t i = 0; i < acc.size(); ++i) next[j * acc.size() + i] = f.amp[j] * acc[i];
    acc = std::move(next);
  }
  return {std::move(acc), factors[0].time};
}

AmplitudeVector dense_walk_oracle(const Eigen::MatrixXd& adj, const InitialState& init, double t) {
  const auto count = static_cast<std::size_t>(adj.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense_walk_oracle: eigensolver failed");

  const std::vector<cd> v0 = init.dense(count);
  Eigen::VectorXcd psi(adj.rows());
  for (std::size_t i = 0; i < count; ++i) psi(static_cast<Eigen::Index>(i)) = v0[i];

  Eigen::VectorXcd coeff = solver.eigenvectors().transpose() * psi;
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    const double theta = -t * solver.eigenvalues()(k);
    coeff(k) *= cd{std::cos(theta), std::sin(theta)};
  }
  psi = solver.eigenvectors() * coeff;

  std::vector<cd> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = psi(static_cast<Eigen::Index>(i));
  return {std::move(out), t};
}

namespace {

// Mixed-radix digits of a product start vertex, factor 0 least significant.
std::vector<std::size_t> product_digits(const ProductSpec& prod, std::size_t vertex) {
  std::vector<std::size_t> digits;
  for (const auto& f : prod.factors) {
    const std::size_t ni = vertex_count(f);
    digits.push_back(vertex % ni);
    vertex /= ni;
  }
  return digits;
}

}  // namespace

AmplitudeVector walk(const GraphSpec& spec, const InitialState& init, double t,
                     std::size_t oracle_cap) {
  if (reduce_to_circulant(spec)) return circulant_walk(spec, init, t);
  const double s = scale_factor(spec);
  if (const auto* complete = std::get_if<CompleteSpec>(&spec.family))
    return complete_graph_walk(complete->q, init, t, s);
  if (const auto* prod = std::get_if<ProductSpec>(&spec.family)) {
    if (init.terms.size() == 1) {
      // exp(-itsA) factors over the Cartesian product at effective time s*t.
      const auto& [vertex, phase] = init.terms[0];
      const auto digits = product_digits(*prod, vertex);
      std::vector<AmplitudeVector> parts;
      for (std::size_t i = 0; i < prod->factors.size(); ++i)
        parts.push_back(walk(prod->factors[i], InitialState::point(digits[i]), s * t, oracle_cap));
      auto result = product_walk(parts);
      for (cd& a : result.amp) a *= phase;
      result.time = t;
      return result;
    }
  }
  return dense_walk_oracle(dense_adjacency(spec, oracle_cap), init, t);
}

}  // namespace qwm
