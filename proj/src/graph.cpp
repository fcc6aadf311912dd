#include "qwm/graph.hpp"

#include <cmath>
#include <numeric>

namespace qwm {

GraphSpec hypercube_spec(int n) {
  if (n < 1) throw std::invalid_argument("hypercube_spec: n must be >= 1");
  std::vector<bits_t> support;
  for (int j = 0; j < n; ++j) support.push_back(bits_t{1} << j);
  return {CirculantSpec{n, BooleanFunctionZ2(n, std::move(support))}, Scaling::unnormalized()};
}

GraphSpec eta_cube_spec(int n, GroupElement eta) {
  if (n < 1) throw std::invalid_argument("eta_cube_spec: n must be >= 1");
  if (eta.n != n) throw std::invalid_argument("eta_cube_spec: eta dimension mismatch");
  if (hamming_weight(eta) == 1)
    throw std::invalid_argument("eta_cube_spec: eta = e_j duplicates a hypercube edge");
  std::vector<bits_t> support;
  for (int j = 0; j < n; ++j) support.push_back(bits_t{1} << j);
  support.push_back(eta.bits);  // eta = 0 becomes a self-loop on every vertex
  return {CirculantSpec{n, BooleanFunctionZ2(n, std::move(support))},
          Scaling::explicit_factor(1.0 / (n + 1))};
}

GraphSpec bunkbed_spec(int n, BooleanFunctionZ2 connection) {
  if (n < 1) throw std::invalid_argument("bunkbed_spec: n must be >= 1");
  if (connection.dimension() != n)
    throw std::invalid_argument("bunkbed_spec: connection dimension mismatch");
  return {BunkbedSpec{n, std::move(connection)}, Scaling::unnormalized()};
}

GraphSpec complete_spec(int q) {
  if (q < 1) throw std::invalid_argument("complete_spec: q must be >= 1");
  return {CompleteSpec{q}, Scaling::unnormalized()};
}

GraphSpec hamming_spec(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("hamming_spec: need n >= 1, q >= 2");
  ProductSpec prod;
  for (int i = 0; i < n; ++i) prod.factors.push_back(complete_spec(q));
  return {std::move(prod), Scaling::unnormalized()};
}

std::size_t vertex_count(const GraphSpec& spec) {
  return std::visit(
      [](const auto& fam) -> std::size_t {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CirculantSpec>) {
          return std::size_t{1} << fam.n;
        } else if constexpr (std::is_same_v<T, BunkbedSpec>) {
          return std::size_t{1} << (fam.n + 1);
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          return static_cast<std::size_t>(fam.q);
        } else {
          std::size_t count = 1;
          for (const auto& f : fam.factors) count *= vertex_count(f);
          return count;
        }
      },
      spec.family);
}

std::size_t degree(const GraphSpec& spec) {
  return std::visit(
      [](const auto& fam) -> std::size_t {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CirculantSpec>) {
          return fam.f.support().size();
        } else if constexpr (std::is_same_v<T, BunkbedSpec>) {
          return static_cast<std::size_t>(fam.n) + fam.connection.support().size();
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          return static_cast<std::size_t>(fam.q - 1);
        } else {
          std::size_t sum = 0;
          for (const auto& f : fam.factors) sum += degree(f);
          return sum;
        }
      },
      spec.family);
}

double scale_factor(const GraphSpec& spec) {
  switch (spec.scaling.kind) {
    case ScalingKind::Unnormalized:
      return 1.0;
    case ScalingKind::DegreeNormalized:
      return 1.0 / static_cast<double>(degree(spec));
    case ScalingKind::ExplicitFactor:
      return spec.scaling.factor;
  }
  return 1.0;
}

std::optional<CirculantSpec> reduce_to_circulant(const GraphSpec& spec) {
  return std::visit(
      [&](const auto& fam) -> std::optional<CirculantSpec> {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CirculantSpec>) {
          return fam;
        } else if constexpr (std::is_same_v<T, BunkbedSpec>) {
          // F(a1.x) = [a1 = 0][|x| = 1] + [a1 = 1] f(x), copy bit at position n
          std::vector<bits_t> support;
          for (int j = 0; j < fam.n; ++j) support.push_back(bits_t{1} << j);
          for (bits_t x : fam.connection.support())
            support.push_back((bits_t{1} << fam.n) | x);
          return CirculantSpec{fam.n + 1, BooleanFunctionZ2(fam.n + 1, std::move(support))};
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          if (fam.q == 1) return CirculantSpec{0, BooleanFunctionZ2(0, {})};
          if (fam.q == 2) return CirculantSpec{1, BooleanFunctionZ2(1, {1})};
          return std::nullopt;
        } else {
          std::vector<bits_t> support;
          int total_dim = 0;
          int loops = 0;
          for (const auto& f : fam.factors) {
            if (scale_factor(f) != 1.0) return std::nullopt;
            auto circ = reduce_to_circulant(f);
            if (!circ) return std::nullopt;
            for (bits_t x : circ->f.support()) {
              if (x == 0)
                ++loops;
              else
                support.push_back(x << total_dim);
            }
            total_dim += circ->n;
          }
          if (loops > 1) return std::nullopt;  // summed loops are no longer {0,1}-valued
          if (loops == 1) support.push_back(0);
          return CirculantSpec{total_dim, BooleanFunctionZ2(total_dim, std::move(support))};
        }
      },
      spec.family);
}

namespace {

Eigen::MatrixXd dense_unscaled(const GraphSpec& spec, std::size_t cap) {
  const std::size_t count = vertex_count(spec);
  if (count > cap) throw std::invalid_argument("dense_adjacency: vertex count exceeds cap");
  const auto n_int = static_cast<Eigen::Index>(count);
  return std::visit(
      [&](const auto& fam) -> Eigen::MatrixXd {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, CirculantSpec>) {
          Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_int, n_int);
          for (Eigen::Index s = 0; s < n_int; ++s)
            for (Eigen::Index t = 0; t < n_int; ++t)
              if (fam.f(static_cast<bits_t>(s) ^ static_cast<bits_t>(t))) a(s, t) = 1.0;
          return a;
        } else if constexpr (std::is_same_v<T, BunkbedSpec>) {
          // Block form [Q_n A_f; A_f Q_n]; copy bit = vertex bit n.
          const std::size_t half = std::size_t{1} << fam.n;
          Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_int, n_int);
          for (std::size_t x = 0; x < half; ++x)
            for (std::size_t y = 0; y < half; ++y) {
              const bits_t d = static_cast<bits_t>(x) ^ static_cast<bits_t>(y);
              if (hamming_weight(d) == 1) {
                a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = 1.0;
                a(static_cast<Eigen::Index>(half + x), static_cast<Eigen::Index>(half + y)) = 1.0;
              }
              if (fam.connection(d)) {
                a(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(half + y)) = 1.0;
                a(static_cast<Eigen::Index>(half + x), static_cast<Eigen::Index>(y)) = 1.0;
              }
            }
          return a;
        } else if constexpr (std::is_same_v<T, CompleteSpec>) {
          return Eigen::MatrixXd::Ones(n_int, n_int) - Eigen::MatrixXd::Identity(n_int, n_int);
        } else {
          // sum_i I (x) ... (x) A_i (x) ... (x) I, factor 0 least significant
          Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_int, n_int);
          std::size_t stride = 1;
          for (const auto& f : fam.factors) {
            const std::size_t ni = vertex_count(f);
            const Eigen::MatrixXd ai = dense_adjacency(f, cap);
            const std::size_t repeat = count / (ni * stride);
            for (std::size_t r = 0; r < repeat; ++r)
              for (std::size_t u = 0; u < ni; ++u)
                for (std::size_t v = 0; v < ni; ++v) {
                  if (ai(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) == 0.0)
                    continue;
                  for (std::size_t s = 0; s < stride; ++s) {
                    const std::size_t row = r * ni * stride + u * stride + s;
                    const std::size_t col = r * ni * stride + v * stride + s;
                    a(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
                        ai(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
                  }
                }
            stride *= ni;
          }
          return a;
        }
      },
      spec.family);
}

}  // namespace

Eigen::MatrixXd dense_adjacency(const GraphSpec& spec, std::size_t cap) {
  return scale_factor(spec) * dense_unscaled(spec, cap);
}

void write_adjacency_csv(const Eigen::MatrixXd& adj, std::ostream& out) {
  out << adj.rows() << "\n";
  for (Eigen::Index r = 0; r < adj.rows(); ++r) {
    for (Eigen::Index c = 0; c < adj.cols(); ++c) {
      if (c) out << ",";
      out << adj(r, c);
    }
    out << "\n";
  }
}

}  // namespace qwm
