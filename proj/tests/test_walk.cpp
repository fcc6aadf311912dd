#include <doctest.h>

#include <numbers>
#include <random>

#include "qwm/walk.hpp"

using namespace qwm;

namespace {

constexpr double kPi = std::numbers::pi;

double max_amp_dev(const AmplitudeVector& a, const AmplitudeVector& b) {
  REQUIRE(a.amp.size() == b.amp.size());
  double dev = 0.0;
  for (std::size_t v = 0; v < a.amp.size(); ++v) dev = std::max(dev, std::abs(a.amp[v] - b.amp[v]));
  return dev;
}

}  // namespace

TEST_CASE("identity at t = 0 and unitarity") {
  const auto spec = hypercube_spec(4);
  const auto psi = walk(spec, InitialState::point(5), 0.0);
  CHECK(std::abs(psi.amp[5] - cd{1.0, 0.0}) < 1e-15);
  for (double t : {0.3, 1.7, 12.9})
    CHECK(walk(spec, InitialState::point(0), t).norm_sq() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("K2 closed form (cos t, -i sin t)") {
  for (double t : {0.0, 0.4, kPi / 4.0, 2.3}) {
    const auto psi = circulant_walk(hypercube_spec(1), InitialState::point(0), t);
    CHECK(std::abs(psi.amp[0] - cd{std::cos(t), 0.0}) < 1e-12);
    CHECK(std::abs(psi.amp[1] - cd{0.0, -std::sin(t)}) < 1e-12);

    const auto closed = complete_graph_walk(2, t);
    CHECK(max_amp_dev(psi, closed) < 1e-12);
  }
}

TEST_CASE("Q3 is uniform at pi/4") {
  const auto psi = walk(hypercube_spec(3), InitialState::point(0), kPi / 4.0);
  for (const cd& a : psi.amp) CHECK(std::norm(a) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("eta-cube superposition start is uniform at pi") {
  const auto spec = eta_cube_spec(3, GroupElement(0b111, 3));
  const auto psi = walk(spec, InitialState::superposition(0, 0b111), kPi);
  for (const cd& a : psi.amp) CHECK(std::norm(a) == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("complete graph closed form vs dense oracle") {
  const auto spec = complete_spec(3);
  const auto adj = dense_adjacency(spec);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> time_dist(0.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = time_dist(rng);
    CHECK(max_amp_dev(complete_graph_walk(3, t),
                      dense_walk_oracle(adj, InitialState::point(0), t)) < 1e-10);
  }
}

TEST_CASE("product walk") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> time_dist(0.0, 8.0);

  // Q2 as a product of two K2 walks
  for (int trial = 0; trial < 10; ++trial) {
    const double t = time_dist(rng);
    const auto via_product =
        product_walk({complete_graph_walk(2, t), complete_graph_walk(2, t)});
    const auto via_circulant = circulant_walk(hypercube_spec(2), InitialState::point(0), t);
    CHECK(max_amp_dev(via_product, via_circulant) < 1e-10);
  }

  // H(2,3) product path vs dense oracle, including a non-zero start vertex
  const auto h23 = hamming_spec(2, 3);
  const auto adj = dense_adjacency(h23);
  for (std::size_t start : {std::size_t{0}, std::size_t{5}}) {
    const double t = time_dist(rng);
    CHECK(max_amp_dev(walk(h23, InitialState::point(start), t),
                      dense_walk_oracle(adj, InitialState::point(start), t)) < 1e-10);
  }

  // probabilities multiply across factors
  const double t = 1.234;
  const auto g = complete_graph_walk(3, t);
  const auto h = complete_graph_walk(4, InitialState::point(2), t);
  const auto gh = product_walk({g, h});
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::norm(gh.amp[j * 3 + i]) ==
            doctest::Approx(std::norm(g.amp[i]) * std::norm(h.amp[j])).epsilon(1e-12));

  CHECK_THROWS_AS(product_walk({complete_graph_walk(2, 1.0), complete_graph_walk(2, 2.0)}),
                  std::invalid_argument);
}

TEST_CASE("degree-normalized product timing") {
  // exp(-itA/K) with A = sum of factor adjacencies, K = total degree
  auto h23 = hamming_spec(2, 3);
  h23.scaling = Scaling::degree_normalized();
  const auto adj = dense_adjacency(h23);
  for (double t : {0.9, 4.2}) {
    CHECK(max_amp_dev(walk(h23, InitialState::point(0), t),
                      dense_walk_oracle(adj, InitialState::point(0), t)) < 1e-10);
  }
}

TEST_CASE("group covariance of circulant walks") {
  const auto spec = eta_cube_spec(4, GroupElement(0b1010, 4));
  const double t = 2.7;
  const auto from_zero = walk(spec, InitialState::point(0), t);
  const bits_t g = 0b0110;
  const auto from_g = walk(spec, InitialState::point(g), t);
  for (bits_t x = 0; x < 16; ++x)
    CHECK(std::abs(from_g.amp[x] - from_zero.amp[x ^ g]) < 1e-12);
}

TEST_CASE("time additivity") {
  const auto spec = hypercube_spec(5);
  const double t1 = 0.8, t2 = 1.9;
  const auto step1 = walk(spec, InitialState::point(0), t1);
  const auto step2 = walk(spec, InitialState::from_amplitudes(step1.amp), t2);
  const auto direct = walk(spec, InitialState::point(0), t1 + t2);
  CHECK(max_amp_dev(step2, direct) < 1e-9);
}

TEST_CASE("self-loop rescaling: probabilities unchanged, phase e^{-ist}") {
  const int n = 3;
  std::vector<bits_t> plain, looped;
  for (int j = 0; j < n; ++j) {
    plain.push_back(bits_t{1} << j);
    looped.push_back(bits_t{1} << j);
  }
  looped.push_back(0);
  const GraphSpec without{CirculantSpec{n, BooleanFunctionZ2(n, plain)}, Scaling::unnormalized()};
  const GraphSpec with{CirculantSpec{n, BooleanFunctionZ2(n, looped)}, Scaling::unnormalized()};
  const double t = 1.3;
  const auto a = walk(without, InitialState::point(0), t);
  const auto b = walk(with, InitialState::point(0), t);
  const cd phase{std::cos(t), -std::sin(t)};
  for (std::size_t v = 0; v < a.amp.size(); ++v)
    CHECK(std::abs(b.amp[v] - phase * a.amp[v]) < 1e-12);
}

TEST_CASE("fast paths agree with the dense oracle across families") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> time_dist(0.0, 4.0 * kPi);
  std::vector<GraphSpec> specs = {
      hypercube_spec(5),
      eta_cube_spec(4, GroupElement(0b1100, 4)),
      bunkbed_spec(3, BooleanFunctionZ2(3, {0, 0b111})),
      complete_spec(7),
      hamming_spec(2, 5),
  };
  for (const auto& spec : specs) {
    const auto adj = dense_adjacency(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const double t = time_dist(rng);
      CHECK(max_amp_dev(walk(spec, InitialState::point(0), t),
                        dense_walk_oracle(adj, InitialState::point(0), t)) < 1e-8);
    }
  }
}

TEST_CASE("initial state validation") {
  CHECK_THROWS_AS(walk(hypercube_spec(2), InitialState{{{0, cd{0.5, 0.0}}}}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(walk(hypercube_spec(2), InitialState::point(4), 1.0), std::invalid_argument);
}
