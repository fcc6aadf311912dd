#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwm/walk.hpp"

// Probability distributions, their Z_2^n Fourier transforms, uniformity
// detection and time scans.

namespace qwm {

/// |psi_v|^2 per vertex.
std::vector<double> distribution(const AmplitudeVector& psi);

/// P_hat = fwht(P); P_hat(0) = 1 for a distribution.  Power-of-two size only.
std::vector<double> phat(const std::vector<double>& dist);

/// (1/2) sum_v |P_v - 1/N|.
double tv_distance(const std::vector<double>& dist);

/// k_eta(a) = |a| + [a.eta = 1].
int k_eta(GroupElement a, GroupElement eta);

/// P_hat_t(a) evaluated directly from the eigenvalues:
/// 2^-m sum_b exp(-it(lambda_b - lambda_{a xor b})).
cd phat_direct(const GraphSpec& spec, double t, bits_t a);

struct MixingReport {
  double t = 0.0;
  double tv_distance = 0.0;
  // max_{a != 0} |P_hat(a)| when the vertex count is a power of two;
  // otherwise max_v |N P_v - 1| (the equivalent sup-norm criterion).
  double max_offzero_phat = 0.0;
  bool uniform = false;
};

MixingReport measure_mixing(const GraphSpec& spec, const InitialState& init, double t,
                            double eps);

struct ScanResult {
  std::vector<MixingReport> reports;
  double min_tv = 1.0;
  double argmin_t = 0.0;
  std::vector<double> uniform_times;  // one refined time per contiguous uniform run
  std::optional<double> earliest_uniform;
};

/// Uniform grid of `steps` points over [0, t_max], evaluated in parallel
/// with deterministic ordering.  Grid hits under eps are refined to 1e-12
/// time resolution by minimizing the off-zero criterion.
ScanResult scan(const GraphSpec& spec, const InitialState& init, double t_max, std::size_t steps,
                double eps, unsigned threads = 0);

/// Minimizes max_offzero_phat over [lo, hi] to 1e-12 time resolution.
double refine_uniform_time(const GraphSpec& spec, const InitialState& init, double lo, double hi,
                           double eps);

void write_scan_csv(const ScanResult& result, std::ostream& out);

}  // namespace qwm
