#include "qwm/mixing.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace qwm {

std::vector<double> distribution(const AmplitudeVector& psi) {
  std::vector<double> p(psi.amp.size());
  for (std::size_t v = 0; v < p.size(); ++v) p[v] = std::norm(psi.amp[v]);
  return p;
}

std::vector<double> phat(const std::vector<double>& dist) {
  if (!is_power_of_two(dist.size()))
    throw std::invalid_argument("phat: vertex count is not a power of two");
  return fwht(dist);
}

double tv_distance(const std::vector<double>& dist) {
  const double u = 1.0 / static_cast<double>(dist.size());
  double s = 0.0;
  for (double p : dist) s += std::abs(p - u);
  return 0.5 * s;
}

int k_eta(GroupElement a, GroupElement eta) { return hamming_weight(a) + dot_mod2(a, eta); }

cd phat_direct(const GraphSpec& spec, double t, bits_t a) {
  const auto circ = reduce_to_circulant(spec);
  if (!circ) throw std::invalid_argument("phat_direct: spec is not circulant-reducible");
  if (circ->n > 14) throw std::invalid_argument("phat_direct: dimension cap exceeded");
  const std::size_t count = std::size_t{1} << circ->n;
  if (a >= count) throw std::invalid_argument("phat_direct: index out of range");
  const double s = scale_factor(spec);
  const auto lambda = integer_spectrum(circ->f);
  cd sum{0.0, 0.0};
  for (std::size_t b = 0; b < count; ++b) {
    const double theta = -t * s * static_cast<double>(lambda[b] - lambda[a ^ b]);
    sum += cd{std::cos(theta), std::sin(theta)};
  }
  return sum / static_cast<double>(count);
}

MixingReport measure_mixing(const GraphSpec& spec, const InitialState& init, double t,
                            double eps) {
  const auto dist = distribution(walk(spec, init, t));
  MixingReport report;
  report.t = t;
  report.tv_distance = tv_distance(dist);
  if (is_power_of_two(dist.size())) {
    const auto ph = phat(dist);
    double max_off = 0.0;
    for (std::size_t a = 1; a < ph.size(); ++a) max_off = std::max(max_off, std::abs(ph[a]));
    report.max_offzero_phat = max_off;
  } else {
    const auto count = static_cast<double>(dist.size());
    double max_dev = 0.0;
    for (double p : dist) max_dev = std::max(max_dev, std::abs(count * p - 1.0));
    report.max_offzero_phat = max_dev;
  }
  report.uniform = report.max_offzero_phat <= eps;
  return report;
}

double refine_uniform_time(const GraphSpec& spec, const InitialState& init, double lo, double hi,
                           double eps) {
  // Golden-section minimization of the off-zero criterion; the minimum
  // at a uniform time is a touch-zero, so sign bisection does not apply.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = measure_mixing(spec, init, x1, eps).max_offzero_phat;
  double f2 = measure_mixing(spec, init, x2, eps).max_offzero_phat;
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = measure_mixing(spec, init, x1, eps).max_offzero_phat;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = measure_mixing(spec, init, x2, eps).max_offzero_phat;
    }
  }
  return 0.5 * (a + b);
}

ScanResult scan(const GraphSpec& spec, const InitialState& init, double t_max, std::size_t steps,
                double eps, unsigned threads) {
  if (steps < 2) throw std::invalid_argument("scan: need at least 2 grid points");
  if (threads == 0) {
    if (const char* env = std::getenv("QWM_THREADS")) threads = std::stoul(env);
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  ScanResult result;
  result.reports.resize(steps);
  const double dt = t_max / static_cast<double>(steps - 1);

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k)
      result.reports[k] = measure_mixing(spec, init, static_cast<double>(k) * dt, eps);
  };
  if (threads <= 1 || steps < 64) {
    worker(0, steps);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (steps + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::size_t begin = i * chunk;
      if (begin >= steps) break;
      pool.emplace_back(worker, begin, std::min(begin + chunk, steps));
    }
    for (auto& th : pool) th.join();
  }

  result.min_tv = result.reports[0].tv_distance;
  result.argmin_t = result.reports[0].t;
  for (const auto& r : result.reports)
    if (r.tv_distance < result.min_tv) {
      result.min_tv = r.tv_distance;
      result.argmin_t = r.t;
    }

  // Candidate uniform times sit at local minima of the off-zero
  // criterion; the grid rarely lands inside eps of an exact zero, so
  // each candidate is refined before the verdict.
  auto off = [&](std::size_t i) { return result.reports[i].max_offzero_phat; };
  std::size_t i = 0;
  while (i < steps) {
    std::size_t j = i;  // run of equal values counts as one candidate
    while (j + 1 < steps && off(j + 1) == off(i)) ++j;
    const bool valley = (i == 0 || off(i - 1) > off(i)) &&
                        (j + 1 == steps || off(j + 1) > off(i));
    if (valley) {
      const double lo = i == 0 ? 0.0 : result.reports[i - 1].t;
      const double hi = j + 1 == steps ? t_max : result.reports[j + 1].t;
      const double refined = refine_uniform_time(spec, init, lo, hi, eps);
      if (measure_mixing(spec, init, refined, eps).uniform &&
          (result.uniform_times.empty() || refined - result.uniform_times.back() > 1e-9))
        result.uniform_times.push_back(refined);
    }
    i = j + 1;
  }
  if (!result.uniform_times.empty()) result.earliest_uniform = result.uniform_times.front();
  return result;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
  out << "t,tv_distance,max_offzero_phat,uniform\n";
  out.precision(17);
  for (const auto& r : result.reports)
    out << r.t << "," << r.tv_distance << "," << r.max_offzero_phat << ","
        << (r.uniform ? 1 : 0) << "\n";
}

}  // namespace qwm
