#pragma once

#include <string>
#include <vector>

#include "qwm/mixing.hpp"

// One verifier per mixing/non-mixing result: eta-cubes, Hamming graphs,
// the bunkbed Fourier-support bound, and B_n(Q_n).

namespace qwm {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SuiteVerdict {
  std::string suite;
  std::string params;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, std::string expected, std::string observed, bool pass_flag) {
    checks.push_back({std::move(name), std::move(expected), std::move(observed), pass_flag});
  }
};

/// Q_n mixes at pi/4 and P_hat_t(a) = cos(2t)^|a| on random (t, a).
SuiteVerdict verify_hypercube(int n, double eps, unsigned seed = 1);

/// Q_n^eta (scaled by 1/(n+1)) mixes at t1* = (n+1)pi/4 and
/// t2* = 3(n+1)pi/4 iff |eta| is even; for odd |eta| the distribution at
/// those times is half-uniform on the A_0 or A_1 coset and the walk
/// started in (|0> + |eta>)/sqrt(2) does mix.
SuiteVerdict verify_eta_theorem(int n, GroupElement eta, double eps);

/// H(n,q) mixes iff q <= 4: locates a common factor uniform time for
/// q <= 4 and certifies a positive min-TV floor for the K_q factor
/// otherwise (frozen regression baselines for q = 5, 6).
SuiteVerdict verify_hamming(int n, int q, double eps, std::size_t oracle_cap = 512);

/// Bunkbed support bound: |supp(f_hat)| < 2^(n-1) forces
/// P_hat_t(1.0_n) >= 1 - 2|supp(f_hat)|/2^n > 0 for all t.
SuiteVerdict verify_bunkbed_theorem(int n, const BooleanFunctionZ2& f, double eps);

/// B_n(Q_n): P_hat_t(0.a) = 1/2 + (1/2)cos(4t)^|a|, never uniform
/// (the even-|a| component never drops below 1/2).
SuiteVerdict verify_bbqn(int n, double eps);

/// Frozen K_q min-TV regression baselines over one period (q = 5, 6).
double kq_min_tv_baseline(int q);

}  // namespace qwm
