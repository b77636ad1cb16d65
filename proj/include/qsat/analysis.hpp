// Copyright 2026 The qsat-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSAT_ANALYSIS_HPP_
#define QSAT_ANALYSIS_HPP_

#include <optional>
#include <string>

namespace qsat {

enum class BoundMethod { SingleClause, Sunflower, Nosegay, GeneralK };

/// "single_clause", "sunflower", "nosegay" or "general_k".
const char* to_string(BoundMethod method) noexcept;

struct BoundParams {
  int d_max = 100;
  int poisson_truncation = 50;
  int quadrature_points = 0;  // Simpson panels; 0 selects the method default
};

inline constexpr int kDefaultDensityPanels = 4096;
inline constexpr int kDefaultNosegayPanels = 1000;

/// Upper bound on lim (1/n) ln R_sat^gen, in nats per qubit.
struct BoundReport {
  BoundMethod method = BoundMethod::SingleClause;
  double alpha = 0.0;
  int k = 3;
  BoundParams params;
  double value = 0.0;
  double quadrature_error = 0.0;  // Richardson estimate of the Simpson error
  double tail_bound = 0.0;        // probability mass dropped by truncation

  bool unsat() const { return value < 0.0; }
  /// "unsat-whp" when value < 0, "inconclusive" otherwise.
  const char* verdict() const { return unsat() ? "unsat-whp" : "inconclusive"; }
};

/// ln(d!) by exact summation of ln i.
double log_factorial(int d);

/// a_d = int_0^1 exp(-k a t^(k-1)) (k a t^(k-1))^d / d! dt, by composite
/// Simpson in log space: the fraction of vertices heading a degree-d
/// sunflower.
double sunflower_degree_density(int d, double alpha, int k, int panels = kDefaultDensityPanels);

/// Lower incomplete gamma gamma(s, x) by its power series; cross-check only.
double lower_incomplete_gamma(double s, double x);

/// a_d for k = 3 from the incomplete gamma closed form; cross-check only.
double sunflower_degree_density_gamma(int d, double alpha);

/// ln 2 + sum_{d=0}^{d_max} a_d (d ln(1 - 2^(1-k)) + ln(d / (2^k - 2) + 1)).
BoundReport sunflower_bound(double alpha, int k, int d_max = 100,
                            int panels = kDefaultDensityPanels);

/// Trajectory of the nosegay peel: mu(nu) edges per original vertex when a
/// fraction nu of vertices remains.
struct OdeState {
  double nu = 1.0;
  double mu = 0.0;
  double nu0 = 0.0;
};

/// mu(nu) = (nu/6)((6 alpha + 1) nu^2 - 1), nu0 = 1/sqrt(6 alpha + 1).
/// Throws std::out_of_range for nu outside [nu0, 1].
OdeState nosegay_ode(double alpha, double nu);

/// ln 2 + (1/3) int_{nu0}^1 E[ln(R_(a,b,c) / 2^(3+2(a+b+c)))] d nu with a, b,
/// c independent Poisson(3 mu / nu), each truncated at `truncation`.
BoundReport nosegay_bound(double alpha, int truncation = 50,
                          int panels = kDefaultNosegayPanels);

/// ln 2 + alpha ln(1 - 2^(1-k)) + ln(alpha / (2^k - 2) + 1).
BoundReport general_k_bound(double alpha, int k);

/// ln 2 + alpha ln(1 - 2^-k).
BoundReport single_clause_bound(double alpha, int k);

/// Positive root of ln 2 - 2b + ln(b + 1) = 0, by bisection on (0, 2).
double solve_b();

/// ln 2 / -ln(1 - 2^-k).
double single_clause_threshold(int k);

struct ThresholdOptions {
  std::optional<int> d_max;  // sunflower; default grows with k * alpha
  int poisson_truncation = 50;
  int quadrature_points = 0;
  std::optional<double> lower;  // bracket overrides
  std::optional<double> upper;
};

/// Sunflower truncation used by threshold_root when none is given:
/// max(100, k alpha + 12 sqrt(k alpha) + 30).
int adaptive_d_max(double alpha, int k);

/// alpha at which the selected bound changes sign, to within 1e-4. Throws
/// std::domain_error when the bracket shows no sign change.
double threshold_root(BoundMethod method, int k, const ThresholdOptions& options = {});

}  // namespace qsat

#endif  // QSAT_ANALYSIS_HPP_
