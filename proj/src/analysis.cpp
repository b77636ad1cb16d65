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

#include "qsat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qsat/gadgets.hpp"

namespace qsat {

const char* to_string(BoundMethod method) noexcept {
  switch (method) {
    case BoundMethod::SingleClause: return "single_clause";
    case BoundMethod::Sunflower: return "sunflower";
    case BoundMethod::Nosegay: return "nosegay";
    case BoundMethod::GeneralK: return "general_k";
  }
  return "unknown";
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct Quadrature {
  double value;
  double error;
  int panels;
};

int round_panels(int panels) {
  if (panels < 4) throw std::invalid_argument("quadrature: need at least 4 panels");
  return (panels + 3) / 4 * 4;
}

/// Composite Simpson on equally spaced samples y[0..n], n a multiple of 4.
/// The error estimate is the Richardson difference against the
/// half-resolution rule on the even nodes.
Quadrature simpson_samples(const std::vector<double>& y, double h) {
  const int n = static_cast<int>(y.size()) - 1;
  auto rule = [&](int stride) {
    const int m = n / stride;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < m; ++i) (i % 2 ? odd : even) += y[static_cast<std::size_t>(i * stride)];
    return stride * h / 3.0 * (y.front() + y.back() + 4.0 * odd + 2.0 * even);
  };
  const double fine = rule(1);
  const double coarse = rule(2);
  return {fine, std::abs(fine - coarse) / 15.0, n};
}

template <class F>
Quadrature simpson(F&& f, double a, double b, int panels) {
  const int n = round_panels(panels);
  const double h = (b - a) / n;
  std::vector<double> y(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) y[static_cast<std::size_t>(i)] = f(i == n ? b : a + i * h);
  return simpson_samples(y, h);
}

/// ln gamma(s, x) from the series x^s e^-x sum_n x^n / (s (s+1) ... (s+n)).
double log_lower_incomplete_gamma(double s, double x) {
  double term = 1.0 / s, sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (s + n);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return s * std::log(x) - x + std::log(sum);
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("clause density alpha must be positive");
}

void require_k(int k) {
  if (k < 2 || k > 60) throw std::invalid_argument("arity k must lie in [2, 60]");
}

/// ln(d!) for d = 0..max, by cumulative summation.
std::vector<double> log_factorials(int max) {
  std::vector<double> out(static_cast<std::size_t>(max) + 1, 0.0);
  for (int i = 2; i <= max; ++i)
    out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i) - 1] + std::log(static_cast<double>(i));
  return out;
}

/// Per-gadget log weight of a degree-d sunflower.
double sunflower_weight(int d, int k) {
  const double two_k = std::ldexp(1.0, k);
  return d * std::log1p(-2.0 / two_k) + std::log1p(d / (two_k - 2.0));
}

/// Sum over d of Poisson(lambda) pmf times weight[d], for d <= d_max, plus the
/// captured probability mass. Terms beyond 12 standard deviations and 30
/// extra units are below double precision and skipped.
std::pair<double, double> truncated_poisson_sum(double lambda, const std::vector<double>& weight,
                                                const std::vector<double>& log_fact) {
  const int d_max = static_cast<int>(weight.size()) - 1;
  if (lambda <= 0.0) return {weight[0], 1.0};
  const double spread = 12.0 * std::sqrt(lambda) + 30.0;
  const int lo = std::max(0, static_cast<int>(std::floor(lambda - spread)));
  const int hi = std::min(d_max, static_cast<int>(std::ceil(lambda + spread)));
  const double log_lambda = std::log(lambda);
  double sum = 0.0, mass = 0.0;
  for (int d = lo; d <= hi; ++d) {
    const double p = std::exp(d * log_lambda - lambda - log_fact[static_cast<std::size_t>(d)]);
    sum += p * weight[static_cast<std::size_t>(d)];
    mass += p;
  }
  return {sum, mass};
}

/// Poisson pmf p[0..truncation] for mean lambda.
void poisson_pmf(double lambda, std::vector<double>& p, const std::vector<double>& log_fact) {
  std::fill(p.begin(), p.end(), 0.0);
  if (lambda <= 0.0) {
    p[0] = 1.0;
    return;
  }
  const double log_lambda = std::log(lambda);
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = std::exp(static_cast<double>(i) * log_lambda - lambda - log_fact[i]);
}

/// ln(R_(a,b,c) / 2^(3+2(a+b+c))) for a, b, c <= truncation, flattened.
std::vector<double> nosegay_weight_table(int truncation) {
  const auto side = static_cast<std::size_t>(truncation) + 1;
  std::vector<double> table(side * side * side);
  for (int a = 0; a <= truncation; ++a)
    for (int b = 0; b <= truncation; ++b)
      for (int c = 0; c <= truncation; ++c)
        table[(static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)) * side +
              static_cast<std::size_t>(c)] = nosegay3_rank(a, b, c).log_weight;
  return table;
}

double poisson_upper_tail(double lambda, int above) {
  // Summed term by term; 1 - P(X <= above) would cancel catastrophically.
  const auto log_fact = log_factorials(above + 400);
  double tail = 0.0;
  for (int i = above + 1; i < above + 400; ++i)
    tail += std::exp(i * std::log(lambda) - lambda - log_fact[static_cast<std::size_t>(i)]);
  return tail;
}

BoundReport nosegay_bound_with_table(double alpha, int truncation, int panels,
                                     const std::vector<double>& table) {
  require_alpha(alpha);
  const auto side = static_cast<std::size_t>(truncation) + 1;
  const auto log_fact = log_factorials(truncation);
  const double nu0 = 1.0 / std::sqrt(6.0 * alpha + 1.0);

  std::vector<double> p(side);
  auto expectation = [&](double nu) {
    const double mu = std::max(0.0, nu / 6.0 * ((6.0 * alpha + 1.0) * nu * nu - 1.0));
    poisson_pmf(3.0 * mu / nu, p, log_fact);
    double total = 0.0;
    for (std::size_t a = 0; a < side; ++a) {
      if (p[a] == 0.0) continue;
      double over_b = 0.0;
      for (std::size_t b = 0; b < side; ++b) {
        if (p[b] == 0.0) continue;
        const double* row = &table[(a * side + b) * side];
        double over_c = 0.0;
        for (std::size_t c = 0; c < side; ++c) over_c += p[c] * row[c];
        over_b += p[b] * over_c;
      }
      total += p[a] * over_b;
    }
    return total;
  };

  const Quadrature q = simpson(expectation, nu0, 1.0, panels);
  BoundReport r;
  r.method = BoundMethod::Nosegay;
  r.alpha = alpha;
  r.k = 3;
  r.params.poisson_truncation = truncation;
  r.params.quadrature_points = q.panels;
  r.params.d_max = 0;
  r.value = kLn2 + q.value / 3.0;
  r.quadrature_error = q.error / 3.0;
  // Largest Poisson mean along the trajectory is 3 alpha, reached at nu = 1.
  r.tail_bound = std::min(1.0, 3.0 * poisson_upper_tail(3.0 * alpha, truncation));
  return r;
}

}  // namespace

double log_factorial(int d) {
  if (d < 0) throw std::invalid_argument("log_factorial: negative argument");
  double s = 0.0;
  for (int i = 2; i <= d; ++i) s += std::log(static_cast<double>(i));
  return s;
}

double sunflower_degree_density(int d, double alpha, int k, int panels) {
  if (d < 0) throw std::invalid_argument("sunflower_degree_density: d must be nonnegative");
  require_alpha(alpha);
  require_k(k);
  const double ka = k * alpha;
  const double lf = log_factorial(d);
  auto integrand = [&](double t) {
    if (t <= 0.0) return d == 0 ? 1.0 : 0.0;
    const double lambda = ka * std::pow(t, k - 1);
    return std::exp(d * std::log(lambda) - lambda - lf);
  };
  return simpson(integrand, 0.0, 1.0, panels).value;
}

double lower_incomplete_gamma(double s, double x) {
  if (!(s > 0.0)) throw std::invalid_argument("lower_incomplete_gamma: s must be positive");
  if (x < 0.0) throw std::invalid_argument("lower_incomplete_gamma: x must be nonnegative");
  if (x == 0.0) return 0.0;
  return std::exp(log_lower_incomplete_gamma(s, x));
}

double sunflower_degree_density_gamma(int d, double alpha) {
  if (d < 0) throw std::invalid_argument("sunflower_degree_density_gamma: d must be nonnegative");
  require_alpha(alpha);
  const double x = 3.0 * alpha;
  const double log_gamma_lower = log_lower_incomplete_gamma(d + 0.5, x);
  return std::exp(log_gamma_lower - std::log(2.0 * std::sqrt(x)) - log_factorial(d));
}

BoundReport sunflower_bound(double alpha, int k, int d_max, int panels) {
  require_alpha(alpha);
  require_k(k);
  if (d_max < 1) throw std::invalid_argument("sunflower_bound: d_max must be at least 1");

  std::vector<double> weight(static_cast<std::size_t>(d_max) + 1);
  for (int d = 0; d <= d_max; ++d) weight[static_cast<std::size_t>(d)] = sunflower_weight(d, k);
  const auto log_fact = log_factorials(d_max);

  // Exchanging sum and integral: sum_d a_d w_d is the t-integral of the
  // truncated Poisson(k alpha t^(k-1)) expectation of w.
  const double ka = k * alpha;
  const int n = round_panels(panels);
  const double h = 1.0 / n;
  std::vector<double> sums(static_cast<std::size_t>(n) + 1), masses(sums.size());
  for (int i = 0; i <= n; ++i) {
    const double t = i == n ? 1.0 : i * h;
    std::tie(sums[static_cast<std::size_t>(i)], masses[static_cast<std::size_t>(i)]) =
        truncated_poisson_sum(ka * std::pow(t, k - 1), weight, log_fact);
  }
  const Quadrature q = simpson_samples(sums, h);
  const double mass_total = simpson_samples(masses, h).value;

  BoundReport r;
  r.method = BoundMethod::Sunflower;
  r.alpha = alpha;
  r.k = k;
  r.params.d_max = d_max;
  r.params.poisson_truncation = 0;
  r.params.quadrature_points = q.panels;
  r.value = kLn2 + q.value;
  r.quadrature_error = q.error;
  r.tail_bound = std::max(0.0, 1.0 - mass_total);
  return r;
}

OdeState nosegay_ode(double alpha, double nu) {
  require_alpha(alpha);
  const double nu0 = 1.0 / std::sqrt(6.0 * alpha + 1.0);
  constexpr double slack = 1e-12;
  if (!(nu >= nu0 - slack && nu <= 1.0 + slack))
    throw std::out_of_range("nosegay_ode: nu must lie in [nu0, 1]");
  const double mu = nu / 6.0 * ((6.0 * alpha + 1.0) * nu * nu - 1.0);
  return {nu, std::max(0.0, mu), nu0};
}

BoundReport nosegay_bound(double alpha, int truncation, int panels) {
  if (truncation < 10) throw std::invalid_argument("nosegay_bound: truncation must be at least 10");
  if (panels < 100) throw std::invalid_argument("nosegay_bound: need at least 100 quadrature points");
  return nosegay_bound_with_table(alpha, truncation, panels, nosegay_weight_table(truncation));
}

BoundReport general_k_bound(double alpha, int k) {
  require_alpha(alpha);
  require_k(k);
  BoundReport r;
  r.method = BoundMethod::GeneralK;
  r.alpha = alpha;
  r.k = k;
  r.params = {0, 0, 0};
  const double two_k = std::ldexp(1.0, k);
  r.value = kLn2 + alpha * std::log1p(-2.0 / two_k) + std::log1p(alpha / (two_k - 2.0));
  return r;
}

BoundReport single_clause_bound(double alpha, int k) {
  require_alpha(alpha);
  require_k(k);
  BoundReport r;
  r.method = BoundMethod::SingleClause;
  r.alpha = alpha;
  r.k = k;
  r.params = {0, 0, 0};
  r.value = kLn2 + alpha * std::log1p(-std::ldexp(1.0, -k));
  return r;
}

double solve_b() {
  auto f = [](double b) { return kLn2 - 2.0 * b + std::log1p(b); };
  double lo = 0.0, hi = 2.0;  // f(0) > 0 > f(2)
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double single_clause_threshold(int k) {
  require_k(k);
  return kLn2 / -std::log1p(-std::ldexp(1.0, -k));
}

int adaptive_d_max(double alpha, int k) {
  const double mean = k * alpha;
  return std::max(100, static_cast<int>(std::ceil(mean + 12.0 * std::sqrt(mean) + 30.0)));
}

double threshold_root(BoundMethod method, int k, const ThresholdOptions& options) {
  require_k(k);
  if (method == BoundMethod::SingleClause) return single_clause_threshold(k);
  if (method == BoundMethod::Nosegay && k != 3)
    throw std::invalid_argument("threshold_root: the nosegay bound is defined for k = 3 only");

  std::vector<double> table;
  if (method == BoundMethod::Nosegay) {
    if (options.poisson_truncation < 10)
      throw std::invalid_argument("threshold_root: truncation must be at least 10");
    table = nosegay_weight_table(options.poisson_truncation);
  }

  auto bound = [&](double alpha) {
    switch (method) {
      case BoundMethod::Sunflower:
        return sunflower_bound(alpha, k, options.d_max.value_or(adaptive_d_max(alpha, k)),
                               options.quadrature_points > 0 ? options.quadrature_points
                                                             : kDefaultDensityPanels)
            .value;
      case BoundMethod::Nosegay:
        return nosegay_bound_with_table(alpha, options.poisson_truncation,
                                        options.quadrature_points > 0 ? options.quadrature_points
                                                                      : kDefaultNosegayPanels,
                                        table)
            .value;
      default:
        return general_k_bound(alpha, k).value;
    }
  };

  const double two_k = std::ldexp(1.0, k);
  double lo = options.lower.value_or(method == BoundMethod::Nosegay ? 0.5 : 0.05);
  double hi = options.upper.value_or(method == BoundMethod::Nosegay ? 6.0 : two_k);
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("threshold_root: invalid bracket");
  if (!(bound(lo) > 0.0) || !(bound(hi) < 0.0))
    throw std::domain_error("threshold_root: bound does not change sign on [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qsat
