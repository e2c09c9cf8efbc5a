#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace tzeff {

struct AdfResult {
  double t_stat;
  double p_value;  // MacKinnon approximation, constant-only case
  int lags;
  int n;  // observations used after differencing/lagging
};

// Augmented Dickey-Fuller unit-root test with constant, no trend.
// Regresses dy_t on (1, y_{t-1}, dy_{t-1}, ..., dy_{t-lags}); the statistic
// is the t-ratio on y_{t-1}.
AdfResult adf_test(std::span<const double> prices, int lags = 1);

// Approximate asymptotic p-value for the constant-only ADF t-statistic.
// Response-surface coefficients from MacKinnon (1994), single-variable
// no-trend case, as tabulated in statsmodels.tsa.adfvalues.
double mackinnon_pvalue(double t_stat);

struct JohansenResult {
  double trace_rank0;
  double trace_rank1;
  int n;
  std::array<double, 3> eigenvalues;  // descending
  std::array<double, 3> beta;         // (1, coefficient on y, constant)
  double beta_se_y;
  double beta_se_const;

  static constexpr double kCrit5Rank0 = 20.262;
  static constexpr double kCrit5Rank1 = 9.165;
};

// Johansen trace test for (x, y) under a restricted constant (constant in
// the cointegrating relation, no deterministic trend), `vecm_lags` lagged
// differences. Beta is normalized so the x coefficient is 1; standard
// errors follow Johansen's asymptotics (Lutkepohl 2005, sec. 7.2).
JohansenResult johansen_trace(std::span<const double> x, std::span<const double> y,
                              int vecm_lags = 1);

struct ConvergenceResult {
  double alpha;  // mean price gap, EUR/MWh
  double nw_se;
  double t_stat;
  double p_value;  // two-sided, Student t with n-1 df
  int n;
  int lag_used;
  bool small_sample;  // n < 20, interpret with caution
  bool degenerate;    // zero-variance residuals
};

// Regression of (target - portfolio) on a constant with Bartlett-kernel
// Newey-West standard errors. Default lag: floor(4*(n/100)^(2/9)).
ConvergenceResult convergence_test(std::span<const double> target,
                                   std::span<const double> portfolio,
                                   std::optional<int> nw_lag = std::nullopt);

struct VarianceRatioResult {
  double sd_x;
  double sd_y;
  double f;  // var(x)/var(y)
  int df_x;
  int df_y;
  double p_two_sided;  // H1: ratio != 1
  double p_lower;      // H1: ratio < 1
  double p_upper;      // H1: ratio > 1
};

VarianceRatioResult variance_ratio_test(std::span<const double> x, std::span<const double> y);

std::vector<double> log_returns(std::span<const double> prices);
std::vector<double> price_changes(std::span<const double> prices);

struct DescriptiveStats {
  double mean;
  double median;
  double max;
  double min;
  double sd;        // sample standard deviation
  double skewness;  // population moments
  double kurtosis;  // non-excess: normal -> 3
  int n;
  bool shape_defined;  // false for constant series (sd = 0)
};

DescriptiveStats descriptive_stats(std::span<const double> series);

}  // namespace tzeff
