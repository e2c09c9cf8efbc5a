#include "tzeff/econometrics.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "dist.hpp"
#include "tzeff/errors.hpp"

namespace tzeff {

namespace {

struct OlsFit {
  Eigen::VectorXd coef;
  Eigen::VectorXd se;
  Eigen::VectorXd residuals;
  double sigma2;  // residual variance, df-adjusted
};

OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const auto n = X.rows();
  const auto k = X.cols();
  Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
  if (!lu.isInvertible()) {
    fail(Errc::Degenerate, "singular/degenerate regression");
  }
  Eigen::MatrixXd xtx_inv = lu.inverse();
  OlsFit fit;
  fit.coef = xtx_inv * (X.transpose() * y);
  fit.residuals = y - X * fit.coef;
  fit.sigma2 = fit.residuals.squaredNorm() / double(n - k);
  fit.se = (fit.sigma2 * xtx_inv.diagonal()).cwiseSqrt();
  return fit;
}

double sample_mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

double sum_sq_dev(std::span<const double> v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s;
}

Eigen::MatrixXd residual_on(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  // Residual of each column of a after least squares on the columns of b.
  Eigen::MatrixXd coef = (b.transpose() * b).ldlt().solve(b.transpose() * a);
  return a - b * coef;
}

}  // namespace

double mackinnon_pvalue(double t_stat) {
  // MacKinnon (1994) response surface, constant-only case (N = 1), via the
  // statsmodels adfvalues tabulation: p = Phi(polynomial(tau)).
  constexpr double kTauMax = 2.74;
  constexpr double kTauMin = -18.83;
  constexpr double kTauStar = -1.61;
  constexpr double kSmall[3] = {2.1659, 1.4412, 0.038269};
  constexpr double kLarge[4] = {1.7339, 0.93202, -0.12745, -0.010368};

  if (t_stat <= kTauMin) return 0.0;
  if (t_stat >= kTauMax) return 1.0;
  double z;
  if (t_stat <= kTauStar) {
    z = kSmall[0] + t_stat * (kSmall[1] + t_stat * kSmall[2]);
  } else {
    z = kLarge[0] + t_stat * (kLarge[1] + t_stat * (kLarge[2] + t_stat * kLarge[3]));
  }
  return dist::norm_cdf(z);
}

AdfResult adf_test(std::span<const double> prices, int lags) {
  if (lags < 0) fail(Errc::TooShort, "negative lag order");
  const int len = int(prices.size());
  if (len < 20) {
    fail(Errc::TooShort,
         "adf needs at least 20 observations, got " + std::to_string(len));
  }
  const int n = len - 1 - lags;  // usable rows after differencing and lagging
  if (n <= lags + 2) fail(Errc::TooShort, "too few observations for lag order");

  const int k = 2 + lags;  // constant, y_{t-1}, lagged differences
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    const int t = i + lags + 1;  // index into prices
    y(i) = prices[t] - prices[t - 1];
    X(i, 0) = 1.0;
    X(i, 1) = prices[t - 1];
    for (int l = 1; l <= lags; ++l) {
      X(i, 1 + l) = prices[t - l] - prices[t - l - 1];
    }
  }
  OlsFit fit = ols(X, y);
  if (!(fit.se(1) > 0.0) || !std::isfinite(fit.se(1))) {
    fail(Errc::Degenerate, "singular/degenerate regression");
  }
  double t_stat = fit.coef(1) / fit.se(1);
  return {t_stat, mackinnon_pvalue(t_stat), lags, n};
}

JohansenResult johansen_trace(std::span<const double> x, std::span<const double> y,
                              int vecm_lags) {
  if (x.size() != y.size()) {
    fail(Errc::Misaligned, "series lengths differ: " + std::to_string(x.size()) + " vs " +
                               std::to_string(y.size()));
  }
  if (vecm_lags < 0) fail(Errc::TooShort, "negative lag order");
  const int len = int(x.size());
  const int n = len - 1 - vecm_lags;
  if (n < 30) {
    fail(Errc::TooShort, "johansen needs at least 30 observations after lagging, got " +
                             std::to_string(n));
  }

  // Z0: differences; Z1: lagged levels plus restricted constant;
  // Z2: lagged differences (short-run dynamics).
  Eigen::MatrixXd Z0(n, 2), Z1(n, 3);
  Eigen::MatrixXd Z2(n, 2 * vecm_lags);
  for (int i = 0; i < n; ++i) {
    const int t = i + vecm_lags + 1;
    Z0(i, 0) = x[t] - x[t - 1];
    Z0(i, 1) = y[t] - y[t - 1];
    Z1(i, 0) = x[t - 1];
    Z1(i, 1) = y[t - 1];
    Z1(i, 2) = 1.0;
    for (int l = 1; l <= vecm_lags; ++l) {
      Z2(i, 2 * (l - 1)) = x[t - l] - x[t - l - 1];
      Z2(i, 2 * (l - 1) + 1) = y[t - l] - y[t - l - 1];
    }
  }
  Eigen::MatrixXd R0 = vecm_lags > 0 ? residual_on(Z0, Z2) : Z0;
  Eigen::MatrixXd R1 = vecm_lags > 0 ? residual_on(Z1, Z2) : Z1;

  Eigen::MatrixXd S00 = R0.transpose() * R0 / double(n);
  Eigen::MatrixXd S01 = R0.transpose() * R1 / double(n);
  Eigen::MatrixXd S11 = R1.transpose() * R1 / double(n);

  Eigen::FullPivLU<Eigen::MatrixXd> lu00(S00);
  if (!lu00.isInvertible()) fail(Errc::NumericFailure, "S00 singular");
  Eigen::MatrixXd M = S01.transpose() * lu00.inverse() * S01;

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, S11);
  if (solver.info() != Eigen::Success) {
    fail(Errc::NumericFailure, "generalized eigenproblem failed");
  }
  // Ascending from Eigen; reorder to descending.
  Eigen::Vector3d lambda = solver.eigenvalues().reverse();
  Eigen::Matrix3d vects = solver.eigenvectors().rowwise().reverse();

  for (int i = 0; i < 2; ++i) {
    if (!(lambda(i) < 1.0) || !std::isfinite(lambda(i))) {
      fail(Errc::NumericFailure, "eigenvalue out of range");
    }
  }
  // Clamp tiny negative eigenvalues from rounding so trace stats stay >= 0.
  double l0 = std::max(lambda(0), 0.0);
  double l1 = std::max(lambda(1), 0.0);
  double trace0 = -double(n) * (std::log1p(-l0) + std::log1p(-l1));
  double trace1 = -double(n) * std::log1p(-l1);

  Eigen::Vector3d b = vects.col(0);
  if (b(0) == 0.0) fail(Errc::NumericFailure, "cannot normalize beta on x");
  b /= b(0);

  // Asymptotic standard errors of the free beta rows under the first-row
  // normalization (Lutkepohl 2005, p. 297).
  Eigen::Vector3d beta = b;
  double btSb = beta.transpose() * S11 * beta;
  Eigen::Vector2d alpha = (S01 * beta) / btSb;
  Eigen::Matrix2d sigma_u =
      S00 - (S01 * beta) * (S01 * beta).transpose() / btSb;
  Eigen::FullPivLU<Eigen::Matrix2d> lu_su(sigma_u);
  if (!lu_su.isInvertible()) fail(Errc::NumericFailure, "residual covariance singular");
  double quad = alpha.transpose() * lu_su.inverse() * alpha;
  if (!(quad > 0.0)) fail(Errc::NumericFailure, "alpha quadratic form not positive");

  Eigen::MatrixXd r12 = R1.rightCols(2);
  Eigen::Matrix2d gram = r12.transpose() * r12;
  Eigen::FullPivLU<Eigen::Matrix2d> lu_g(gram);
  if (!lu_g.isInvertible()) fail(Errc::NumericFailure, "beta covariance singular");
  Eigen::Vector2d var = lu_g.inverse().diagonal() / quad;

  JohansenResult out;
  out.trace_rank0 = trace0;
  out.trace_rank1 = trace1;
  out.n = n;
  out.eigenvalues = {lambda(0), lambda(1), lambda(2)};
  out.beta = {beta(0), beta(1), beta(2)};
  out.beta_se_y = std::sqrt(var(0));
  out.beta_se_const = std::sqrt(var(1));
  return out;
}

ConvergenceResult convergence_test(std::span<const double> target,
                                   std::span<const double> portfolio,
                                   std::optional<int> nw_lag) {
  if (target.size() != portfolio.size()) {
    fail(Errc::Misaligned, "series lengths differ: " + std::to_string(target.size()) + " vs " +
                               std::to_string(portfolio.size()));
  }
  const int n = int(target.size());
  if (n < 10) {
    fail(Errc::TooShort, "convergence test needs at least 10 observations, got " +
                             std::to_string(n));
  }

  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = target[i] - portfolio[i];

  int lag = nw_lag.value_or(int(std::floor(4.0 * std::pow(n / 100.0, 2.0 / 9.0))));
  lag = std::clamp(lag, 0, n - 1);

  double alpha = sample_mean(d);
  std::vector<double> e(n);
  for (int i = 0; i < n; ++i) e[i] = d[i] - alpha;

  // Bartlett-kernel long-run variance with small-sample factor n/(n-1).
  double lrv = 0.0;
  for (double v : e) lrv += v * v;
  lrv /= double(n);
  for (int l = 1; l <= lag; ++l) {
    double gamma = 0.0;
    for (int t = l; t < n; ++t) gamma += e[t] * e[t - l];
    gamma /= double(n);
    lrv += 2.0 * (1.0 - double(l) / double(lag + 1)) * gamma;
  }
  lrv *= double(n) / double(n - 1);
  lrv = std::max(lrv, 0.0);

  ConvergenceResult out;
  out.alpha = alpha;
  out.nw_se = std::sqrt(lrv / double(n));
  out.n = n;
  out.lag_used = lag;
  out.small_sample = n < 20;
  out.degenerate = out.nw_se <= 1e-12;
  if (out.degenerate) {
    out.t_stat = std::numeric_limits<double>::quiet_NaN();
    out.p_value = std::numeric_limits<double>::quiet_NaN();
  } else {
    out.t_stat = alpha / out.nw_se;
    out.p_value = dist::student_t_two_sided_p(out.t_stat, n - 1);
  }
  return out;
}

VarianceRatioResult variance_ratio_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 3 || y.size() < 3) {
    fail(Errc::TooShort, "variance ratio test needs at least 3 observations per sample");
  }
  const int nx = int(x.size()), ny = int(y.size());
  double ssq_x = sum_sq_dev(x, sample_mean(x));
  double ssq_y = sum_sq_dev(y, sample_mean(y));
  if (ssq_y <= 0.0) fail(Errc::Degenerate, "zero variance in second sample");

  VarianceRatioResult out;
  out.df_x = nx - 1;
  out.df_y = ny - 1;
  out.sd_x = std::sqrt(ssq_x / out.df_x);
  out.sd_y = std::sqrt(ssq_y / out.df_y);
  // var_x/var_y written as (ssq_x * df_y) / (ssq_y * df_x); the canonical
  // orientation keeps F(x,y) * F(y,x) an exact reciprocal pair.
  double num = ssq_x * double(out.df_y);
  double den = ssq_y * double(out.df_x);
  out.f = num >= den ? num / den : 1.0 / (den / num);
  out.p_lower = dist::f_cdf_from_ssq(ssq_x, out.df_x, ssq_y, out.df_y);
  out.p_upper = dist::f_cdf_from_ssq(ssq_y, out.df_y, ssq_x, out.df_x);
  out.p_two_sided = std::min(1.0, 2.0 * std::min(out.p_lower, out.p_upper));
  return out;
}

std::vector<double> log_returns(std::span<const double> prices) {
  std::vector<double> out;
  if (prices.size() < 2) return out;
  out.reserve(prices.size() - 1);
  for (std::size_t i = 1; i < prices.size(); ++i) {
    if (!(prices[i] > 0.0) || !(prices[i - 1] > 0.0)) {
      fail(Errc::NonPositivePrice, "log return of non-positive price");
    }
    out.push_back(std::log(prices[i] / prices[i - 1]));
  }
  return out;
}

std::vector<double> price_changes(std::span<const double> prices) {
  std::vector<double> out;
  if (prices.size() < 2) return out;
  out.reserve(prices.size() - 1);
  for (std::size_t i = 1; i < prices.size(); ++i) out.push_back(prices[i] - prices[i - 1]);
  return out;
}

DescriptiveStats descriptive_stats(std::span<const double> series) {
  const int n = int(series.size());
  if (n < 2) fail(Errc::TooShort, "descriptive stats need at least 2 observations");

  DescriptiveStats out;
  out.n = n;
  out.mean = sample_mean(series);
  std::vector<double> sorted(series.begin(), series.end());
  std::sort(sorted.begin(), sorted.end());
  out.min = sorted.front();
  out.max = sorted.back();
  out.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : series) {
    double d = v - out.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  out.sd = std::sqrt(m2 / double(n - 1));
  m2 /= double(n);
  m3 /= double(n);
  m4 /= double(n);
  if (m2 > 0.0) {
    out.shape_defined = true;
    out.skewness = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2);
  } else {
    out.shape_defined = false;
    out.skewness = std::numeric_limits<double>::quiet_NaN();
    out.kurtosis = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace tzeff
