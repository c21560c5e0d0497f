#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disckit/errors.hpp"
#include "disckit/types.hpp"

namespace disckit {

// Candidate regression forms mapping instances-per-class to a threshold.
// All three are linear in (a, b) after transforming the covariate, so the
// fit is closed-form OLS on the transformed axis.
enum class RegressionForm {
  log_reciprocal,  // t = a + b / ln(ic)
  logarithmic,     // t = a + b * ln(ic)
  reciprocal,      // t = a + b / ic
};

inline const char* form_name(RegressionForm f) {
  switch (f) {
    case RegressionForm::log_reciprocal: return "logrecip";
    case RegressionForm::logarithmic: return "log";
    case RegressionForm::reciprocal: return "recip";
  }
  return "?";
}

inline RegressionForm parse_form(const std::string& s) {
  if (s == "logrecip") return RegressionForm::log_reciprocal;
  if (s == "log") return RegressionForm::logarithmic;
  if (s == "recip") return RegressionForm::reciprocal;
  throw DomainError("unknown regression form '" + s + "'");
}

// Smallest admissible covariate: the log forms need ln(ic) bounded away
// from 0, the reciprocal only needs ic >= 1.
inline double min_admissible_ic(RegressionForm f) {
  return f == RegressionForm::reciprocal ? 1.0 : 2.0;
}

inline double transform_covariate(RegressionForm f, double ic) {
  if (!(ic >= min_admissible_ic(f)))
    throw DomainError("instances-per-class " + std::to_string(ic) +
                      " is inadmissible for form " + form_name(f));
  switch (f) {
    case RegressionForm::log_reciprocal: return 1.0 / std::log(ic);
    case RegressionForm::logarithmic: return std::log(ic);
    case RegressionForm::reciprocal: return 1.0 / ic;
  }
  return 0.0;
}

struct FitPoint {
  double ic = 0.0;
  double t = 0.0;
};

struct FitReport {
  double r2 = 0.0;
  std::optional<double> loocv_r2;  // present when >= 3 points
  std::vector<double> residuals;
  std::vector<std::size_t> excluded;  // indices the caller removed before fitting
};

struct SignFit {
  double a = 0.0;
  double b = 0.0;
  FitReport report;
};

namespace detail {

struct OlsCoeffs {
  double a;
  double b;
};

inline OlsCoeffs ols(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw FitError("degenerate design: transformed covariate is constant");
  const double b = sxy / sxx;
  return {my - b * mx, b};
}

}  // namespace detail

// Ordinary least squares of t on the transformed covariate. Two points give
// the interpolating line; three or more also produce the leave-one-out R².
inline SignFit fit(std::span<const FitPoint> points, RegressionForm form) {
  if (points.size() < 2) throw FitError("fit needs at least 2 points");
  std::vector<double> xs(points.size());
  std::vector<double> ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    xs[i] = transform_covariate(form, points[i].ic);
    ys[i] = points[i].t;
  }
  const auto [a, b] = detail::ols(xs, ys);

  SignFit out;
  out.a = a;
  out.b = b;
  out.report.residuals.resize(points.size());
  double sse = 0.0;
  double my = 0.0;
  for (double y : ys) my += y;
  my /= static_cast<double>(ys.size());
  double sst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = ys[i] - (a + b * xs[i]);
    out.report.residuals[i] = r;
    sse += r * r;
    sst += (ys[i] - my) * (ys[i] - my);
  }
  out.report.r2 = sst == 0.0 ? (sse == 0.0 ? 1.0 : 0.0) : 1.0 - sse / sst;
  return out;
}

// R² of leave-one-out predictions: 1 - sum (t_i - t̂_-i)² / sum (t_i - t̄)²,
// each t̂_-i refit from the other points.
inline double loocv_r2(std::span<const FitPoint> points, RegressionForm form) {
  if (points.size() < 3) throw FitError("leave-one-out R² needs at least 3 points");
  const std::size_t n = points.size();
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = transform_covariate(form, points[i].ic);

  double tbar = 0.0;
  for (const auto& p : points) tbar += p.t;
  tbar /= static_cast<double>(n);
  double sst = 0.0;
  for (const auto& p : points) sst += (p.t - tbar) * (p.t - tbar);
  if (sst == 0.0) throw FitError("leave-one-out R² undefined: zero total variance");

  double sse = 0.0;
  std::vector<double> sub_x(n - 1);
  std::vector<double> sub_y(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      sub_x[w] = xs[j];
      sub_y[w] = points[j].t;
      ++w;
    }
    const auto [a, b] = detail::ols(sub_x, sub_y);
    const double pred = a + b * xs[i];
    sse += (points[i].t - pred) * (points[i].t - pred);
  }
  return 1.0 - sse / sst;
}

// Both sign curves of a task-size model. The signs are fit independently.
struct ThresholdRegression {
  RegressionForm form = RegressionForm::log_reciprocal;
  double a_minus = 0.0;
  double b_minus = 0.0;
  double a_plus = 0.0;
  double b_plus = 0.0;
  std::size_t n_points = 0;
};

inline ThresholdPair predict(const ThresholdRegression& model, double ic) {
  const double x = transform_covariate(model.form, ic);
  ThresholdPair pair{model.a_minus + model.b_minus * x, model.a_plus + model.b_plus * x};
  if (!(pair.t_plus > 0.0))
    throw PredictionError("predicted t_plus is not positive at ic=" + std::to_string(ic));
  if (!(pair.t_minus < 0.0))
    throw PredictionError("predicted t_minus is not negative at ic=" + std::to_string(ic));
  return pair;
}

struct ThresholdModelFit {
  ThresholdRegression model;
  FitReport report_minus;
  FitReport report_plus;
};

// Fits both signs on matched point lists and checks the fitted curves keep
// valid threshold signs over the training range.
inline ThresholdModelFit fit_threshold_model(std::span<const FitPoint> minus_points,
                                             std::span<const FitPoint> plus_points,
                                             RegressionForm form) {
  if (minus_points.size() != plus_points.size())
    throw FitError("sign point lists have different sizes");
  SignFit fm = fit(minus_points, form);
  SignFit fp = fit(plus_points, form);
  if (minus_points.size() >= 3) {
    fm.report.loocv_r2 = loocv_r2(minus_points, form);
    fp.report.loocv_r2 = loocv_r2(plus_points, form);
  }
  ThresholdModelFit out;
  out.model = ThresholdRegression{form, fm.a, fm.b, fp.a, fp.b, minus_points.size()};
  out.report_minus = std::move(fm.report);
  out.report_plus = std::move(fp.report);
  for (const auto& p : minus_points) predict(out.model, p.ic);  // sign check over training range
  return out;
}

}  // namespace disckit
