#pragma once

#include "flowgauge/error.hpp"

#include <vector>

namespace flowgauge {

struct CorrelationResult {
    double r = 0.0;
    double p = 1.0; // two-tailed, Student-t with n-2 df
    int n = 0;
};

struct NormalityResult {
    double mean = 0.0;
    double stddev = 0.0; // sample (n-1)
    double d = 0.0;      // KS statistic
    double p = 1.0;      // asymptotic Kolmogorov distribution
};

/// Maps a 7-point Likert value from [1,7] onto [0,1].
double rescale_likert(double v);

/// Product-moment correlation with two-tailed significance.
CorrelationResult pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// One-sample Kolmogorov-Smirnov test against a normal distribution with
/// parameters estimated from the data. The p-value uses the classic
/// asymptotic series (no small-sample correction).
NormalityResult ks_normality(const std::vector<double>& xs);

/// mean(xs - ys), elementwise.
double mean_shift(const std::vector<double>& xs, const std::vector<double>& ys);

namespace detail {
/// Regularized incomplete beta function I_x(a, b), absolute accuracy ~1e-8.
double regularized_incomplete_beta(double a, double b, double x);
double normal_cdf(double z);
double student_t_two_tailed(double t, double df);
} // namespace detail

} // namespace flowgauge
