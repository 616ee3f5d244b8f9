#include "flowgauge/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flowgauge {

namespace detail {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 500;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double student_t_two_tailed(double t, double df) {
    double x = df / (df + t * t);
    return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

} // namespace detail

double rescale_likert(double v) {
    if (!(v >= 1.0 && v <= 7.0)) {
        throw DomainError("likert value " + std::to_string(v) + " outside [1,7]");
    }
    return (v - 1.0) / 6.0;
}

CorrelationResult pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DomainError("pearson: length mismatch");
    const std::size_t n = xs.size();
    if (n < 3) throw DomainError("pearson: need at least 3 samples");

    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DomainError("pearson: undefined correlation, zero variance");
    }

    CorrelationResult result;
    result.n = static_cast<int>(n);
    result.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    const double df = static_cast<double>(n - 2);
    if (std::fabs(result.r) >= 1.0) {
        result.p = 0.0;
    } else {
        const double t = result.r * std::sqrt(df / (1.0 - result.r * result.r));
        result.p = detail::student_t_two_tailed(t, df);
    }
    return result;
}

NormalityResult ks_normality(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    if (n < 4) throw DomainError("ks_normality: need at least 4 samples");

    NormalityResult result;
    result.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - result.mean) * (x - result.mean);
    result.stddev = std::sqrt(ss / (n - 1));
    if (result.stddev == 0.0) {
        throw DomainError("ks_normality: degenerate sample, zero variance");
    }

    std::vector<double> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = detail::normal_cdf((sorted[i] - result.mean) / result.stddev);
        d = std::max(d, std::fabs((i + 1.0) / n - cdf));
        d = std::max(d, std::fabs(static_cast<double>(i) / n - cdf));
    }
    result.d = d;

    const double x = std::sqrt(static_cast<double>(n)) * d;
    double p = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * x * x);
        p += term;
        if (std::fabs(term) < 1e-12) break;
    }
    result.p = std::clamp(p, 0.0, 1.0);
    return result;
}

double mean_shift(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DomainError("mean_shift: length mismatch");
    if (xs.empty()) throw DomainError("mean_shift: empty input");
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += xs[i] - ys[i];
    return sum / static_cast<double>(xs.size());
}

} // namespace flowgauge
