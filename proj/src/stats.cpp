#include "leosim/stats.hpp"

#include <cmath>
#include <numbers>

#include "leosim/errors.hpp"

namespace leosim {
namespace {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Acklam's rational approximation of the inverse normal CDF (~1e-9).
double acklam(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInputError("normal_quantile: p must be in (0, 1)");
    double x = acklam(p);
    // Two Newton steps push the approximation to machine precision.
    for (int i = 0; i < 2; ++i) {
        const double err = normal_cdf(x) - p;
        x -= err / normal_pdf(x);
    }
    return x;
}

MetricSummary summarize(std::span<const double> samples, double confidence) {
    if (samples.empty())
        throw InvalidInputError("summarize: need at least one sample");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw InvalidInputError("summarize: confidence must be in (0, 1)");

    const auto n = samples.size();
    double sum = 0.0;
    for (double s : samples) sum += s;
    const double mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (double s : samples) sq += (s - mean) * (s - mean);
    const double std_dev = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) : 0.0;

    const double z = normal_quantile(0.5 + confidence / 2.0);
    const double halfwidth = z * std_dev / std::sqrt(static_cast<double>(n));
    return {mean, std_dev, halfwidth};
}

}  // namespace leosim
