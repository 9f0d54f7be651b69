// Summary statistics for Monte Carlo outputs.
#pragma once

#include <span>

namespace leosim {

struct MetricSummary {
    double mean = 0.0;
    double sample_std = 0.0;    // n-1 denominator; 0 for a single sample
    double ci_halfwidth = 0.0;  // normal approximation: z * std / sqrt(n)
};

/// Sample mean, standard deviation and confidence-interval halfwidth.
/// `confidence` is the two-sided level, e.g. 0.95. Throws on empty input.
MetricSummary summarize(std::span<const double> samples, double confidence);

/// Inverse standard normal CDF. Acklam's rational approximation refined
/// with two Newton steps on erfc; accurate to full double precision.
double normal_quantile(double p);

}  // namespace leosim
