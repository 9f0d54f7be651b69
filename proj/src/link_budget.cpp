#include "leosim/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "leosim/errors.hpp"

namespace leosim::linkbudget {
namespace {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace

ShadowingModel ShadowingModel::from_db_moments(double mean_db, double std_db,
                                               double clip_min_db, double clip_max_db) {
    if (!(mean_db > 0.0))
        throw InvalidInputError("ShadowingModel: mean_db must be positive");
    if (!(std_db > 0.0))
        throw InvalidInputError("ShadowingModel: std_db must be positive");
    const double ratio = std_db / mean_db;
    const double scale2 = std::log(1.0 + ratio * ratio);
    const double location = std::log(mean_db) - scale2 / 2.0;
    return {location, std::sqrt(scale2), clip_min_db, clip_max_db};
}

ShadowingModel::ShadowingModel(double log_location, double log_scale,
                               double clip_min_db, double clip_max_db)
    : log_location_(log_location),
      log_scale_(log_scale),
      clip_min_db_(clip_min_db),
      clip_max_db_(clip_max_db) {
    if (!std::isfinite(log_location))
        throw InvalidInputError("ShadowingModel: log_location must be finite");
    if (!(log_scale >= 0.0))
        throw InvalidInputError("ShadowingModel: log_scale must be >= 0");
    if (clip_min_db < 0.0 || !(clip_max_db > clip_min_db))
        throw InvalidInputError("ShadowingModel: need 0 <= clip_min < clip_max");
}

double ShadowingModel::draw(RandomStream& stream) const {
    const double x = std::exp(log_location_ + log_scale_ * stream.normal());
    return std::clamp(x, clip_min_db_, clip_max_db_);
}

// Moments of min(max(X, a), b) for lognormal X: partial expectations of X
// and X^2 over [a, b] plus the point masses that clipping piles onto the
// bounds. E[X^k 1{X<=t}] = exp(k mu + k^2 s^2 / 2) Phi((ln t - mu - k s^2)/s).
double ShadowingModel::analytic_mean_db() const {
    const double mu = log_location_, s = log_scale_;
    const double a = clip_min_db_, b = clip_max_db_;
    if (s == 0.0) return std::clamp(std::exp(mu), a, b);
    const double ex = std::exp(mu + s * s / 2.0);
    const double upper = normal_cdf((std::log(b) - mu - s * s) / s);
    const double lower = a > 0.0 ? normal_cdf((std::log(a) - mu - s * s) / s) : 0.0;
    const double p_below = a > 0.0 ? normal_cdf((std::log(a) - mu) / s) : 0.0;
    const double p_above = 1.0 - normal_cdf((std::log(b) - mu) / s);
    return a * p_below + ex * (upper - lower) + b * p_above;
}

double ShadowingModel::analytic_std_db() const {
    const double mu = log_location_, s = log_scale_;
    const double a = clip_min_db_, b = clip_max_db_;
    if (s == 0.0) return 0.0;
    const double ex2 = std::exp(2.0 * mu + 2.0 * s * s);
    const double upper = normal_cdf((std::log(b) - mu - 2.0 * s * s) / s);
    const double lower = a > 0.0 ? normal_cdf((std::log(a) - mu - 2.0 * s * s) / s) : 0.0;
    const double p_below = a > 0.0 ? normal_cdf((std::log(a) - mu) / s) : 0.0;
    const double p_above = 1.0 - normal_cdf((std::log(b) - mu) / s);
    const double m2 = a * a * p_below + ex2 * (upper - lower) + b * b * p_above;
    const double m1 = analytic_mean_db();
    return std::sqrt(std::max(m2 - m1 * m1, 0.0));
}

void ReceiverNoiseModel::validate() const {
    if (!(ambient_temperature_k > 0.0))
        throw InvalidInputError("ReceiverNoiseModel: ambient temperature must be > 0 K");
    if (!(antenna_temperature_k > 0.0))
        throw InvalidInputError("ReceiverNoiseModel: antenna temperature must be > 0 K");
    if (!(system_temperature_k > 0.0))
        throw InvalidInputError("ReceiverNoiseModel: system temperature must be > 0 K");
    if (!(bandwidth_hz > 0.0))
        throw InvalidInputError("ReceiverNoiseModel: bandwidth must be positive");
    if (other_losses_db < 0.0)
        throw InvalidInputError("ReceiverNoiseModel: other losses must be >= 0 dB");
    if (!std::isfinite(noise_figure_db))
        throw InvalidInputError("ReceiverNoiseModel: noise figure must be finite");
}

double free_space_path_loss(double path_km, double frequency_ghz, double shadowing_db) {
    if (!(path_km > 0.0))
        throw InvalidInputError("free_space_path_loss: path must be positive");
    if (!(frequency_ghz > 0.0))
        throw InvalidInputError("free_space_path_loss: frequency must be positive");
    if (!std::isfinite(shadowing_db))
        throw InvalidInputError("free_space_path_loss: shadowing must be finite");
    return 92.45 + 20.0 * std::log10(path_km) + 20.0 * std::log10(frequency_ghz) +
           shadowing_db;
}

double eirp(double transmit_gain, double transmit_power_w) {
    if (!(transmit_gain > 0.0))
        throw InvalidInputError("eirp: gain must be positive");
    if (!(transmit_power_w > 0.0))
        throw InvalidInputError("eirp: power must be positive");
    return 10.0 * std::log10(transmit_gain * transmit_power_w);
}

double figure_of_merit(double receiver_gain_dbi, double noise_figure_db,
                       double ambient_temperature_k, double antenna_temperature_k) {
    if (!(ambient_temperature_k > 0.0) || !(antenna_temperature_k > 0.0))
        throw InvalidInputError("figure_of_merit: temperatures must be > 0 K");
    const double effective =
        ambient_temperature_k + (antenna_temperature_k - ambient_temperature_k) *
                                    std::pow(10.0, -0.1 * noise_figure_db);
    return receiver_gain_dbi + noise_figure_db - 10.0 * std::log10(effective);
}

double noise_power(double system_temperature_k, double bandwidth_hz,
                   const PhysicalConstants& constants) {
    constants.validate();
    if (!(system_temperature_k > 0.0))
        throw InvalidInputError("noise_power: temperature must be > 0 K");
    if (!(bandwidth_hz > 0.0))
        throw InvalidInputError("noise_power: bandwidth must be positive");
    return 10.0 * std::log10(constants.boltzmann_j_k * system_temperature_k * bandwidth_hz);
}

double carrier_to_noise(double eirp_dbw, double g_over_t_db_k, double fspl_db,
                        double other_losses_db, double noise_dbw) {
    for (double v : {eirp_dbw, g_over_t_db_k, fspl_db, other_losses_db, noise_dbw})
        if (!std::isfinite(v))
            throw InvalidInputError("carrier_to_noise: all terms must be finite");
    return eirp_dbw + g_over_t_db_k - fspl_db - other_losses_db - noise_dbw;
}

}  // namespace leosim::linkbudget
