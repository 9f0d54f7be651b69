// Downlink budget: shadowed free-space path loss, EIRP, receiver figure
// of merit, noise power and the resulting carrier-to-noise ratio.
#pragma once

#include "leosim/constants.hpp"
#include "leosim/random.hpp"

namespace leosim::linkbudget {

/// Lognormal shadowing offset added to the deterministic path loss, in dB.
///
/// This is the single place the parameterization is defined. A draw is
///
///     X = clamp(exp(location + scale * Z), clip_min_db, clip_max_db),
///     Z ~ N(0, 1),
///
/// i.e. X is lognormal in the dB domain. from_db_moments() picks location
/// and scale by moment matching so that the unclipped distribution has the
/// requested mean and standard deviation in dB:
///
///     scale^2  = ln(1 + (std/mean)^2)
///     location = ln(mean) - scale^2 / 2
///
/// Defaults are mean 1 dB, std 7.8 dB, clipped to [0, 40] dB. Clipping the
/// heavy upper tail lowers the realized moments; analytic_mean_db() and
/// analytic_std_db() give the closed-form moments of the clipped
/// distribution, which the sample statistics converge to.
class ShadowingModel {
public:
    /// Moment-matched parameterization from dB-domain mean and std.
    static ShadowingModel from_db_moments(double mean_db, double std_db,
                                          double clip_min_db = 0.0,
                                          double clip_max_db = 40.0);

    /// Raw log-space parameterization.
    ShadowingModel(double log_location, double log_scale,
                   double clip_min_db, double clip_max_db);

    /// Default model: mean 1 dB, std 7.8 dB, clip [0, 40] dB.
    ShadowingModel() : ShadowingModel(from_db_moments(1.0, 7.8)) {}

    /// One shadowing offset in dB. Consumes exactly two uniforms.
    double draw(RandomStream& stream) const;

    /// Mean of the clipped distribution, in dB.
    double analytic_mean_db() const;
    /// Standard deviation of the clipped distribution, in dB.
    double analytic_std_db() const;

    double log_location() const { return log_location_; }
    double log_scale() const { return log_scale_; }
    double clip_min_db() const { return clip_min_db_; }
    double clip_max_db() const { return clip_max_db_; }

private:
    double log_location_;
    double log_scale_;
    double clip_min_db_;
    double clip_max_db_;
};

/// Receiver-side parameters of the CNR equation.
struct ReceiverNoiseModel {
    double noise_figure_db = 1.2;
    double ambient_temperature_k = 290.0;
    double antenna_temperature_k = 290.0;
    double other_losses_db = 18.84;  // aggregate of every loss not in the FSPL
    double system_temperature_k = 290.0;
    double bandwidth_hz = 250e6;

    void validate() const;
};

/// One Monte Carlo iteration of the budget, all terms in dB / dBW.
struct LinkBudgetDraw {
    double shadowing_db = 0.0;
    double fspl_db = 0.0;
    double eirp_dbw = 0.0;
    double g_over_t_db_k = 0.0;
    double noise_dbw = 0.0;
    double cnr_db = 0.0;
};

/// 92.45 + 20 log10(d_km) + 20 log10(f_GHz) + shadowing; the dB form of
/// (4 pi d f / c)^2 plus the stochastic term.
double free_space_path_loss(double path_km, double frequency_ghz, double shadowing_db);

/// 10 log10(gain * power), dBW.
double eirp(double transmit_gain, double transmit_power_w);

/// Gr + NF - 10 log10(T0 + (Ta - T0) * 10^(-0.1 NF)), dB/K.
double figure_of_merit(double receiver_gain_dbi, double noise_figure_db,
                       double ambient_temperature_k, double antenna_temperature_k);

/// 10 log10(k T B), dBW.
double noise_power(double system_temperature_k, double bandwidth_hz,
                   const PhysicalConstants& constants = {});

/// EIRP + G/T - FSPL - other losses - noise, dB.
double carrier_to_noise(double eirp_dbw, double g_over_t_db_k, double fspl_db,
                        double other_losses_db, double noise_dbw);

}  // namespace leosim::linkbudget
