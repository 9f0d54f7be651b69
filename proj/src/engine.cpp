#include "leosim/engine.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

#include "leosim/errors.hpp"

namespace leosim::engine {
namespace {

/// Chunked parallel map over [0, n). Workers write to disjoint indices;
/// callers aggregate afterwards in index order, so results never depend on
/// the worker count.
void parallel_for(int n, int workers, const std::function<void(int)>& body) {
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1 || n < 2) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    workers = std::min(workers, n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            try {
                for (int i = begin; i < end; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

MetricSummary summarize95(const std::vector<double>& samples) {
    return summarize(samples, 0.95);
}

}  // namespace

void ConstellationDesign::validate() const {
    if (name.empty()) throw ConfigError("constellation design: name must be set");
    if (satellite_count < 1)
        throw ConfigError("constellation design '" + name +
                          "': satellite_count must be >= 1");
    struct Field {
        const char* what;
        double value;
    };
    for (const Field& f : {Field{"altitude_km", altitude_km},
                           Field{"frequency_ghz", frequency_ghz},
                           Field{"channel_bandwidth_mhz", channel_bandwidth_mhz},
                           Field{"eirp_dbw", eirp_dbw},
                           Field{"receiver_gain_dbi", receiver_gain_dbi},
                           Field{"system_temperature_k", system_temperature_k},
                           Field{"min_elevation_deg", min_elevation_deg},
                           Field{"antenna_diameter_m", antenna_diameter_m},
                           Field{"satellite_mass_kg", satellite_mass_kg}})
        if (!(f.value > 0.0) || !std::isfinite(f.value))
            throw ConfigError("constellation design '" + name + "': " + f.what +
                              " must be positive");
    if (channels < 1)
        throw ConfigError("constellation design '" + name + "': channels must be >= 1");
    if (!(reuse_factor >= 1.0))
        throw ConfigError("constellation design '" + name +
                          "': reuse_factor must be >= 1");
    if (modulation_cap) capacity::modulation_order(*modulation_cap);
}

linkbudget::ReceiverNoiseModel default_noise_for(const ConstellationDesign& design) {
    linkbudget::ReceiverNoiseModel noise;
    noise.system_temperature_k = design.system_temperature_k;
    noise.bandwidth_hz = design.channel_bandwidth_mhz * 1e6;
    return noise;
}

void SimulationRequest::validate() const {
    design.validate();
    noise.validate();
    constants.validate();
    if (iterations < 1) throw ConfigError("simulation request: iterations must be >= 1");
    if (satellite_count_override && *satellite_count_override < 1)
        throw ConfigError("simulation request: satellite count override must be >= 1");
    if (modcod.entries().empty())
        throw ConfigError("simulation request: MODCOD table is empty");
    if (design.modulation_cap)  // fails early if the cap excludes everything
        capacity::lookup_spectral_efficiency(0.0, modcod, design.modulation_cap);
}

int SimulationRequest::effective_satellite_count() const {
    return satellite_count_override.value_or(design.satellite_count);
}

SimulationResult run_monte_carlo(const SimulationRequest& request) {
    request.validate();

    const int count = request.effective_satellite_count();
    const auto geo =
        geometry::constellation_geometry(count, request.design.altitude_km,
                                         request.constants);

    // Deterministic per-run terms.
    const double eirp_dbw = request.design.eirp_dbw;
    const double g_over_t = linkbudget::figure_of_merit(
        request.design.receiver_gain_dbi, request.noise.noise_figure_db,
        request.noise.ambient_temperature_k, request.noise.antenna_temperature_k);
    const double noise_dbw = linkbudget::noise_power(
        request.noise.system_temperature_k, request.noise.bandwidth_hz,
        request.constants);

    const int n = request.iterations;
    std::vector<IterationRecord> draws(n);
    parallel_for(n, request.workers, [&](int i) {
        RandomStream stream(
            derive_stream_seed(request.master_seed, static_cast<std::uint64_t>(i)));
        IterationRecord& rec = draws[i];
        rec.iteration = i;
        rec.link.shadowing_db = request.shadowing.draw(stream);
        rec.link.fspl_db = linkbudget::free_space_path_loss(
            geo.slant_path_km, request.design.frequency_ghz, rec.link.shadowing_db);
        rec.link.eirp_dbw = eirp_dbw;
        rec.link.g_over_t_db_k = g_over_t;
        rec.link.noise_dbw = noise_dbw;
        rec.link.cnr_db = linkbudget::carrier_to_noise(
            eirp_dbw, g_over_t, rec.link.fspl_db, request.noise.other_losses_db,
            noise_dbw);
        rec.capacity.spectral_efficiency = capacity::lookup_spectral_efficiency(
            rec.link.cnr_db, request.modcod, request.design.modulation_cap);
        rec.capacity.channel_capacity_mbps = capacity::channel_capacity(
            rec.capacity.spectral_efficiency, request.design.channel_bandwidth_mhz,
            request.design.channels, request.design.reuse_factor);
        rec.capacity.area_capacity_mbps_km2 = capacity::area_capacity(
            rec.capacity.channel_capacity_mbps, geo.coverage_area_km2);
    });

    SimulationResult result;
    result.summary.constellation = request.design.name;
    result.summary.satellite_count = count;
    result.summary.iterations = n;
    result.summary.master_seed = request.master_seed;
    result.summary.geometry = geo;

    std::vector<double> samples(n);
    const auto collect = [&](auto field) {
        for (int i = 0; i < n; ++i) samples[i] = field(draws[i]);
        return summarize95(samples);
    };
    result.summary.fspl_db = collect([](const IterationRecord& r) { return r.link.fspl_db; });
    result.summary.cnr_db = collect([](const IterationRecord& r) { return r.link.cnr_db; });
    result.summary.spectral_efficiency =
        collect([](const IterationRecord& r) { return r.capacity.spectral_efficiency; });
    result.summary.channel_capacity_mbps =
        collect([](const IterationRecord& r) { return r.capacity.channel_capacity_mbps; });
    result.summary.area_capacity_mbps_km2 =
        collect([](const IterationRecord& r) { return r.capacity.area_capacity_mbps_km2; });
    result.draws = std::move(draws);
    return result;
}

std::vector<SimulationSummary> sweep_constellation_size(const SimulationRequest& request,
                                                        std::span<const int> counts) {
    if (counts.empty())
        throw ConfigError("sweep_constellation_size: counts must be non-empty");
    std::vector<SimulationSummary> summaries;
    summaries.reserve(counts.size());
    for (int count : counts) {
        SimulationRequest point = request;
        point.satellite_count_override = count;
        summaries.push_back(run_monte_carlo(point).summary);
    }
    return summaries;
}

std::vector<demand::DemandResult> sweep_subscriber_density(
    const SimulationSummary& summary, const economics::AssetCost& asset,
    std::span<const double> densities, double overbooking_factor,
    demand::CostDenominator denominator) {
    if (densities.empty())
        throw ConfigError("sweep_subscriber_density: densities must be non-empty");
    demand::SupplyPoint supply;
    supply.area_capacity_mbps_km2 = summary.area_capacity_mbps_km2.mean;
    supply.coverage_area_km2 = summary.geometry.coverage_area_km2;
    supply.asset_npv_usd = asset.asset_npv * 1e6;  // M$ -> US$

    std::vector<demand::DemandResult> results;
    results.reserve(densities.size());
    for (double density : densities) {
        const auto scenario =
            demand::DemandScenario::from_subscribers(density, overbooking_factor);
        results.push_back(demand::evaluate(scenario, supply, denominator));
    }
    return results;
}

}  // namespace leosim::engine
