// leosim command line.
//
// Subcommands: simulate, sweep-size, sweep-density, cost, assess, validate.
// Diagnostics go to stderr, data to files (or stdout for validate).
// Exit codes: 0 success, 2 configuration error, 3 data error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leosim/assets.hpp"
#include "leosim/capacity.hpp"
#include "leosim/demand.hpp"
#include "leosim/economics.hpp"
#include "leosim/engine.hpp"
#include "leosim/errors.hpp"
#include "leosim/geometry.hpp"
#include "leosim/io.hpp"
#include "leosim/regional.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace leosim {
namespace {

struct GlobalOptions {
    std::uint64_t seed = 0;
    int iterations = 100;
    int workers = 0;  // 0 = available parallelism
    std::string output_dir = ".";
    std::vector<std::string> formats;  // subset of {csv, json}; empty = both

    bool want(const std::string& fmt) const {
        return formats.empty() ||
               std::find(formats.begin(), formats.end(), fmt) != formats.end();
    }
};

/// Timestamps live only in this sidecar; data files stay byte-identical
/// across reruns.
void log_run(const GlobalOptions& g, const std::string& line) {
    std::error_code ec;
    fs::create_directories(g.output_dir, ec);
    std::ofstream log(fs::path(g.output_dir) / "run.log", std::ios::app);
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    log << stamp << ' ' << line << '\n';
}

void emit(const GlobalOptions& g, const fs::path& name, std::string_view content) {
    const fs::path path = fs::path(g.output_dir) / name;
    io::write_atomic(path, content);
    std::cerr << "wrote " << path.string() << '\n';
    log_run(g, "wrote " + path.string());
}

json noise_to_json(const linkbudget::ReceiverNoiseModel& n) {
    return json{{"noise_figure_db", n.noise_figure_db},
                {"ambient_temperature_k", n.ambient_temperature_k},
                {"antenna_temperature_k", n.antenna_temperature_k},
                {"other_losses_db", n.other_losses_db},
                {"system_temperature_k", n.system_temperature_k},
                {"bandwidth_hz", n.bandwidth_hz}};
}

json shadowing_to_json(const linkbudget::ShadowingModel& s) {
    return json{{"log_location", s.log_location()},
                {"log_scale", s.log_scale()},
                {"clip_min_db", s.clip_min_db()},
                {"clip_max_db", s.clip_max_db()}};
}

capacity::ModcodTable load_modcod(const std::string& path) {
    if (path.empty())
        return capacity::ModcodTable::from_csv_text(assets::modcod_csv(), "builtin:modcod");
    return capacity::ModcodTable::from_csv_file(path);
}

engine::SimulationRequest make_request(const io::ConstellationAsset& asset,
                                       const GlobalOptions& g,
                                       std::optional<int> satellites,
                                       double other_losses_db,
                                       const std::string& modcod_path) {
    engine::SimulationRequest request;
    request.design = asset.design;
    request.satellite_count_override = satellites;
    request.iterations = g.iterations;
    request.master_seed = g.seed;
    request.noise = engine::default_noise_for(asset.design);
    request.noise.other_losses_db = other_losses_db;
    request.modcod = load_modcod(modcod_path);
    request.workers = g.workers;
    return request;
}

/// The reproducibility-relevant configuration. Worker count and output
/// options are deliberately excluded: they cannot change results.
json request_config(const char* command, const engine::SimulationRequest& request) {
    return json{{"command", command},
                {"design", io::design_to_json(request.design)},
                {"satellite_count", request.effective_satellite_count()},
                {"iterations", request.iterations},
                {"master_seed", request.master_seed},
                {"noise", noise_to_json(request.noise)},
                {"shadowing", shadowing_to_json(request.shadowing)}};
}

economics::AssetCost asset_cost_for(const io::ConstellationAsset& asset,
                                    int satellite_count,
                                    const economics::FinancialAssumptions& assumptions) {
    if (!asset.costs)
        throw ConfigError("constellation '" + asset.design.name +
                          "' has no cost book; supply one under \"costs\"");
    return economics::allocate_per_satellite(*asset.costs, satellite_count, assumptions);
}

std::vector<double> density_grid(double from, double to, int steps, bool log_spaced) {
    if (steps < 1) throw ConfigError("sweep: steps must be >= 1");
    if (steps == 1) return {from};
    if (!(from < to)) throw ConfigError("sweep: start must be below stop");
    if (log_spaced && !(from > 0.0))
        throw ConfigError("sweep: log spacing needs a positive start");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / (steps - 1);
        grid[i] = log_spaced ? from * std::pow(to / from, f) : from + (to - from) * f;
    }
    return grid;
}

// ---- subcommands ----------------------------------------------------------

void cmd_simulate(const GlobalOptions& g, const std::string& constellation,
                  std::optional<int> satellites, double other_losses,
                  const std::string& modcod_path) {
    const auto asset = io::load_constellation(constellation);
    const auto request = make_request(asset, g, satellites, other_losses, modcod_path);
    const auto result = engine::run_monte_carlo(request);
    const json prov = io::provenance(g.seed, request_config("simulate", request));

    if (g.want("json")) {
        const json out{{"provenance", prov},
                       {"summary", io::summary_to_json(result.summary)}};
        emit(g, "summary_" + asset.design.name + ".json", out.dump(2) + "\n");
    }
    if (g.want("csv")) {
        emit(g, "draws_" + asset.design.name + ".csv",
             io::csv_preamble(prov) + io::draws_to_csv(result.draws));
    }
    std::cerr << asset.design.name << ": mean FSPL " << result.summary.fspl_db.mean
              << " dB, mean CNR " << result.summary.cnr_db.mean << " dB, mean capacity "
              << result.summary.channel_capacity_mbps.mean << " Mbps\n";
}

void cmd_sweep_size(const GlobalOptions& g, const std::string& constellation,
                    const std::vector<int>& counts, double other_losses,
                    const std::string& modcod_path) {
    const auto asset = io::load_constellation(constellation);
    const auto request = make_request(asset, g, std::nullopt, other_losses, modcod_path);
    const auto summaries = engine::sweep_constellation_size(request, counts);

    json config = request_config("sweep-size", request);
    config["counts"] = counts;
    const json prov = io::provenance(g.seed, config);

    if (g.want("csv"))
        emit(g, "sweep_size_" + asset.design.name + ".csv",
             io::csv_preamble(prov) + io::size_sweep_to_csv(summaries));
    if (g.want("json")) {
        json points = json::array();
        for (const auto& s : summaries) points.push_back(io::summary_to_json(s));
        const json out{{"provenance", prov}, {"points", points}};
        emit(g, "sweep_size_" + asset.design.name + ".json", out.dump(2) + "\n");
    }
}

void cmd_sweep_density(const GlobalOptions& g, const std::string& constellation,
                       double from, double to, int steps, bool log_spaced, double obf,
                       std::optional<double> aggregate_mbps, bool per_subscriber_cost,
                       const economics::FinancialAssumptions& assumptions,
                       double other_losses, const std::string& modcod_path) {
    const auto asset = io::load_constellation(constellation);
    const auto request = make_request(asset, g, std::nullopt, other_losses, modcod_path);
    const auto densities = density_grid(from, to, steps, log_spaced);

    engine::SimulationSummary summary;
    if (aggregate_mbps) {
        // Pinned supply: skip the Monte Carlo and spread the given aggregate
        // over the design's coverage area.
        summary.constellation = asset.design.name;
        summary.satellite_count = request.effective_satellite_count();
        summary.iterations = 0;
        summary.master_seed = g.seed;
        summary.geometry = geometry::constellation_geometry(
            summary.satellite_count, asset.design.altitude_km, request.constants);
        summary.channel_capacity_mbps.mean = *aggregate_mbps;
        summary.area_capacity_mbps_km2.mean =
            *aggregate_mbps / summary.geometry.coverage_area_km2;
    } else {
        summary = engine::run_monte_carlo(request).summary;
    }

    const auto cost = asset_cost_for(asset, summary.satellite_count, assumptions);
    const auto mode = per_subscriber_cost ? demand::CostDenominator::subscribers
                                          : demand::CostDenominator::active_users;
    const auto results =
        engine::sweep_subscriber_density(summary, cost, densities, obf, mode);

    json config = request_config("sweep-density", request);
    config["densities"] = densities;
    config["overbooking_factor"] = obf;
    config["cost_denominator"] = per_subscriber_cost ? "subscribers" : "active_users";
    config["assumptions"] = json{{"discount_rate", assumptions.discount_rate},
                                 {"study_period_years", assumptions.study_period_years}};
    if (aggregate_mbps) config["pinned_aggregate_mbps"] = *aggregate_mbps;
    const json prov = io::provenance(g.seed, config);

    if (g.want("csv"))
        emit(g, "sweep_density_" + asset.design.name + ".csv",
             io::csv_preamble(prov) + io::density_sweep_to_csv(densities, results));
    if (g.want("json")) {
        json points = json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            json point{{"subscriber_density", densities[i]},
                       {"active_user_density", r.active_user_density},
                       {"uncontended", r.uncontended}};
            if (!r.uncontended) {
                point["capacity_per_user_mbps"] = r.capacity_per_user_mbps;
                point["cost_per_user_usd"] = r.cost_per_user_usd;
            }
            points.push_back(std::move(point));
        }
        const json out{{"provenance", prov},
                       {"asset_npv_musd", cost.asset_npv},
                       {"points", points}};
        emit(g, "sweep_density_" + asset.design.name + ".json", out.dump(2) + "\n");
    }
}

void cmd_cost(const GlobalOptions& g, const std::string& constellation,
              std::optional<int> satellites,
              const economics::FinancialAssumptions& assumptions) {
    const auto asset = io::load_constellation(constellation);
    const int count = satellites.value_or(asset.design.satellite_count);
    if (!asset.costs)
        throw ConfigError("constellation '" + asset.design.name +
                          "' has no cost book; supply one under \"costs\"");
    const auto& book = *asset.costs;

    const double fleet_capex = economics::capex_total(book, count);
    const double fleet_opex = economics::opex_annual(book, count);
    const auto per_sat = economics::allocate_per_satellite(book, count, assumptions);
    const auto terms =
        economics::discounted_opex_terms(per_sat.opex_annual_per_satellite, assumptions);

    const json config{{"command", "cost"},
                      {"constellation", asset.design.name},
                      {"satellite_count", count},
                      {"costs", io::cost_book_to_json(book)},
                      {"assumptions",
                       json{{"discount_rate", assumptions.discount_rate},
                            {"study_period_years", assumptions.study_period_years},
                            {"start_year", assumptions.start_year}}}};
    const json out{
        {"provenance", io::provenance(g.seed, config)},
        {"constellation", asset.design.name},
        {"satellite_count", count},
        {"fleet", json{{"capex_total_musd", fleet_capex}, {"opex_annual_musd", fleet_opex}}},
        {"per_satellite", json{{"capex_musd", per_sat.capex_per_satellite},
                               {"opex_annual_musd", per_sat.opex_annual_per_satellite},
                               {"discounted_opex_terms_musd", terms},
                               {"asset_npv_musd", per_sat.asset_npv}}}};
    emit(g, "cost_" + asset.design.name + ".json", out.dump(2) + "\n");
}

void cmd_assess(const GlobalOptions& g, const std::string& regions_path,
                const std::vector<std::string>& constellations,
                const regional::AssessOptions& options, bool skip_invalid,
                const std::vector<std::string>& pins,
                const economics::FinancialAssumptions& assumptions,
                double other_losses, const std::string& modcod_path) {
    regional::LoadOptions load_options;
    load_options.skip_invalid = skip_invalid;
    const auto regions = regional::load_regions(regions_path, load_options);

    // name -> pinned aggregate Mbps
    std::vector<std::pair<std::string, double>> pinned;
    for (const auto& pin : pins) {
        const auto eq = pin.find('=');
        double mbps = 0.0;
        std::size_t used = 0;
        try {
            mbps = std::stod(pin.substr(eq + 1), &used);
        } catch (const std::exception&) {
        }
        if (eq == std::string::npos || used != pin.size() - eq - 1 || !(mbps > 0.0))
            throw ConfigError("--pin expects name=mbps, got '" + pin + "'");
        pinned.emplace_back(pin.substr(0, eq), mbps);
    }

    std::vector<regional::ConstellationSupply> supplies;
    json supply_config = json::array();
    for (const auto& name : constellations) {
        const auto asset = io::load_constellation(name);
        const auto request = make_request(asset, g, std::nullopt, other_losses, modcod_path);
        const int count = request.effective_satellite_count();
        const auto geo = geometry::constellation_geometry(count, asset.design.altitude_km,
                                                          request.constants);
        const auto pin = std::find_if(pinned.begin(), pinned.end(), [&](const auto& p) {
            return p.first == asset.design.name;
        });

        regional::ConstellationSupply supply;
        supply.name = asset.design.name;
        supply.coverage_area_km2 = geo.coverage_area_km2;
        if (pin != pinned.end()) {
            supply.area_capacity_mbps_km2 = pin->second / geo.coverage_area_km2;
        } else {
            const auto result = engine::run_monte_carlo(request);
            supply.area_capacity_mbps_km2 = result.summary.area_capacity_mbps_km2.mean;
        }
        supply.asset_npv_usd = asset_cost_for(asset, count, assumptions).asset_npv * 1e6;
        supplies.push_back(supply);

        json sc{{"design", io::design_to_json(asset.design)},
                {"satellite_count", count}};
        if (pin != pinned.end()) sc["pinned_aggregate_mbps"] = pin->second;
        supply_config.push_back(std::move(sc));
    }

    const auto assessments = regional::assess_regions(regions, supplies, options);

    const json config{
        {"command", "assess"},
        {"regions", regions_path},
        {"supplies", supply_config},
        {"iterations", g.iterations},
        {"master_seed", g.seed},
        {"adoption_rate_percent", options.adoption_rate_percent},
        {"overbooking_factor", options.overbooking_factor},
        {"suitability_threshold_mbps", options.suitability_threshold_mbps},
        {"cost_denominator",
         options.cost_denominator == demand::CostDenominator::active_users
             ? "active_users"
             : "subscribers"}};
    const json prov = io::provenance(g.seed, config);
    emit(g, "assessment.csv", io::csv_preamble(prov) + io::assessments_to_csv(assessments));
}

void check(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("validate: " + what + " failed");
    std::cout << "ok: " << what << '\n';
}

void cmd_validate(const GlobalOptions& g, const std::string& dump_dir) {
    const auto table =
        capacity::ModcodTable::from_csv_text(assets::modcod_csv(), "builtin:modcod");
    check(!table.entries().empty(), "MODCOD table loads and is strictly monotone");
    check(capacity::lookup_spectral_efficiency(1e9, table, std::string("16APSK")) ==
              capacity::lookup_spectral_efficiency(1e9, table),
          "MODCOD table tops out at the 16APSK cap");

    for (const auto name : assets::builtin_names()) {
        const auto asset = io::load_constellation(std::string(name));
        asset.design.validate();
        check(true, "design '" + std::string(name) + "' validates");

        const auto geo = geometry::constellation_geometry(asset.design.satellite_count,
                                                          asset.design.altitude_km);
        const double unit = geo.network_density_per_km2 * geo.coverage_area_km2;
        check(std::abs(unit - 1.0) <= 1e-9,
              "geometry density*coverage == 1 for '" + std::string(name) + "'");
        check(geo.slant_path_km >= asset.design.altitude_km,
              "slant path >= altitude for '" + std::string(name) + "'");

        if (asset.costs) {
            asset.costs->validate();
            const auto cost = economics::allocate_per_satellite(
                *asset.costs, asset.design.satellite_count, {});
            check(cost.asset_npv >= cost.capex_per_satellite,
                  "asset NPV >= per-satellite capex for '" + std::string(name) + "'");
        }
    }

    const linkbudget::ShadowingModel shadowing;
    check(shadowing.analytic_mean_db() > 0.0 && shadowing.analytic_std_db() > 0.0,
          "shadowing model has positive clipped moments");
    RandomStream a(derive_stream_seed(g.seed, 0)), b(derive_stream_seed(g.seed, 0));
    check(shadowing.draw(a) == shadowing.draw(b), "identical streams draw identically");

    if (!dump_dir.empty()) {
        for (const auto name : assets::builtin_names())
            io::write_atomic(fs::path(dump_dir) / (std::string(name) + ".json"),
                             std::string(assets::constellation_json(name)) + "\n");
        io::write_atomic(fs::path(dump_dir) / "modcod_dvbs2.csv",
                         std::string(assets::modcod_csv()));
        std::cout << "ok: assets dumped to " << dump_dir << '\n';
    }
    std::cout << "validate: all checks passed\n";
}

}  // namespace
}  // namespace leosim

int main(int argc, char** argv) {
    using namespace leosim;

    CLI::App app{"LEO constellation capacity and cost simulator"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Master seed for reproducible runs")
        ->capture_default_str();
    app.add_option("--iterations", g.iterations, "Monte Carlo iterations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--workers", g.workers,
                   "Worker threads (0 = available parallelism; never changes results)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--output-dir", g.output_dir, "Directory for output files")
        ->capture_default_str();
    app.add_option("--format", g.formats, "Output formats (default: both)")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string constellation;
    std::optional<int> satellites;
    double other_losses = 18.84;
    std::string modcod_path;
    auto add_radio_options = [&](CLI::App* cmd, bool with_satellites) {
        cmd->add_option("--constellation", constellation,
                        "Builtin name (starlink|kuiper|oneweb) or JSON path")
            ->required();
        if (with_satellites)
            cmd->add_option("--satellites", satellites,
                            "Override the design's satellite count");
        cmd->add_option("--other-losses", other_losses,
                        "Aggregate non-FSPL losses, dB")
            ->capture_default_str();
        cmd->add_option("--modcod", modcod_path, "Custom MODCOD table CSV");
    };

    economics::FinancialAssumptions assumptions;
    auto add_financial_options = [&](CLI::App* cmd) {
        cmd->add_option("--discount-rate", assumptions.discount_rate, "Annual discount rate")
            ->capture_default_str();
        cmd->add_option("--study-years", assumptions.study_period_years,
                        "Study period Y; the NPV sums Y+1 opex terms (t = 0..Y)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run for one constellation");
    add_radio_options(simulate, true);

    auto* sweep_size = app.add_subcommand("sweep-size", "Sweep the satellite count");
    std::vector<int> counts;
    add_radio_options(sweep_size, false);
    sweep_size->add_option("--counts", counts, "Satellite counts (comma separated)")
        ->required()
        ->delimiter(',');

    auto* sweep_density = app.add_subcommand("sweep-density", "Sweep subscriber density");
    double from = 0.05, to = 1.0;
    int steps = 20;
    bool log_spaced = false, per_subscriber_cost = false;
    std::optional<double> aggregate_mbps;
    double obf = 20.0;
    add_radio_options(sweep_density, false);
    add_financial_options(sweep_density);
    sweep_density->add_option("--from", from, "Start subscriber density, users/km2")
        ->capture_default_str();
    sweep_density->add_option("--to", to, "Stop subscriber density, users/km2")
        ->capture_default_str();
    sweep_density->add_option("--steps", steps, "Grid points")->capture_default_str();
    sweep_density->add_flag("--log", log_spaced, "Log-spaced grid");
    sweep_density->add_option("--obf", obf, "Overbooking factor")->capture_default_str();
    sweep_density->add_option("--aggregate-mbps", aggregate_mbps,
                              "Pin the mean channel capacity instead of simulating");
    sweep_density->add_flag("--per-subscriber-cost", per_subscriber_cost,
                            "Divide cost by subscribers instead of active users");

    auto* cost = app.add_subcommand("cost", "Cost book and per-satellite NPV report");
    cost->add_option("--constellation", constellation,
                     "Builtin name (starlink|kuiper|oneweb) or JSON path")
        ->required();
    cost->add_option("--satellites", satellites, "Override the design's satellite count");
    add_financial_options(cost);

    auto* assess = app.add_subcommand("assess", "Batch per-region suitability assessment");
    std::string regions_path;
    std::vector<std::string> names = {"starlink", "kuiper", "oneweb"};
    std::vector<std::string> pins;
    regional::AssessOptions assess_options;
    bool skip_invalid = false, assess_per_subscriber = false;
    assess->add_option("--regions", regions_path, "Region CSV")->required();
    assess->add_option("--constellations", names, "Constellations to assess")
        ->delimiter(',')
        ->capture_default_str();
    assess->add_option("--adoption", assess_options.adoption_rate_percent,
                       "Adoption rate, percent of population")
        ->capture_default_str();
    assess->add_option("--obf", assess_options.overbooking_factor, "Overbooking factor")
        ->capture_default_str();
    assess->add_option("--threshold", assess_options.suitability_threshold_mbps,
                       "Suitability threshold, Mbps per user")
        ->capture_default_str();
    assess->add_flag("--skip-invalid", skip_invalid, "Drop invalid region rows");
    assess->add_option("--pin", pins,
                       "Pin a constellation's aggregate capacity: name=mbps (repeatable)");
    assess->add_flag("--per-subscriber-cost", assess_per_subscriber,
                     "Divide cost by subscribers instead of active users");
    assess->add_option("--other-losses", other_losses, "Aggregate non-FSPL losses, dB")
        ->capture_default_str();
    assess->add_option("--modcod", modcod_path, "Custom MODCOD table CSV");
    add_financial_options(assess);

    auto* validate = app.add_subcommand("validate", "Check configs and bundled assets");
    std::string dump_dir;
    validate->add_option("--dump-assets", dump_dir, "Export bundled assets to a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) {
            cmd_simulate(g, constellation, satellites, other_losses, modcod_path);
        } else if (sweep_size->parsed()) {
            cmd_sweep_size(g, constellation, counts, other_losses, modcod_path);
        } else if (sweep_density->parsed()) {
            cmd_sweep_density(g, constellation, from, to, steps, log_spaced, obf,
                              aggregate_mbps, per_subscriber_cost, assumptions,
                              other_losses, modcod_path);
        } else if (cost->parsed()) {
            cmd_cost(g, constellation, satellites, assumptions);
        } else if (assess->parsed()) {
            assess_options.cost_denominator = assess_per_subscriber
                                                  ? demand::CostDenominator::subscribers
                                                  : demand::CostDenominator::active_users;
            cmd_assess(g, regions_path, names, assess_options, skip_invalid, pins,
                       assumptions, other_losses, modcod_path);
        } else if (validate->parsed()) {
            cmd_validate(g, dump_dir);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
