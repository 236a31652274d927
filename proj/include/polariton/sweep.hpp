#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polariton/dissipation.hpp"
#include "polariton/hopfield.hpp"

namespace polariton {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Mirror { Dielectric, Metallic, Both };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Mirror m);
std::string_view to_string(OutputFormat f);

struct SweepConfig {
    ModelParamsd params_base; // g is ignored
    double g_min = 0.0;
    double g_max = 1.0;
    int steps = 201;
    WeightingMode weighting = WeightingMode::PhotonWeighted;
    Mirror mirror = Mirror::Both;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path; // empty means stdout

    /// steps points from g_min to g_max inclusive, evenly spaced.
    std::vector<double> grid() const;
};

/// Throws UsageError naming the offending field.
void validate(const SweepConfig& config);

/// Thrown by parse_config for --help; carries the formatted usage text.
struct HelpRequested {
    std::string text;
};

/// Parses command-line arguments (without the program name). A --config
/// file is read from disk; flags override values from the file.
SweepConfig parse_config(std::span<const std::string> args);

/// Same, with the config file contents supplied directly. Any --config flag
/// in args is ignored.
SweepConfig parse_config(std::span<const std::string> args, std::string_view config_text);

struct SkippedPoint {
    double g = 0;
    std::string reason;
};

struct SweepSummary {
    double max_ratio_naive_over_norm = 0;
    double g_at_max = 0;
    // max over rows and branches of |kappa_norm - kappa_mbc_metal| / kappa0
    double max_rel_dev_norm_vs_metal = 0;
    // fraction of rows where the L/U ordering of kappa_norm matches the
    // ordering of the selected mirror model (metallic for Mirror::Both)
    double ordering_agreement_fraction = 0;
};

/// Rows hold rates in units of kappa0 (each row's kappa0 field is 1).
struct SweepResult {
    SweepConfig config;
    std::string version{kVersion};
    std::vector<RateSetd> rows;
    std::vector<SkippedPoint> skipped;
    SweepSummary summary;
};

/// Fraction of rows on which sign(kappa_norm_L - kappa_norm_U) equals the
/// sign of the same difference for the chosen MBC model.
double ordering_agreement(std::span<const RateSetd> rows, Mirror mirror);

SweepSummary summarize(std::span<const RateSetd> rows, Mirror mirror);

/// Sweeps config.grid(). Points that fail to build or diagonalize are
/// recorded in `skipped`; throws NoStablePoints if nothing survives.
SweepResult run_sweep(const SweepConfig& config);

/// Same over an explicit grid, which must be strictly increasing.
SweepResult run_sweep(const SweepConfig& config, std::span<const double> grid);

inline constexpr std::string_view kCsvHeader =
    "g,omega_L,omega_U,kappa_naive_L,kappa_naive_U,kappa_norm_L,kappa_norm_U,"
    "kappa_mbc_diel_L,kappa_mbc_diel_U,kappa_mbc_metal_L,kappa_mbc_metal_U,"
    "ratio_naive_over_norm";

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

std::string to_csv(const SweepResult& result);
nlohmann::json to_json(const SweepResult& result);
SweepResult sweep_result_from_json(const nlohmann::json& j);

/// Writes to config.output_path in config.format, or stdout if the path is
/// empty. Throws IoError with the path in the message.
void emit(const SweepResult& result, const SweepConfig& config);

} // namespace polariton
