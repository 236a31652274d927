#include "polariton/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace polariton {

std::string_view to_string(Mirror m)
{
    switch (m) {
    case Mirror::Dielectric: return "dielectric";
    case Mirror::Metallic: return "metallic";
    default: return "both";
    }
}

std::string_view to_string(OutputFormat f)
{
    return f == OutputFormat::Csv ? "csv" : "json";
}

std::vector<double> SweepConfig::grid() const
{
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double step = (g_max - g_min) / (steps - 1);
    for (int i = 0; i < steps; ++i)
        out[i] = g_min + i * step;
    out.back() = g_max;
    return out;
}

void validate(const SweepConfig& config)
{
    const auto& p = config.params_base;
    if (!(std::isfinite(p.omega_c) && p.omega_c > 0))
        throw UsageError("omega-c must be a positive number");
    if (!(std::isfinite(p.omega_ex) && p.omega_ex > 0))
        throw UsageError("omega-ex must be a positive number");
    if (!(std::isfinite(p.kappa0) && p.kappa0 > 0))
        throw UsageError("kappa0 must be a positive number (rates are reported in units of it)");
    if (!(std::isfinite(config.g_min) && config.g_min >= 0))
        throw UsageError("g-min must be >= 0");
    if (!(std::isfinite(config.g_max) && config.g_max > config.g_min))
        throw UsageError("g-max must be greater than g-min");
    if (config.steps < 2)
        throw UsageError("steps must be at least 2");
}

namespace {

int sign_with_tolerance(double diff, double scale)
{
    const double tol = 1e-12 * scale;
    if (diff > tol)
        return 1;
    if (diff < -tol)
        return -1;
    return 0;
}

} // namespace

double ordering_agreement(std::span<const RateSetd> rows, Mirror mirror)
{
    if (rows.empty())
        return 0;
    std::size_t agree = 0;
    for (const auto& r : rows) {
        const double scale = std::max(r.kappa0, 1e-300);
        const int norm = sign_with_tolerance(r.lower.kappa_norm - r.upper.kappa_norm, scale);
        const double mbc_diff = mirror == Mirror::Dielectric
                                    ? r.lower.kappa_mbc_diel - r.upper.kappa_mbc_diel
                                    : r.lower.kappa_mbc_metal - r.upper.kappa_mbc_metal;
        if (norm == sign_with_tolerance(mbc_diff, scale))
            ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(rows.size());
}

SweepSummary summarize(std::span<const RateSetd> rows, Mirror mirror)
{
    SweepSummary s;
    bool first = true;
    for (const auto& r : rows) {
        if (first || r.ratio_naive_over_norm > s.max_ratio_naive_over_norm) {
            s.max_ratio_naive_over_norm = r.ratio_naive_over_norm;
            s.g_at_max = r.g;
            first = false;
        }
        if (r.kappa0 > 0) {
            for (const auto* br : {&r.lower, &r.upper})
                s.max_rel_dev_norm_vs_metal = std::max(
                    s.max_rel_dev_norm_vs_metal, std::abs(br->kappa_norm - br->kappa_mbc_metal) / r.kappa0);
        }
    }
    s.ordering_agreement_fraction = ordering_agreement(rows, mirror);
    return s;
}

SweepResult run_sweep(const SweepConfig& config)
{
    validate(config);
    const std::vector<double> grid = config.grid();
    return run_sweep(config, grid);
}

SweepResult run_sweep(const SweepConfig& config, std::span<const double> grid)
{
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw UsageError("g grid must be strictly increasing");

    SweepResult result;
    result.config = config;

    // Rates are computed with kappa0 = 1 so rows come out in units of kappa0.
    ModelParamsd base = config.params_base;
    base.kappa0 = 1.0;

    for (const double g : grid) {
        try {
            const auto dec = solve(base.with_g(g));
            result.rows.push_back(compute_rateset(dec, config.weighting));
        } catch (const Error& e) {
            result.skipped.push_back({g, e.what()});
            std::cerr << "warning: skipping g = " << format_double(g) << ": " << e.what() << '\n';
        }
    }
    if (result.rows.empty())
        throw NoStablePoints("no stable grid points between g = " + format_double(grid.empty() ? 0 : grid.front()) +
                             " and g = " + format_double(grid.empty() ? 0 : grid.back()));
    result.summary = summarize(result.rows, config.mirror);
    return result;
}

} // namespace polariton
