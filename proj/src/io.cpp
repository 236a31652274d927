#include "polariton/sweep.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polariton {

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string to_csv(const SweepResult& result)
{
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : result.rows) {
        const std::array<double, 12> fields{
            r.g,
            r.lower.omega_pol,
            r.upper.omega_pol,
            r.lower.kappa_naive,
            r.upper.kappa_naive,
            r.lower.kappa_norm,
            r.upper.kappa_norm,
            r.lower.kappa_mbc_diel,
            r.upper.kappa_mbc_diel,
            r.lower.kappa_mbc_metal,
            r.upper.kappa_mbc_metal,
            r.ratio_naive_over_norm,
        };
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? "," : "") << format_double(fields[i]);
        out << '\n';
    }
    for (const auto& s : result.skipped)
        out << "# skipped g=" << format_double(s.g) << ": " << s.reason << '\n';
    return out.str();
}

namespace {

nlohmann::json branch_json(const BranchRates<double>& b)
{
    return {
        {"omega", b.omega_pol},
        {"kappa_naive", b.kappa_naive},
        {"kappa_norm", b.kappa_norm},
        {"kappa_mbc_diel", b.kappa_mbc_diel},
        {"kappa_mbc_metal", b.kappa_mbc_metal},
    };
}

BranchRates<double> branch_from_json(const nlohmann::json& j)
{
    BranchRates<double> b;
    b.omega_pol = j.at("omega").get<double>();
    b.kappa_naive = j.at("kappa_naive").get<double>();
    b.kappa_norm = j.at("kappa_norm").get<double>();
    b.kappa_mbc_diel = j.at("kappa_mbc_diel").get<double>();
    b.kappa_mbc_metal = j.at("kappa_mbc_metal").get<double>();
    return b;
}

template <typename Enum>
Enum enum_from(const nlohmann::json& j, std::initializer_list<Enum> values)
{
    const auto s = j.get<std::string>();
    for (Enum e : values)
        if (to_string(e) == s)
            return e;
    throw IoError("unrecognized value '" + s + "' in sweep JSON");
}

} // namespace

nlohmann::json to_json(const SweepResult& result)
{
    const auto& c = result.config;
    const auto& p = c.params_base;

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : result.rows) {
        rows.push_back({
            {"g", r.g},
            {"lower", branch_json(r.lower)},
            {"upper", branch_json(r.upper)},
            {"ratio_naive_over_norm", r.ratio_naive_over_norm},
        });
    }
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : result.skipped)
        skipped.push_back({{"g", s.g}, {"reason", s.reason}});

    return {
        {"metadata",
         {
             {"version", result.version},
             {"variant", to_string(p.variant)},
             {"rate_unit", "kappa0"},
             {"config",
              {
                  {"omega_c", p.omega_c},
                  {"omega_ex", p.omega_ex},
                  {"kappa0", p.kappa0},
                  {"variant", to_string(p.variant)},
                  {"antiresonant", p.include_antiresonant},
                  {"g_min", c.g_min},
                  {"g_max", c.g_max},
                  {"steps", c.steps},
                  {"weighting", to_string(c.weighting)},
                  {"mirror", to_string(c.mirror)},
                  {"format", to_string(c.format)},
              }},
         }},
        {"summary",
         {
             {"max_ratio_naive_over_norm", result.summary.max_ratio_naive_over_norm},
             {"g_at_max", result.summary.g_at_max},
             {"max_rel_dev_norm_vs_metal", result.summary.max_rel_dev_norm_vs_metal},
             {"ordering_agreement_fraction", result.summary.ordering_agreement_fraction},
         }},
        {"rows", rows},
        {"skipped", skipped},
    };
}

SweepResult sweep_result_from_json(const nlohmann::json& j)
{
    try {
        SweepResult r;
        const auto& meta = j.at("metadata");
        const auto& cfg = meta.at("config");
        r.version = meta.at("version").get<std::string>();
        auto& p = r.config.params_base;
        p.omega_c = cfg.at("omega_c").get<double>();
        p.omega_ex = cfg.at("omega_ex").get<double>();
        p.kappa0 = cfg.at("kappa0").get<double>();
        p.variant = enum_from(cfg.at("variant"), {Variant::NoA2, Variant::FullHopfield});
        p.include_antiresonant = cfg.at("antiresonant").get<bool>();
        r.config.g_min = cfg.at("g_min").get<double>();
        r.config.g_max = cfg.at("g_max").get<double>();
        r.config.steps = cfg.at("steps").get<int>();
        r.config.weighting =
            enum_from(cfg.at("weighting"), {WeightingMode::Bare, WeightingMode::PhotonWeighted});
        r.config.mirror = enum_from(cfg.at("mirror"), {Mirror::Dielectric, Mirror::Metallic, Mirror::Both});
        r.config.format = enum_from(cfg.at("format"), {OutputFormat::Csv, OutputFormat::Json});

        const auto& s = j.at("summary");
        r.summary.max_ratio_naive_over_norm = s.at("max_ratio_naive_over_norm").get<double>();
        r.summary.g_at_max = s.at("g_at_max").get<double>();
        r.summary.max_rel_dev_norm_vs_metal = s.at("max_rel_dev_norm_vs_metal").get<double>();
        r.summary.ordering_agreement_fraction = s.at("ordering_agreement_fraction").get<double>();

        for (const auto& row : j.at("rows")) {
            RateSetd rs;
            rs.g = row.at("g").get<double>();
            rs.kappa0 = 1.0;
            rs.lower = branch_from_json(row.at("lower"));
            rs.upper = branch_from_json(row.at("upper"));
            rs.ratio_naive_over_norm = row.at("ratio_naive_over_norm").get<double>();
            r.rows.push_back(rs);
        }
        for (const auto& sk : j.at("skipped"))
            r.skipped.push_back({sk.at("g").get<double>(), sk.at("reason").get<std::string>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed sweep JSON: ") + e.what());
    }
}

void emit(const SweepResult& result, const SweepConfig& config)
{
    const std::string text =
        config.format == OutputFormat::Csv ? to_csv(result) : to_json(result).dump(2) + "\n";
    if (config.output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + config.output_path + "' for writing");
    out << text;
    out.close();
    if (!out)
        throw IoError("failed writing '" + config.output_path + "'");
}

} // namespace polariton
