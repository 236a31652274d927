#include "polariton/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace polariton {

namespace {

// Keys accepted both as --flags and as config file keys.
constexpr std::array<std::string_view, 12> kKeys = {
    "omega-c", "omega-ex", "g-min",     "g-max",  "steps",  "kappa0",
    "variant", "antiresonant", "weighting", "mirror", "format", "out",
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, std::string> parse_config_text(std::string_view text)
{
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string content = trim(line);
        if (content.empty())
            continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(std::string_view(content).substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        const std::string value = trim(std::string_view(content).substr(eq + 1));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = value;
    }
    return out;
}

double parse_number(const std::string& key, const std::string& value)
{
    double v = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || value.empty())
        throw UsageError("--" + key + ": expected a number, got '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value)
{
    int v = 0;
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(value.data(), last, v);
    if (res.ec != std::errc{} || res.ptr != last || value.empty())
        throw UsageError("--" + key + ": expected an integer, got '" + value + "'");
    return v;
}

template <typename Enum>
Enum parse_choice(const std::string& key, const std::string& value,
                  std::initializer_list<std::pair<std::string_view, Enum>> choices)
{
    std::string allowed;
    for (const auto& [name, e] : choices) {
        if (name == value)
            return e;
        allowed += (allowed.empty() ? "" : "|") + std::string(name);
    }
    throw UsageError("--" + key + ": expected one of {" + allowed + "}, got '" + value + "'");
}

SweepConfig build(const std::map<std::string, std::string>& values)
{
    SweepConfig c;
    auto& p = c.params_base;
    for (const auto& [key, value] : values) {
        if (key == "omega-c")
            p.omega_c = parse_number(key, value);
        else if (key == "omega-ex")
            p.omega_ex = parse_number(key, value);
        else if (key == "g-min")
            c.g_min = parse_number(key, value);
        else if (key == "g-max")
            c.g_max = parse_number(key, value);
        else if (key == "steps")
            c.steps = parse_int(key, value);
        else if (key == "kappa0")
            p.kappa0 = parse_number(key, value);
        else if (key == "variant")
            p.variant = parse_choice<Variant>(
                key, value, {{"no-a2", Variant::NoA2}, {"full-hopfield", Variant::FullHopfield}});
        else if (key == "antiresonant")
            p.include_antiresonant = parse_choice<bool>(key, value, {{"on", true}, {"off", false}});
        else if (key == "weighting")
            c.weighting = parse_choice<WeightingMode>(
                key, value,
                {{"bare", WeightingMode::Bare}, {"photon-weighted", WeightingMode::PhotonWeighted}});
        else if (key == "mirror")
            c.mirror = parse_choice<Mirror>(key, value,
                                            {{"dielectric", Mirror::Dielectric},
                                             {"metallic", Mirror::Metallic},
                                             {"both", Mirror::Both}});
        else if (key == "format")
            c.format = parse_choice<OutputFormat>(key, value,
                                                  {{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}});
        else if (key == "out")
            c.output_path = value;
    }
    validate(c);
    return c;
}

struct FlagValues {
    std::map<std::string, std::string> values;
    std::optional<std::string> config_path;
};

FlagValues parse_flags(std::span<const std::string> args)
{
    CLI::App app{"Sweep the light-matter coupling and compare polariton dissipation rates",
                 "polariton-sweep"};
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> opts;
    for (const auto key : kKeys) {
        const std::string k(key);
        opts[k] = app.add_option("--" + k, raw[k]);
    }
    opts["omega-c"]->description("cavity frequency (units of omega-ex) [1]");
    opts["omega-ex"]->description("matter frequency [1]");
    opts["g-min"]->description("first coupling of the sweep [0]");
    opts["g-max"]->description("last coupling of the sweep [1]");
    opts["steps"]->description("number of grid points, >= 2 [201]");
    opts["kappa0"]->description("bare cavity loss rate [0.01]");
    opts["variant"]->description("{no-a2|full-hopfield} [full-hopfield]");
    opts["antiresonant"]->description("{on|off} [on]");
    opts["weighting"]->description("{bare|photon-weighted} [photon-weighted]");
    opts["mirror"]->description("{dielectric|metallic|both} [both]");
    opts["format"]->description("{csv|json} [csv]");
    opts["out"]->description("output file, stdout if omitted");
    for (const auto* k : {"omega-c", "omega-ex", "g-min", "g-max", "kappa0"})
        opts[k]->type_name("FLOAT");
    opts["steps"]->type_name("INT");
    for (const auto* k : {"variant", "antiresonant", "weighting", "mirror", "format"})
        opts[k]->type_name("CHOICE");
    opts["out"]->type_name("PATH");
    std::string config_path;
    auto* config_opt = app.add_option("--config", config_path, "key=value config file")->type_name("PATH");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    FlagValues out;
    for (const auto& [k, opt] : opts)
        if (opt->count() > 0)
            out.values[k] = raw[k];
    if (config_opt->count() > 0)
        out.config_path = config_path;
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("--config: cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

SweepConfig parse_config(std::span<const std::string> args)
{
    FlagValues flags = parse_flags(args);
    std::map<std::string, std::string> merged;
    if (flags.config_path)
        merged = parse_config_text(read_file(*flags.config_path));
    for (auto& [k, v] : flags.values)
        merged[k] = v;
    return build(merged);
}

SweepConfig parse_config(std::span<const std::string> args, std::string_view config_text)
{
    FlagValues flags = parse_flags(args);
    std::map<std::string, std::string> merged = parse_config_text(config_text);
    for (auto& [k, v] : flags.values)
        merged[k] = v;
    return build(merged);
}

} // namespace polariton
