#include "polariton/golden.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "polariton/oracle.hpp"

namespace polariton::golden {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", v == 0 ? 0.0 : v);
    return buf;
}

std::string cnum(std::complex<double> v)
{
    return num(v.real()) + " " + num(v.imag());
}

constexpr const char* kCoeffNames[4] = {"w", "x", "y", "z"};

std::complex<double>& coeff(PolaritonBranchd& br, int k)
{
    switch (k) {
    case 0: return br.w;
    case 1: return br.x;
    case 2: return br.y;
    default: return br.z;
    }
}

double parse_double(const std::string& s)
{
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw IoError("golden file: bad number '" + s + "'");
    }
    if (used != s.size())
        throw IoError("golden file: bad number '" + s + "'");
    return v;
}

std::complex<double> parse_complex(const std::string& s)
{
    std::istringstream in(s);
    std::string re, im, extra;
    if (!(in >> re >> im) || (in >> extra))
        throw IoError("golden file: expected '<re> <im>', got '" + s + "'");
    return {parse_double(re), parse_double(im)};
}

} // namespace

std::vector<ModelParamsd> canonical_cases()
{
    std::vector<ModelParamsd> out;
    const std::pair<Variant, bool> models[] = {
        {Variant::NoA2, true},
        {Variant::NoA2, false},
        {Variant::FullHopfield, true},
    };
    for (const auto& [variant, antiresonant] : models) {
        for (double g : {0.1, 0.25, 0.5, 0.75, 1.0}) {
            ModelParamsd p;
            p.omega_c = 1.0;
            p.omega_ex = 1.0;
            p.g = g;
            p.variant = variant;
            p.include_antiresonant = antiresonant;
            p.kappa0 = 1.0;
            out.push_back(p);
        }
    }
    return out;
}

Record make_record(const ModelParamsd& params)
{
    Record r;
    r.params = params;
    if (!is_stable(params))
        return r;
    const auto sol = oracle::oracle_diagonalize(build_hopfield_matrix(params));
    r.stable = true;
    r.lower = sol.branch(Branch::Lower);
    r.upper = sol.branch(Branch::Upper);
    return r;
}

std::string format(const std::vector<Record>& records)
{
    std::ostringstream out;
    for (const auto& rec : records) {
        const auto& p = rec.params;
        out << "[case]\n"
            << "variant = " << to_string(p.variant) << '\n'
            << "antiresonant = " << (p.include_antiresonant ? "on" : "off") << '\n'
            << "omega_c = " << num(p.omega_c) << '\n'
            << "omega_ex = " << num(p.omega_ex) << '\n'
            << "g = " << num(p.g) << '\n'
            << "status = " << (rec.stable ? "ok" : "unstable") << '\n';
        if (rec.stable) {
            out << "omega_L = " << num(rec.lower.omega_pol) << '\n'
                << "omega_U = " << num(rec.upper.omega_pol) << '\n';
            for (const auto* br : {&rec.lower, &rec.upper}) {
                const char* name = br == &rec.lower ? "lower" : "upper";
                for (int k = 0; k < 4; ++k)
                    out << name << '.' << kCoeffNames[k] << " = " << cnum(br->coefficient(k)) << '\n';
            }
        }
        out << "[end]\n";
    }
    return out.str();
}

std::vector<Record> parse(std::string_view text)
{
    std::vector<Record> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::map<std::string, std::string>> block;

    auto finish = [&](const std::map<std::string, std::string>& f) {
        auto get = [&](const std::string& key) -> const std::string& {
            const auto it = f.find(key);
            if (it == f.end())
                throw IoError("golden file: missing field '" + key + "'");
            return it->second;
        };
        Record r;
        const std::string& variant = get("variant");
        if (variant == "no-a2")
            r.params.variant = Variant::NoA2;
        else if (variant == "full-hopfield")
            r.params.variant = Variant::FullHopfield;
        else
            throw IoError("golden file: unknown variant '" + variant + "'");
        r.params.include_antiresonant = get("antiresonant") == "on";
        r.params.omega_c = parse_double(get("omega_c"));
        r.params.omega_ex = parse_double(get("omega_ex"));
        r.params.g = parse_double(get("g"));
        r.params.kappa0 = 1.0;
        r.stable = get("status") == "ok";
        if (r.stable) {
            r.lower.branch = Branch::Lower;
            r.upper.branch = Branch::Upper;
            r.lower.omega_pol = parse_double(get("omega_L"));
            r.upper.omega_pol = parse_double(get("omega_U"));
            for (auto* br : {&r.lower, &r.upper}) {
                const std::string name = br == &r.lower ? "lower" : "upper";
                for (int k = 0; k < 4; ++k)
                    coeff(*br, k) = parse_complex(get(name + "." + kCoeffNames[k]));
            }
        }
        out.push_back(r);
    };

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (line == "[case]") {
            if (block)
                throw IoError("golden file: nested [case]");
            block.emplace();
            continue;
        }
        if (line == "[end]") {
            if (!block)
                throw IoError("golden file: [end] without [case]");
            finish(*block);
            block.reset();
            continue;
        }
        if (!block)
            throw IoError("golden file: field outside a [case] block: '" + line + "'");
        const auto eq = line.find(" = ");
        if (eq == std::string::npos)
            throw IoError("golden file: malformed line '" + line + "'");
        (*block)[line.substr(0, eq)] = line.substr(eq + 3);
    }
    if (block)
        throw IoError("golden file: unterminated [case]");
    return out;
}

} // namespace polariton::golden
