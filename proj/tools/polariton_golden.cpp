// Regenerates the reference files under tests/golden from the oracle and
// the default sweep. Usage: polariton-golden <output-dir>

#include <fstream>
#include <iostream>
#include <string>

#include "polariton/golden.hpp"
#include "polariton/sweep.hpp"

namespace {

void write(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out)
        throw polariton::IoError("failed writing '" + path + "'");
    std::cout << "wrote " << path << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    using namespace polariton;
    if (argc != 2) {
        std::cerr << "usage: polariton-golden <output-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    try {
        std::vector<golden::Record> records;
        for (const auto& p : golden::canonical_cases())
            records.push_back(golden::make_record(p));
        write(dir + "/oracle_canonical.txt",
              "# oracle solutions, resonant cavity (omega_c = omega_ex = 1)\n" + golden::format(records));

        SweepConfig config;
        const SweepResult result = run_sweep(config);
        write(dir + "/default_sweep.csv", to_csv(result));
        write(dir + "/default_sweep.json", to_json(result).dump(2) + "\n");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
