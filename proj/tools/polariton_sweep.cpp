// polariton-sweep: sweep the vacuum Rabi frequency and write the four
// dissipation-rate models per polariton branch as CSV or JSON.
//
// Exit codes: 0 success, 1 I/O or numerical failure, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "polariton/sweep.hpp"

int main(int argc, char** argv)
{
    using namespace polariton;
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const SweepConfig config = parse_config(args);
        const SweepResult result = run_sweep(config);
        emit(result, config);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
