#pragma once

// Plain-text reference records of oracle solutions. One block per parameter
// set, fields in a fixed order, numbers with 15 significant digits:
//
//   [case]
//   variant = full-hopfield
//   antiresonant = on
//   omega_c = 1.00000000000000e+00
//   omega_ex = ...
//   g = ...
//   status = ok | unstable
//   omega_L = ...            (only when status = ok)
//   omega_U = ...
//   lower.w = <re> <im>      (then lower.x, lower.y, lower.z, upper.w ... upper.z)
//   [end]

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polariton/hopfield.hpp"

namespace polariton::golden {

struct Record {
    ModelParamsd params;
    bool stable = false;
    PolaritonBranchd lower;
    PolaritonBranchd upper;
};

/// Resonant cavity, g in {0.1, 0.25, 0.5, 0.75, 1.0}, for no-a2 with and
/// without antiresonant terms and for full-hopfield.
std::vector<ModelParamsd> canonical_cases();

/// Solves with the oracle; unstable parameter sets give stable = false.
Record make_record(const ModelParamsd& params);

std::string format(const std::vector<Record>& records);

/// Throws IoError on malformed input.
std::vector<Record> parse(std::string_view text);

} // namespace polariton::golden
