#pragma once

#include <functional>
#include <string>
#include <vector>

namespace apnext {

/// One pass/fail row of the reproduction battery.
struct BatteryRow {
    int criterion = 0;
    std::string name;
    bool pass = false;
    double elapsed_seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;
};

struct BatteryOptions {
    bool quick = false;   // skip the n >= 11 relation work
    unsigned jobs = 1;
    std::uint64_t seed = 1;
};

/// Runs the whole reproduction battery; rows stream through on_row as they
/// finish. A row passes only if its checks hold and it stays within budget.
std::vector<BatteryRow> run_battery(const BatteryOptions& opts,
                                    const std::function<void(const BatteryRow&)>& on_row = {});

}  // namespace apnext
