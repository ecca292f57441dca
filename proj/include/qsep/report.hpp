#pragma once

#include <string>
#include <vector>

namespace qsep {

struct CheckRow {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<CheckRow> checks;
    double wall_time_s = 0.0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

}  // namespace qsep
