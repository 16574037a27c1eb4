#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segrehilb/series.hpp"

namespace segrehilb {

/// Outcome of one identity check. A failing report always carries a
/// witness: the first mismatching coefficient index and both exact values.
struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    int order = 0;
    bool match = true;
    int mismatch_index = -1;
    std::string lhs_value;
    std::string rhs_value;
    double elapsed_ms = 0.0;
};

/// Compares two series coefficientwise up to the smaller order and fills
/// in the witness on the first mismatch.
inline void compare_series(CheckReport& report, const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
    int n = std::min(lhs.order(), rhs.order());
    for (int i = 0; i < n; ++i) {
        if (lhs[i] != rhs[i]) {
            report.match = false;
            report.mismatch_index = i;
            report.lhs_value = lhs[i].str();
            report.rhs_value = rhs[i].str();
            return;
        }
    }
    report.match = true;
    report.mismatch_index = -1;
}

}  // namespace segrehilb
