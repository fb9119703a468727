#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace tollcvx {

/// One structured line of a verification report. Fixed field order
/// (suite, instance, expected, actual, witness) when rendered.
struct ReportRecord {
    std::string instance;
    std::string expected;
    std::string actual;
    std::string witness;
    bool violation = false;
};

/// Outcome of a theorem-check campaign. Violations empty iff the suite
/// passed; notes carry informational records (flagged discrepancies,
/// predicate separators) that do not fail the run.
struct VerificationReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::vector<ReportRecord> violations;
    std::vector<ReportRecord> notes;
    bool exhaustive = true;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return violations.empty(); }
};

}  // namespace tollcvx
