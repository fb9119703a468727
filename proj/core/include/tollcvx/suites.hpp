#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tollcvx/report.hpp"

namespace tollcvx {

enum class SuiteId {
    interval_oracle,
    inequality_chain,
    cartesian_convexity,
    cartesian_tn2,
    lex_interval,
    lex_exact,
    lex_tn2,
    lex_3tn,
    hull_bounds,
    lemma_012,
    presecna,
    extreme_vs_simplicial,
};

std::vector<std::string_view> suite_names();
std::string_view suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);

struct SuiteLimits {
    /// Size limit on the enumerated factor (suite-specific default when
    /// unset; values above the hard ceiling are rejected).
    std::optional<int> max_n;
    int jobs = 1;
};

int suite_default_max_n(SuiteId id);
int suite_hard_ceiling(SuiteId id);

/// Receives one record per instance, in deterministic instance order
/// regardless of the worker count.
class RecordSink {
public:
    virtual ~RecordSink() = default;
    virtual void record(const std::string& suite, const ReportRecord& rec) = 0;
};

/// Runs one verification campaign. Violations and notes are collected in the
/// returned report; per-instance records stream to the sink when provided.
VerificationReport run_suite(SuiteId id, const SuiteLimits& limits = {},
                             RecordSink* sink = nullptr);

}  // namespace tollcvx
