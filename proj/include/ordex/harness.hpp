#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordex {

enum class ClaimStatus { Pass, Fail, Inconclusive, Discrepancy };
const char* to_string(ClaimStatus status);

/// Search budgets a claim runs under. Fields a claim does not use stay 0.
struct ClaimBudgets {
    std::uint64_t prefix_len = 0;
    std::uint64_t ext_len = 0;
    std::uint64_t jmax = 0;
    std::uint64_t nmax = 0;
};

struct BudgetOverrides {
    std::optional<std::uint64_t> prefix_len;
    std::optional<std::uint64_t> ext_len;
    std::optional<std::uint64_t> jmax;
    std::optional<std::uint64_t> nmax;
};

struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::Inconclusive;
    ClaimBudgets budgets;
    std::vector<std::string> witnesses;  // nonempty whenever status is FAIL/DISCREPANCY
    std::string note;
    double wall_time_s = 0.0;
};

struct ClaimInfo {
    std::string id;
    std::string anchor;
    ClaimBudgets default_budgets;
};

/// The fixed 25-entry registry, in stable order.
std::vector<ClaimInfo> list_claims();

/// Runs one claim; overrides replace the (scaled) defaults field by field.
/// Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(const std::string& id, const BudgetOverrides& overrides = {},
                      std::uint64_t scale = 1);

struct ClaimSummary {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t discrepancy = 0;
};

struct HarnessReport {
    std::uint64_t scale = 1;
    std::vector<ClaimResult> results;  // registry order
    ClaimSummary summary;
};

/// Runs the named claims (all 25 when `ids` is empty) with every default
/// budget multiplied by `scale`, then field-wise overridden.
HarnessReport run_claims(const std::vector<std::string>& ids, std::uint64_t scale = 1,
                         const BudgetOverrides& overrides = {});
HarnessReport run_all(std::uint64_t scale = 1);

/// Deterministic except for the wall_time_s fields.
std::string report_to_json(const HarnessReport& report);
std::string report_to_text(const HarnessReport& report);

}  // namespace ordex
