#pragma once

#include <string>
#include <vector>

namespace pfx {

/// One measured grid cell.  `minimized` is the minimal-DFA size for DFA
/// operations and the best certified nsc lower bound for NFA operations;
/// `tight` compares it against the paper formula.
struct BoundRow {
    std::string op;
    int m = 0, n = 0; // 0 = parameter not used by this operation
    long long constructed = -1;
    long long minimized = -1;
    long long formula = -1;
    enum class Status { Tight, Untight, UpperOk, UpperViolated, Unavailable, OutOfDomain };
    Status status = Status::Unavailable;
    std::string family;
    std::string note;
};

struct BoundReport {
    std::vector<BoundRow> rows;

    /// 0 all rows in order, 2 an expected-tight row missed its formula (or a
    /// bound was exceeded), 3 a searched fixture was unavailable.
    int exit_code() const;
};

struct BoundOptions {
    std::vector<std::string> ops; // empty = every supported operation
    int m_lo = 3, m_hi = 5;
    int n_lo = 3, n_hi = 5;
    std::string fixtures_dir = "fixtures";
    int workers = 0;
};

/// Operations supported by verify_bounds, in report order.
const std::vector<std::string>& bound_operations();

BoundReport verify_bounds(const BoundOptions& options);

enum class ReportFormat { Csv, Json, Md };
std::string render_report(const BoundReport& report, ReportFormat format);

const char* to_string(BoundRow::Status status);

} // namespace pfx
